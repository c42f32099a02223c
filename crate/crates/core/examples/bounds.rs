//! Redundancy accounting for Γ6^(j) and the estimates it gives along the
//! chain.

use csgoppa::bounds::{chain_dim_estimates, redundancy_accounting};

fn main() {
    for (q, l) in [(3, 2), (5, 2), (7, 2)] {
        for j in 1..=q {
            let b = redundancy_accounting(q, l, j).unwrap();
            println!(
                "q={q} l={l} j={j}: deltas {:?} theta {:?} r <= {} k >= {} d >= {}",
                b.delta, b.theta, b.r_bound, b.k_bound, b.d_bound
            );
        }
        let e = chain_dim_estimates(q, l, 1).unwrap();
        println!("  order 1 chain estimates {:?}", e.as_array());
    }
}
