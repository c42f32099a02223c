//! Recomputes the small rows of the Γ6^(q) and Γ1^(q) tables.

use csgoppa::bounds::paper::{GAMMA1_Q, GAMMA6_Q};
use csgoppa::bounds::{gamma1_q_dim_estimate, redundancy_accounting};
use csgoppa::codes::{make_code, SupportVariant};

fn main() {
    println!("family  q  l     n  k_est  k_real  paper");
    for r in GAMMA6_Q.iter().filter(|r| r.n < 3000) {
        let est = redundancy_accounting(r.q, r.l, r.q).unwrap().k_bound;
        let code = make_code(SupportVariant::L6, r.q, r.l, r.q, None).unwrap();
        println!(
            "gamma6 {:>2} {:>2} {:>5} {:>6} {:>7}  {}/{}",
            r.q,
            r.l,
            code.n(),
            est,
            code.k(),
            r.k_estimate,
            r.k_real
        );
    }
    for r in GAMMA1_Q.iter().filter(|r| r.n < 3000) {
        let est = gamma1_q_dim_estimate(r.q, r.l);
        let code = make_code(SupportVariant::L1, r.q, r.l, r.q, None).unwrap();
        println!(
            "gamma1 {:>2} {:>2} {:>5} {:>6} {:>7}  {}/{}",
            r.q,
            r.l,
            code.n(),
            est,
            code.k(),
            r.k_estimate,
            r.k_real
        );
    }
}
