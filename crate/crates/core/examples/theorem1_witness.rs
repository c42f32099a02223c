//! Codewords of Γ6^(i) of weight i(t+1)+1, built from the multiplicative
//! groups x^{t+1} = λ.

use csgoppa::distance::{build_theorem1_witness, theorem1_check};

fn main() {
    let w = build_theorem1_witness(7, 2, 3).unwrap();
    let p = &w.partition;
    println!("q = 7, t = 49: {} groups of size {}, excluded label {}", p.groups.len(), p.groups[0].len(), p.j_star);
    println!("groups used {:?}, values {:?}", w.selected, w.small_vector);
    println!("weight {}, zero syndrome {}, membership {}", w.weight, w.syndrome_zero, w.membership);

    for i in 2..=3 {
        let r = theorem1_check(5, 1, i, 1 << 30, 1).unwrap();
        println!(
            "q = 5, t = 5, i = {i}: [{}, {}], d = {:?} by {}, formula {}, holds {}",
            r.n, r.k, r.exact_d, r.verification, r.formula, r.holds
        );
    }
}
