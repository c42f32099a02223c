//! Builds Γ6^(3) over GF(3) with t = 9 and checks the generator against
//! the parity matrix and the membership oracle.

use csgoppa::codes::{make_code, Codeword, MembershipOracle, SupportVariant};

fn main() {
    let code = make_code(SupportVariant::L6, 3, 2, 3, None).expect("valid parameters");
    println!(
        "n = {}, k = {}, redundancy = {}, designed distance = {}",
        code.n(),
        code.k(),
        code.redundancy(),
        code.designed_distance()
    );
    println!("H over {}: {} x {}", code.field().id(), code.h_ext().rows(), code.h_ext().cols());
    println!("H over GF(3): {} x {}", code.h_base().rows(), code.h_base().cols());

    let g = code.generator_matrix();
    assert!(code.contains_rows(g).unwrap());

    let oracle = MembershipOracle::new(code.support(), &code.full_polynomial()).unwrap();
    for r in 0..g.rows() {
        assert!(oracle.contains(&Codeword::from_row(g, r)).unwrap());
    }
    println!("all {} generator rows pass the membership test", g.rows());

    let layered = code.parity_check_layered().unwrap();
    assert!(layered.row_space_equal(code.h_ext()).unwrap());
    println!("layered and standard parity matrices span the same space");
}
