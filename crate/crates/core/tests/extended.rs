//! Largest table rows. Run with `cargo test --release -- --ignored`.

use csgoppa::bounds::paper::{GAMMA1_Q, GAMMA6_Q};
use csgoppa::codes::{make_code, SupportVariant};

#[test]
#[ignore]
fn gamma6_eleven_two_dimension() {
    let row = GAMMA6_Q.iter().find(|r| r.q == 11).unwrap();
    let code = make_code(SupportVariant::L6, 11, 2, 11, None).unwrap();
    assert_eq!((code.n(), code.k()), (row.n, row.k_real));
}

#[test]
#[ignore]
fn gamma1_eleven_two_dimension() {
    let row = GAMMA1_Q.iter().find(|r| r.q == 11).unwrap();
    let code = make_code(SupportVariant::L1, 11, 2, 11, None).unwrap();
    assert_eq!((code.n(), code.k()), (row.n, row.k_real));
}
