//! Arithmetic in GF(3^4) and the polynomial (x^10 + 1)^3 over it.

use csgoppa::algebra::{code_field, GoppaFamily, Poly};

fn main() {
    let f = code_field(3, 2).expect("GF(81)");
    println!("{} with modulus coefficients {:?}", f.id(), f.modulus());

    let a = f.alpha();
    let b = f.alpha_pow(17);
    println!("alpha = {}, alpha^17 = {}", f.to_text(a), f.to_text(b));
    println!("sum {}, product {}", f.to_text(f.add(a, b)), f.to_text(f.mul(a, b)));
    println!("alpha^-1 = {}", f.to_text(f.inv(a).unwrap()));
    assert_eq!(f.pow(a, f.order() as u64), f.one());

    let g = GoppaFamily::G6.polynomial_in(&f, 9);
    let g3 = g.pow(3);
    println!("deg G6 = {:?}, deg G6^3 = {:?}", g.degree(), g3.degree());
    let roots = g.roots_in_field().unwrap();
    println!("G6 has {} roots in {}", roots.len(), f.id());

    let lin = Poly::linear(&f, f.one());
    println!("(x - 1)^-1 mod G6 has degree {:?}", lin.inv_mod(&g).unwrap().degree());
}
