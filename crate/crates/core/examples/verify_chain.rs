//! Walks the chain Γ1 → Γ1* ⊇ Γ2 ≡ Γ3 → C3* ≡ Γ4* ⊇ Γ5 ≡ Γ6 for q = 5, t = 25.

use csgoppa::chains::{build_chain, make_support_map, MapKind, CHAIN_COLUMNS};

fn main() {
    for kind in [MapKind::ShiftBeta, MapKind::Invert, MapKind::AffineGamma] {
        let m = make_support_map(kind, 5, 2).unwrap();
        let p = m.parameter().map(|p| m.domain().field().to_text(p));
        println!("{kind:?}: {} points, parameter {:?}", m.domain().len(), p);
    }
    for i in 1..=5 {
        let (report, dims) = build_chain(5, 2, i).unwrap();
        println!("order {i}:");
        for (c, k) in CHAIN_COLUMNS.iter().zip(dims.as_array()) {
            println!("  {c:<22} k = {k}");
        }
        for r in &report.relations {
            println!("  {:<32} {:?} {}", r.id, r.expected, if r.verified { "ok" } else { "FAILED" });
        }
    }
}
