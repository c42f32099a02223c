//! Exact minimum distances of Γ(L, (x^10 - 1)^3 (x - 1)^i) over GF(3),
//! n = 71, by exhaustive search.

use csgoppa::algebra::{code_field, Poly};
use csgoppa::bounds::paper::EMBEDDED_TERNARY;
use csgoppa::codes::{make_code, SupportVariant};
use csgoppa::distance::{min_distance_exact, ExactOptions};

fn main() {
    let f = code_field(3, 2).unwrap();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    for row in EMBEDDED_TERNARY {
        let extra = (row.i > 0).then(|| Poly::linear(&f, f.one()).pow(row.i));
        let code = make_code(SupportVariant::L6Minus, 3, 2, 3, extra).unwrap();
        let r = min_distance_exact(code.generator_matrix(), &ExactOptions { threads, ..Default::default() }).unwrap();
        println!(
            "i = {:>2}: [{}, {}, {}] designed {} ({} words, {:.1}s), published d = {}, best known {}",
            row.i,
            r.n,
            r.k,
            r.d.unwrap(),
            code.designed_distance(),
            r.enumerated,
            r.elapsed_s,
            row.d,
            row.d_best_known
        );
    }
}
