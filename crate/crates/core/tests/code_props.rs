use csgoppa::algebra::{make_field, Field, Poly};
use csgoppa::chains::verify_power_equiv;
use csgoppa::codes::{CodeInstance, Codeword, MembershipOracle, SupportSet};
use csgoppa::distance::{min_distance_exact, ExactOptions};
use csgoppa::matrix::Matrix;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [(u32, u32); 3] = [(3, 2), (3, 3), (5, 2)];

struct Setup {
    field: Field,
    g: Poly,
    points: Vec<csgoppa::algebra::FieldElement>,
}

/// Random monic G of degree 1..=3 and a random support avoiding its roots,
/// with 0 last when present.
fn setup(fi: usize, seed: u64, max_len: usize) -> Setup {
    let (q, m) = FIELDS[fi];
    let f = make_field(q, m).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deg = rng.gen_range(1..=3);
    let mut coeffs: Vec<_> = (0..deg).map(|_| f.element(rng.gen_range(0..f.size())).unwrap()).collect();
    coeffs.push(f.one());
    let g = Poly::from_coeffs(&f, &coeffs);
    let mut pts: Vec<_> = f.enumerate_elements().into_iter().filter(|&a| !g.eval(a).is_zero()).collect();
    pts.shuffle(&mut rng);
    pts.truncate(rng.gen_range(deg + 2..=max_len.max(deg + 2)).min(pts.len()));
    if let Some(z) = pts.iter().position(|a| a.is_zero()) {
        let zero = pts.remove(z);
        pts.push(zero);
    }
    Setup { field: f, g, points: pts }
}

fn code(s: &Setup, order: u32) -> CodeInstance {
    let support = SupportSet::from_points(&s.field, s.points.clone(), None).unwrap();
    CodeInstance::new(support, s.g.clone(), order, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn layered_matches_standard(fi in 0usize..3, seed in any::<u64>(), order in 1u32..=4) {
        let s = setup(fi, seed, 40);
        let c = code(&s, order);
        prop_assert!(c.parity_check_layered().unwrap().row_space_equal(c.h_ext()).unwrap());
    }

    #[test]
    fn generator_rows_pass_membership(fi in 0usize..3, seed in any::<u64>(), order in 1u32..=3) {
        let s = setup(fi, seed, 40);
        let c = code(&s, order);
        let oracle = MembershipOracle::new(c.support(), &c.full_polynomial()).unwrap();
        let g = c.generator_matrix();
        prop_assert_eq!(g.rows(), c.k());
        for r in 0..g.rows() {
            prop_assert!(oracle.contains(&Codeword::from_row(g, r)).unwrap());
        }
    }

    #[test]
    fn membership_agrees_with_parity_check(fi in 0usize..3, seed in any::<u64>(), order in 1u32..=3) {
        let s = setup(fi, seed, 30);
        let c = code(&s, order);
        let fq = c.base_field().clone();
        let oracle = MembershipOracle::new(c.support(), &c.full_polynomial()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5555);
        for _ in 0..8 {
            let w: Vec<_> = (0..c.n()).map(|_| fq.from_int(rng.gen_range(0..fq.q() as i64))).collect();
            let row = Matrix::from_rows(&fq, c.n(), std::slice::from_ref(&w)).unwrap();
            prop_assert_eq!(oracle.contains(&Codeword(w)).unwrap(), c.contains_rows(&row).unwrap());
        }
    }

    #[test]
    fn higher_order_is_a_subcode(fi in 0usize..3, seed in any::<u64>(), order in 2u32..=4) {
        let s = setup(fi, seed, 40);
        let hi = code(&s, order);
        let lo = code(&s, order - 1);
        prop_assert!(hi.k() <= lo.k());
        prop_assert!(lo.contains_rows(hi.generator_matrix()).unwrap());
    }

    #[test]
    fn dimension_ignores_support_order(fi in 0usize..3, seed in any::<u64>(), order in 1u32..=3) {
        let s = setup(fi, seed, 40);
        let a = code(&s, order);
        let mut shuffled = Setup { field: s.field.clone(), g: s.g.clone(), points: s.points.clone() };
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        let nonzero = shuffled.points.len() - s.points.iter().any(|p| p.is_zero()) as usize;
        shuffled.points[..nonzero].shuffle(&mut rng);
        prop_assert_eq!(code(&shuffled, order).k(), a.k());
    }

    #[test]
    fn distance_at_least_designed(fi in 0usize..2, seed in any::<u64>(), order in 1u32..=3) {
        let s = setup(fi, seed, 14);
        let c = code(&s, order);
        let opts = ExactOptions { cap: 1 << 20, ..Default::default() };
        if let Ok(r) = min_distance_exact(c.generator_matrix(), &opts) {
            if let Some(d) = r.d {
                prop_assert!(d >= c.designed_distance(), "d = {} designed {}", d, c.designed_distance());
            }
        }
    }

    #[test]
    fn power_q_equivalence_on_random_supports(m in 2u32..=3, seed in any::<u64>()) {
        let f = make_field(3, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = f.enumerate_elements();
        let center = all[rng.gen_range(0..all.len())];
        let mut pts: Vec<_> = all.into_iter().filter(|&a| a != center && !a.is_zero()).collect();
        pts.shuffle(&mut rng);
        pts.truncate(rng.gen_range(4..=pts.len()));
        let s = SupportSet::from_points(&f, pts, None).unwrap();
        prop_assert!(verify_power_equiv(&s, center, 3, 2).unwrap());
    }
}
