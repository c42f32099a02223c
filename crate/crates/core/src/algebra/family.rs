use serde::Serialize;

use super::field::{make_field, Field};
use super::poly::Poly;
use super::AlgebraError;

/// The six separable Goppa polynomials over GF(t^2), t = q^l, plus the
/// opposite-sign variant of G6 used by the embedded ternary codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GoppaFamily {
    /// x^{t-1} + 1
    G1,
    /// x^t + x
    G2,
    /// x^t + x + 1
    G3,
    /// x^t + x^{t-1} + 1
    G4,
    /// x^{t+1} + x^t + x
    G5,
    /// x^{t+1} + 1
    G6,
    /// x^{t+1} - 1
    G6Minus,
}

impl GoppaFamily {
    pub const ALL: [GoppaFamily; 7] = [
        GoppaFamily::G1,
        GoppaFamily::G2,
        GoppaFamily::G3,
        GoppaFamily::G4,
        GoppaFamily::G5,
        GoppaFamily::G6,
        GoppaFamily::G6Minus,
    ];

    /// Degree as a function of t.
    pub fn degree(self, t: usize) -> usize {
        match self {
            GoppaFamily::G1 => t - 1,
            GoppaFamily::G2 | GoppaFamily::G3 | GoppaFamily::G4 => t,
            GoppaFamily::G5 | GoppaFamily::G6 | GoppaFamily::G6Minus => t + 1,
        }
    }

    fn terms(self, t: usize) -> Vec<(usize, i64)> {
        match self {
            GoppaFamily::G1 => vec![(t - 1, 1), (0, 1)],
            GoppaFamily::G2 => vec![(t, 1), (1, 1)],
            GoppaFamily::G3 => vec![(t, 1), (1, 1), (0, 1)],
            GoppaFamily::G4 => vec![(t, 1), (t - 1, 1), (0, 1)],
            GoppaFamily::G5 => vec![(t + 1, 1), (t, 1), (1, 1)],
            GoppaFamily::G6 => vec![(t + 1, 1), (0, 1)],
            GoppaFamily::G6Minus => vec![(t + 1, 1), (0, -1)],
        }
    }

    /// The family polynomial over a given field GF(t^2).
    pub fn polynomial_in(self, field: &Field, t: usize) -> Poly {
        Poly::from_terms(field, &self.terms(t))
    }
}

/// t = q^l.
pub fn t_of(q: u32, l: u32) -> usize {
    (q as usize).pow(l)
}

/// The code field GF(q^{2l}) = GF(t^2).
pub fn code_field(q: u32, l: u32) -> Result<Field, AlgebraError> {
    if q < 3 {
        return Err(AlgebraError::UnsupportedQ(q));
    }
    if l < 1 {
        return Err(AlgebraError::ExtensionDegree(0));
    }
    make_field(q, 2 * l)
}

/// The family polynomial G_i over GF(q^{2l}), t = q^l.
pub fn goppa_family_polynomial(family: GoppaFamily, q: u32, l: u32) -> Result<Poly, AlgebraError> {
    let field = code_field(q, l)?;
    Ok(family.polynomial_in(&field, t_of(q, l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g6_and_g1_at_three_two() {
        let g6 = goppa_family_polynomial(GoppaFamily::G6, 3, 2).unwrap();
        assert_eq!(g6.degree(), Some(10));
        let f = g6.field().clone();
        assert_eq!(g6.eval(f.zero()), f.one());
        let g1 = goppa_family_polynomial(GoppaFamily::G1, 3, 2).unwrap();
        assert_eq!(g1, Poly::from_terms(&f, &[(8, 1), (0, 1)]));
    }

    #[test]
    fn g2_is_x_times_g1_and_g5_is_x_times_g4() {
        for (q, l) in [(3, 1), (3, 2), (5, 1), (7, 1)] {
            let p = |fam| goppa_family_polynomial(fam, q, l).unwrap();
            let x = Poly::x(p(GoppaFamily::G1).field());
            assert_eq!(p(GoppaFamily::G2), x.mul(&p(GoppaFamily::G1)));
            assert_eq!(p(GoppaFamily::G5), x.mul(&p(GoppaFamily::G4)));
        }
    }

    #[test]
    fn q_two_is_rejected() {
        assert!(matches!(goppa_family_polynomial(GoppaFamily::G6, 2, 2), Err(AlgebraError::UnsupportedQ(2))));
    }

    #[test]
    fn families_are_separable_with_expected_root_counts() {
        for (q, l) in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
            let t = t_of(q, l);
            for fam in GoppaFamily::ALL {
                let g = goppa_family_polynomial(fam, q, l).unwrap();
                assert!(g.is_separable(), "{fam:?} at ({q},{l})");
                let roots = g.roots_in_field().unwrap().len();
                match fam {
                    GoppaFamily::G1 => assert_eq!(roots, t - 1),
                    GoppaFamily::G3 => assert_eq!(roots, t),
                    GoppaFamily::G6 | GoppaFamily::G6Minus => assert_eq!(roots, t + 1),
                    _ => {}
                }
            }
        }
    }
}
