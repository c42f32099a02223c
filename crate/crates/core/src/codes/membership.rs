//! The defining congruence Σ c_i / (x - α_i) ≡ 0 mod G, evaluated with
//! polynomial arithmetic only.

use super::{CodeError, SupportSet};
use crate::algebra::{Field, FieldElement, Poly};
use crate::matrix::Matrix;

/// A word over the prime field GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword(pub Vec<FieldElement>);

impl Codeword {
    pub fn from_row(m: &Matrix, r: usize) -> Codeword {
        Codeword(m.row(r))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.0
    }
}

/// Precomputed inverses (x - α_i)^{-1} mod G for every locator.
pub struct MembershipOracle {
    field: Field,
    deg: usize,
    inverses: Vec<Vec<u32>>,
}

impl MembershipOracle {
    pub fn new(support: &SupportSet, g_full: &Poly) -> Result<MembershipOracle, CodeError> {
        let f = support.field().clone();
        let deg = g_full.degree().filter(|&d| d > 0).ok_or(CodeError::ConstantPolynomial)?;
        let g = g_full.raw_coeffs();
        let mut inverses = Vec::with_capacity(support.len());
        for &a in support.points() {
            let ga = g_full.eval(a);
            if ga.is_zero() {
                return Err(CodeError::SupportRoot(f.to_text(a)));
            }
            // (G(x) - G(a)) / (x - a) by synthetic division; times -1/G(a)
            let a = a.value();
            let mut quot = vec![0u32; deg];
            let mut carry = g[deg];
            for k in (0..deg).rev() {
                quot[k] = carry;
                carry = f.add_raw(g[k], f.mul_raw(a, carry));
            }
            let s = f.neg_raw(f.inv_raw(f.raw(ga)));
            for x in quot.iter_mut() {
                *x = f.mul_raw(*x, s);
            }
            inverses.push(quot);
        }
        Ok(MembershipOracle { field: f, deg, inverses })
    }

    pub fn contains(&self, c: &Codeword) -> Result<bool, CodeError> {
        if c.len() != self.inverses.len() {
            return Err(CodeError::LengthMismatch { expected: self.inverses.len(), found: c.len() });
        }
        let f = &self.field;
        let mut acc = vec![0u32; self.deg];
        for (sym, inv) in c.symbols().iter().zip(&self.inverses) {
            if sym.field().m != 1 || sym.field().q != f.q() {
                return Err(CodeError::NotBaseField);
            }
            if sym.is_zero() {
                continue;
            }
            let s = f.raw(f.from_int(sym.value() as i64));
            for (x, &y) in acc.iter_mut().zip(inv) {
                *x = f.add_raw(*x, f.mul_raw(s, y));
            }
        }
        Ok(acc.iter().all(|&x| x == 0))
    }
}

/// Single-word form of [`MembershipOracle::contains`].
pub fn goppa_membership(support: &SupportSet, g_full: &Poly, c: &Codeword) -> Result<bool, CodeError> {
    MembershipOracle::new(support, g_full)?.contains(c)
}
