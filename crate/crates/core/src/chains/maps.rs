use serde::Serialize;

use super::{scatter_columns, ChainError};
use crate::algebra::{t_of, Field, FieldElement};
use crate::codes::{build_support, SupportSet, SupportVariant};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapKind {
    /// L2 → L3, a ↦ a - β with β^t + β = 1.
    ShiftBeta,
    /// L3* → L4*, a ↦ 1/a.
    Invert,
    /// L5 → L6, a ↦ γ(a + 1) with γ^{t+1} = -1.
    AffineGamma,
}

/// A bijection between two supports, stored as the codomain position of
/// each domain point.
#[derive(Debug, Clone)]
pub struct SupportMap {
    kind: MapKind,
    parameter: Option<FieldElement>,
    domain: SupportSet,
    codomain: SupportSet,
    target: Vec<usize>,
}

/// First element in canonical order satisfying `pred`.
fn scan(f: &Field, pred: impl Fn(FieldElement) -> bool) -> Option<FieldElement> {
    f.enumerate_elements().into_iter().find(|&a| pred(a))
}

impl SupportMap {
    /// Builds the map from an explicit point function, checking that it is
    /// a bijection of `domain` onto `codomain`.
    pub fn from_fn(
        kind: MapKind,
        parameter: Option<FieldElement>,
        domain: SupportSet,
        codomain: SupportSet,
        map: impl Fn(FieldElement) -> FieldElement,
    ) -> Result<SupportMap, ChainError> {
        let f = domain.field().clone();
        let mut pos = vec![usize::MAX; f.size() as usize];
        for (i, &p) in codomain.points().iter().enumerate() {
            pos[p.value() as usize] = i;
        }
        let mut hit = vec![false; codomain.len()];
        let mut target = Vec::with_capacity(domain.len());
        for &a in domain.points() {
            let j = pos[map(a).value() as usize];
            if j == usize::MAX || std::mem::replace(&mut hit[j], true) {
                return Err(ChainError::NotBijection(kind));
            }
            target.push(j);
        }
        if domain.len() != codomain.len() {
            return Err(ChainError::NotBijection(kind));
        }
        Ok(SupportMap { kind, parameter, domain, codomain, target })
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn parameter(&self) -> Option<FieldElement> {
        self.parameter
    }

    pub fn domain(&self) -> &SupportSet {
        &self.domain
    }

    pub fn codomain(&self) -> &SupportSet {
        &self.codomain
    }

    /// Image of the domain point at position `i`.
    pub fn image(&self, i: usize) -> FieldElement {
        self.codomain.points()[self.target[i]]
    }

    /// Moves coordinate i of each row to position `target[i]`.
    pub fn permute_words(&self, words: &Matrix) -> Matrix {
        scatter_columns(words, &self.target)
    }
}

/// β with β^t + β = 1, first in canonical order.
pub fn beta(f: &Field, t: usize) -> Option<FieldElement> {
    scan(f, |b| f.add(f.pow(b, t as u64), b) == f.one())
}

/// γ with γ^{t+1} = -1, first in canonical order.
pub fn gamma(f: &Field, t: usize) -> Option<FieldElement> {
    let minus_one = f.neg(f.one());
    scan(f, |g| f.pow(g, t as u64 + 1) == minus_one)
}

pub fn make_support_map(kind: MapKind, q: u32, l: u32) -> Result<SupportMap, ChainError> {
    let t = t_of(q, l);
    let (dv, cv) = match kind {
        MapKind::ShiftBeta => (SupportVariant::L2, SupportVariant::L3),
        MapKind::Invert => (SupportVariant::L3Star, SupportVariant::L4Star),
        MapKind::AffineGamma => (SupportVariant::L5, SupportVariant::L6),
    };
    let domain = build_support(dv, q, l)?;
    let codomain = build_support(cv, q, l)?;
    let f = domain.field().clone();
    match kind {
        MapKind::ShiftBeta => {
            let b = beta(&f, t).ok_or(ChainError::NoParameter(kind))?;
            SupportMap::from_fn(kind, Some(b), domain, codomain, |a| f.sub(a, b))
        }
        MapKind::Invert => SupportMap::from_fn(kind, None, domain, codomain, |a| f.inv(a).expect("0 not in L3*")),
        MapKind::AffineGamma => {
            let g = gamma(&f, t).ok_or(ChainError::NoParameter(kind))?;
            SupportMap::from_fn(kind, Some(g), domain, codomain, |a| f.mul(g, f.add(a, f.one())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::code_field;

    #[test]
    fn maps_are_bijections() {
        for &(q, l) in &[(3, 1), (3, 2), (5, 1), (5, 2), (7, 1)] {
            for kind in [MapKind::ShiftBeta, MapKind::Invert, MapKind::AffineGamma] {
                let m = make_support_map(kind, q, l).unwrap();
                assert_eq!(m.domain().len(), m.codomain().len());
            }
        }
    }

    #[test]
    fn parameters_satisfy_their_equations() {
        let f = code_field(3, 2).unwrap();
        let b = beta(&f, 9).unwrap();
        assert_eq!(f.add(f.pow(b, 9), b), f.one());
        let g = gamma(&f, 9).unwrap();
        assert_eq!(f.add(f.pow(g, 10), f.one()), f.zero());
    }

    #[test]
    fn literal_forward_shift_and_affine_are_not_bijections() {
        let (q, l) = (3, 2);
        let t = t_of(q, l);
        let l2 = build_support(SupportVariant::L2, q, l).unwrap();
        let l3 = build_support(SupportVariant::L3, q, l).unwrap();
        let l5 = build_support(SupportVariant::L5, q, l).unwrap();
        let l6 = build_support(SupportVariant::L6, q, l).unwrap();
        let f = l2.field().clone();
        let b = beta(&f, t).unwrap();
        let g = gamma(&f, t).unwrap();
        assert!(SupportMap::from_fn(MapKind::ShiftBeta, Some(b), l2, l3, |a| f.add(a, b)).is_err());
        let one = f.one();
        assert!(SupportMap::from_fn(MapKind::AffineGamma, Some(g), l5, l6, |a| f.sub(f.mul(g, a), one)).is_err());
    }
}
