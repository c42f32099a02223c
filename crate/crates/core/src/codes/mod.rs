//! Goppa codes Γ(L, G^j) over GF(q) with locators in GF(q^m).

mod membership;
mod support;

pub use membership::{goppa_membership, Codeword, MembershipOracle};
pub use support::{build_support, SupportSet, SupportVariant};

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{code_field, make_field, t_of, AlgebraError, Field, GoppaFamily, Poly};
use crate::matrix::{Matrix, MatrixError};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("unknown support variant {0:?}")]
    UnknownVariant(String),
    #[error("support point belongs to a different field")]
    ForeignPoint,
    #[error("support point {0} appears twice")]
    DuplicatePoint(String),
    #[error("0 must be the last support point")]
    ZeroNotLast,
    #[error("point {0} is not in the support")]
    PointAbsent(String),
    #[error("Goppa polynomial vanishes at support point {0}")]
    SupportRoot(String),
    #[error("cumulativity order must be at least 1")]
    ZeroOrder,
    #[error("Goppa polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("word has length {found}, code length is {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("word has a symbol outside the base field")]
    NotBaseField,
    #[error("support does not contain 0")]
    NoZero,
    #[error("first row of the modified parity matrix does not preserve the code")]
    NotUnitRowForm,
}

/// How the parity matrix of a code instance was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// Rows α^s / G_full(α).
    Goppa,
    /// A unit row and the zero coordinate removed from a Goppa code whose
    /// support contains 0.
    RedundancyShortened,
}

/// A code of length n over GF(q) together with its parity matrices.
#[derive(Debug, Clone)]
pub struct CodeInstance {
    support: SupportSet,
    family: Option<GoppaFamily>,
    g_poly: Poly,
    order: u32,
    extra_factor: Option<Poly>,
    construction: Construction,
    h_ext: Matrix,
    h_base: Matrix,
    k: usize,
    generator: OnceLock<Matrix>,
}

fn check_nonvanishing(support: &SupportSet, g: &Poly) -> Result<(), CodeError> {
    let f = support.field();
    match support.points().iter().find(|&&a| g.eval(a).is_zero()) {
        Some(&a) => Err(CodeError::SupportRoot(f.to_text(a))),
        None => Ok(()),
    }
}

/// Full Goppa polynomial G^j · E.
pub fn full_polynomial(g: &Poly, order: u32, extra: Option<&Poly>) -> Poly {
    let p = g.pow(order);
    match extra {
        Some(e) => p.mul(e),
        None => p,
    }
}

/// Rows s = first..first+count of α^s / d(α) for the given denominator
/// values (as raw logs, or `None` for α = 0 handled by the caller).
fn power_rows(f: &Field, support: &SupportSet, denom: &Poly, first: usize, count: usize) -> Vec<u32> {
    let n = support.len();
    let mut data = vec![0u32; count * n];
    let order = f.order() as u64;
    for (i, &a) in support.points().iter().enumerate() {
        let la = f.log(a);
        let ld = f.log_raw(denom.eval_raw(a.value())) as u64;
        for r in 0..count {
            let s = (first + r) as u64;
            data[r * n + i] = match la {
                Some(la) => f.exp_raw((la as u64 * s % order + order - ld) % order),
                None if s == 0 => f.exp_raw(order - ld),
                None => 0,
            };
        }
    }
    data
}

/// The standard parity matrix: rows α_i^s / G_full(α_i), s = 0..deg G_full.
pub fn parity_check_standard(
    support: &SupportSet,
    g: &Poly,
    order: u32,
    extra: Option<&Poly>,
) -> Result<Matrix, CodeError> {
    if order == 0 {
        return Err(CodeError::ZeroOrder);
    }
    let full = full_polynomial(g, order, extra);
    let deg = full.degree().unwrap_or(0);
    if deg == 0 {
        return Err(CodeError::ConstantPolynomial);
    }
    check_nonvanishing(support, &full)?;
    let f = support.field();
    Ok(Matrix::from_raw(f, deg, support.len(), power_rows(f, support, &full, 0, deg)))
}

/// The layered parity matrix: rows α^s / (G^j E), s < deg E, followed by
/// blocks α^s / G^v for v = j down to 1, s < deg G.
pub fn parity_check_layered(
    support: &SupportSet,
    g: &Poly,
    order: u32,
    extra: Option<&Poly>,
) -> Result<Matrix, CodeError> {
    if order == 0 {
        return Err(CodeError::ZeroOrder);
    }
    let full = full_polynomial(g, order, extra);
    check_nonvanishing(support, &full)?;
    let f = support.field();
    let tau = g.degree().unwrap_or(0);
    if tau == 0 {
        return Err(CodeError::ConstantPolynomial);
    }
    let mut data = Vec::new();
    let e_deg = extra.and_then(|e| e.degree()).unwrap_or(0);
    if e_deg > 0 {
        data.extend(power_rows(f, support, &full, 0, e_deg));
    }
    for v in (1..=order).rev() {
        data.extend(power_rows(f, support, &g.pow(v), 0, tau));
    }
    let rows = e_deg + order as usize * tau;
    Ok(Matrix::from_raw(f, rows, support.len(), data))
}

/// Replaces each row over GF(q^m) by its m coordinate rows over GF(q).
pub fn expand_to_base(h: &Matrix) -> Matrix {
    let f = h.field();
    let q = f.q();
    let m = f.m() as usize;
    let base = make_field(q, 1).expect("prime field");
    let digit_table: Vec<u32> = (0..f.size())
        .flat_map(|v| {
            let mut v = v;
            (0..m).map(move |_| {
                let d = v % q;
                v /= q;
                d
            })
        })
        .collect();
    let (rows, cols) = (h.rows(), h.cols());
    let mut data = vec![0u32; rows * m * cols];
    for r in 0..rows {
        for (c, &v) in h.raw_row(r).iter().enumerate() {
            if v == 0 {
                continue;
            }
            for d in 0..m {
                data[(r * m + d) * cols + c] = digit_table[v as usize * m + d];
            }
        }
    }
    Matrix::from_raw(&base, rows * m, cols, data)
}

impl CodeInstance {
    /// Γ(L, G^order · extra) on an explicit support.
    pub fn new(
        support: SupportSet,
        g_poly: Poly,
        order: u32,
        extra_factor: Option<Poly>,
    ) -> Result<CodeInstance, CodeError> {
        let h_ext = parity_check_standard(&support, &g_poly, order, extra_factor.as_ref())?;
        let family = support.variant().map(|v| v.family());
        Ok(CodeInstance::from_parts(support, family, g_poly, order, extra_factor, Construction::Goppa, h_ext))
    }

    fn from_parts(
        support: SupportSet,
        family: Option<GoppaFamily>,
        g_poly: Poly,
        order: u32,
        extra_factor: Option<Poly>,
        construction: Construction,
        h_ext: Matrix,
    ) -> CodeInstance {
        let h_base = expand_to_base(&h_ext);
        let k = support.len() - h_base.rank();
        CodeInstance {
            support,
            family,
            g_poly,
            order,
            extra_factor,
            construction,
            h_ext,
            h_base,
            k,
            generator: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        self.support.field()
    }

    pub fn base_field(&self) -> &Field {
        self.h_base.field()
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn family(&self) -> Option<GoppaFamily> {
        self.family
    }

    pub fn g_poly(&self) -> &Poly {
        &self.g_poly
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn extra_factor(&self) -> Option<&Poly> {
        self.extra_factor.as_ref()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn full_polynomial(&self) -> Poly {
        full_polynomial(&self.g_poly, self.order, self.extra_factor.as_ref())
    }

    pub fn h_ext(&self) -> &Matrix {
        &self.h_ext
    }

    pub fn h_base(&self) -> &Matrix {
        &self.h_base
    }

    pub fn parity_check_layered(&self) -> Result<Matrix, CodeError> {
        parity_check_layered(&self.support, &self.g_poly, self.order, self.extra_factor.as_ref())
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n() - self.k
    }

    /// deg G_full + 1.
    pub fn designed_distance(&self) -> usize {
        self.full_polynomial().degree().unwrap_or(0) + 1
    }

    /// A k × n basis of the code: the null space of `h_base`.
    pub fn generator_matrix(&self) -> &Matrix {
        self.generator.get_or_init(|| self.h_base.null_space())
    }

    /// True iff every row of `words` has zero syndrome.
    pub fn contains_rows(&self, words: &Matrix) -> Result<bool, CodeError> {
        Ok(self.h_base.mul_transpose(words)?.is_zero())
    }

    /// Shortening in the coordinate of `point`: codewords vanishing there,
    /// with that coordinate removed. For a Goppa code this is the Goppa code
    /// on the smaller support.
    pub fn shorten_at(&self, point: crate::algebra::FieldElement) -> Result<CodeInstance, CodeError> {
        let support = self.support.without(point)?;
        let pos = self.support.position(point).expect("checked by without");
        let keep: Vec<usize> = (0..self.n()).filter(|&c| c != pos).collect();
        let h_ext = self.h_ext.select_columns(&keep);
        Ok(CodeInstance::from_parts(
            support,
            self.family,
            self.g_poly.clone(),
            self.order,
            self.extra_factor.clone(),
            self.construction,
            h_ext,
        ))
    }

    /// Rewrites the parity matrix with the all-ones row first and rows
    /// α^s / G_full(α), s = 1..deg G_full, below it; since 0 is the last
    /// locator, that row is the only one nonzero in the last column. Then
    /// drops the unit row and the last column.
    pub fn shorten_redundancy(&self) -> Result<CodeInstance, CodeError> {
        if !self.support.contains_zero() {
            return Err(CodeError::NoZero);
        }
        let f = self.field().clone();
        let n = self.n();
        let full = self.full_polynomial();
        let deg = full.degree().unwrap_or(0);
        let mut data = vec![1u32; n];
        data.extend(power_rows(&f, &self.support, &full, 1, deg));
        let unit_form = Matrix::from_raw(&f, deg + 1, n, data);
        if !expand_to_base(&unit_form).row_space_equal(&self.h_base)? {
            return Err(CodeError::NotUnitRowForm);
        }
        let rows: Vec<usize> = (1..=deg).collect();
        let cols: Vec<usize> = (0..n - 1).collect();
        let h_ext = unit_form.select_rows(&rows).select_columns(&cols);
        let zero = f.zero();
        Ok(CodeInstance::from_parts(
            self.support.without(zero)?,
            self.family,
            self.g_poly.clone(),
            self.order,
            self.extra_factor.clone(),
            Construction::RedundancyShortened,
            h_ext,
        ))
    }
}

/// Γ(L_variant, G_variant^order · extra) over GF(q^{2l}).
pub fn make_code(
    variant: SupportVariant,
    q: u32,
    l: u32,
    order: u32,
    extra_factor: Option<Poly>,
) -> Result<CodeInstance, CodeError> {
    if order == 0 {
        return Err(CodeError::ZeroOrder);
    }
    let field = code_field(q, l)?;
    let support = build_support(variant, q, l)?;
    let g = variant.family().polynomial_in(&field, t_of(q, l));
    CodeInstance::new(support, g, order, extra_factor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_cumulative_code() {
        let f = make_field(3, 1).unwrap();
        let s = SupportSet::from_points(&f, vec![f.one(), f.from_int(2)], None).unwrap();
        let h = parity_check_standard(&s, &Poly::x(&f), 1, None).unwrap();
        assert_eq!((h.rows(), h.cols()), (1, 2));
        assert_eq!(h.get(0, 0), f.one());
        assert_eq!(h.get(0, 1), f.from_int(2));
    }

    #[test]
    fn table_code_three_two() {
        let c = make_code(SupportVariant::L6, 3, 2, 3, None).unwrap();
        assert_eq!((c.h_ext().rows(), c.h_ext().cols()), (30, 71));
        assert_eq!((c.h_base().rows(), c.h_base().cols()), (120, 71));
        assert_eq!(c.redundancy(), 55);
        assert_eq!(c.k(), 16);
        let zero_col = c.n() - 1;
        assert_eq!(c.h_ext().get(0, zero_col), c.field().one());
        assert_eq!(c.generator_matrix().rows(), 16);
        assert!(c.contains_rows(c.generator_matrix()).unwrap());
    }

    #[test]
    fn layered_matches_standard() {
        let c = make_code(SupportVariant::L6, 3, 2, 3, None).unwrap();
        let lay = c.parity_check_layered().unwrap();
        assert_eq!(lay.rows(), c.h_ext().rows());
        assert!(expand_to_base(&lay).row_space_equal(c.h_base()).unwrap());
        let one = make_code(SupportVariant::L1, 3, 1, 1, None).unwrap();
        assert_eq!(&one.parity_check_layered().unwrap(), one.h_ext());
    }

    #[test]
    fn expansion_of_subfield_entries() {
        let f = make_field(3, 2).unwrap();
        let h = Matrix::from_ints(&f, 1, 3, &[1, 2, 0]).unwrap();
        let b = expand_to_base(&h);
        assert_eq!(b.rows(), 2);
        assert!(b.select_rows(&[1]).is_zero());
        assert_eq!(b.row(0).iter().map(|e| e.value()).collect::<Vec<_>>(), vec![1, 2, 0]);
    }

    #[test]
    fn rejects_order_zero_and_roots() {
        assert!(matches!(make_code(SupportVariant::L6, 3, 1, 0, None), Err(CodeError::ZeroOrder)));
        let f = code_field(3, 2).unwrap();
        let e = Poly::linear(&f, f.one());
        assert!(matches!(make_code(SupportVariant::L6, 3, 2, 3, Some(e.clone())), Err(CodeError::SupportRoot(_))));
        assert!(make_code(SupportVariant::L6Minus, 3, 2, 3, Some(e)).is_ok());
    }

    #[test]
    fn shortening_removes_column() {
        let c = make_code(SupportVariant::L1, 3, 2, 2, None).unwrap();
        let s = c.shorten_at(c.field().zero()).unwrap();
        assert_eq!(s.n(), 72);
        assert_eq!(s.k(), 16);
        let direct = make_code(SupportVariant::L1Star, 3, 2, 2, None).unwrap();
        assert_eq!(s.h_ext(), direct.h_ext());
        assert!(make_code(SupportVariant::L5, 3, 1, 1, None).unwrap().shorten_redundancy().is_err());
    }
}
