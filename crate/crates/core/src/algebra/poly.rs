use std::fmt;

use super::field::{Field, FieldElement};
use super::AlgebraError;

/// Dense univariate polynomial over a [`Field`], lowest coefficient first.
///
/// The coefficient vector never ends in zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.field.to_text(self.field.wrap_raw(c));
            match i {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]x")?,
                _ => write!(f, "[{c}]x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::from_raw(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::from_raw(field, vec![1])
    }

    /// x.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, field.one(), 1)
    }

    /// c·x^deg.
    pub fn monomial(field: &Field, c: FieldElement, deg: usize) -> Poly {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = field.raw(c);
        Poly::from_raw(field, coeffs)
    }

    /// x - a.
    pub fn linear(field: &Field, a: FieldElement) -> Poly {
        Poly::from_raw(field, vec![field.raw(field.neg(a)), 1])
    }

    pub fn from_coeffs(field: &Field, coeffs: &[FieldElement]) -> Poly {
        Poly::from_raw(field, coeffs.iter().map(|&c| field.raw(c)).collect())
    }

    /// Polynomial with prime-subfield coefficients given as integers
    /// (reduced modulo q), lowest first.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_raw(field, coeffs.iter().map(|&c| field.from_int(c).value()).collect())
    }

    /// Sparse constructor from `(degree, integer coefficient)` terms.
    pub fn from_terms(field: &Field, terms: &[(usize, i64)]) -> Poly {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![0u32; deg + 1];
        for &(d, c) in terms {
            coeffs[d] = field.add_raw(coeffs[d], field.from_int(c).value());
        }
        Poly::from_raw(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.wrap_raw(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| self.field.wrap_raw(c)).collect()
    }

    pub(crate) fn raw_coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&c| self.field.wrap_raw(c))
    }

    fn same_field(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.field.id() != other.field.id() {
            return Err(AlgebraError::FieldMismatch { expected: self.field.id(), found: other.field.id() });
        }
        Ok(())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.field.wrap_raw(self.eval_raw(self.field.raw(x)))
    }

    /// Checked evaluation: an element of another field is an error.
    pub fn try_eval(&self, x: FieldElement) -> Result<FieldElement, AlgebraError> {
        if x.field() != self.field.id() {
            return Err(AlgebraError::FieldMismatch { expected: self.field.id(), found: x.field() });
        }
        Ok(self.eval(x))
    }

    #[inline]
    pub(crate) fn eval_raw(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add_raw(f.mul_raw(acc, x), c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_field(other).expect("polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Poly::from_raw(f, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&c| f.neg_raw(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = &self.field;
        let c = f.raw(c);
        Poly::from_raw(f, self.coeffs.iter().map(|&a| f.mul_raw(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_field(other).expect("polynomials over different fields");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
            }
        }
        Poly::from_raw(f, out)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul_raw(c, f.from_int(i as i64).value())).collect();
        Poly::from_raw(f, coeffs)
    }

    /// Quotient and remainder of division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        let lead_inv = f.inv_raw(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul_raw(rem[i + dd], lead_inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub_raw(rem[i + j], f.mul_raw(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, AlgebraError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Inverse modulo `modulus` by the extended Euclidean algorithm.
    pub fn inv_mod(&self, modulus: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(modulus)?;
        let f = &self.field;
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus)?);
        let (mut s0, mut s1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quot, r2) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        if r0.degree() != Some(0) {
            return Err(AlgebraError::NotInvertible);
        }
        let c = f.inv(r0.coeff(0))?;
        s0.scale(c).rem(modulus)
    }

    /// No repeated roots in any extension: gcd(p, p') = 1.
    pub fn is_separable(&self) -> bool {
        match self.gcd(&self.derivative()) {
            Ok(g) => g.degree() == Some(0),
            Err(_) => false,
        }
    }

    /// All roots lying in the polynomial's own field, in canonical element
    /// order. Multiplicities are not reported.
    pub fn roots_in_field(&self) -> Result<Vec<FieldElement>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        Ok(self.field.enumerate_elements().into_iter().filter(|&a| self.eval(a).is_zero()).collect())
    }
}
