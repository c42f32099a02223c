//! Prime and extension fields GF(q^m) in polynomial-basis representation.
//!
//! An element is stored as the integer `c_0 + c_1 q + ... + c_{m-1} q^{m-1}`
//! where `c_i` are its coordinates in the basis `1, α, ..., α^{m-1}` and `α`
//! is the class of `x` modulo the field's modulus. The modulus is the
//! lexicographically smallest monic primitive polynomial, so `α` generates the
//! multiplicative group and every table in the crate is reproducible.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::AlgebraError;

/// Default limit on the number of field elements.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 24;

const NO_LOG: u32 = u32::MAX;

/// Identity of a field: base characteristic and extension degree.
///
/// Construction is canonical, so `(q, m)` determines the field completely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldId {
    pub q: u32,
    pub m: u32,
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.q)
        } else {
            write!(f, "GF({}^{})", self.q, self.m)
        }
    }
}

/// An element of some GF(q^m), tagged with the field it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: FieldId,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> FieldId {
        self.field
    }

    /// Integer encoding of the coordinate vector (constant coordinate least
    /// significant).
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

/// Binary and unary element operations, for the checked entry point
/// [`Field::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Negation of the first operand; the second is ignored.
    Neg,
    /// Inverse of the first operand; the second is ignored.
    Inv,
}

struct Inner {
    id: FieldId,
    size: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

/// A finite field GF(q^m) with log, antilog and Zech tables.
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {:?}", self.0.id, self.0.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(q^m) with the default element cap.
pub fn make_field(q: u32, m: u32) -> Result<Field, AlgebraError> {
    make_field_with_cap(q, m, DEFAULT_FIELD_CAP)
}

/// Builds GF(q^m), refusing fields with more than `cap` elements.
///
/// Fields are cached per `(q, m)`; repeated calls return the same tables.
pub fn make_field_with_cap(q: u32, m: u32, cap: u64) -> Result<Field, AlgebraError> {
    if !is_prime(q) {
        return Err(AlgebraError::NotPrime(q));
    }
    if m < 1 {
        return Err(AlgebraError::ExtensionDegree(m));
    }
    let size = (q as u64).checked_pow(m).filter(|&s| s <= cap && s < u32::MAX as u64);
    let Some(size) = size else {
        return Err(AlgebraError::CapExceeded { q, m, cap });
    };

    static CACHE: OnceLock<Mutex<HashMap<FieldId, Field>>> = OnceLock::new();
    let id = FieldId { q, m };
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&id) {
        return Ok(f.clone());
    }
    let field = Field::construct(id, size as u32);
    cache.lock().expect("field cache poisoned").entry(id).or_insert(field.clone());
    Ok(field)
}

/// Powers of x modulo a monic polynomial with low coefficients `low`
/// (length m, constant first). Returns the antilog table if x has order
/// exactly q^m - 1.
fn primitive_powers(q: u32, low: &[u32], size: u32) -> Option<Vec<u32>> {
    let m = low.len();
    let order = size - 1;
    let mut digits = vec![0u32; m];
    digits[0] = 1;
    let mut exp = Vec::with_capacity(order as usize);
    for step in 0..order {
        let v = encode(q, &digits);
        if step > 0 && v == 1 {
            return None;
        }
        if v == 0 {
            return None;
        }
        exp.push(v);
        // multiply by x: shift up, then fold x^m = -(low)
        let top = digits[m - 1] as u64;
        let fold = |c: u32| ((q as u64 - (top * c as u64) % q as u64) % q as u64) as u32;
        for i in (1..m).rev() {
            digits[i] = (digits[i - 1] + fold(low[i])) % q;
        }
        digits[0] = fold(low[0]);
    }
    (encode(q, &digits) == 1).then_some(exp)
}

fn encode(q: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * q + d)
}

impl Field {
    fn construct(id: FieldId, size: u32) -> Field {
        let (q, m) = (id.q, id.m as usize);
        // lexicographic order with the constant term most significant
        let mut low = vec![0u32; m];
        let exp = 'search: {
            for n in 0..size {
                let mut r = n;
                for i in (0..m).rev() {
                    low[i] = r % q;
                    r /= q;
                }
                if low[0] == 0 {
                    continue;
                }
                if let Some(exp) = primitive_powers(q, &low, size) {
                    break 'search exp;
                }
            }
            unreachable!("a primitive polynomial of every degree exists");
        };
        let order = size - 1;
        let mut log = vec![NO_LOG; size as usize];
        for (e, &v) in exp.iter().enumerate() {
            log[v as usize] = e as u32;
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let c0 = v % q;
                let w = v - c0 + (c0 + 1) % q;
                log[w as usize]
            })
            .collect();
        let mut modulus = low.clone();
        modulus.push(1);
        Field(Arc::new(Inner { id, size, order, modulus, exp, log, zech }))
    }

    pub fn id(&self) -> FieldId {
        self.0.id
    }

    /// Base characteristic q.
    pub fn q(&self) -> u32 {
        self.0.id.q
    }

    /// Extension degree m.
    pub fn m(&self) -> u32 {
        self.0.id.m
    }

    /// Number of elements q^m.
    pub fn size(&self) -> u32 {
        self.0.size
    }

    /// Order of the multiplicative group, q^m - 1.
    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.id.m == 1
    }

    /// Monic modulus over GF(q), constant coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement { field: self.0.id, value }
    }

    #[inline]
    fn check(&self, a: FieldElement) -> u32 {
        assert_eq!(a.field, self.0.id, "element of {} used with {}", a.field, self.0.id);
        a.value
    }

    /// Wraps a raw encoding, rejecting out-of-range values.
    pub fn element(&self, value: u32) -> Result<FieldElement, AlgebraError> {
        if value >= self.0.size {
            return Err(AlgebraError::InvalidElement(value, self.0.id));
        }
        Ok(self.wrap(value))
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The primitive element α (class of x).
    pub fn alpha(&self) -> FieldElement {
        self.alpha_pow(1)
    }

    /// α^e for any integer exponent, reduced modulo the group order.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let order = self.0.order as i64;
        self.wrap(self.0.exp[e.rem_euclid(order) as usize])
    }

    /// The element c·1 of the prime subfield.
    pub fn from_int(&self, c: i64) -> FieldElement {
        self.wrap(c.rem_euclid(self.q() as i64) as u32)
    }

    /// Element with the given polynomial-basis coordinates (constant first).
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement, AlgebraError> {
        if digits.len() != self.m() as usize || digits.iter().any(|&d| d >= self.q()) {
            return Err(AlgebraError::InvalidDigits(self.0.id));
        }
        Ok(self.wrap(encode(self.q(), digits)))
    }

    /// Polynomial-basis coordinates, constant first.
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut v = self.check(a);
        let q = self.q();
        (0..self.m())
            .map(|_| {
                let d = v % q;
                v /= q;
                d
            })
            .collect()
    }

    /// Discrete logarithm to base α; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        let v = self.check(a);
        (v != 0).then(|| self.0.log[v as usize])
    }

    /// All elements in canonical order: α^0, α^1, ..., α^{q^m - 2}, then 0.
    pub fn enumerate_elements(&self) -> Vec<FieldElement> {
        self.0.exp.iter().map(|&v| self.wrap(v)).chain(std::iter::once(self.zero())).collect()
    }

    /// Position of an element in [`Field::enumerate_elements`].
    pub fn canonical_index(&self, a: FieldElement) -> usize {
        match self.log(a) {
            Some(e) => e as usize,
            None => self.0.order as usize,
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.add_raw(self.check(a), self.check(b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.sub_raw(self.check(a), self.check(b)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.mul_raw(self.check(a), self.check(b)))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.wrap(self.neg_raw(self.check(a)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, AlgebraError> {
        match self.check(a) {
            0 => Err(AlgebraError::ZeroInverse),
            v => Ok(self.wrap(self.inv_raw(v))),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, AlgebraError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        self.wrap(self.pow_raw(self.check(a), e))
    }

    /// Checked form of the element operations: field mismatches and
    /// inversion of zero are reported instead of panicking.
    pub fn apply(&self, op: ElemOp, a: FieldElement, b: FieldElement) -> Result<FieldElement, AlgebraError> {
        for x in [a, b] {
            if x.field != self.0.id {
                return Err(AlgebraError::FieldMismatch { expected: self.0.id, found: x.field });
            }
        }
        Ok(match op {
            ElemOp::Add => self.add(a, b),
            ElemOp::Sub => self.sub(a, b),
            ElemOp::Mul => self.mul(a, b),
            ElemOp::Div => self.div(a, b)?,
            ElemOp::Neg => self.neg(a),
            ElemOp::Inv => self.inv(a)?,
        })
    }

    /// Text form: m base-q digits, constant coordinate first. Digits above 9
    /// use lowercase letters; for q > 36 the digits are decimal and separated
    /// by `:`.
    pub fn to_text(&self, a: FieldElement) -> String {
        let digits = self.digits(a);
        if self.q() <= 36 {
            digits.iter().map(|&d| std::char::from_digit(d, 36).expect("digit below 36")).collect()
        } else {
            digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(":")
        }
    }

    pub fn parse_text(&self, s: &str) -> Result<FieldElement, AlgebraError> {
        let bad = || AlgebraError::InvalidText(s.to_string());
        let digits: Vec<u32> = if self.q() <= 36 {
            s.chars().map(|c| c.to_digit(36).ok_or_else(bad)).collect::<Result<_, _>>()?
        } else {
            s.split(':').map(|d| d.parse::<u32>().map_err(|_| bad())).collect::<Result<_, _>>()?
        };
        self.from_digits(&digits).map_err(|_| bad())
    }

    // Raw arithmetic on encodings, used by the matrix and code hot paths.

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let t = &*self.0;
        let la = t.log[a as usize];
        let lb = t.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + t.order - la };
        let z = t.zech[d as usize];
        if z == NO_LOG {
            0
        } else {
            let e = la as u64 + z as u64;
            t.exp[(e % t.order as u64) as usize]
        }
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 || self.q() == 2 {
            return a;
        }
        let t = &*self.0;
        let e = t.log[a as usize] + t.order / 2;
        t.exp[(e % t.order) as usize]
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        let e = t.log[a as usize] as u64 + t.log[b as usize] as u64;
        t.exp[(e % t.order as u64) as usize]
    }

    /// Caller guarantees `a != 0`.
    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        let t = &*self.0;
        let la = t.log[a as usize];
        t.exp[((t.order - la) % t.order) as usize]
    }

    #[inline]
    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.0;
        let order = t.order as u64;
        let le = (t.log[a as usize] as u64 * (e % order)) % order;
        t.exp[le as usize]
    }

    #[inline]
    pub(crate) fn exp_raw(&self, e: u64) -> u32 {
        self.0.exp[(e % self.0.order as u64) as usize]
    }

    #[inline]
    pub(crate) fn log_raw(&self, a: u32) -> u32 {
        self.0.log[a as usize]
    }

    pub(crate) fn wrap_raw(&self, v: u32) -> FieldElement {
        self.wrap(v)
    }

    pub(crate) fn raw(&self, a: FieldElement) -> u32 {
        self.check(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf3() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.modulus(), &[1, 1]);
        let elems: Vec<u32> = f.enumerate_elements().iter().map(|e| e.value()).collect();
        assert_eq!(elems, vec![1, 2, 0]);
        assert_eq!(f.alpha().value(), 2);
        assert!(f.add(f.from_int(1), f.from_int(2)).is_zero());
    }

    #[test]
    fn gf81_group_order() {
        let f = make_field(3, 4).unwrap();
        assert_eq!(f.size(), 81);
        assert_eq!(f.pow(f.alpha(), 80), f.one());
        let a10 = f.alpha_pow(10);
        assert_eq!(f.mul(f.pow(a10, 8), f.alpha_pow(0)), f.one());
    }

    #[test]
    fn rejects_composite_and_oversize() {
        assert!(matches!(make_field(4, 2), Err(AlgebraError::NotPrime(4))));
        assert!(matches!(make_field(3, 0), Err(AlgebraError::ExtensionDegree(0))));
        assert!(matches!(make_field_with_cap(3, 20, 1 << 24), Err(AlgebraError::CapExceeded { .. })));
    }

    #[test]
    fn modulus_is_lex_smallest_primitive() {
        // x^2 + x + 2 is the smallest primitive quadratic over GF(3) with the
        // constant term compared first: constant 1 candidates (x^2+1,
        // x^2+x+1, x^2+2x+1) all fail.
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.modulus(), &[2, 1, 1]);
        let f = make_field(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn log_table_matches_repeated_multiplication() {
        let f = make_field(3, 4).unwrap();
        let mut acc = f.one();
        for e in 0..160u64 {
            assert_eq!(acc, f.pow(f.alpha(), e));
            acc = f.mul(acc, f.alpha());
        }
    }

    #[test]
    fn digitwise_addition_agrees_with_zech() {
        for (q, m) in [(3, 4), (5, 2), (7, 2), (2, 5)] {
            let f = make_field(q, m).unwrap();
            let all = f.enumerate_elements();
            for &a in &all {
                for &b in all.iter().step_by(3) {
                    let da = f.digits(a);
                    let db = f.digits(b);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % q).collect();
                    assert_eq!(f.add(a, b), f.from_digits(&sum).unwrap());
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn inverse_and_frobenius_over_whole_field() {
        let f = make_field(5, 2).unwrap();
        for a in f.enumerate_elements() {
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            assert_eq!(f.pow(a, 25), a);
        }
        assert!(matches!(f.inv(f.zero()), Err(AlgebraError::ZeroInverse)));
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let f = make_field(3, 2).unwrap();
        let g = make_field(3, 4).unwrap();
        let r = f.apply(ElemOp::Add, f.one(), g.one());
        assert!(matches!(r, Err(AlgebraError::FieldMismatch { .. })));
        assert!(matches!(f.apply(ElemOp::Inv, f.zero(), f.zero()), Err(AlgebraError::ZeroInverse)));
    }

    #[test]
    fn text_round_trip() {
        let f = make_field(3, 4).unwrap();
        let e = f.from_digits(&[1, 0, 2, 0]).unwrap();
        assert_eq!(f.to_text(e), "1020");
        assert_eq!(f.parse_text("1020").unwrap(), e);
        assert!(f.parse_text("103").is_err());
    }

    #[test]
    fn enumeration_is_bijection_with_zero_last() {
        let f = make_field(3, 4).unwrap();
        let all = f.enumerate_elements();
        assert_eq!(all.len(), 81);
        assert!(all[80].is_zero());
        assert_eq!(all[0], f.one());
        let mut seen: Vec<u32> = all.iter().map(|e| e.value()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..81).collect::<Vec<_>>());
        for (i, &e) in all.iter().enumerate() {
            assert_eq!(f.canonical_index(e), i);
        }
    }
}
