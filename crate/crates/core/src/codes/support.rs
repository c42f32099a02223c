use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::CodeError;
use crate::algebra::{code_field, t_of, Field, FieldElement, GoppaFamily};

/// Named locator sets over GF(t^2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SupportVariant {
    L1,
    L1Star,
    L2,
    L3,
    L3Star,
    L4Star,
    L5,
    L6,
    /// GF(t^2) minus the roots of x^{t+1} - 1.
    L6Minus,
}

impl SupportVariant {
    pub const ALL: [SupportVariant; 9] = [
        SupportVariant::L1,
        SupportVariant::L1Star,
        SupportVariant::L2,
        SupportVariant::L3,
        SupportVariant::L3Star,
        SupportVariant::L4Star,
        SupportVariant::L5,
        SupportVariant::L6,
        SupportVariant::L6Minus,
    ];

    /// The Goppa polynomial a code on this support is built from.
    pub fn family(self) -> GoppaFamily {
        use SupportVariant::*;
        match self {
            L1 | L1Star => GoppaFamily::G1,
            L2 => GoppaFamily::G2,
            L3 | L3Star => GoppaFamily::G3,
            L4Star => GoppaFamily::G4,
            L5 => GoppaFamily::G5,
            L6 => GoppaFamily::G6,
            L6Minus => GoppaFamily::G6Minus,
        }
    }

    /// Polynomial whose roots are removed from GF(t^2).
    fn excluded_roots_of(self) -> GoppaFamily {
        use SupportVariant::*;
        match self {
            L1 | L1Star | L2 => GoppaFamily::G1,
            L3 | L3Star => GoppaFamily::G3,
            L4Star | L5 => GoppaFamily::G4,
            L6 => GoppaFamily::G6,
            L6Minus => GoppaFamily::G6Minus,
        }
    }

    fn drops_zero(self) -> bool {
        use SupportVariant::*;
        matches!(self, L1Star | L2 | L3Star | L4Star | L5)
    }

    pub fn name(self) -> &'static str {
        use SupportVariant::*;
        match self {
            L1 => "L1",
            L1Star => "L1*",
            L2 => "L2",
            L3 => "L3",
            L3Star => "L3*",
            L4Star => "L4*",
            L5 => "L5",
            L6 => "L6",
            L6Minus => "L6-",
        }
    }
}

impl fmt::Display for SupportVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SupportVariant {
    type Err = CodeError;

    /// Accepts `L1*`, `l1star`, `gamma1star` and similar spellings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = s.to_ascii_lowercase().replace('*', "star").replace('-', "minus");
        let k = k.strip_prefix("gamma").map(|r| format!("l{r}")).unwrap_or(k);
        SupportVariant::ALL
            .into_iter()
            .find(|v| v.name().to_ascii_lowercase().replace('*', "star").replace('-', "minus") == k)
            .ok_or_else(|| CodeError::UnknownVariant(s.to_string()))
    }
}

/// An ordered locator set. Points are distinct and 0, when present, is
/// last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    field: Field,
    points: Vec<FieldElement>,
    variant: Option<SupportVariant>,
}

impl SupportSet {
    pub fn from_points(
        field: &Field,
        points: Vec<FieldElement>,
        variant: Option<SupportVariant>,
    ) -> Result<SupportSet, CodeError> {
        let mut seen = vec![false; field.size() as usize];
        for (i, &p) in points.iter().enumerate() {
            if p.field() != field.id() {
                return Err(CodeError::ForeignPoint);
            }
            if std::mem::replace(&mut seen[p.value() as usize], true) {
                return Err(CodeError::DuplicatePoint(field.to_text(p)));
            }
            if p.is_zero() && i + 1 != points.len() {
                return Err(CodeError::ZeroNotLast);
            }
        }
        Ok(SupportSet { field: field.clone(), points, variant })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn variant(&self) -> Option<SupportVariant> {
        self.variant
    }

    pub fn contains_zero(&self) -> bool {
        self.points.last().is_some_and(|p| p.is_zero())
    }

    pub fn position(&self, point: FieldElement) -> Option<usize> {
        self.points.iter().position(|&p| p == point)
    }

    /// The same points minus one, order kept.
    pub fn without(&self, point: FieldElement) -> Result<SupportSet, CodeError> {
        let i = self.position(point).ok_or_else(|| CodeError::PointAbsent(self.field.to_text(point)))?;
        let mut points = self.points.clone();
        points.remove(i);
        Ok(SupportSet { field: self.field.clone(), points, variant: None })
    }

    /// Same points, as an unordered set.
    pub fn same_set(&self, other: &SupportSet) -> bool {
        let mut a: Vec<u32> = self.points.iter().map(|p| p.value()).collect();
        let mut b: Vec<u32> = other.points.iter().map(|p| p.value()).collect();
        a.sort_unstable();
        b.sort_unstable();
        self.field == other.field && a == b
    }

    /// One element text per line.
    pub fn to_dump(&self) -> String {
        let mut s = String::new();
        for &p in &self.points {
            s.push_str(&self.field.to_text(p));
            s.push('\n');
        }
        s
    }
}

/// Locator set of a named variant over GF(t^2), in canonical order.
pub fn build_support(variant: SupportVariant, q: u32, l: u32) -> Result<SupportSet, CodeError> {
    let field = code_field(q, l)?;
    let g = variant.excluded_roots_of().polynomial_in(&field, t_of(q, l));
    let points: Vec<FieldElement> = field
        .enumerate_elements()
        .into_iter()
        .filter(|&a| !g.eval(a).is_zero() && !(variant.drops_zero() && a.is_zero()))
        .collect();
    SupportSet::from_points(&field, points, Some(variant))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_at_three_two() {
        let n = |v| build_support(v, 3, 2).unwrap().len();
        assert_eq!(n(SupportVariant::L6), 71);
        assert_eq!(n(SupportVariant::L6Minus), 71);
        assert_eq!(n(SupportVariant::L1), 73);
        assert_eq!(n(SupportVariant::L1Star), 72);
        assert_eq!(n(SupportVariant::L2), 72);
        assert_eq!(n(SupportVariant::L3), 72);
        assert_eq!(n(SupportVariant::L3Star), 71);
        assert_eq!(n(SupportVariant::L4Star), 71);
        assert_eq!(n(SupportVariant::L5), 71);
    }

    #[test]
    fn zero_is_last_and_order_canonical() {
        let s = build_support(SupportVariant::L6, 3, 2).unwrap();
        assert!(s.contains_zero());
        let f = s.field().clone();
        let idx: Vec<usize> = s.points().iter().map(|&p| f.canonical_index(p)).collect();
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
        assert!(!build_support(SupportVariant::L5, 3, 2).unwrap().contains_zero());
    }

    #[test]
    fn minus_variant_excludes_one() {
        let s = build_support(SupportVariant::L6Minus, 3, 2).unwrap();
        let one = s.field().one();
        assert!(s.position(one).is_none());
        assert!(build_support(SupportVariant::L6, 3, 2).unwrap().position(one).is_some());
    }

    #[test]
    fn parse_names() {
        assert_eq!("L1*".parse::<SupportVariant>().unwrap(), SupportVariant::L1Star);
        assert_eq!("gamma4star".parse::<SupportVariant>().unwrap(), SupportVariant::L4Star);
        assert_eq!("gamma6minus".parse::<SupportVariant>().unwrap(), SupportVariant::L6Minus);
        assert!("L7".parse::<SupportVariant>().is_err());
    }

    #[test]
    fn rejects_bad_point_lists() {
        let f = code_field(3, 1).unwrap();
        assert!(SupportSet::from_points(&f, vec![f.zero(), f.one()], None).is_err());
        assert!(SupportSet::from_points(&f, vec![f.one(), f.one()], None).is_err());
        assert!(SupportSet::from_points(&f, vec![f.alpha(), f.one(), f.zero()], None).is_ok());
    }
}
