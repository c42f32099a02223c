//! Equivalences, subcodes and shortenings among the six code families.

mod maps;

pub use maps::{make_support_map, MapKind, SupportMap};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, FieldElement, Poly};
use crate::bounds::paper::chain_row;
use crate::codes::{make_code, CodeError, CodeInstance, SupportSet, SupportVariant};
use crate::matrix::{Matrix, MatrixError};

#[derive(Debug, Error)]
pub enum ChainError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("no parameter found for the {0:?} map")]
    NoParameter(MapKind),
    #[error("the {0:?} map does not carry its domain onto its codomain")]
    NotBijection(MapKind),
    #[error("codes have different supports")]
    SupportMismatch,
    #[error("order {order} outside 1..={q}")]
    OrderOutOfRange { order: u32, q: u32 },
}

/// Γ(L, (x-c)^q) and Γ(L, (x-c)^{q-1}) have the same parity row space.
pub fn verify_power_q_equiv(support: &SupportSet, q: u32, center: FieldElement) -> Result<bool, ChainError> {
    verify_power_equiv(support, center, q, q - 1)
}

/// Compares Γ(L, (x-c)^a) with Γ(L, (x-c)^b).
pub fn verify_power_equiv(support: &SupportSet, center: FieldElement, a: u32, b: u32) -> Result<bool, ChainError> {
    let g = Poly::linear(support.field(), center);
    let ca = CodeInstance::new(support.clone(), g.clone(), a, None)?;
    let cb = CodeInstance::new(support.clone(), g, b, None)?;
    Ok(ca.h_base().row_space_equal(cb.h_base())?)
}

/// Shortening in the coordinate of `point`.
pub fn shorten_info(code: &CodeInstance, point: FieldElement) -> Result<CodeInstance, ChainError> {
    Ok(code.shorten_at(point)?)
}

/// Shortening in the redundancy symbol at 0 (unit row and last column
/// removed).
pub fn shorten_redundancy(code: &CodeInstance) -> Result<CodeInstance, ChainError> {
    Ok(code.shorten_redundancy()?)
}

/// Generator rows of `left` carried through `map` lie in `right`, and the
/// dimensions agree.
pub fn verify_equivalence(left: &CodeInstance, right: &CodeInstance, map: &SupportMap) -> Result<bool, ChainError> {
    if map.domain().points() != left.support().points() || map.codomain().points() != right.support().points() {
        return Err(ChainError::SupportMismatch);
    }
    if left.k() != right.k() {
        return Ok(false);
    }
    let permuted = map.permute_words(left.generator_matrix());
    Ok(right.contains_rows(&permuted)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubcodeVerdict {
    pub contained: bool,
    pub k_sub: usize,
    pub k_super: usize,
    /// r_sub - r_super.
    pub redundancy_gap: i64,
    pub gap_within: bool,
}

/// Containment of `sub` in `sup` on identical supports, plus whether the
/// redundancy gap is at most `max_gap`.
pub fn verify_subcode(sub: &CodeInstance, sup: &CodeInstance, max_gap: usize) -> Result<SubcodeVerdict, ChainError> {
    if sub.support().points() != sup.support().points() {
        return Err(ChainError::SupportMismatch);
    }
    let contained = sub.k() <= sup.k() && sup.contains_rows(sub.generator_matrix())?;
    let gap = sub.redundancy() as i64 - sup.redundancy() as i64;
    Ok(SubcodeVerdict {
        contained,
        k_sub: sub.k(),
        k_super: sup.k(),
        redundancy_gap: gap,
        gap_within: gap <= max_gap as i64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CollapsePair {
    /// Γ2 against Γ1*.
    Gamma2Gamma1Star,
    /// Γ5 against Γ4*.
    Gamma5Gamma4Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CollapseVerdict {
    pub rows_equal: bool,
    pub left_q_equiv: bool,
    pub right_q_equiv: bool,
    pub k: usize,
}

impl CollapseVerdict {
    pub fn holds(&self) -> bool {
        self.rows_equal && self.left_q_equiv && self.right_q_equiv
    }
}

fn collapses(v: SupportVariant, q: u32, l: u32) -> Result<bool, ChainError> {
    let a = make_code(v, q, l, q - 1, None)?;
    let b = make_code(v, q, l, q, None)?;
    Ok(a.h_base().row_space_equal(b.h_base())?)
}

/// At order q-1 the two parity matrices span the same space, and each side
/// is unchanged at order q.
pub fn verify_order_q_collapse(pair: CollapsePair, q: u32, l: u32) -> Result<CollapseVerdict, ChainError> {
    let (lv, rv) = match pair {
        CollapsePair::Gamma2Gamma1Star => (SupportVariant::L2, SupportVariant::L1Star),
        CollapsePair::Gamma5Gamma4Star => (SupportVariant::L5, SupportVariant::L4Star),
    };
    let left = make_code(lv, q, l, q - 1, None)?;
    let right = make_code(rv, q, l, q - 1, None)?;
    Ok(CollapseVerdict {
        rows_equal: left.h_base().row_space_equal(right.h_base())?,
        left_q_equiv: collapses(lv, q, l)?,
        right_q_equiv: collapses(rv, q, l)?,
        k: left.k(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Equal,
    Subcode,
    Shortening,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub id: String,
    pub expected: Expected,
    pub verified: bool,
    pub n: usize,
    pub k_left: usize,
    pub k_right: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub q: u32,
    pub l: u32,
    pub order: u32,
    pub relations: Vec<Relation>,
}

impl ChainReport {
    pub fn all_verified(&self) -> bool {
        self.relations.iter().all(|r| r.verified)
    }

    pub fn relation(&self, id: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.id == id)
    }
}

/// Dimensions of the five chain columns at one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainDims {
    pub gamma1: usize,
    pub gamma1_star: usize,
    pub gamma2_3: usize,
    pub c3_star_gamma4_star: usize,
    pub gamma5_6: usize,
}

impl ChainDims {
    pub fn as_array(&self) -> [usize; 5] {
        [self.gamma1, self.gamma1_star, self.gamma2_3, self.c3_star_gamma4_star, self.gamma5_6]
    }
}

pub const CHAIN_COLUMNS: [&str; 5] = ["gamma1", "gamma1_star", "gamma2_3", "c3_star_gamma4_star", "gamma5_6"];

/// All relations of the chain at order `order`.
pub fn verify_chain(q: u32, l: u32, order: u32) -> Result<ChainReport, ChainError> {
    Ok(build_chain(q, l, order)?.0)
}

/// [`verify_chain`] together with the computed column dimensions.
pub fn build_chain(q: u32, l: u32, order: u32) -> Result<(ChainReport, ChainDims), ChainError> {
    if order == 0 || order > q {
        return Err(ChainError::OrderOutOfRange { order, q });
    }
    let code = |v| make_code(v, q, l, order, None);
    let g1 = code(SupportVariant::L1)?;
    let g1s = code(SupportVariant::L1Star)?;
    let g2 = code(SupportVariant::L2)?;
    let g3 = code(SupportVariant::L3)?;
    let g4s = code(SupportVariant::L4Star)?;
    let g5 = code(SupportVariant::L5)?;
    let g6 = code(SupportVariant::L6)?;
    let zero = g1.field().zero();
    let low = order + 1 < q;
    let mut rel = Vec::new();
    let mut push = |id: &str, expected, verified, n, k_left, k_right, note: Option<String>| {
        rel.push(Relation { id: id.to_string(), expected, verified, n, k_left, k_right, note })
    };

    let sh = shorten_info(&g1, zero)?;
    push(
        "gamma1_shorten_gamma1_star",
        Expected::Shortening,
        sh.h_ext() == g1s.h_ext() && sh.k() == g1s.k() && g1s.k() + 1 == g1.k(),
        g1.n(),
        g1.k(),
        g1s.k(),
        None,
    );

    if low {
        let v = verify_subcode(&g2, &g1s, l as usize)?;
        push(
            "gamma2_sub_gamma1_star",
            Expected::Subcode,
            v.contained && v.gap_within,
            g2.n(),
            g2.k(),
            g1s.k(),
            Some(format!("redundancy gap {}", v.redundancy_gap)),
        );
    } else {
        let eq = g2.h_base().row_space_equal(g1s.h_base())?;
        push("gamma2_eq_gamma1_star", Expected::Equal, eq, g2.n(), g2.k(), g1s.k(), None);
    }

    let shift = make_support_map(MapKind::ShiftBeta, q, l)?;
    push("gamma2_equiv_gamma3", Expected::Equal, verify_equivalence(&g2, &g3, &shift)?, g2.n(), g2.k(), g3.k(), None);

    let c3s = shorten_redundancy(&g3)?;
    push("gamma3_shorten_c3_star", Expected::Shortening, c3s.k() == g3.k(), g3.n(), g3.k(), c3s.k(), None);

    let inv = make_support_map(MapKind::Invert, q, l)?;
    push(
        "c3_star_equiv_gamma4_star",
        Expected::Equal,
        verify_equivalence(&c3s, &g4s, &inv)?,
        c3s.n(),
        c3s.k(),
        g4s.k(),
        None,
    );

    if low {
        let v = verify_subcode(&g5, &g4s, l as usize)?;
        push(
            "gamma5_sub_gamma4_star",
            Expected::Subcode,
            v.contained && v.gap_within,
            g5.n(),
            g5.k(),
            g4s.k(),
            Some(format!("redundancy gap {}", v.redundancy_gap)),
        );
    } else {
        let eq = g5.h_base().row_space_equal(g4s.h_base())?;
        push("gamma5_eq_gamma4_star", Expected::Equal, eq, g5.n(), g5.k(), g4s.k(), None);
    }

    let aff = make_support_map(MapKind::AffineGamma, q, l)?;
    push("gamma5_equiv_gamma6", Expected::Equal, verify_equivalence(&g5, &g6, &aff)?, g5.n(), g5.k(), g6.k(), None);

    if !low {
        let other = if order == q { q - 1 } else { q };
        for (name, v, c) in [
            ("gamma1", SupportVariant::L1, &g1),
            ("gamma1_star", SupportVariant::L1Star, &g1s),
            ("gamma2", SupportVariant::L2, &g2),
            ("gamma4_star", SupportVariant::L4Star, &g4s),
            ("gamma5", SupportVariant::L5, &g5),
            ("gamma6", SupportVariant::L6, &g6),
        ] {
            let o = make_code(v, q, l, other, None)?;
            let eq = o.h_base().row_space_equal(c.h_base())?;
            push(&format!("{name}_order_q_collapse"), Expected::Equal, eq, c.n(), c.k(), o.k(), None);
        }
    }

    let dims = ChainDims {
        gamma1: g1.k(),
        gamma1_star: g1s.k(),
        gamma2_3: g2.k(),
        c3_star_gamma4_star: g4s.k(),
        gamma5_6: g6.k(),
    };
    let ns = [g1.n(), g1s.n(), g2.n(), g4s.n(), g6.n()];
    if let Some(row) = chain_row(q, l, order) {
        let exact = order + 1 == q;
        for (((col, &k), &paper), &n) in CHAIN_COLUMNS.iter().zip(&dims.as_array()).zip(&row).zip(&ns) {
            let ok = if exact { k == paper } else { k >= paper };
            let note = (k > paper).then(|| format!("exceeds table entry by {}", k - paper));
            push(
                &format!("table_{col}"),
                if exact { Expected::Equal } else { Expected::AtLeast },
                ok,
                n,
                k,
                paper,
                note,
            );
        }
    }
    Ok((ChainReport { q, l, order, relations: rel }, dims))
}

/// Columns of `m` reordered so that column `i` moves to `target[i]`.
pub(crate) fn scatter_columns(m: &Matrix, target: &[usize]) -> Matrix {
    let mut inv = vec![0usize; target.len()];
    for (i, &t) in target.iter().enumerate() {
        inv[t] = i;
    }
    m.select_columns(&inv)
}
