//! Closed-form dimension and distance bounds for the cumulative-separable
//! families, in exact integer arithmetic.

pub mod paper;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("order {j} outside 1..={q}")]
    OrderOutOfRange { j: u32, q: u32 },
}

fn t_of(q: u32, l: u32) -> i64 {
    (q as i64).pow(l)
}

/// n - m·deg G_full. May be negative.
pub fn generic_dim_bound(n: usize, m: u32, deg_full: usize) -> i64 {
    n as i64 - m as i64 * deg_full as i64
}

/// n - m(q-1)·deg G for a code of order exactly q. May be negative.
pub fn power_q_dim_bound(n: usize, m: u32, q: u32, deg_g: usize) -> i64 {
    n as i64 - m as i64 * (q as i64 - 1) * deg_g as i64
}

/// Redundancy accounting for Γ6^(j) = Γ(L6, (x^{t+1}+1)^j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u32,
    pub l: u32,
    pub j: u32,
    pub t: i64,
    pub n: i64,
    /// Rows removed from block v, v = 1..j' where j' = min(j, q-1).
    pub delta: Vec<i64>,
    /// Sum of `delta`.
    pub delta_total: i64,
    /// Extra rows removed at orders q-1 and q.
    pub theta: Option<i64>,
    pub r_bound: i64,
    pub k_bound: i64,
    pub d_bound: i64,
}

/// δ_v = l + 2lv.
pub fn delta(l: u32, v: u32) -> i64 {
    l as i64 + 2 * l as i64 * v as i64
}

/// Σ_{v=1..j} δ_v = l·j(j+2).
pub fn delta_total(l: u32, j: u32) -> i64 {
    l as i64 * j as i64 * (j as i64 + 2)
}

/// θ = 2l(q-1).
pub fn theta(q: u32, l: u32) -> i64 {
    2 * l as i64 * (q as i64 - 1)
}

pub fn redundancy_accounting(q: u32, l: u32, j: u32) -> Result<BoundReport, BoundError> {
    if j == 0 || j > q {
        return Err(BoundError::OrderOutOfRange { j, q });
    }
    let t = t_of(q, l);
    let n = t * t - t - 1;
    // order q coincides with order q-1
    let je = j.min(q - 1);
    let deltas: Vec<i64> = (1..=je).map(|v| delta(l, v)).collect();
    let total = delta_total(l, je);
    debug_assert_eq!(total, deltas.iter().sum::<i64>());
    let th = (j + 1 >= q).then(|| theta(q, l));
    let r = 2 * l as i64 * je as i64 * (t + 1) - total - th.unwrap_or(0);
    Ok(BoundReport {
        q,
        l,
        j,
        t,
        n,
        delta: deltas,
        delta_total: total,
        theta: th,
        r_bound: r,
        k_bound: n - r,
        d_bound: theorem1_distance_bound(q, l, j),
    })
}

/// Estimate for k of Γ1^(q): one more than the Γ6 estimate at order q-1.
pub fn gamma1_q_dim_estimate(q: u32, l: u32) -> i64 {
    redundancy_accounting(q, l, q - 1).expect("q-1 is in range").k_bound + 1
}

/// Column estimates Γ1, Γ1*, Γ2≡Γ3, C3*≡Γ4*, Γ5≡Γ6 propagated from the Γ6
/// bound along the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainEstimates {
    pub gamma1: i64,
    pub gamma1_star: i64,
    pub gamma2_3: i64,
    pub c3_star_gamma4_star: i64,
    pub gamma5_6: i64,
}

impl ChainEstimates {
    pub fn as_array(&self) -> [i64; 5] {
        [self.gamma1, self.gamma1_star, self.gamma2_3, self.c3_star_gamma4_star, self.gamma5_6]
    }
}

pub fn chain_dim_estimates(q: u32, l: u32, i: u32) -> Result<ChainEstimates, BoundError> {
    let k6 = redundancy_accounting(q, l, i)?.k_bound;
    let step = if i + 1 < q { l as i64 } else { 0 };
    let k4 = k6 + step;
    let k1s = k4 + step;
    Ok(ChainEstimates { gamma1: k1s + 1, gamma1_star: k1s, gamma2_3: k4, c3_star_gamma4_star: k4, gamma5_6: k6 })
}

/// i(t+1) + 1 for Γ6^(i).
pub fn theorem1_distance_bound(q: u32, l: u32, i: u32) -> i64 {
    i as i64 * (t_of(q, l) + 1) + 1
}

/// q(t-1) + 1 for Γ1^(q).
pub fn gamma1_distance_bound(q: u32, l: u32) -> i64 {
    q as i64 * (t_of(q, l) - 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_estimates() {
        for r in paper::GAMMA6_Q {
            let b = redundancy_accounting(r.q, r.l, r.q).unwrap();
            assert_eq!(b.n, r.n as i64);
            assert_eq!(b.k_bound, r.k_estimate, "q={} l={}", r.q, r.l);
            assert_eq!(b.d_bound, r.d_estimate as i64);
        }
        assert_eq!(gamma1_q_dim_estimate(3, 2), 16);
        assert_eq!(gamma1_q_dim_estimate(5, 2), 248);
        assert_eq!(gamma1_q_dim_estimate(7, 2), 1272);
        assert_eq!(gamma1_distance_bound(3, 2), 25);
    }

    #[test]
    fn chain_rows_below_q_minus_one() {
        for t in paper::CHAIN_TABLES {
            for (idx, row) in t.rows.iter().enumerate() {
                let i = idx as u32 + 1;
                if i + 1 < t.q {
                    let e = chain_dim_estimates(t.q, t.l, i).unwrap();
                    assert_eq!(e.as_array().map(|x| x as usize), *row, "q={} l={} i={i}", t.q, t.l);
                }
            }
        }
    }

    #[test]
    fn accounting_identity_and_range() {
        for q in [3u32, 5, 7, 11, 13, 17, 19, 23] {
            for j in 1..=q {
                let s: i64 = (1..=j).map(|v| delta(2, v)).sum();
                assert_eq!(s, delta_total(2, j));
            }
        }
        let b = redundancy_accounting(3, 2, 3).unwrap();
        assert_eq!(b.k_bound + b.r_bound, b.n);
        assert_eq!(b.theta, Some(8));
        assert!(redundancy_accounting(3, 2, 0).is_err());
        assert!(redundancy_accounting(3, 2, 4).is_err());
        assert_eq!(generic_dim_bound(71, 4, 10), 31);
        assert_eq!(power_q_dim_bound(71, 4, 3, 10), -9);
    }
}
