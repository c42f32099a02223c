//! Published table values, stored verbatim for comparison.

/// One row of the Γ6^(q) or Γ1^(q) parameter tables:
/// (q, l, n, k estimate, k real, d estimate).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRow {
    pub q: u32,
    pub l: u32,
    pub n: usize,
    pub k_estimate: i64,
    pub k_real: usize,
    pub d_estimate: usize,
}

const fn row(q: u32, l: u32, n: usize, k_estimate: i64, k_real: usize, d_estimate: usize) -> ParamRow {
    ParamRow { q, l, n, k_estimate, k_real, d_estimate }
}

/// Γ6^(q) = Γ(L6, (x^{t+1}+1)^q).
pub const GAMMA6_Q: [ParamRow; 7] = [
    row(3, 2, 71, 15, 16, 31),
    row(3, 3, 701, 401, 401, 85),
    row(3, 4, 6479, 5215, 5215, 247),
    row(5, 2, 599, 247, 256, 131),
    row(5, 3, 15499, 12571, 12571, 631),
    row(7, 2, 2351, 1271, 1296, 351),
    row(11, 2, 14519, 9919, 10000, 1343),
];

/// Γ1^(q) = Γ(L1, (x^{t-1}+1)^q).
pub const GAMMA1_Q: [ParamRow; 7] = [
    row(3, 2, 73, 16, 17, 25),
    row(3, 3, 703, 402, 402, 79),
    row(3, 4, 6481, 5216, 5216, 241),
    row(5, 2, 601, 248, 257, 121),
    row(5, 3, 15501, 12572, 12572, 621),
    row(7, 2, 2353, 1272, 1297, 337),
    row(11, 2, 14522, 9921, 10002, 1331),
];

/// Embedded ternary codes Γ(L6, (x^10-1)^3 (x-1)^i) over GF(81).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddedRow {
    pub i: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Best known ternary code distance for the same n, k.
    pub d_best_known: usize,
}

const fn emb(i: u32, k: usize, d: usize, d_best_known: usize) -> EmbeddedRow {
    EmbeddedRow { i, n: 71, k, d, d_best_known }
}

pub const EMBEDDED_TERNARY: [EmbeddedRow; 5] =
    [emb(0, 16, 31, 31), emb(1, 15, 33, 32), emb(4, 11, 35, 36), emb(10, 7, 42, 42), emb(13, 5, 44, 45)];

/// Dimension tables by cumulativity order, columns
/// Γ1, Γ1*, Γ2≡Γ3, C3*≡Γ4*, Γ5≡Γ6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainTable {
    pub id: u32,
    pub q: u32,
    pub l: u32,
    pub lengths: [usize; 5],
    pub rows: &'static [[usize; 5]],
}

pub const CHAIN_TABLES: [ChainTable; 4] = [
    ChainTable {
        id: 5,
        q: 3,
        l: 2,
        lengths: [73, 72, 72, 71, 71],
        rows: &[[42, 41, 39, 39, 37], [17, 16, 16, 16, 16]],
    },
    ChainTable {
        id: 6,
        q: 3,
        l: 3,
        lengths: [703, 702, 702, 701, 701],
        rows: &[[549, 548, 545, 545, 542], [402, 401, 401, 401, 401]],
    },
    ChainTable {
        id: 7,
        q: 5,
        l: 2,
        lengths: [601, 600, 600, 599, 599],
        rows: &[
            [506, 505, 503, 503, 501],
            [412, 411, 409, 409, 407],
            [322, 321, 319, 319, 317],
            [257, 256, 256, 256, 256],
        ],
    },
    ChainTable {
        id: 8,
        q: 7,
        l: 2,
        lengths: [2353, 2352, 2352, 2351, 2351],
        rows: &[
            [2162, 2161, 2159, 2159, 2157],
            [1972, 1971, 1969, 1969, 1967],
            [1786, 1785, 1783, 1783, 1781],
            [1604, 1603, 1601, 1601, 1599],
            [1426, 1425, 1423, 1423, 1421],
            [1297, 1296, 1296, 1296, 1296],
        ],
    },
];

pub fn chain_table(q: u32, l: u32) -> Option<&'static ChainTable> {
    CHAIN_TABLES.iter().find(|t| t.q == q && t.l == l)
}

/// Published row for order i (1 ≤ i ≤ q-1), if tabulated.
pub fn chain_row(q: u32, l: u32, i: u32) -> Option<[usize; 5]> {
    let t = chain_table(q, l)?;
    (i >= 1).then(|| t.rows.get(i as usize - 1).copied()).flatten()
}
