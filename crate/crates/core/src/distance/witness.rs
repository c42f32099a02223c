use serde::Serialize;

use super::enumerate::{min_distance_exact, ExactOptions, SearchMode};
use super::{DistanceError, Method};
use crate::algebra::{code_field, make_field, t_of, Field, FieldElement};
use crate::codes::{build_support, make_code, Codeword, MembershipOracle, SupportVariant};
use crate::matrix::Matrix;

/// The groups {x : x^{t+1} = λ_j} for λ_j = α^{(t²-1)/(q-1)·j}, with the
/// group where λ_j = -1 (the roots of x^{t+1}+1) set aside.
#[derive(Debug, Clone, Serialize)]
pub struct CosetPartition {
    /// Group labels j, ascending, excluding `j_star`.
    pub labels: Vec<u32>,
    /// Support positions of each group.
    pub groups: Vec<Vec<usize>>,
    pub j_star: u32,
    /// Values 1/(λ_j + 1) in GF(q), one per group.
    pub nodes: Vec<u32>,
    pub disjoint: bool,
    /// Whether the groups, {0} and the roots of G6 together give all of
    /// GF(t²).
    pub tiles_field: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Witness {
    pub q: u32,
    pub l: u32,
    pub i: u32,
    pub partition: CosetPartition,
    /// Group indices (into `partition.groups`) carrying the word.
    pub selected: Vec<usize>,
    /// One value per group, then the value at 0.
    pub small_vector: Vec<u32>,
    pub lifted: Vec<u32>,
    pub weight: usize,
    pub syndrome_zero: bool,
    pub membership: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Report {
    pub q: u32,
    pub l: u32,
    pub i: u32,
    pub n: usize,
    pub k: usize,
    pub formula: usize,
    pub designed_distance: usize,
    pub witness_weight: usize,
    pub witness_valid: bool,
    pub exact_d: Option<usize>,
    pub verification: String,
    pub holds: bool,
}

pub fn coset_partition(q: u32, l: u32) -> Result<CosetPartition, DistanceError> {
    let f = code_field(q, l)?;
    let support = build_support(SupportVariant::L6, q, l)?;
    let t = t_of(q, l) as i64;
    let order = t * t - 1;
    let step = (t - 1) / (q as i64 - 1);
    let minus_one = f.neg(f.one());
    let mut labels = Vec::new();
    let mut groups = Vec::new();
    let mut nodes = Vec::new();
    let mut j_star = u32::MAX;
    let mut covered = vec![false; f.size() as usize];
    let mut disjoint = true;
    for j in 0..q - 1 {
        let lambda = f.alpha_pow(order / (q as i64 - 1) * j as i64);
        let members: Vec<FieldElement> = (0..=t).map(|u| f.alpha_pow((t - 1) * u + step * j as i64)).collect();
        for &x in &members {
            disjoint &= !std::mem::replace(&mut covered[x.value() as usize], true);
        }
        if lambda == minus_one {
            j_star = j;
            continue;
        }
        let pos: Option<Vec<usize>> = members.iter().map(|&x| support.position(x)).collect();
        groups.push(pos.ok_or(DistanceError::NoWitness)?);
        labels.push(j);
        let mu = f.inv(f.add(lambda, f.one())).expect("λ ≠ -1");
        nodes.push(mu.value());
    }
    covered[0] = true;
    let tiles_field = covered.iter().all(|&c| c);
    Ok(CosetPartition { labels, groups, j_star, nodes, disjoint, tiles_field })
}

/// Next i-subset of 0..m in lexicographic order.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let i = c.len();
    for p in (0..i).rev() {
        if c[p] < m - i + p {
            c[p] += 1;
            for r in p + 1..i {
                c[r] = c[r - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Solves Σ a_j μ_j^w + a_0 = 0 (w = 1..i) with a_0 = 1 over the chosen
/// nodes; `None` unless the solution has no zero entry.
fn solve_small(
    fq: &Field,
    nodes: &[u32],
    chosen: &[usize],
    i: usize,
) -> Result<Option<Vec<FieldElement>>, DistanceError> {
    let mut entries = Vec::with_capacity(i * i);
    for w in 1..=i {
        for &c in chosen {
            entries.push(fq.pow(fq.element(nodes[c]).expect("node in GF(q)"), w as u64));
        }
    }
    let m = Matrix::from_elements(fq, i, i, &entries)?;
    let rhs = vec![fq.neg(fq.one()); i];
    Ok(m.solve(&rhs)?.filter(|x| x.iter().all(|v| !v.is_zero())))
}

/// A codeword of Γ6^(i) of weight i(t+1)+1, constant on i of the groups
/// and nonzero at 0.
pub fn build_theorem1_witness(q: u32, l: u32, i: u32) -> Result<Theorem1Witness, DistanceError> {
    if !(1 < i && i + 1 < q) {
        return Err(DistanceError::OrderOutOfRange { q, i });
    }
    let partition = coset_partition(q, l)?;
    let fq = make_field(q, 1).expect("prime q");
    let m = partition.groups.len();
    let iu = i as usize;
    let mut chosen: Vec<usize> = (0..iu).collect();
    let solution = loop {
        if let Some(x) = solve_small(&fq, &partition.nodes, &chosen, iu)? {
            break x;
        }
        if !next_combination(&mut chosen, m) {
            return Err(DistanceError::NoWitness);
        }
    };
    let code = make_code(SupportVariant::L6, q, l, i, None)?;
    let n = code.n();
    let mut small = vec![0u32; m + 1];
    let mut lifted = vec![0u32; n];
    for (&g, v) in chosen.iter().zip(&solution) {
        small[g] = v.value();
        for &p in &partition.groups[g] {
            lifted[p] = v.value();
        }
    }
    small[m] = 1;
    lifted[n - 1] = 1;
    let word: Vec<FieldElement> = lifted.iter().map(|&v| fq.from_int(v as i64)).collect();
    let row = Matrix::from_rows(&fq, n, std::slice::from_ref(&word))?;
    let syndrome_zero = code.contains_rows(&row)?;
    let membership = MembershipOracle::new(code.support(), &code.full_polynomial())?.contains(&Codeword(word))?;
    let weight = lifted.iter().filter(|&&v| v != 0).count();
    Ok(Theorem1Witness {
        q,
        l,
        i,
        partition,
        selected: chosen,
        small_vector: small,
        lifted,
        weight,
        syndrome_zero,
        membership,
    })
}

/// Checks that d(Γ6^(i)) = i(t+1)+1: the designed distance equals the
/// formula, a witness of that weight exists, and, when q^k is within
/// `cap`, no lighter word exists.
pub fn theorem1_check(q: u32, l: u32, i: u32, cap: u64, threads: usize) -> Result<Theorem1Report, DistanceError> {
    let w = build_theorem1_witness(q, l, i)?;
    let code = make_code(SupportVariant::L6, q, l, i, None)?;
    let t = t_of(q, l);
    let formula = i as usize * (t + 1) + 1;
    let designed = code.designed_distance();
    let witness_valid = w.syndrome_zero && w.membership && w.weight == formula;
    let within = (q as u64).checked_pow(code.k() as u32).is_some_and(|v| v <= cap);
    let exact = if within {
        let opts = ExactOptions { cap, mode: SearchMode::Exact, threads, target: None };
        let r = min_distance_exact(code.generator_matrix(), &opts)?;
        debug_assert_eq!(r.method, Method::Exhaustive);
        r.d
    } else {
        None
    };
    let holds = designed == formula && witness_valid && exact.is_none_or(|d| d == formula);
    Ok(Theorem1Report {
        q,
        l,
        i,
        n: code.n(),
        k: code.k(),
        formula,
        designed_distance: designed,
        witness_weight: w.weight,
        witness_valid,
        exact_d: exact,
        verification: if exact.is_some() { "exhaustive" } else { "witness+lower-bound" }.to_string(),
        holds,
    })
}
