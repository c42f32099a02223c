use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{DistanceError, DistanceResult, Method};
use crate::matrix::Matrix;

pub const DEFAULT_CAP: u64 = 1 << 36;
const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Scan every projective representative.
    Exact,
    /// Stop once a word of weight `target` is found.
    Fast,
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    pub cap: u64,
    pub mode: SearchMode,
    pub threads: usize,
    /// A known lower bound on d, used by [`SearchMode::Fast`].
    pub target: Option<usize>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { cap: DEFAULT_CAP, mode: SearchMode::Exact, threads: 1, target: None }
    }
}

struct Rows {
    q: u8,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl Rows {
    fn new(g: &Matrix) -> Rows {
        let rows = (0..g.rows()).map(|r| g.raw_row(r).iter().map(|&v| v as u8).collect()).collect();
        Rows { q: g.field().q() as u8, n: g.cols(), rows }
    }

    /// c += row, returning the new weight.
    #[inline]
    fn add(&self, c: &mut [u8], r: usize) -> usize {
        let q = self.q;
        let mut w = 0usize;
        for (x, &y) in c.iter_mut().zip(&self.rows[r]) {
            let s = *x + y;
            *x = if s >= q { s - q } else { s };
            w += (*x != 0) as usize;
        }
        w
    }
}

/// Messages with leading coordinate `lead` set to 1 and counter values in
/// `start..end` over the trailing coordinates.
#[derive(Debug, Clone, Copy)]
struct Task {
    lead: usize,
    start: u64,
    end: u64,
}

fn digits_of(mut v: u64, q: u64, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let d = (v % q) as u8;
            v /= q;
            d
        })
        .collect()
}

/// Minimum weight over one task, with the number of words visited. Steps
/// follow the modular Gray code: moving the counter from s-1 to s adds the
/// row indexed by the count of trailing (q-1) digits of s-1.
fn run_task(rows: &Rows, k: usize, task: Task, stop: Option<(&AtomicUsize, usize)>) -> (usize, u64) {
    let q = rows.q;
    let tail = k - 1 - task.lead;
    let mut digits = digits_of(task.start, q as u64, tail);
    let mut c = vec![0u8; rows.n];
    let mut w = rows.add(&mut c, task.lead);
    for i in 0..tail {
        let next = if i + 1 < tail { digits[i + 1] } else { 0 };
        let gray = (digits[i] + q - next) % q;
        for _ in 0..gray {
            w = rows.add(&mut c, task.lead + 1 + i);
        }
    }
    let mut best = w;
    let mut visited = 1u64;
    for _ in task.start + 1..task.end {
        let mut j = 0;
        while digits[j] == q - 1 {
            digits[j] = 0;
            j += 1;
        }
        digits[j] += 1;
        w = rows.add(&mut c, task.lead + 1 + j);
        visited += 1;
        if w < best {
            best = w;
            if let Some((shared, target)) = stop {
                shared.fetch_min(best, Ordering::Relaxed);
                if best <= target {
                    break;
                }
            }
        }
        if visited.is_multiple_of(4096) {
            if let Some((shared, target)) = stop {
                if shared.load(Ordering::Relaxed) <= target {
                    break;
                }
            }
        }
    }
    if let Some((shared, _)) = stop {
        shared.fetch_min(best, Ordering::Relaxed);
    }
    (best, visited)
}

/// Exact minimum weight of the code generated by the rows of `g` (assumed
/// independent), by enumerating one message per scalar class.
pub fn min_distance_exact(g: &Matrix, opts: &ExactOptions) -> Result<DistanceResult, DistanceError> {
    let started = Instant::now();
    let field = g.field();
    if !field.is_prime_field() || field.q() > 127 {
        return Err(DistanceError::NotPrimeField);
    }
    let (k, n) = (g.rows(), g.cols());
    let q = field.q() as u64;
    let within = (k as u32) < 64 && q.checked_pow(k as u32).is_some_and(|v| v <= opts.cap);
    if !within {
        return Err(DistanceError::CapExceeded { q: q as u32, k, cap: opts.cap });
    }
    if k == 0 {
        return Ok(DistanceResult { n, k, d: None, method: Method::Exhaustive, enumerated: 0, elapsed_s: 0.0 });
    }
    let rows = Rows::new(g);
    let mut tasks = Vec::new();
    for lead in 0..k {
        let total = q.pow((k - 1 - lead) as u32);
        let mut s = 0;
        while s < total {
            let e = (s + CHUNK).min(total);
            tasks.push(Task { lead, start: s, end: e });
            s = e;
        }
    }
    let shared = AtomicUsize::new(usize::MAX);
    let stop = match (opts.mode, opts.target) {
        (SearchMode::Fast, Some(t)) => Some((&shared, t)),
        _ => None,
    };
    let next = AtomicUsize::new(0);
    let results = Mutex::new(vec![(usize::MAX, 0u64); tasks.len()]);
    let worker = || loop {
        let idx = next.fetch_add(1, Ordering::Relaxed);
        if idx >= tasks.len() {
            break;
        }
        if let Some((s, t)) = stop {
            if s.load(Ordering::Relaxed) <= t {
                break;
            }
        }
        let r = run_task(&rows, k, tasks[idx], stop);
        results.lock().expect("no poisoned workers")[idx] = r;
    };
    let threads = opts.threads.max(1);
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(worker);
            }
        });
    }
    let results = results.into_inner().expect("no poisoned workers");
    let d = results.iter().map(|r| r.0).min().filter(|&d| d != usize::MAX);
    let enumerated = results.iter().map(|r| r.1).sum();
    Ok(DistanceResult { n, k, d, method: Method::Exhaustive, enumerated, elapsed_s: started.elapsed().as_secs_f64() })
}

/// Minimum weight over the generator rows and `samples` random nonzero
/// combinations; an upper bound on d.
pub fn min_distance_upper(g: &Matrix, samples: u64, seed: u64) -> Result<DistanceResult, DistanceError> {
    let started = Instant::now();
    let field = g.field();
    if !field.is_prime_field() || field.q() > 127 {
        return Err(DistanceError::NotPrimeField);
    }
    let (k, n) = (g.rows(), g.cols());
    if k == 0 {
        return Ok(DistanceResult { n, k, d: None, method: Method::SampledUpperBound, enumerated: 0, elapsed_s: 0.0 });
    }
    let rows = Rows::new(g);
    let q = rows.q;
    let weight = |c: &[u8]| c.iter().filter(|&&x| x != 0).count();
    let mut best = (0..k).map(|r| weight(&rows.rows[r])).min().unwrap_or(usize::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = vec![0u8; n];
    let mut done = 0;
    while done < samples {
        let msg: Vec<u8> = (0..k).map(|_| rng.gen_range(0..q)).collect();
        if msg.iter().all(|&x| x == 0) {
            continue;
        }
        c.fill(0);
        let mut w = 0;
        for (r, &m) in msg.iter().enumerate() {
            for _ in 0..m {
                w = rows.add(&mut c, r);
            }
        }
        best = best.min(w);
        done += 1;
    }
    Ok(DistanceResult {
        n,
        k,
        d: Some(best),
        method: Method::SampledUpperBound,
        enumerated: samples + k as u64,
        elapsed_s: started.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    fn brute(g: &Matrix) -> usize {
        let q = g.field().q() as u64;
        let k = g.rows();
        let mut best = usize::MAX;
        for m in 1..q.pow(k as u32) {
            let msg = digits_of(m, q, k);
            let w = (0..g.cols())
                .filter(|&c| (0..k).map(|r| msg[r] as u64 * g.raw_row(r)[c] as u64).sum::<u64>() % q != 0)
                .count();
            best = best.min(w);
        }
        best
    }

    #[test]
    fn repetition_code() {
        let f = make_field(3, 1).unwrap();
        let g = Matrix::from_ints(&f, 1, 3, &[1, 1, 1]).unwrap();
        let r = min_distance_exact(&g, &ExactOptions::default()).unwrap();
        assert_eq!(r.d, Some(3));
        assert_eq!(r.enumerated, 1);
    }

    #[test]
    fn matches_brute_force_and_counts_projective_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &q in &[2u32, 3, 5, 7] {
            let f = make_field(q, 1).unwrap();
            for _ in 0..10 {
                let k = rng.gen_range(1..5);
                let n = rng.gen_range(k..12);
                let v: Vec<i64> = (0..k * n).map(|_| rng.gen_range(0..q as i64)).collect();
                let g = Matrix::from_ints(&f, k, n, &v).unwrap();
                if g.rank() < k {
                    continue;
                }
                for threads in [1, 3] {
                    let r = min_distance_exact(&g, &ExactOptions { threads, ..Default::default() }).unwrap();
                    assert_eq!(r.d, Some(brute(&g)));
                    let qq = q as u64;
                    assert_eq!(r.enumerated, (qq.pow(k as u32) - 1) / (qq - 1));
                }
                let up = min_distance_upper(&g, 50, 1).unwrap();
                assert!(up.d.unwrap() >= brute(&g));
            }
        }
    }

    #[test]
    fn cap_and_empty_code() {
        let f = make_field(3, 1).unwrap();
        let g = Matrix::identity(&f, 5);
        let opts = ExactOptions { cap: 100, ..Default::default() };
        assert!(matches!(min_distance_exact(&g, &opts), Err(DistanceError::CapExceeded { .. })));
        let empty = Matrix::zeros(&f, 0, 4);
        assert_eq!(min_distance_exact(&empty, &ExactOptions::default()).unwrap().d, None);
        assert_eq!(min_distance_upper(&empty, 10, 0).unwrap().d, None);
    }
}
