//! Gaussian elimination over GF(p) for p < 256 on `u16` rows.
//!
//! Pivots are collected in batches. Rows not yet used as pivots receive the
//! batch's eliminations in one deferred pass, with products accumulated
//! without reduction; the batch size is bounded so that the accumulated
//! entries never exceed `u16::MAX`. Results are identical to plain
//! elimination with first-nonzero pivoting in row order.

const TILE: usize = 2048;

pub(crate) const MAX_P: u32 = 255;

#[inline]
fn reduce(v: &mut [u16], p: u16) {
    #[inline(always)]
    fn red<const P: u16>(v: &mut [u16]) {
        for x in v.iter_mut() {
            *x %= P;
        }
    }
    match p {
        2 => red::<2>(v),
        3 => red::<3>(v),
        5 => red::<5>(v),
        7 => red::<7>(v),
        11 => red::<11>(v),
        13 => red::<13>(v),
        _ => {
            for x in v.iter_mut() {
                *x %= p;
            }
        }
    }
}

/// dst += c * src, unreduced.
#[inline]
fn axpy(dst: &mut [u16], src: &[u16], c: u16) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = d.wrapping_add(s.wrapping_mul(c));
    }
}

/// Mutable row `dst` and shared row `src` of a row-major buffer.
#[inline]
fn row_pair(a: &mut [u16], cols: usize, dst: usize, src: usize) -> (&mut [u16], &[u16]) {
    debug_assert_ne!(dst, src);
    if dst < src {
        let (lo, hi) = a.split_at_mut(src * cols);
        (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
    } else {
        let (lo, hi) = a.split_at_mut(dst * cols);
        (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
    }
}

/// Entry (r, c) after applying the pending batch eliminations, reduced.
#[inline]
fn value_at(a: &[u16], cols: usize, coef: &[u16], batch: &[(usize, usize)], r: usize, c: usize, pw: u32) -> u32 {
    let mut v = a[r * cols + c] as u32;
    for (&cb, &(br, _)) in coef.iter().zip(batch) {
        if cb != 0 {
            v += cb as u32 * a[br * cols + c] as u32;
        }
    }
    v % pw
}

fn batch_limit(p: u16) -> usize {
    let pm1 = (p as usize - 1).max(1);
    ((u16::MAX as usize - pm1) / (pm1 * pm1)).clamp(1, 64)
}

pub(crate) fn inverse_table(p: u16) -> Vec<u16> {
    let mut inv = vec![0u16; p as usize];
    for a in 1..p as u32 {
        for b in 1..p as u32 {
            if a * b % p as u32 == 1 {
                inv[a as usize] = b as u16;
                break;
            }
        }
    }
    inv
}

/// Row-reduces `a` (row-major, `rows × cols`, entries `< p`) in place.
///
/// Returns `(row, col)` for each pivot in column order. With `full`, pivot
/// rows end in reduced echelon form with unit pivots; otherwise only the
/// pivot positions (and hence the rank) are meaningful.
pub(crate) fn eliminate(a: &mut [u16], rows: usize, cols: usize, p: u16, full: bool) -> Vec<(usize, usize)> {
    assert!((2..=MAX_P as u16).contains(&p));
    assert_eq!(a.len(), rows * cols);
    let inv = inverse_table(p);
    let pw = p as u32;
    let bmax = batch_limit(p);
    let mut active: Vec<usize> = (0..rows).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut coef: Vec<u16> = Vec::new();
    let mut col = 0usize;

    while col < cols && !active.is_empty() {
        let start = col;
        let mut batch: Vec<(usize, usize)> = Vec::with_capacity(bmax);
        let mut chosen = vec![false; active.len()];
        coef.clear();
        coef.resize(active.len() * bmax, 0);

        while batch.len() < bmax && col < cols {
            let nb = batch.len();
            let found = active
                .iter()
                .enumerate()
                .find(|&(ai, &r)| !chosen[ai] && value_at(a, cols, &coef[ai * bmax..], &batch, r, col, pw) != 0)
                .map(|(ai, _)| ai);
            let Some(ai) = found else {
                col += 1;
                continue;
            };
            let r = active[ai];
            chosen[ai] = true;
            for (b, &(br, _)) in batch.iter().enumerate() {
                let c = coef[ai * bmax + b];
                if c != 0 {
                    let (dst, src) = row_pair(a, cols, r, br);
                    axpy(&mut dst[start..], &src[start..], c);
                }
            }
            let row = &mut a[r * cols..(r + 1) * cols];
            row[..col].fill(0);
            reduce(&mut row[col..], p);
            let pinv = inv[row[col] as usize] as u32;
            batch.push((r, col));
            for (aj, &r2) in active.iter().enumerate() {
                if chosen[aj] {
                    continue;
                }
                let v = value_at(a, cols, &coef[aj * bmax..], &batch[..nb], r2, col, pw);
                coef[aj * bmax + nb] = if v == 0 { 0 } else { ((pw - v) * pinv % pw) as u16 };
            }
            col += 1;
        }
        if batch.is_empty() {
            break;
        }

        // deferred update of the remaining rows
        for t0 in (start..cols).step_by(TILE) {
            let t1 = (t0 + TILE).min(cols);
            for (ai, &r) in active.iter().enumerate() {
                if chosen[ai] {
                    continue;
                }
                let mut touched = false;
                for (b, &(br, _)) in batch.iter().enumerate() {
                    let c = coef[ai * bmax + b];
                    if c != 0 {
                        let (dst, src) = row_pair(a, cols, r, br);
                        axpy(&mut dst[t0..t1], &src[t0..t1], c);
                        touched = true;
                    }
                }
                if touched {
                    reduce(&mut a[r * cols + t0..r * cols + t1], p);
                }
            }
        }

        if full {
            // mutual reduction inside the batch
            for bp in (0..batch.len()).rev() {
                let (rp, cp) = batch[bp];
                reduce(&mut a[rp * cols + cp..(rp + 1) * cols], p);
                let pinv = inv[a[rp * cols + cp] as usize] as u32;
                for &(rb, _) in &batch[..bp] {
                    let v = a[rb * cols + cp] as u32 % pw;
                    if v != 0 {
                        let c = ((pw - v) * pinv % pw) as u16;
                        let (dst, src) = row_pair(a, cols, rb, rp);
                        axpy(&mut dst[cp..], &src[cp..], c);
                    }
                }
            }
            for &(rb, cb) in &batch {
                reduce(&mut a[rb * cols + cb..(rb + 1) * cols], p);
            }
            // clear the batch columns from earlier pivot rows
            let first = batch[0].1;
            for &(ro, _) in &pivots {
                let cs: Vec<u16> = batch
                    .iter()
                    .map(|&(rb, cb)| {
                        let v = a[ro * cols + cb] as u32;
                        let pinv = inv[a[rb * cols + cb] as usize] as u32;
                        ((pw - v) * pinv % pw) as u16
                    })
                    .collect();
                if cs.iter().all(|&c| c == 0) {
                    continue;
                }
                for (&(rb, _), &c) in batch.iter().zip(&cs) {
                    if c != 0 {
                        let (dst, src) = row_pair(a, cols, ro, rb);
                        axpy(&mut dst[first..], &src[first..], c);
                    }
                }
                reduce(&mut a[ro * cols + first..(ro + 1) * cols], p);
            }
        }

        pivots.extend_from_slice(&batch);
        active = active.iter().zip(&chosen).filter(|(_, &c)| !c).map(|(&r, _)| r).collect();
    }

    if full {
        for &(r, c) in &pivots {
            let row = &mut a[r * cols..(r + 1) * cols];
            let s = inv[row[c] as usize] as u32;
            if s != 1 {
                for x in row[c..].iter_mut() {
                    *x = (*x as u32 * s % pw) as u16;
                }
            }
        }
    }
    pivots
}

/// `a · bᵀ` for row-major `a` (ra × n) and `b` (rb × n), entries `< p`.
pub(crate) fn mul_transpose(a: &[u16], ra: usize, b: &[u16], rb: usize, n: usize, p: u16) -> Vec<u16> {
    let pw = p as u64;
    // sum of `chunk` products stays below 2^32
    let chunk = ((u32::MAX as u64) / ((pw - 1) * (pw - 1)).max(1)).min(1 << 20) as usize;
    let mut out = vec![0u16; ra * rb];
    for i in 0..ra {
        let x = &a[i * n..(i + 1) * n];
        for j in 0..rb {
            let y = &b[j * n..(j + 1) * n];
            let mut acc = 0u64;
            for (xc, yc) in x.chunks(chunk).zip(y.chunks(chunk)) {
                let s: u32 = xc.iter().zip(yc).map(|(&u, &v)| u as u32 * v as u32).fold(0u32, u32::wrapping_add);
                acc += s as u64 % pw;
            }
            out[i * rb + j] = (acc % pw) as u16;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // plain textbook elimination used as the reference
    fn naive_rref(a: &mut [u32], rows: usize, cols: usize, p: u32) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                a.swap(r * cols + k, pr * cols + k);
            }
            let inv = (1..p).find(|&x| x * a[r * cols + c] % p == 1).unwrap();
            for k in 0..cols {
                a[r * cols + k] = a[r * cols + k] * inv % p;
            }
            for i in 0..rows {
                if i != r && a[i * cols + c] != 0 {
                    let f = a[i * cols + c];
                    for k in 0..cols {
                        a[i * cols + k] = (a[i * cols + k] + (p - f) * a[r * cols + k]) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    #[test]
    fn matches_naive_rref_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let p = [2u16, 3, 5, 7, 11, 13, 251][trial % 7];
            let rows = rng.gen_range(1..40);
            let cols = rng.gen_range(1..90);
            let dense = rng.gen_bool(0.5);
            let data: Vec<u16> =
                (0..rows * cols).map(|_| if dense || rng.gen_bool(0.2) { rng.gen_range(0..p) } else { 0 }).collect();
            // duplicate a few rows to force dependencies
            let mut data = data;
            if rows > 3 {
                let (lo, hi) = data.split_at_mut(cols * 2);
                hi[..cols].copy_from_slice(&lo[..cols]);
            }
            let mut reference: Vec<u32> = data.iter().map(|&x| x as u32).collect();
            let ref_piv = naive_rref(&mut reference, rows, cols, p as u32);

            let mut rank_only = data.clone();
            let piv = eliminate(&mut rank_only, rows, cols, p, false);
            assert_eq!(piv.len(), ref_piv.len());

            let mut full = data.clone();
            let piv = eliminate(&mut full, rows, cols, p, true);
            let piv_cols: Vec<usize> = piv.iter().map(|x| x.1).collect();
            assert_eq!(piv_cols, ref_piv);
            for (i, &(r, _)) in piv.iter().enumerate() {
                let got: Vec<u32> = full[r * cols..(r + 1) * cols].iter().map(|&x| x as u32).collect();
                assert_eq!(got, reference[i * cols..(i + 1) * cols].to_vec(), "p={p} trial={trial}");
            }
        }
    }

    #[test]
    fn product_against_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (ra, rb, n, p) = (5, 4, 300, 7u16);
        let a: Vec<u16> = (0..ra * n).map(|_| rng.gen_range(0..p)).collect();
        let b: Vec<u16> = (0..rb * n).map(|_| rng.gen_range(0..p)).collect();
        let got = mul_transpose(&a, ra, &b, rb, n, p);
        for i in 0..ra {
            for j in 0..rb {
                let s: u32 = (0..n).map(|k| a[i * n + k] as u32 * b[j * n + k] as u32).sum();
                assert_eq!(got[i * rb + j] as u32, s % p as u32);
            }
        }
    }
}
