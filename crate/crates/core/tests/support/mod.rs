//! Test-only reference implementations, shared with the CLI acceptance suite.
#![allow(dead_code, clippy::needless_range_loop)]

use hesselink::{ExponentVector, Rational, StateSet};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Solves `a x = b` by Gauss–Jordan elimination; `None` if singular.
fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] / &a[col][col];
            for j in col..n {
                let t = &factor * &a[col][j];
                a[i][j] -= t;
            }
            let t = &factor * &b[col];
            b[i] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) <= max {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Nearest point of `conv(state)` to the barycenter by enumerating affinely
/// independent subsets, projecting onto each affine hull, and keeping the
/// closest projection that lands inside its simplex.
pub fn brute_force_nearest(state: &StateSet) -> (Vec<Rational>, Rational) {
    let pts: Vec<Vec<Rational>> =
        state.points().map(|m| m.exponents().iter().map(|&e| q(e as i64)).collect()).collect();
    let dim = state.r() + 1;
    let center = vec![Rational::new(BigInt::from(state.t() as u64 * state.q()), BigInt::from(dim)); dim];
    let mut best: Option<(Vec<Rational>, Rational)> = None;
    for subset in subsets(pts.len(), dim) {
        let base = &pts[subset[0]];
        let dirs: Vec<Vec<Rational>> =
            subset[1..].iter().map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let k = dirs.len();
        let target: Vec<Rational> = center.iter().zip(base).map(|(c, b)| c - b).collect();
        let coeffs = if k == 0 {
            Vec::new()
        } else {
            let gram: Vec<Vec<Rational>> = (0..k)
                .map(|i| (0..k).map(|j| dirs[i].iter().zip(&dirs[j]).map(|(a, b)| a * b).sum()).collect())
                .collect();
            let rhs: Vec<Rational> = (0..k).map(|i| dirs[i].iter().zip(&target).map(|(a, b)| a * b).sum()).collect();
            match gauss_solve(gram, rhs) {
                Some(c) => c,
                None => continue,
            }
        };
        let first = Rational::one() - coeffs.iter().cloned().sum::<Rational>();
        if first.is_negative() || coeffs.iter().any(|c| c.is_negative()) {
            continue;
        }
        let mut point = base.clone();
        for (c, d) in coeffs.iter().zip(&dirs) {
            for (p, x) in point.iter_mut().zip(d) {
                *p += c * x;
            }
        }
        let dist: Rational = point.iter().zip(&center).map(|(a, b)| (a - b) * (a - b)).sum();
        if best.as_ref().is_none_or(|(_, d)| dist < *d) {
            best = Some((point, dist));
        }
    }
    best.expect("single points are always feasible")
}

/// Random state: up to `max_points` exponent vectors of a common degree
/// `t <= 9` in `dim <= 5` coordinates (so every entry is at most 9).
pub fn random_state(rng: &mut ChaCha8Rng, max_dim: usize, max_points: usize) -> StateSet {
    let dim = rng.gen_range(2..=max_dim);
    let t: u32 = rng.gen_range(1..=9);
    let count = rng.gen_range(1..=max_points);
    let points: Vec<ExponentVector> = (0..count)
        .map(|_| {
            let mut exps = vec![0u32; dim];
            for _ in 0..t {
                exps[rng.gen_range(0..dim)] += 1;
            }
            ExponentVector::new(exps)
        })
        .collect();
    StateSet::new(dim - 1, t, 1, points).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
