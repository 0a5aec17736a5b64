//! States of Hilbert points, their convex hulls, and the distance from the
//! barycenter `ξ_t = tQ(t)/(r+1) · 𝟙` to the hull.
//!
//! At degree `d` the Hilbert point of `V(f)` is `[f]` itself, so the state is
//! the support of `f`. At degree `d + D` it is the Plücker point of
//! `f · S_D`, whose coordinates are the maximal minors of the multiplication
//! matrix `A_{f,D}`; the state collects the weights of the column tuples with a
//! nonzero minor.
//!
//! The nearest point is computed with Wolfe's minimum-norm-point method in
//! exact arithmetic, after translating the state so that `ξ` is the origin and
//! scaling by `r + 1` to keep coordinates integral.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{enumerate_monomials, monomial_count, ExponentVector, HomogeneousPolynomial};
use crate::error::{Error, Result};
use crate::group_action::{canonical_class_rep, norm_squared, pairing_vector, primitive, OneParamSubgroup};
use crate::linalg;
use crate::Rational;

/// The state `Ξ_{x,t}`: weights of the nonzero Plücker coordinates of the
/// degree-`t` Hilbert point. Each weight has coordinate sum `t * q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    r: usize,
    t: u32,
    q: u64,
    points: BTreeSet<ExponentVector>,
}

impl StateSet {
    pub fn new(r: usize, t: u32, q: u64, points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let points: BTreeSet<ExponentVector> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::InvalidArgument("a state is nonempty".into()));
        }
        let total = t as u64 * q;
        for p in &points {
            if p.nvars() != r + 1 {
                return Err(Error::DimensionMismatch { expected: r + 1, found: p.nvars() });
            }
            if p.degree() as u64 != total {
                return Err(Error::InvalidArgument(format!(
                    "state point {p:?} has coordinate sum {}, expected {total}",
                    p.degree()
                )));
            }
        }
        Ok(StateSet { r, t, q, points })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Points in ascending canonical monomial order.
    pub fn points(&self) -> impl ExactSizeIterator<Item = &ExponentVector> + '_ {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.points.contains(m)
    }

    /// `ξ = tQ/(r+1) · 𝟙`.
    pub fn center(&self) -> Vec<Rational> {
        let c = Rational::new(BigInt::from(self.t as u64 * self.q), BigInt::from(self.r + 1));
        vec![c; self.r + 1]
    }

    /// `(r+1) m - tQ 𝟙`: the point translated to `ξ = 0` and scaled by `r+1`.
    fn scaled_centered(&self, m: &ExponentVector) -> Vec<Rational> {
        let n = BigInt::from(self.r + 1);
        let total = BigInt::from(self.t as u64 * self.q);
        m.exponents().iter().map(|&e| Rational::from_integer(&n * BigInt::from(e) - &total)).collect()
    }
}

/// Nearest point of the state polytope to `ξ`, with certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeAnalysis {
    pub state: StateSet,
    pub center: Vec<Rational>,
    pub nearest: Vec<Rational>,
    /// `|Δ|² = ‖h - ξ‖²`.
    pub delta_squared: Rational,
    /// `min_m ⟨λ, m - ξ⟩`; zero when `ξ` lies in the hull.
    pub mu: Rational,
    /// `primitive(h - ξ)`, absent when `h = ξ`.
    pub lambda: Option<OneParamSubgroup>,
    /// Convex-combination weights expressing `h`, all positive, summing to one.
    pub hull_weights: Vec<(ExponentVector, Rational)>,
}

impl PolytopeAnalysis {
    pub fn is_unstable(&self) -> bool {
        self.delta_squared.is_positive()
    }

    pub fn lambda_class(&self) -> Option<OneParamSubgroup> {
        self.lambda.as_ref().map(canonical_class_rep)
    }

    /// Re-derives every stored quantity from the state and the weights and
    /// checks the supporting-hyperplane inequality at every state point.
    pub fn certify(&self) -> bool {
        let n = self.state.r() + 1;
        if self.center != self.state.center() || self.nearest.len() != n {
            return false;
        }
        let mut sum = Rational::zero();
        let mut h = vec![Rational::zero(); n];
        for (m, w) in &self.hull_weights {
            if !w.is_positive() || !self.state.contains(m) {
                return false;
            }
            sum += w;
            for (hi, e) in h.iter_mut().zip(m.as_rationals()) {
                *hi += w * e;
            }
        }
        if !sum.is_one() || h != self.nearest {
            return false;
        }
        let offset: Vec<Rational> = h.iter().zip(&self.center).map(|(a, b)| a - b).collect();
        let norm = linalg::dot(&offset, &offset);
        if norm != self.delta_squared {
            return false;
        }
        // ⟨h - ξ, m - ξ⟩ ≥ ‖h - ξ‖² for every m, i.e. ⟨h - ξ, m - h⟩ ≥ 0.
        let supporting = self.state.points().all(|m| {
            let diff: Vec<Rational> = m.as_rationals().iter().zip(&self.nearest).map(|(a, b)| a - b).collect();
            !linalg::dot(&offset, &diff).is_negative()
        });
        if !supporting {
            return false;
        }
        match &self.lambda {
            None => norm.is_zero() && self.mu.is_zero(),
            Some(lambda) => {
                let Ok(expected) = primitive(&offset) else {
                    return false;
                };
                let mu = min_centered_pairing(&self.state, lambda);
                expected == *lambda
                    && lambda.is_sl_normalized()
                    && mu == self.mu
                    && &mu * &mu / norm_squared(lambda) == self.delta_squared
            }
        }
    }
}

/// `min_m ⟨λ, m - ξ⟩` over the state.
fn min_centered_pairing(state: &StateSet, lambda: &OneParamSubgroup) -> Rational {
    let center = state.center();
    state
        .points()
        .map(|m| {
            let v: Vec<Rational> = m.as_rationals().iter().zip(&center).map(|(a, b)| a - b).collect();
            pairing_vector(lambda, &v)
        })
        .min()
        .expect("states are nonempty")
}

/// Support of `f`: the state of the degree-`d` Hilbert point `[f]` (`Q(d) = 1`).
pub fn state_degree_d(f: &HomogeneousPolynomial) -> StateSet {
    StateSet::new(f.r(), f.degree(), 1, f.support().cloned()).expect("support of a nonzero polynomial is a valid state")
}

/// Affine minimizer of the norm over `aff(points)`: coefficients summing to one.
fn affine_minimizer(points: &[&Vec<Rational>]) -> Vec<Rational> {
    let k = points.len();
    let mut system = vec![vec![Rational::zero(); k + 1]; k + 1];
    for i in 0..k {
        for j in 0..k {
            system[i][j] = linalg::dot(points[i], points[j]);
        }
        system[i][k] = Rational::one();
        system[k][i] = Rational::one();
    }
    let mut rhs = vec![Rational::zero(); k + 1];
    rhs[k] = Rational::one();
    let mut solution = linalg::solve(&system, &rhs).expect("active set stays affinely independent");
    solution.truncate(k);
    solution
}

fn combine(points: &[Vec<Rational>], active: &[usize], weights: &[Rational]) -> Vec<Rational> {
    let dim = points[0].len();
    let mut x = vec![Rational::zero(); dim];
    for (&i, w) in active.iter().zip(weights) {
        for (xi, pi) in x.iter_mut().zip(&points[i]) {
            *xi += w * pi;
        }
    }
    x
}

/// Exact minimum-norm point of `conv(points)`.
///
/// Returns the active indices with their positive weights. Ties between
/// equally good entering points go to the smallest index.
fn min_norm_point(points: &[Vec<Rational>]) -> (Vec<usize>, Vec<Rational>, Vec<Rational>) {
    let norms: Vec<Rational> = points.iter().map(|p| linalg::dot(p, p)).collect();
    let start = (0..points.len()).min_by(|&a, &b| norms[a].cmp(&norms[b]).then(a.cmp(&b))).expect("nonempty");
    let mut active = vec![start];
    let mut weights = vec![Rational::one()];
    let mut x = points[start].clone();

    loop {
        let x_norm = linalg::dot(&x, &x);
        if x_norm.is_zero() {
            break;
        }
        let (entering, value) = points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, linalg::dot(&x, p)))
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("nonempty");
        if value >= x_norm || active.contains(&entering) {
            break;
        }
        active.push(entering);
        weights.push(Rational::zero());

        loop {
            let subset: Vec<&Vec<Rational>> = active.iter().map(|&i| &points[i]).collect();
            let y = affine_minimizer(&subset);
            if y.iter().all(|c| c.is_positive()) {
                weights = y;
                break;
            }
            // Step from the current weights toward y until a weight hits zero.
            let theta = weights
                .iter()
                .zip(&y)
                .filter(|(w, v)| !v.is_positive() && *w > *v)
                .map(|(w, v)| w / (w - v))
                .min()
                .unwrap_or_else(Rational::one);
            let one_minus = Rational::one() - &theta;
            let stepped: Vec<Rational> = weights.iter().zip(&y).map(|(w, v)| w * &one_minus + v * &theta).collect();
            let (kept_active, kept_weights): (Vec<usize>, Vec<Rational>) =
                active.iter().zip(stepped).filter(|(_, w)| w.is_positive()).map(|(&i, w)| (i, w)).unzip();
            active = kept_active;
            weights = kept_weights;
        }
        x = combine(points, &active, &weights);
    }
    (active, weights, x)
}

/// Nearest point `h` of `conv(state)` to `ξ`, with `|Δ|²`, `μ` and `λ`.
pub fn nearest_point(state: &StateSet) -> PolytopeAnalysis {
    let listed: Vec<&ExponentVector> = state.points().collect();
    let scaled: Vec<Vec<Rational>> = listed.iter().map(|m| state.scaled_centered(m)).collect();
    let (active, weights, x) = min_norm_point(&scaled);

    let n = Rational::from_integer(BigInt::from(state.r() + 1));
    let center = state.center();
    let offset: Vec<Rational> = x.iter().map(|v| v / &n).collect();
    let nearest: Vec<Rational> = center.iter().zip(&offset).map(|(c, o)| c + o).collect();
    let delta_squared = linalg::dot(&offset, &offset);

    let mut hull_weights: Vec<(ExponentVector, Rational)> =
        active.iter().zip(weights).map(|(&i, w)| (listed[i].clone(), w)).collect();
    hull_weights.sort_by(|a, b| a.0.cmp(&b.0));

    let (lambda, mu) = if delta_squared.is_zero() {
        (None, Rational::zero())
    } else {
        let lambda = primitive(&offset).expect("nonzero offset");
        let mu = min_centered_pairing(state, &lambda);
        (Some(lambda), mu)
    };

    PolytopeAnalysis { state: state.clone(), center, nearest, delta_squared, mu, lambda, hull_weights }
}

/// `sign(v) · v²` for `v = max_λ min_m ⟨λ, m - ξ⟩ / ‖λ‖`, exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedSquare(Rational);

impl SignedSquare {
    pub fn from_signed_value(value: Rational) -> Self {
        SignedSquare(value)
    }

    /// `sign(v) · v²`.
    pub fn signed(&self) -> &Rational {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `v²`.
    pub fn magnitude_squared(&self) -> Rational {
        self.0.abs()
    }
}

/// Max over candidate 1-PS of the normalized least pairing with the state.
pub fn maxmin_delta(state: &StateSet, candidates: &[OneParamSubgroup]) -> Result<SignedSquare> {
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("no candidate one-parameter subgroups".into()));
    }
    candidates
        .iter()
        .map(|lambda| {
            if lambda.nvars() != state.r() + 1 {
                return Err(Error::DimensionMismatch { expected: state.r() + 1, found: lambda.nvars() });
            }
            let v = min_centered_pairing(state, lambda);
            Ok(SignedSquare(&v * v.abs() / norm_squared(lambda)))
        })
        .process_results(|it| it.max().expect("nonempty"))
}

/// `|M_D|² · δ²`: the squared form of `τ(δ, D) = |M_D| δ`.
pub fn tau(delta_squared: &Rational, r: usize, shift: u32) -> Rational {
    let count = Rational::from_integer(BigInt::from(monomial_count(r, shift)));
    &count * &count * delta_squared
}

/// `A_{f,D}`: row `i` holds the coefficients of `m_{i,D} · f` in the basis of
/// degree-`(d+D)` monomials. Both bases are in canonical ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationMatrix {
    pub rows: Vec<ExponentVector>,
    pub cols: Vec<ExponentVector>,
    pub entries: Vec<Vec<Rational>>,
}

impl MultiplicationMatrix {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    fn minor(&self, columns: &[usize]) -> Rational {
        let square: Vec<Vec<Rational>> =
            self.entries.iter().map(|row| columns.iter().map(|&j| row[j].clone()).collect()).collect();
        linalg::determinant(&square)
    }
}

pub fn multiplication_matrix(f: &HomogeneousPolynomial, shift: u32) -> MultiplicationMatrix {
    let r = f.r();
    let rows = enumerate_monomials(r, shift);
    let cols = enumerate_monomials(r, f.degree() + shift);
    let index: std::collections::HashMap<&ExponentVector, usize> =
        cols.iter().enumerate().map(|(j, m)| (m, j)).collect();
    let entries = rows
        .iter()
        .map(|row| {
            let mut line = vec![Rational::zero(); cols.len()];
            for (m, c) in f.terms() {
                line[index[&m.mul(row)]] = c.clone();
            }
            line
        })
        .collect();
    MultiplicationMatrix { rows, cols, entries }
}

fn checked_binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// State of the degree-`(d + shift)` Hilbert point of `V(f)`.
///
/// `cap` bounds `C(|M_{d+D}|, |M_D|)`, the number of column tuples.
pub fn state_degree_d_plus(f: &HomogeneousPolynomial, shift: u32, cap: u128) -> Result<StateSet> {
    let r = f.r();
    let t = f.degree() + shift;
    let rows = monomial_count(r, shift);
    let needed = checked_binomial(monomial_count(r, t), rows);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let matrix = multiplication_matrix(f, shift);
    let size = matrix.rows.len();
    let n = r + 1;

    let live: Vec<usize> =
        (0..matrix.cols.len()).filter(|&j| matrix.entries.iter().any(|row| !row[j].is_zero())).collect();

    // A nonzero minor pairs each row m_i with a column m_i s_i, s_i ∈ supp f,
    // so its weight w satisfies ⟨γ, w⟩ ≥ |M_D| min_{s ∈ supp f} ⟨γ, s⟩ for every
    // trace-zero γ. Tuples violating that for a coordinate γ are skipped.
    let gammas: Vec<Vec<i64>> = (0..n)
        .flat_map(|i| {
            let up: Vec<i64> = (0..n).map(|j| if i == j { n as i64 - 1 } else { -1 }).collect();
            let down: Vec<i64> = up.iter().map(|x| -x).collect();
            [up, down]
        })
        .collect();
    let weigh = |gamma: &[i64], m: &ExponentVector| -> i64 {
        gamma.iter().zip(m.exponents()).map(|(g, &e)| g * e as i64).sum()
    };
    let bounds: Vec<i64> =
        gammas.iter().map(|g| size as i64 * f.support().map(|s| weigh(g, s)).min().expect("nonzero")).collect();
    let col_weights: Vec<Vec<i64>> = gammas.iter().map(|g| matrix.cols.iter().map(|c| weigh(g, c)).collect()).collect();

    let mut found: BTreeSet<ExponentVector> = BTreeSet::new();
    for tuple in live.iter().copied().combinations(size) {
        let pruned =
            col_weights.iter().zip(&bounds).any(|(w, bound)| tuple.iter().map(|&j| w[j]).sum::<i64>() < *bound);
        if pruned {
            continue;
        }
        let weight = tuple.iter().fold(ExponentVector::one(n), |acc, &j| acc.mul(&matrix.cols[j]));
        if found.contains(&weight) {
            continue;
        }
        if !matrix.minor(&tuple).is_zero() {
            found.insert(weight);
        }
    }
    StateSet::new(r, t, rows as u64, found)
}

/// Outcome of comparing the analyses at degrees `d` and `d + D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub shift: u32,
    pub base: PolytopeAnalysis,
    pub shifted: PolytopeAnalysis,
    /// `C(r+D, r)² · δ²_d`.
    pub expected_delta_squared: Rational,
    pub delta_matches: bool,
    pub class_matches: bool,
    /// `δ²_d > 0`; when false only the scaling identity `0 == 0` is meaningful.
    pub precondition_met: bool,
}

impl Theorem1Report {
    pub fn holds(&self) -> bool {
        self.delta_matches && self.class_matches
    }
}

pub fn verify_theorem1(f: &HomogeneousPolynomial, shift: u32, cap: u128) -> Result<Theorem1Report> {
    let base = nearest_point(&state_degree_d(f));
    let shifted = nearest_point(&state_degree_d_plus(f, shift, cap)?);
    let expected_delta_squared = tau(&base.delta_squared, f.r(), shift);
    Ok(Theorem1Report {
        shift,
        delta_matches: shifted.delta_squared == expected_delta_squared,
        class_matches: base.lambda_class() == shifted.lambda_class(),
        precondition_met: base.is_unstable(),
        expected_delta_squared,
        base,
        shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn lam(w: &[i64]) -> OneParamSubgroup {
        OneParamSubgroup::from_i64(w).unwrap()
    }

    fn poly(s: &str, r: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::parse(s, r).unwrap()
    }

    fn state(r: usize, t: u32, pts: &[&[u32]]) -> StateSet {
        StateSet::new(r, t, 1, pts.iter().map(|p| ev(p))).unwrap()
    }

    #[test]
    fn degree_d_states() {
        assert_eq!(state_degree_d(&poly("x0^4", 3)).points().cloned().collect::<Vec<_>>(), vec![ev(&[4, 0, 0, 0])]);
        let cusp = state_degree_d(&poly("x1^2*x2 - x0^3", 2));
        assert!(cusp.contains(&ev(&[0, 2, 1])) && cusp.contains(&ev(&[3, 0, 0])) && cusp.len() == 2);
        let fermat = state_degree_d(&poly("x0^3 + x1^3 + x2^3 + x3^3", 3));
        assert_eq!(fermat.len(), 4);
    }

    #[test]
    fn state_rejects_bad_sums() {
        assert!(StateSet::new(1, 2, 1, [ev(&[2, 0]), ev(&[1, 0])]).is_err());
        assert!(StateSet::new(1, 2, 1, Vec::new()).is_err());
    }

    #[test]
    fn nearest_point_single_point() {
        let a = nearest_point(&state(3, 4, &[&[4, 0, 0, 0]]));
        assert_eq!(a.nearest, vec![q(4), q(0), q(0), q(0)]);
        assert_eq!(a.delta_squared, q(12));
        assert_eq!(a.lambda, Some(lam(&[3, -1, -1, -1])));
        assert_eq!(a.mu, q(12));
        assert!(a.certify());
    }

    #[test]
    fn nearest_point_fermat_is_balanced() {
        let a = nearest_point(&state(2, 3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]));
        assert_eq!(a.delta_squared, q(0));
        assert_eq!(a.lambda, None);
        assert_eq!(a.nearest, vec![q(1), q(1), q(1)]);
        assert!(a.certify());
    }

    #[test]
    fn nearest_point_cusp_segment() {
        let a = nearest_point(&state(2, 3, &[&[3, 0, 0], &[0, 2, 1]]));
        assert_eq!(a.nearest, vec![qq(15, 14), qq(9, 7), qq(9, 14)]);
        assert_eq!(a.delta_squared, qq(3, 14));
        assert_eq!(a.lambda, Some(lam(&[1, 4, -5])));
        assert_eq!(a.mu, q(3));
        assert!(a.certify());
    }

    #[test]
    fn certify_rejects_tampering() {
        let mut a = nearest_point(&state(2, 3, &[&[3, 0, 0], &[0, 2, 1]]));
        a.delta_squared = qq(1, 7);
        assert!(!a.certify());
        let mut b = nearest_point(&state(2, 3, &[&[3, 0, 0], &[0, 2, 1]]));
        b.nearest = vec![q(3), q(0), q(0)];
        assert!(!b.certify());
    }

    #[test]
    fn maxmin_examples() {
        let s = state(3, 4, &[&[4, 0, 0, 0]]);
        assert_eq!(maxmin_delta(&s, &[lam(&[3, -1, -1, -1])]).unwrap().signed(), &q(12));
        let cusp = state(2, 3, &[&[3, 0, 0], &[0, 2, 1]]);
        assert_eq!(maxmin_delta(&cusp, &[lam(&[1, 4, -5])]).unwrap().signed(), &qq(3, 14));
        let both = maxmin_delta(&cusp, &[lam(&[1, 4, -5]), lam(&[-1, -4, 5])]).unwrap();
        assert!(both.is_positive());
        let neg = maxmin_delta(&cusp, &[lam(&[-1, -4, 5])]).unwrap();
        assert!(neg.is_negative());
        assert!(maxmin_delta(&cusp, &[]).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&q(2), 1, 1), q(8));
        assert_eq!(tau(&qq(5, 7), 3, 0), qq(5, 7));
        assert_eq!(tau(&q(12), 2, 1), q(108));
    }

    #[test]
    fn multiplication_matrix_examples() {
        let a = multiplication_matrix(&poly("x0^2", 1), 1);
        assert_eq!(a.rows, vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert_eq!(a.cols, vec![ev(&[3, 0]), ev(&[2, 1]), ev(&[1, 2]), ev(&[0, 3])]);
        assert_eq!(a.entries[0], vec![q(1), q(0), q(0), q(0)]);
        assert_eq!(a.entries[1], vec![q(0), q(1), q(0), q(0)]);

        let b = multiplication_matrix(&poly("x0*x1", 1), 1);
        assert_eq!(b.entries[0], vec![q(0), q(1), q(0), q(0)]);
        assert_eq!(b.entries[1], vec![q(0), q(0), q(1), q(0)]);

        let cubic = poly("x0^3 - 2*x0*x1*x2 + 3/2*x2^3 + x1^2*x0", 2);
        assert_eq!(multiplication_matrix(&cubic, 1).rank(), 3);
    }

    #[test]
    fn shifted_state_examples() {
        let s = state_degree_d_plus(&poly("x0^2", 1), 1, 1_000).unwrap();
        assert_eq!(s.points().cloned().collect::<Vec<_>>(), vec![ev(&[5, 1])]);
        let s = state_degree_d_plus(&poly("x0*x1", 1), 1, 1_000).unwrap();
        assert_eq!(s.points().cloned().collect::<Vec<_>>(), vec![ev(&[3, 3])]);
        assert_eq!((s.t(), s.q()), (3, 2));
    }

    #[test]
    fn shifted_state_respects_cap() {
        let f = poly("x0^4 + x1^4 + x2^4 + x3^4", 3);
        assert!(matches!(state_degree_d_plus(&f, 1, 100), Err(Error::CapExceeded { needed: 367_290, cap: 100 })));
    }

    #[test]
    fn theorem1_examples() {
        let r = verify_theorem1(&poly("x0^2", 1), 1, 1_000).unwrap();
        assert_eq!(r.base.delta_squared, q(2));
        assert_eq!(r.shifted.delta_squared, q(8));
        assert_eq!(r.base.lambda, Some(lam(&[1, -1])));
        assert_eq!(r.shifted.lambda, Some(lam(&[1, -1])));
        assert!(r.holds() && r.precondition_met);

        let r = verify_theorem1(&poly("x0^2", 2), 1, 1_000).unwrap();
        assert_eq!(r.base.delta_squared, qq(8, 3));
        assert_eq!(r.shifted.delta_squared, q(24));
        assert_eq!(r.shifted.lambda_class(), Some(lam(&[2, -1, -1])));
        assert!(r.holds());

        let r = verify_theorem1(&poly("x0*x1", 1), 1, 1_000).unwrap();
        assert!(!r.precondition_met);
        assert!(r.delta_matches);
    }

    #[test]
    fn shifted_state_points_have_expected_sum() {
        let f = poly("x0^3 + x1*x2^2 - x0*x1*x2", 2);
        let s = state_degree_d_plus(&f, 1, 1_000).unwrap();
        assert!(s.points().all(|p| p.degree() == 4 * 3));
    }
}
