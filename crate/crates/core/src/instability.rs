//! Search over coordinate changes for the worst destabilizing torus 1-PS.
//!
//! The stratum of an unstable hypersurface is named by the `g ∈ G` that
//! maximizes `|Δ_{g.x,d}|`. This module explores structured and random
//! coordinate changes and keeps the best certified result. A returned
//! [`StratumLabel`] is always a proof of instability (`μ > 0` for an explicit
//! `g` and `λ`); failing to find one proves nothing.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomogeneousPolynomial;
use crate::error::{Error, Result};
use crate::group_action::{
    act, canonical_class_rep, mu, norm_squared, GroupElement, OneParamSubgroup, Permutation, ProjectivePoint,
};
use crate::state_polytope::{nearest_point, state_degree_d, PolytopeAnalysis, StateSet};
use crate::Rational;

pub const SEMISTABLE_MESSAGE: &str = "no destabilizing 1-PS found within budget";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of random group elements (and of lower-triangular perturbations).
    pub budget: usize,
    pub seed: u64,
    /// Random matrix entries are integers in `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Extra points to move to `e = [1:0:...:0]` before permuting coordinates.
    pub candidate_points: Vec<ProjectivePoint>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 200, seed: 0, entry_bound: 2, candidate_points: Vec::new() }
    }
}

/// `([λ], δ)` with the coordinate change that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumLabel {
    /// Canonical representative: weights weakly decreasing.
    pub lambda_class: OneParamSubgroup,
    pub delta_squared: Rational,
    pub mu: Rational,
    pub witness_g: GroupElement,
    pub witness_lambda: OneParamSubgroup,
}

impl StratumLabel {
    /// Re-checks the certificate against `f` from scratch.
    pub fn verify(&self, f: &HomogeneousPolynomial) -> bool {
        let Ok(moved) = act(&self.witness_g, f) else {
            return false;
        };
        let Ok(m) = mu(&moved, &self.witness_lambda) else {
            return false;
        };
        m == self.mu
            && m.is_positive()
            && self.witness_lambda.is_sl_normalized()
            && self.witness_lambda.is_indivisible()
            && canonical_class_rep(&self.witness_lambda) == self.lambda_class
            && &m * &m / norm_squared(&self.witness_lambda) == self.delta_squared
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistableVerdict {
    pub evaluated: usize,
    pub message: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Unstable(StratumLabel),
    NoDestabilizerFound(SemistableVerdict),
}

impl Classification {
    pub fn label(&self) -> Option<&StratumLabel> {
        match self {
            Classification::Unstable(label) => Some(label),
            Classification::NoDestabilizerFound(_) => None,
        }
    }
}

/// `g = q l` with `l` lower triangular and `q` a transposition, such that `e g = y`.
///
/// `l` is the identity with row `k` replaced by `y`, where `k` is the last
/// nonzero coordinate of `y`; `q` swaps `0` and `k`.
pub fn move_point_to_e(y: &ProjectivePoint) -> GroupElement {
    let n = y.nvars();
    let k = (0..n).rev().find(|&i| !y.coords()[i].is_zero()).expect("projective points are nonzero");
    let mut rows = GroupElement::identity(n).rows().to_vec();
    rows[k] = y.coords().to_vec();
    let lower = GroupElement::new(rows).expect("lower triangular with nonzero diagonal");
    Permutation::transposition(n, 0, k).matrix().mul(&lower)
}

/// Torus analysis of `f` after moving `p` to `e`.
pub fn destabilize_at_point(f: &HomogeneousPolynomial, p: &ProjectivePoint) -> Result<PolytopeAnalysis> {
    if p.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: p.nvars() });
    }
    let moved = act(&move_point_to_e(p), f)?;
    Ok(nearest_point(&state_degree_d(&moved)))
}

/// Whether the lower-triangular `l` leaves the torus-worst `λ` and `δ²` of
/// `g.f` unchanged. Requires the incumbent `λ` to be weakly increasing.
pub fn check_lower_triangular_invariance(
    f: &HomogeneousPolynomial,
    g: &GroupElement,
    l: &GroupElement,
) -> Result<bool> {
    if !l.is_lower_triangular() {
        return Err(Error::NotLowerTriangular);
    }
    let before = nearest_point(&state_degree_d(&act(g, f)?));
    let Some(lambda) = &before.lambda else {
        return Err(Error::HypothesisNotMet("g.f is not torus-unstable".into()));
    };
    if !lambda.is_weakly_increasing() {
        return Err(Error::HypothesisNotMet(format!(
            "worst 1-PS {lambda} is not weakly increasing; conjugate by a permutation first"
        )));
    }
    let after = nearest_point(&state_degree_d(&act(&l.mul(g), f)?));
    Ok(after.lambda == before.lambda && after.delta_squared == before.delta_squared)
}

#[derive(Clone)]
struct Incumbent {
    g: GroupElement,
    delta_squared: Rational,
    lambda: OneParamSubgroup,
    class: OneParamSubgroup,
}

impl Incumbent {
    /// Larger δ², then smaller class, then closer to the identity, then
    /// smaller canonical serialization.
    fn beats(&self, other: &Incumbent) -> bool {
        self.delta_squared
            .cmp(&other.delta_squared)
            .reverse()
            .then_with(|| self.class.cmp(&other.class))
            .then_with(|| self.g.distance_from_identity().cmp(&other.g.distance_from_identity()))
            .then_with(|| self.g.canonical_string().cmp(&other.g.canonical_string()))
            .is_lt()
    }
}

struct Search<'a> {
    f: &'a HomogeneousPolynomial,
    cache: HashMap<StateSet, Option<(Rational, OneParamSubgroup)>>,
    best: Option<Incumbent>,
    evaluated: usize,
}

impl<'a> Search<'a> {
    fn evaluate(&mut self, g: GroupElement) -> Result<()> {
        let moved = act(&g, self.f)?;
        let state = state_degree_d(&moved);
        self.evaluated += 1;
        let summary = self
            .cache
            .entry(state)
            .or_insert_with_key(|state| {
                let analysis = nearest_point(state);
                analysis.lambda.map(|lambda| (analysis.delta_squared, lambda))
            })
            .clone();
        let Some((delta_squared, lambda)) = summary else {
            return Ok(());
        };
        let candidate = Incumbent { class: canonical_class_rep(&lambda), g, delta_squared, lambda };
        if self.best.as_ref().is_none_or(|best| candidate.beats(best)) {
            self.best = Some(candidate);
        }
        Ok(())
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> GroupElement {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        if let Ok(g) = GroupElement::from_integers(&rows) {
            return g;
        }
    }
}

fn random_unit_lower(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> GroupElement {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => rng.gen_range(-bound..=bound),
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => 0,
                })
                .collect()
        })
        .collect();
    GroupElement::from_integers(&rows).expect("unit lower triangular")
}

/// Searches coordinate changes for the largest `|Δ_{g.x,d}|`.
///
/// Candidates, in order: every permutation matrix; for each coordinate point
/// on `V(f)` and each configured point, the move of that point to `e`
/// followed by every permutation; then `budget` rounds of one random
/// invertible matrix and one unit lower-triangular perturbation of the
/// incumbent (after sorting its weights increasing). A run with a larger
/// budget and the same seed evaluates a superset of candidates.
///
/// No state is farther from the center than a vertex `d e_i`, so δ² never
/// exceeds `d² r/(r+1)`; once an incumbent reaches that ceiling the class and
/// δ² are settled and the search stops.
pub fn classify(f: &HomogeneousPolynomial, cfg: &SearchConfig) -> Result<Classification> {
    let n = f.nvars();
    let perms: Vec<GroupElement> = Permutation::all(n).iter().map(Permutation::matrix).collect();
    let mut search = Search { f, cache: HashMap::new(), best: None, evaluated: 0 };
    let d = Rational::from_integer(f.degree().into());
    let r = Rational::from_integer(f.r().into());
    let ceiling = &d * &d * &r / (&r + Rational::from_integer(1.into()));
    let settled = |s: &Search| s.best.as_ref().is_some_and(|b| b.delta_squared == ceiling);

    for w in &perms {
        search.evaluate(w.clone())?;
    }

    let mut points: Vec<ProjectivePoint> = (0..n)
        .map(|i| ProjectivePoint::coordinate(n, i))
        .filter(|p| f.evaluate(p.coords()).map(|v| v.is_zero()).unwrap_or(false))
        .collect();
    for p in &cfg.candidate_points {
        if p.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.nvars() });
        }
        if !points.contains(p) {
            points.push(p.clone());
        }
    }
    for p in &points {
        let to_e = move_point_to_e(p);
        for w in &perms {
            if settled(&search) {
                break;
            }
            search.evaluate(w.mul(&to_e))?;
        }
    }

    let bound = cfg.entry_bound.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.budget {
        if settled(&search) {
            break;
        }
        let g = random_matrix(&mut rng, n, bound);
        search.evaluate(g)?;
        let l = random_unit_lower(&mut rng, n, bound);
        if let Some(best) = search.best.clone() {
            let sort = Permutation::sorting_increasing(best.lambda.weights()).matrix();
            search.evaluate(l.mul(&sort).mul(&best.g))?;
        }
    }

    let Some(best) = search.best else {
        return Ok(Classification::NoDestabilizerFound(SemistableVerdict {
            evaluated: search.evaluated,
            message: SEMISTABLE_MESSAGE,
        }));
    };
    let moved = act(&best.g, f)?;
    let mu_value = mu(&moved, &best.lambda)?;
    let delta_squared = &mu_value * &mu_value / norm_squared(&best.lambda);
    debug_assert_eq!(delta_squared, best.delta_squared);
    Ok(Classification::Unstable(StratumLabel {
        lambda_class: best.class,
        delta_squared,
        mu: mu_value,
        witness_g: best.g,
        witness_lambda: best.lambda,
    }))
}
