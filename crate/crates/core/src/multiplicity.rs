//! Multiplicity of a hypersurface at a point and the two-sided bound relating
//! it to the instability label.
//!
//! After `p` is moved to `e = [1:0:...:0]`, the multiplicity is the order of
//! vanishing of the affine polynomial `f(1, x_1, ..., x_r)` at the origin,
//! which is `d` minus the largest power of `x_0` in the support.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::HomogeneousPolynomial;
use crate::error::{Error, Result};
use crate::group_action::{act, norm_squared, OneParamSubgroup, ProjectivePoint};
use crate::instability::{move_point_to_e, StratumLabel};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub point: ProjectivePoint,
    /// `n_{p,X}`; zero when `p` is off the hypersurface.
    pub value: u32,
    /// `f` after moving `p` to `e`.
    pub moved_polynomial: HomogeneousPolynomial,
}

pub fn multiplicity_at(f: &HomogeneousPolynomial, p: &ProjectivePoint) -> Result<MultiplicityReport> {
    if p.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: p.nvars() });
    }
    let moved = act(&move_point_to_e(p), f)?;
    Ok(MultiplicityReport { point: p.clone(), value: f.degree() - moved.max_x0_power(), moved_polynomial: moved })
}

/// Largest multiplicity over the coordinate points and `candidates`.
///
/// Only a lower bound for `n_X` unless a worst point is among the candidates.
/// Ties keep the first point, coordinate points coming first.
pub fn max_multiplicity(f: &HomogeneousPolynomial, candidates: &[ProjectivePoint]) -> Result<MultiplicityReport> {
    let n = f.nvars();
    let mut best: Option<MultiplicityReport> = None;
    for p in (0..n).map(|i| ProjectivePoint::coordinate(n, i)).chain(candidates.iter().cloned()) {
        let report = multiplicity_at(f, &p)?;
        if best.as_ref().is_none_or(|b| report.value > b.value) {
            best = Some(report);
        }
    }
    Ok(best.expect("at least one coordinate point"))
}

/// Lemma-style link between the state and the multiplicity at `e`: no support
/// monomial has `x_0`-degree above `d - n`, and some has exactly `d - n`.
pub fn check_firststep(f: &HomogeneousPolynomial) -> bool {
    let n = f.degree() - f.max_x0_power();
    let top = f.degree() - n;
    f.support().all(|m| m.get(0) <= top) && f.support().any(|m| m.get(0) == top)
}

/// `lower ≤ n_X ≤ upper` for a hypersurface in the stratum of `lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Rational,
    pub upper: Rational,
    pub lambda: OneParamSubgroup,
    pub mu: Rational,
    /// Least weight of `lambda`.
    pub a: BigInt,
    /// Largest weight of `lambda`.
    pub b: BigInt,
    pub d: u32,
    pub r: usize,
}

impl BoundsReport {
    pub fn contains(&self, n: u32) -> bool {
        let n = Rational::from_integer(n.into());
        self.lower <= n && n <= self.upper
    }
}

/// `(‖λ‖δ - a d)/(b - a) ≤ n ≤ r d/(r+1) - δ a/‖λ‖`, evaluated exactly through
/// `‖λ‖δ = μ` and `δ a/‖λ‖ = a μ/‖λ‖²`.
pub fn hesselink_bounds(label: &StratumLabel, d: u32, r: usize) -> Result<BoundsReport> {
    let lambda = &label.witness_lambda;
    if !label.mu.is_positive() {
        return Err(Error::PreconditionViolated("bounds need an unstable label with mu > 0".into()));
    }
    if !lambda.is_sl_normalized() || lambda.nvars() != r + 1 {
        return Err(Error::PreconditionViolated(format!("{lambda} is not a trace-zero 1-PS on P^{r}")));
    }
    let a = lambda.min_weight().clone();
    let b = lambda.max_weight().clone();
    let qa = Rational::from_integer(a.clone());
    let qb = Rational::from_integer(b.clone());
    let qd = Rational::from_integer(d.into());
    let qr = Rational::from_integer(r.into());
    let lower = (&label.mu - &qa * &qd) / (&qb - &qa);
    let upper = &qr * &qd / (&qr + Rational::from_integer(1.into())) - &qa * &label.mu / norm_squared(lambda);
    Ok(BoundsReport { lower, upper, lambda: lambda.clone(), mu: label.mu.clone(), a, b, d, r })
}

/// Whether the lower bound exceeds `d/(r+1)`, which forces a singular point
/// (`n ≥ 2`) on an unstable hypersurface of degree `d ≥ r + 1`.
pub fn check_singular_if_unstable(label: &StratumLabel, d: u32, r: usize) -> Result<bool> {
    if (d as usize) < r + 1 {
        return Err(Error::PreconditionViolated(format!("degree {d} is below r + 1 = {}", r + 1)));
    }
    let bounds = hesselink_bounds(label, d, r)?;
    let threshold = Rational::new(d.into(), (r + 1).into());
    Ok(bounds.lower > threshold)
}

/// Whether `f` and all first partials vanish at `p`, by direct evaluation.
pub fn is_singular_point(f: &HomogeneousPolynomial, p: &ProjectivePoint) -> Result<bool> {
    if !f.evaluate(p.coords())?.is_zero() {
        return Ok(false);
    }
    for i in 0..f.nvars() {
        let mut value = Rational::zero();
        for (m, c) in f.terms() {
            let e = m.get(i);
            if e == 0 {
                continue;
            }
            let mut term = c * Rational::from_integer(e.into());
            for (j, x) in p.coords().iter().enumerate() {
                let power = if j == i { e - 1 } else { m.get(j) };
                term *= num_traits::pow(x.clone(), power as usize);
            }
            value += term;
        }
        if !value.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
