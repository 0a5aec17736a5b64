mod support;

use hesselink::{
    act, canonical_class_rep, conjugate_by_permutation, maxmin_delta, nearest_point, primitive, state_degree_d, tau,
    verify_theorem1, ExponentVector, HomogeneousPolynomial, Permutation, Rational, StateSet,
};
use num_traits::Zero;
use proptest::prelude::*;

fn poly(s: &str, r: usize) -> HomogeneousPolynomial {
    HomogeneousPolynomial::parse(s, r).unwrap()
}

#[test]
fn wolfe_matches_brute_force_on_seeded_states() {
    let mut rng = support::rng(2024);
    for _ in 0..60 {
        let state = support::random_state(&mut rng, 5, 12);
        let analysis = nearest_point(&state);
        let (h, delta_squared) = support::brute_force_nearest(&state);
        assert_eq!(analysis.nearest, h, "state {:?}", state.points().collect::<Vec<_>>());
        assert_eq!(analysis.delta_squared, delta_squared);
        assert!(analysis.certify());
    }
}

fn permute_state(state: &StateSet, w: &Permutation) -> StateSet {
    let points = state.points().map(|m| ExponentVector::new(w.images().iter().map(|&k| m.get(k)).collect()));
    StateSet::new(state.r(), state.t(), state.q(), points).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn nearest_point_agrees_with_oracle(seed in any::<u64>()) {
        let state = support::random_state(&mut support::rng(seed), 4, 8);
        let analysis = nearest_point(&state);
        let (h, delta_squared) = support::brute_force_nearest(&state);
        prop_assert_eq!(&analysis.nearest, &h);
        prop_assert_eq!(&analysis.delta_squared, &delta_squared);
        prop_assert!(analysis.certify());
    }

    #[test]
    fn permuting_coordinates_permutes_the_analysis(
        seed in any::<u64>(),
        images in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let mut rng = support::rng(seed);
        let mut state = support::random_state(&mut rng, 4, 8);
        while state.r() != 3 {
            state = support::random_state(&mut rng, 4, 8);
        }
        let w = Permutation::new(images).unwrap();
        let a = nearest_point(&state);
        let b = nearest_point(&permute_state(&state, &w));
        prop_assert_eq!(&a.delta_squared, &b.delta_squared);
        let permuted: Vec<Rational> = w.images().iter().map(|&k| a.nearest[k].clone()).collect();
        prop_assert_eq!(&b.nearest, &permuted);
        prop_assert_eq!(b.lambda.clone(), a.lambda.as_ref().map(|l| conjugate_by_permutation(&w, l)));
    }

    #[test]
    fn maxmin_at_primitive_direction_recovers_delta(seed in any::<u64>()) {
        let state = support::random_state(&mut support::rng(seed), 5, 10);
        let analysis = nearest_point(&state);
        prop_assume!(!analysis.delta_squared.is_zero());
        let offset: Vec<Rational> = analysis.nearest.iter().zip(&analysis.center).map(|(a, b)| a - b).collect();
        let lambda = primitive(&offset).unwrap();
        let value = maxmin_delta(&state, &[lambda]).unwrap();
        prop_assert!(value.is_positive());
        prop_assert_eq!(value.magnitude_squared(), analysis.delta_squared);
    }
}

#[test]
fn scaling_the_polynomial_changes_nothing() {
    for (text, r) in [("x1^2*x2 - x0^3", 2), ("x0^4 + 3*x1*x2^3", 3), ("x0*x1", 1)] {
        let f = poly(text, r);
        let g = f.scale(&Rational::new((-7).into(), 3.into())).unwrap();
        assert_eq!(state_degree_d(&f), state_degree_d(&g));
        assert_eq!(nearest_point(&state_degree_d(&f)), nearest_point(&state_degree_d(&g)));
        let shifted_f = verify_theorem1(&f, 1, 1_000_000).unwrap();
        let shifted_g = verify_theorem1(&g, 1, 1_000_000).unwrap();
        assert_eq!(shifted_f.shifted.state, shifted_g.shifted.state);
    }
}

#[test]
fn tau_consistency_on_unstable_polynomials() {
    let cases = [
        ("x0^2", 1, 1),
        ("x0^2", 1, 2),
        ("x0^2", 2, 1),
        ("x0^3", 2, 1),
        ("x1*x2^2", 2, 1),
        ("x1^2*x2 - x0^3", 2, 1),
        ("x0^3 + x0^2*x1", 1, 2),
        ("x0^2*x1 + x0*x1^2", 2, 1),
    ];
    for (text, r, shift) in cases {
        let f = poly(text, r);
        let report = verify_theorem1(&f, shift, 1_000_000).unwrap();
        assert!(report.precondition_met, "{text}");
        assert!(
            report.holds(),
            "{text} with D={shift}: {:?} vs {:?}",
            report.shifted.delta_squared,
            report.expected_delta_squared
        );
        assert_eq!(report.shifted.delta_squared, tau(&report.base.delta_squared, r, shift));
        assert_eq!(report.shifted.lambda, report.base.lambda);
        assert!(report.shifted.certify());
        assert_eq!(report.base.lambda_class(), report.base.lambda.as_ref().map(canonical_class_rep));
    }
}

#[test]
fn shifted_state_is_invariant_under_permutation_of_variables() {
    let f = poly("x1^2*x2 - x0^3", 2);
    let w = Permutation::new(vec![2, 0, 1]).unwrap();
    let g = act(&w.matrix(), &f).unwrap();
    let a = verify_theorem1(&f, 1, 1_000_000).unwrap();
    let b = verify_theorem1(&g, 1, 1_000_000).unwrap();
    assert_eq!(a.shifted.delta_squared, b.shifted.delta_squared);
    assert_eq!(a.shifted.lambda_class(), b.shifted.lambda_class());
}
