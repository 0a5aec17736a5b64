use hesselink::multiplicity::is_singular_point;
use hesselink::{
    act, act_point, check_firststep, check_singular_if_unstable, classify, enumerate_monomials, hesselink_bounds,
    max_multiplicity, move_point_to_e, multiplicity_at, Classification, GroupElement, HomogeneousPolynomial,
    Permutation, ProjectivePoint, Rational, SearchConfig,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(s: &str, r: usize) -> HomogeneousPolynomial {
    HomogeneousPolynomial::parse(s, r).unwrap()
}

fn polynomial() -> impl Strategy<Value = HomogeneousPolynomial> {
    (1usize..=3, 1u32..=5).prop_flat_map(|(r, d)| {
        let monos = enumerate_monomials(r, d);
        let k = monos.len();
        proptest::collection::vec((0..k, -3i64..=3), 1..5).prop_filter_map("zero", move |picks| {
            HomogeneousPolynomial::new(
                r,
                picks.into_iter().map(|(i, c)| (monos[i].clone(), Rational::from_integer(BigInt::from(c)))),
            )
            .ok()
        })
    })
}

fn point(n: usize) -> impl Strategy<Value = ProjectivePoint> {
    proptest::collection::vec(-2i64..=2, n).prop_filter_map("zero", |c| ProjectivePoint::from_i64(&c).ok())
}

fn lower_or_permutation(n: usize) -> impl Strategy<Value = GroupElement> {
    prop_oneof![
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|p| Permutation::new(p).unwrap().matrix()),
        proptest::collection::vec(-2i64..=2, n * n).prop_map(move |e| {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if j < i {
                                e[i * n + j]
                            } else if i == j {
                                1 + e[i * n + j].abs()
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            GroupElement::from_integers(&rows).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicity_is_coordinate_free(
        (f, p, g) in polynomial().prop_flat_map(|f| {
            let n = f.nvars();
            (Just(f), point(n), lower_or_permutation(n))
        })
    ) {
        let moved = act(&g, &f).unwrap();
        let moved_point = act_point(&p, &g.inverse()).unwrap();
        prop_assert_eq!(
            multiplicity_at(&moved, &moved_point).unwrap().value,
            multiplicity_at(&f, &p).unwrap().value
        );
    }

    #[test]
    fn multiplicity_two_means_singular(
        (f, p) in polynomial().prop_flat_map(|f| { let n = f.nvars(); (Just(f), point(n)) })
    ) {
        let report = multiplicity_at(&f, &p).unwrap();
        prop_assert_eq!(report.value >= 1, f.evaluate(p.coords()).unwrap() == Rational::from_integer(0.into()));
        prop_assert_eq!(report.value >= 2, is_singular_point(&f, &p).unwrap());
        prop_assert!(report.value <= f.degree());
    }

    #[test]
    fn firststep_after_moves(
        (f, p) in polynomial().prop_flat_map(|f| { let n = f.nvars(); (Just(f), point(n)) })
    ) {
        prop_assert!(check_firststep(&f));
        let moved = act(&move_point_to_e(&p), &f).unwrap();
        prop_assert!(check_firststep(&moved));
    }
}

#[test]
fn singular_locus_oracle_on_named_curves() {
    // Nodal cubic: node at [0:0:1].
    let nodal = poly("x1^2*x2 - x0^2*x2 - x0^3", 2);
    let node = ProjectivePoint::from_i64(&[0, 0, 1]).unwrap();
    assert_eq!(multiplicity_at(&nodal, &node).unwrap().value, 2);
    assert!(is_singular_point(&nodal, &node).unwrap());
    let smooth = ProjectivePoint::from_i64(&[0, 1, 0]).unwrap();
    assert_eq!(multiplicity_at(&nodal, &smooth).unwrap().value, 1);
    assert!(!is_singular_point(&nodal, &smooth).unwrap());
    let off = ProjectivePoint::from_i64(&[1, 0, 0]).unwrap();
    assert_eq!(multiplicity_at(&nodal, &off).unwrap().value, 0);
}

#[test]
fn bounds_bracket_the_multiplicity_on_the_corpus() {
    let corpus = [
        ("x0^4", 3),
        ("x0^2", 1),
        ("x0^2", 2),
        ("x0^3", 2),
        ("x1*x2^2", 2),
        ("x1^2*x2 - x0^3", 2),
        ("x0^3", 1),
        ("x0^5", 3),
    ];
    for (text, r) in corpus {
        let f = poly(text, r);
        let Classification::Unstable(label) = classify(&f, &SearchConfig::default()).unwrap() else {
            panic!("{text} should be unstable");
        };
        let bounds = hesselink_bounds(&label, f.degree(), r).unwrap();
        let n = max_multiplicity(&f, &[]).unwrap().value;
        assert!(bounds.lower <= bounds.upper, "{text}");
        assert!(bounds.contains(n), "{text}: n={n} not in [{}, {}]", bounds.lower, bounds.upper);
        if f.degree() as usize > r {
            assert!(check_singular_if_unstable(&label, f.degree(), r).unwrap(), "{text}");
        }
    }
}

#[test]
fn bounds_are_sharp_for_extremal_classes() {
    // Classes conjugate to (r, -1, ..., -1) pin the multiplicity down.
    for (text, r) in [("x0^4", 3), ("x0^2", 2), ("x0^3", 2), ("x0^2", 1), ("x0^5", 4)] {
        let f = poly(text, r);
        let label =
            classify(&f, &SearchConfig { budget: 10, ..SearchConfig::default() }).unwrap().label().cloned().unwrap();
        let bounds = hesselink_bounds(&label, f.degree(), r).unwrap();
        assert_eq!(bounds.lower, bounds.upper, "{text}");
        assert_eq!(bounds.lower, Rational::from_integer(BigInt::from(f.degree())), "{text}");
        assert_eq!(max_multiplicity(&f, &[]).unwrap().value, f.degree());
    }
}
