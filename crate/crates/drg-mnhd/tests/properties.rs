//! Randomized cross-module properties.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use drg_mnhd::analysis::{self, LaplacianPairData};
use drg_mnhd::antipodal::{self, AntipodalParams};
use drg_mnhd::classical::{self, ClassicalParams};
use drg_mnhd::graph::{self, GraphKind};
use drg_mnhd::quadratic::QuadraticNumber;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=8)
        .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=40, 1i64..=8)
        .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    /// The eigenvalue identity vanishes for every formal input and every
    /// role permutation, not just on graph-realizable data.
    #[test]
    fn identity_residual_is_identically_zero(
        raw in prop::collection::vec(positive_rational(), 3),
        degree in rational(),
        n in positive_rational(),
        l in rational(),
        l2 in rational(),
        perm in 0usize..6,
    ) {
        let mut lams: Vec<BigRational> = raw;
        lams.sort();
        prop_assume!(lams[0] != lams[1] && lams[1] != lams[2]);
        let lams = [lams[0].clone(), lams[1].clone(), lams[2].clone()];
        let roles = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]][perm];
        let pair = LaplacianPairData { l, l2 };
        let residual =
            analysis::identity_residual(&lams, &degree, &n, &pair, roles).unwrap();
        prop_assert!(residual.is_zero());
    }

    /// Quadratic-field ring laws and exact sign agreement with floats.
    #[test]
    fn quadratic_arithmetic_is_exact(
        a1 in rational(), c1 in rational(),
        a2 in rational(), c2 in rational(),
        rad in prop::sample::select(vec![2u64, 3, 5, 7, 13]),
    ) {
        let x = QuadraticNumber::new(a1, c1, rad);
        let y = QuadraticNumber::new(a2, c2, rad);

        // ring laws
        prop_assert_eq!(
            x.clone() * (y.clone() + x.clone()),
            x.clone() * y.clone() + x.clone() * x.clone()
        );
        prop_assert_eq!(x.clone() - y.clone() + y.clone(), x.clone());

        // conjugate product is rational
        let conj = QuadraticNumber::new(
            y.rational_part().clone(),
            -(y.clone() - QuadraticNumber::from_rational(y.rational_part().clone()))
                .coefficient().clone(),
            rad,
        );
        prop_assert!((y.clone() * conj).is_rational());

        // sign decisions match the float image away from zero
        let image = x.to_f64();
        if image.abs() > 1e-6 {
            prop_assert_eq!(x.signum(), image.signum() as i8);
        }

        // division inverts multiplication
        if !y.is_zero() {
            prop_assert_eq!(x.clone() * y.clone() / y.clone(), x);
        }
    }

    /// Serializing a graph to the edge-list format and parsing it back is
    /// the identity.
    #[test]
    fn edge_list_roundtrip(seed in 0u64..500, n in 2usize..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = graph::random_connected(n, 0.3, &mut rng);
        let parsed = graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    /// Scaling classical parameters keeps validation consistent: the
    /// feasibility verdict never depends on the rational representation.
    #[test]
    fn validation_is_representation_independent(
        b in prop::sample::select(vec![-6i64, -4, -2, 1, 2, 3, 5]),
        k in -8i64..=8,
        beta_num in 1i64..=10,
    ) {
        let denom = (1 + b).abs();
        prop_assume!(denom != 0);
        let alpha = BigRational::new(BigInt::from(k), BigInt::from(1 + b));
        let beta = BigRational::new(BigInt::from(beta_num), BigInt::from(denom));
        let p = ClassicalParams::new(3, b, alpha.clone(), beta.clone());
        // same value, unreduced representation
        let q = ClassicalParams::new(
            3,
            b,
            BigRational::new(
                alpha.numer() * BigInt::from(3),
                alpha.denom() * BigInt::from(3),
            ),
            BigRational::new(
                beta.numer() * BigInt::from(7),
                beta.denom() * BigInt::from(7),
            ),
        );
        prop_assert_eq!(
            classical::validate(&p).feasible(),
            classical::validate(&q).feasible()
        );
    }
}

/// Detected intersection arrays of the constructed fixtures agree exactly
/// with the arrays computed from their parameter descriptions.
#[test]
fn detected_arrays_match_parameter_arrays() {
    let classical_cases = [
        (GraphKind::Hypercube(3), ClassicalParams::from_integers(3, 1, 0, 1)),
        (GraphKind::Johnson(6, 3), ClassicalParams::from_integers(3, 1, 1, 3)),
    ];
    for (kind, params) in classical_cases {
        let g = graph::construct(kind).unwrap();
        let detected = graph::check_distance_regular(&g).unwrap().expect("fixture is DR");
        let expected = classical::intersection_array(&params).unwrap();
        assert_eq!(detected, expected, "{kind:?}");
    }

    let antipodal_cases = [
        (GraphKind::Icosahedron, AntipodalParams::new(5, 2, 1)),
        (GraphKind::Cycle(6), AntipodalParams::new(2, 1, 1)),
        (GraphKind::Hypercube(3), AntipodalParams::new(3, 2, 1)),
    ];
    for (kind, params) in antipodal_cases {
        let g = graph::construct(kind).unwrap();
        let detected = graph::check_distance_regular(&g).unwrap().expect("fixture is DR");
        let expected = antipodal::intersection_array(&params).unwrap();
        assert_eq!(detected, expected, "{kind:?}");
    }
}

/// The two certification pipelines agree wherever they overlap: the cube is
/// both classical (3, 1, 0, 1) and antipodal (3, 2, 1).
#[test]
fn pipelines_agree_on_the_cube() {
    let classical_verdict =
        analysis::certify_classical(&ClassicalParams::from_integers(3, 1, 0, 1)).unwrap();
    let antipodal_verdict =
        antipodal::certify_antipodal(&AntipodalParams::new(3, 2, 1)).unwrap();
    assert!(classical_verdict.certified() && antipodal_verdict.certified());
    assert_eq!(
        classical_verdict.per_distance.len(),
        antipodal_verdict.per_distance.len()
    );
    for (c, a) in classical_verdict
        .per_distance
        .iter()
        .zip(&antipodal_verdict.per_distance)
    {
        assert_eq!(c.case, a.case, "case at distance {}", c.distance);
        assert_eq!(c.deltas.delta1, a.deltas.delta1.clone().expect_rational());
        assert_eq!(c.deltas.delta12, a.deltas.delta12.clone().expect_rational());
    }
    assert_eq!(
        classical_verdict.eigenvalue_slack,
        antipodal_verdict.eigenvalue_slack.expect_rational()
    );
}

/// A quadratic number built from a square discriminant collapses to the
/// rational pipeline's values.
#[test]
fn square_discriminants_collapse_to_rationals() {
    // antipodal (3, 2, 1): discriminant 4*3 + (3-2-2-1)^2 = 16
    let eigs = antipodal::antipodal_eigenvalues(&AntipodalParams::new(3, 2, 1)).unwrap();
    for (e, want) in eigs.iter().zip([2i64, 4, 6]) {
        assert!(e.is_rational());
        assert_eq!(
            e.rational_part(),
            &BigRational::from(BigInt::from(want))
        );
    }
    let one = QuadraticNumber::sqrt(9) / QuadraticNumber::from_integer(3);
    assert!(one.is_one());
}
