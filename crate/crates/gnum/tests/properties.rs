//! Algebraic laws of the core arithmetic, checked against the matrix oracle.

use gnum::*;
use proptest::prelude::*;

fn int_gnum() -> impl Strategy<Value = GNum> {
    (-9i32..=9, -9i32..=9, -9i32..=9, -9i32..=9)
        .prop_map(|(a, b, c, d)| GNum::new(a as f64, b as f64, c as f64, d as f64))
}

#[test]
fn multiplication_table_reproduced() {
    let basis = [
        ("a", A_GEN),
        ("b", B_GEN),
        ("ab", A_GEN * B_GEN),
        ("ba", B_GEN * A_GEN),
    ];
    // expected products, rows then columns in the order a, b, ab, ba
    let zero = ZERO;
    let (a, b) = (A_GEN, B_GEN);
    let (ab, ba) = (a * b, b * a);
    let expected = [
        [zero, ab, zero, a],
        [ba, zero, b, zero],
        [a, zero, ab, zero],
        [zero, b, zero, ba],
    ];
    for (i, (ni, x)) in basis.iter().enumerate() {
        for (j, (nj, y)) in basis.iter().enumerate() {
            assert_eq!(*x * *y, expected[i][j], "{ni} * {nj}");
        }
    }
}

#[test]
fn axioms_hold_exactly() {
    assert_eq!(A_GEN * A_GEN, ZERO);
    assert_eq!(B_GEN * B_GEN, ZERO);
    assert_eq!(A_GEN * B_GEN + B_GEN * A_GEN, ONE);
    let ab = A_GEN * B_GEN;
    let ba = B_GEN * A_GEN;
    assert_eq!(ab * ab, ab);
    assert_eq!(ba * ba, ba);
    assert_eq!(ab * ba, ZERO);
    assert_eq!(ba * ab, ZERO);
    assert_eq!(ab + ba, ONE);
}

proptest! {
    #[test]
    fn product_matches_matrix_oracle(f in int_gnum(), g in int_gnum()) {
        let lhs = to_matrix(&(f * g));
        let rhs = mat_mul(&to_matrix(&f), &to_matrix(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sum_matches_matrix_oracle(f in int_gnum(), g in int_gnum()) {
        prop_assert_eq!(to_matrix(&(f + g)), mat_add(&to_matrix(&f), &to_matrix(&g)));
    }

    #[test]
    fn trace_and_det_match_oracle(g in int_gnum()) {
        prop_assert_eq!(g.trace(), mat_trace(&to_matrix(&g)));
        prop_assert_eq!(g.det(), mat_det(&to_matrix(&g)));
    }

    #[test]
    fn associativity_and_distributivity(f in int_gnum(), g in int_gnum(), h in int_gnum()) {
        prop_assert_eq!((f * g) * h, f * (g * h));
        prop_assert_eq!(f * (g + h), f * g + f * h);
        prop_assert_eq!((f + g) * h, f * h + g * h);
    }

    #[test]
    fn conjugations_are_involutions(g in int_gnum()) {
        prop_assert_eq!(g.reverse().reverse(), g);
        prop_assert_eq!(g.inversion().inversion(), g);
        prop_assert_eq!(g.mixed().mixed(), g);
        prop_assert_eq!(g.mixed(), g.reverse().inversion());
    }

    #[test]
    fn conjugation_product_laws(f in int_gnum(), g in int_gnum()) {
        prop_assert_eq!((f * g).reverse(), g.reverse() * f.reverse());
        prop_assert_eq!((f * g).inversion(), f.inversion() * g.inversion());
        prop_assert_eq!((f * g).mixed(), g.mixed() * f.mixed());
        // the reverse law seen through the matrix bridge
        prop_assert_eq!(
            to_matrix(&(f * g).reverse()),
            mat_mul(&to_matrix(&g.reverse()), &to_matrix(&f.reverse()))
        );
    }

    #[test]
    fn det_and_trace_algebra(f in int_gnum(), g in int_gnum()) {
        prop_assert_eq!((f * g).det(), f.det() * g.det());
        prop_assert_eq!((f + g).trace(), f.trace() + g.trace());
        prop_assert_eq!((f * g).trace(), (g * f).trace());
    }

    #[test]
    fn det_in_standard_coordinates(g in int_gnum()) {
        let c = g.std_coords();
        prop_assert_eq!(g.det(), c.a0 * c.a0 - c.vsq());
    }

    #[test]
    fn std_coords_roundtrip_is_exact(g in int_gnum()) {
        prop_assert_eq!(g.std_coords().to_gnum(), g);
    }

    #[test]
    fn scalar_plus_vector_split(g in int_gnum()) {
        let rebuilt = ONE.scaled(0.5 * g.trace()) + g.vector_part();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn parts_sum_and_products(f in int_gnum(), g in int_gnum()) {
        let (o, e) = f.parts();
        prop_assert_eq!(o + e, f);
        // odd/even parity of products
        let (fo, fe_part) = f.parts();
        let (go, ge) = g.parts();
        prop_assert_eq!((f * g).odd_part(), fo * ge + fe_part * go);
        prop_assert_eq!((f * g).even_part(), fo * go + fe_part * ge);
    }

    #[test]
    fn split_product_recomposes(f in int_gnum(), g in int_gnum()) {
        let (sym, skew) = f.split_product(&g);
        prop_assert_eq!(sym + skew, f * g);
        prop_assert!(sym.approx_eq(&g.sym(&f), 0.0));
        prop_assert!(skew.approx_eq(&(-(g.skew(&f))), 0.0));
    }

    #[test]
    fn inverse_against_matrix_oracle(g in int_gnum()) {
        let tol = DEFAULT_TOL;
        match g.inverse(tol) {
            Ok(inv) => {
                prop_assert!((g * inv).approx_eq(&ONE, 1e-12));
                prop_assert!((inv * g).approx_eq(&ONE, 1e-12));
                let oracle = from_matrix(&mat_inv(&to_matrix(&g), tol).unwrap());
                prop_assert!(inv.approx_eq(&oracle, 1e-12));
            }
            Err(Error::SingularGNumber) => {
                prop_assert_eq!(g.det(), 0.0);
            }
            Err(other) => prop_assert!(false, "unexpected error {other:?}"),
        }
    }

    #[test]
    fn sandwich_extraction_equals_coordinates(g in int_gnum()) {
        prop_assert_eq!(extract_matrix_sandwich(&g), to_matrix(&g));
    }

    #[test]
    fn eigenvalue_oracle_agreement(g in int_gnum()) {
        let (l1, l2) = eigenvalues(&g);
        let (m1, m2) = mat_eig(&to_matrix(&g));
        let direct = (l1 - m1).norm() + (l2 - m2).norm();
        let crossed = (l1 - m2).norm() + (l2 - m1).norm();
        prop_assert!(direct.min(crossed) < 1e-12);
    }
}

#[test]
fn sandwich_extraction_1000_integer_samples() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(31337);
    for _ in 0..1000 {
        let g = GNum::new(
            rng.random_range(-9..=9) as f64,
            rng.random_range(-9..=9) as f64,
            rng.random_range(-9..=9) as f64,
            rng.random_range(-9..=9) as f64,
        );
        assert_eq!(extract_matrix_sandwich(&g), to_matrix(&g));
    }
}

#[test]
fn values_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<GNum>();
    assert_send_sync::<CGNum>();
    assert_send_sync::<Mat2<f64>>();
    assert_send_sync::<SpectralData>();
    assert_send_sync::<EulerForm>();
    assert_send_sync::<RelativeBasis<Complex64>>();
    assert_send_sync::<AlgebraCoords>();
}
