//! Complex-extension properties: Pauli identities, interpretation maps as
//! algebra isomorphisms, and the Hermitian spectral construction against the
//! closed-form matrices.

use gnum::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TOL: f64 = DEFAULT_TOL;

fn rng() -> StdRng {
    StdRng::seed_from_u64(0x5deece66d)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_cgnum(rng: &mut StdRng) -> CGNum {
    let mut part = || c(rng.random_range(-4..=4) as f64, rng.random_range(-4..=4) as f64);
    CGNum::new(part(), part(), part(), part())
}

fn random_real(rng: &mut StdRng) -> GNum {
    GNum::new(
        rng.random_range(-4..=4) as f64,
        rng.random_range(-4..=4) as f64,
        rng.random_range(-4..=4) as f64,
        rng.random_range(-4..=4) as f64,
    )
}

#[test]
fn pauli_anticommutation_and_pseudoscalar() {
    let one = CGNum::one();
    for j in 1..=3 {
        for k in 1..=3 {
            let s = pauli_vector(j) * pauli_vector(k) + pauli_vector(k) * pauli_vector(j);
            let expect = if j == k { one.scaled(c(2.0, 0.0)) } else { CGNum::zero() };
            assert!(s.approx_eq(&expect, 0.0));
        }
    }
    assert_eq!(
        pauli_vector(1) * pauli_vector(2) * pauli_vector(3),
        one.scaled(c(0.0, 1.0))
    );
    for k in 1..=3 {
        assert_eq!(to_matrix(&pauli_vector(k)), pauli_matrix(k));
    }
}

#[test]
fn interpret_multiplicative_1000_pairs_per_signature() {
    let mut rng = rng();
    for _ in 0..1000 {
        let f = random_cgnum(&mut rng);
        let g = random_cgnum(&mut rng);
        for sig in [Signature::G12, Signature::G30] {
            let lhs = interpret(&(f * g), sig).unwrap();
            let rhs = clifford_product(&interpret(&f, sig).unwrap(), &interpret(&g, sig).unwrap())
                .unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-12 * 64.0), "{sig:?}: {lhs:?} vs {rhs:?}");
        }
    }
    for _ in 0..1000 {
        let f = random_real(&mut rng).to_complex();
        let g = random_real(&mut rng).to_complex();
        let sig = Signature::G20;
        let lhs = interpret(&(f * g), sig).unwrap();
        let rhs =
            clifford_product(&interpret(&f, sig).unwrap(), &interpret(&g, sig).unwrap()).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-12 * 64.0));
    }
}

#[test]
fn interpret_is_a_linear_bijection() {
    let mut rng = rng();
    for _ in 0..300 {
        let g = random_cgnum(&mut rng);
        for sig in [Signature::G12, Signature::G30] {
            let coords = interpret(&g, sig).unwrap();
            assert!(interpret_inverse(&coords).approx_eq(&g, 0.0));
        }
        let r = random_real(&mut rng).to_complex();
        let coords = interpret(&r, Signature::G20).unwrap();
        assert!(interpret_inverse(&coords).approx_eq(&r, 0.0));
    }
    // and the other direction, coordinates -> element -> coordinates
    for sig in [Signature::G20, Signature::G12, Signature::G30] {
        for k in 0..sig.dim() {
            let mut coords = vec![0.0; sig.dim()];
            coords[k] = 1.0;
            let coords = AlgebraCoords::new(sig, coords);
            let back = interpret(&interpret_inverse(&coords), sig).unwrap();
            assert!(back.approx_eq(&coords, 0.0), "{sig:?} blade {k}");
        }
    }
}

#[test]
fn g12_pseudoscalar_and_generator_squares() {
    // f1^2 = f2^2 = -1, e1^2 = +1, e1 f1 f2 = i
    let e1 = CGNum::e();
    let f1 = CGNum::f();
    let f2 = (e1 * f1).scaled(c(0.0, 1.0));
    assert!( (f1 * f1).approx_eq(&CGNum::one().scaled(c(-1.0, 0.0)), 0.0));
    assert!( (f2 * f2).approx_eq(&CGNum::one().scaled(c(-1.0, 0.0)), 0.0));
    assert!( (e1 * e1).approx_eq(&CGNum::one(), 0.0));
    assert!( (e1 * f1 * f2).approx_eq(&CGNum::one().scaled(c(0.0, 1.0)), 0.0));
    // pairwise anticommutation
    for (x, y) in [(e1, f1), (e1, f2), (f1, f2)] {
        assert!((x * y + y * x).approx_eq(&CGNum::zero(), 0.0));
    }
}

#[test]
fn hermitian_adjoint_matches_oracle() {
    let mut rng = rng();
    for _ in 0..500 {
        let g = random_cgnum(&mut rng);
        let adj = hermitian_adjoint(&g);
        assert_eq!(to_matrix(&adj), mat_conj_transpose(&to_matrix(&g)));
        assert_eq!(hermitian_adjoint(&adj), g);
        // anti-automorphism
        let h = random_cgnum(&mut rng);
        let lhs = hermitian_adjoint(&(g * h));
        let rhs = hermitian_adjoint(&h) * hermitian_adjoint(&g);
        assert!(lhs.approx_eq(&rhs, 0.0));
    }
    // hermitian elements are fixed points
    for _ in 0..100 {
        let a0 = rng.random_range(-3.0..3.0);
        let u = [
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
        ];
        let h = hermitian_element(a0, u);
        assert!(hermitian_adjoint(&h).approx_eq(&h, 0.0));
    }
}

/// Closed-form eigenpotent matrices of the Hermitian element.
fn closed_form_ab(u: [f64; 3], rho: f64) -> (Mat2<Complex64>, Mat2<Complex64>) {
    let [u1, u2, u3] = u;
    let w = c(u1, u2);
    let wbar = c(u1, -u2);
    let ap = (rho + u3) / (2.0 * rho);
    let bm = (rho - u3) / (2.0 * rho);
    let a = Mat2::new(
        c(-ap, 0.0),
        -wbar.scale(ap / (rho + u3)),
        w.scale(ap / (rho - u3)),
        c(ap, 0.0),
    );
    let b = Mat2::new(
        c(-bm, 0.0),
        wbar.scale(bm / (rho - u3)),
        -w.scale(bm / (rho + u3)),
        c(bm, 0.0),
    );
    (a, b)
}

#[test]
fn hermitian_spectral_100_random() {
    let mut rng = rng();
    let mut done = 0;
    while done < 100 {
        let a0: f64 = rng.random_range(-3.0..3.0);
        let u: [f64; 3] = [
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
        ];
        let rho = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
        if rho < 0.3 || (rho - u[2].abs()).abs() < 0.05 {
            continue; // keep clear of the axis-aligned fallback
        }
        let s = hermitian_spectral(a0, u, TOL).unwrap();
        let basis = s.basis.unwrap();
        let h = hermitian_element(a0, u);

        assert!((s.lambda1 - c(a0 + rho, 0.0)).norm() < 1e-12);
        assert!((s.lambda2 - c(a0 - rho, 0.0)).norm() < 1e-12);
        let scale = f64::max(1.0, basis.a.max_abs().max(basis.b.max_abs())) * f64::max(1.0, rho);
        assert!((h * basis.b).approx_eq(&basis.b.scaled(s.lambda1), 1e-9 * scale));
        assert!((h * basis.a).approx_eq(&basis.a.scaled(s.lambda2), 1e-9 * scale));
        // BA = (1 + u_hat)/2
        let uhat = hermitian_element(0.0, u).scaled(c(1.0 / rho, 0.0));
        let expect = (CGNum::one() + uhat).scaled(c(0.5, 0.0));
        assert!(basis.ba.approx_eq(&expect, 1e-9 * scale));
        // reconstruction
        let back = basis.ba.scaled(s.lambda1) + basis.ab.scaled(s.lambda2);
        assert!(back.approx_eq(&h, 1e-9 * scale));
        // closed-form matrices
        let (a_m, b_m) = closed_form_ab(u, rho);
        assert!(to_matrix(&basis.a).approx_eq(&a_m, 1e-9 * scale), "{u:?}");
        assert!(to_matrix(&basis.b).approx_eq(&b_m, 1e-9 * scale), "{u:?}");
        done += 1;
    }
}

#[test]
fn hermitian_axis_fallback() {
    let s = hermitian_spectral(0.0, [0.0, 0.0, 2.0], TOL).unwrap();
    let basis = s.basis.unwrap();
    assert!(basis.ba.approx_eq(&(CGNum::gen_b() * CGNum::gen_a()), 0.0));
    let h = hermitian_element(0.0, [0.0, 0.0, 2.0]);
    assert!((h * basis.b).approx_eq(&basis.b.scaled(s.lambda1), 1e-12));
    assert!((h * basis.a).approx_eq(&basis.a.scaled(s.lambda2), 1e-12));
    assert!(basis.holds(1e-12));
}

#[test]
fn g20_relabeling_is_not_an_inner_automorphism() {
    // conjugation by any non-singular element preserves squares, so it maps
    // the null directions of span{e, f} to null directions; the G(2,0)
    // vector plane span{e1, e2} = span{e, ef} has none, so no conjugation
    // realizes the relabeling
    let mut rng = rng();
    let ef = gnum::E * gnum::F;
    for _ in 0..200 {
        let g = loop {
            let g = random_real(&mut rng);
            if g.det().abs() > 0.5 {
                break g;
            }
        };
        let gi = g.inverse(TOL).unwrap();
        // e + f is null and stays null under conjugation
        let n = gnum::E + gnum::F;
        assert_eq!(n * n, gnum::ZERO);
        let m = g * n * gi;
        assert!((m * m).max_abs() <= 1e-9 * f64::max(1.0, m.max_abs().powi(2)));
        assert!(m.max_abs() > 0.0);
        // while a1 e + a2 (ef) squares to a1^2 + a2^2, never zero
        let a1 = rng.random_range(-5..=5) as f64;
        let a2 = rng.random_range(-5..=5) as f64;
        let w = gnum::E.scaled(a1) + ef.scaled(a2);
        assert_eq!(w * w, gnum::ONE.scaled(a1 * a1 + a2 * a2));
    }
}
