use dirichlet_hp::{Character, Complex64, DirichletPolynomial, Torus};
use proptest::prelude::*;

proptest! {
    #[test]
    fn characters_are_completely_multiplicative(seed in any::<u64>(), m in 1u64..400, n in 1u64..400) {
        let torus = Torus::new(160_000).unwrap();
        let j = torus.required_length(m * n).max(1);
        let chi = Character::sample_haar(j, seed).unwrap();
        let lhs = torus.char_eval(&chi, m * n).unwrap();
        let rhs = torus.char_eval(&chi, m).unwrap() * torus.char_eval(&chi, n).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12);
        prop_assert!((lhs.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn flow_matches_vertical_translation(
        seed in any::<u64>(),
        tau in -500.0..500.0f64,
        t in -20.0..20.0f64,
        coeffs in prop::collection::vec(-1.0..1.0f64, 1..40),
    ) {
        // f_{χ p^{-iτ}}(s) = f_χ(s + iτ)
        let f = DirichletPolynomial::from_real(&coeffs).unwrap();
        let torus = Torus::new(40).unwrap();
        let chi = torus.sample_for(40, seed).unwrap();
        let twisted = torus.kronecker_twist(&chi, tau).unwrap();
        let s = Complex64::new(0.3, t);
        let lhs = torus.vertical_limit(&f, &twisted).unwrap().eval(s);
        let rhs = torus.vertical_limit(&f, &chi).unwrap().eval(s + Complex64::new(0.0, tau));
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + f.abs_sum()));
    }

    #[test]
    fn twists_compose(seed in any::<u64>(), a in -100.0..100.0f64, b in -100.0..100.0f64) {
        let torus = Torus::new(100).unwrap();
        let chi = torus.sample_for(100, seed).unwrap();
        let two = torus.kronecker_twist(&torus.kronecker_twist(&chi, a).unwrap(), b).unwrap();
        let one = torus.kronecker_twist(&chi, a + b).unwrap();
        for n in [2u64, 6, 30, 97] {
            let d = torus.char_eval(&two, n).unwrap() - torus.char_eval(&one, n).unwrap();
            prop_assert!(d.norm() < 1e-11);
        }
    }
}

#[test]
fn haar_moments_vanish() {
    let m = 4000;
    let j = 6;
    let mut first = vec![Complex64::new(0.0, 0.0); j];
    let mut second = vec![Complex64::new(0.0, 0.0); j];
    for seed in 0..m {
        let chi = Character::sample_haar(j, seed).unwrap();
        for k in 0..j {
            let z = chi.value_at_prime(k).unwrap();
            first[k] += z;
            second[k] += z * z;
        }
    }
    let tol = 5.0 / (m as f64).sqrt();
    for k in 0..j {
        assert!(first[k].norm() / m as f64 <= tol);
        assert!(second[k].norm() / m as f64 <= tol);
    }
}

#[test]
fn short_character_is_rejected() {
    let torus = Torus::new(30).unwrap();
    let chi = Character::sample_haar(2, 1).unwrap();
    assert!(torus.char_eval(&chi, 5).is_err());
    let f = DirichletPolynomial::zeta_truncation(30).unwrap();
    assert!(torus.boundary_eval(&f, &chi).is_err());
}
