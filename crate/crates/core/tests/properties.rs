//! Property tests for the structural invariants of the operator algebra and
//! the parametrization layer.

use hgc_core::diffop::{gauge_conjugate, mobius_substitute, DiffOp};
use hgc_core::params::{ladder_params, params_from_sty, params_to_sty, EquationParams};
use hgc_core::poly::PolyC;
use hgc_core::ratfun::RatFun;
use hgc_core::weight::{weight_form, WeightForm};
use num_complex::Complex64;
use proptest::prelude::*;

fn cplx(range: f64) -> impl Strategy<Value = Complex64> {
    (-range..range, -range..range).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly(deg: usize, range: f64) -> impl Strategy<Value = PolyC> {
    proptest::collection::vec(cplx(range), 1..=deg + 1).prop_map(PolyC::new)
}

fn admissible_params() -> impl Strategy<Value = EquationParams> {
    (poly(2, 2.0), poly(1, 2.0), cplx(2.0)).prop_filter_map("sigma nonzero", |(s, k, w)| {
        EquationParams::new(s, k, w).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sty_round_trip(p in admissible_params()) {
        let (sigma, tau, eta) = params_to_sty(&p);
        let back = params_from_sty(sigma, tau, eta).unwrap();
        prop_assert!(back.kappa.approx_eq(&p.kappa, 1e-12));
        prop_assert!((back.omega - p.omega).norm() <= 1e-12 * (1.0 + p.omega.norm()));
    }

    #[test]
    fn ladder_is_additive(p in admissible_params(), n in cplx(2.0), m in cplx(2.0)) {
        let two_steps = ladder_params(&ladder_params(&p, n.into()), m.into());
        let one_step = ladder_params(&p, (n + m).into());
        prop_assert!(two_steps.kappa.approx_eq(&one_step.kappa, 1e-12));
        prop_assert!((two_steps.omega - one_step.omega).norm() <= 1e-11 * (1.0 + one_step.omega.norm()));
    }

    #[test]
    fn weight_log_derivative_identity(p in admissible_params()) {
        let w = weight_form(&p);
        let ld = w.log_deriv();
        // σ·(log ρ)′ − κ ≡ 0 after clearing denominators
        let lhs = ld.num.mul(&p.sigma);
        let rhs = ld.den.mul(&p.kappa);
        prop_assert!(lhs.residual_against(&rhs) < 1e-11);
    }

    #[test]
    fn gauge_conjugation_round_trips(
        sigma2 in poly(2, 1.5),
        kappa in poly(1, 1.5),
        root in cplx(1.5),
        expo in cplx(1.5),
    ) {
        let op = DiffOp::from_term(2, RatFun::from_poly(sigma2))
            .add(&DiffOp::from_term(1, RatFun::from_poly(kappa)));
        let w = WeightForm::power(root, expo);
        let back = gauge_conjugate(&gauge_conjugate(&op, &w, false), &w, true);
        prop_assert!(back.residual_against(&op) < 1e-9);
    }

    #[test]
    fn mobius_round_trips(
        p in admissible_params(),
        a in cplx(1.5), b in cplx(1.5), c in cplx(1.5), d in cplx(1.5),
    ) {
        prop_assume!((a * d - b * c).norm() > 0.1);
        let op = hgc_core::hgc_operator(&p);
        let there = mobius_substitute(&op, (a, b, c, d)).unwrap();
        // inverse of z = (aw+b)/(cw+d) is w = (dz−b)/(−cz+a)
        let back = mobius_substitute(&there, (d, -b, -c, a)).unwrap();
        prop_assert!(back.residual_against(&op) < 1e-8);
    }

    #[test]
    fn poly_mul_matches_pointwise(x in poly(4, 2.0), y in poly(4, 2.0), z in cplx(1.0)) {
        let prod = x.mul(&y);
        let lhs = prod.eval(z);
        let rhs = x.eval(z) * y.eval(z);
        let scale = x.max_coeff_norm() * y.max_coeff_norm();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * (1.0 + scale));
    }

    #[test]
    fn transmutation_identity(p in admissible_params(), n in cplx(1.5)) {
        // ∂(H(σ,κ_n)+ω_n) = (H(σ,κ_{n+1})+ω_{n+1})∂ as operators
        let p_n = ladder_params(&p, n.into());
        let p_n1 = ladder_params(&p, (n + 1.0).into());
        let lhs = DiffOp::d(1).compose(&hgc_core::hgc_operator(&p_n));
        let rhs = hgc_core::hgc_operator(&p_n1).compose(&DiffOp::d(1));
        prop_assert!(lhs.residual_against(&rhs) < 1e-10);
    }
}
