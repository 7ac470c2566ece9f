//! Closed-form weights ρ(z) solving σρ′ = κρ.
//!
//! The solution is a product of power factors, an exponential of a polynomial,
//! and an exponential of a simple pole, depending on the root structure of σ.
//! The overall coefficient is normalized to 1.

use crate::params::EquationParams;
use crate::poly::PolyC;
use crate::ratfun::RatFun;
use crate::roots::{sigma_root_structure, SigmaRoots};
use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightForm {
    /// Factors (z − root)^exponent.
    pub power_factors: Vec<(Complex64, Complex64)>,
    /// Factor exp(p(z)) with deg p ≤ 2.
    pub exp_poly: PolyC,
    /// Factor exp(residue / (z − root)).
    pub exp_pole: Option<(Complex64, Complex64)>,
    pub scale: Complex64,
}

impl WeightForm {
    pub fn identity() -> Self {
        WeightForm {
            power_factors: vec![],
            exp_poly: PolyC::zero(),
            exp_pole: None,
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// A single power factor (z − root)^e.
    pub fn power(root: Complex64, e: Complex64) -> Self {
        WeightForm {
            power_factors: vec![(root, e)],
            exp_poly: PolyC::zero(),
            exp_pole: None,
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// exp(p(z)).
    pub fn exponential(p: PolyC) -> Self {
        WeightForm {
            power_factors: vec![],
            exp_poly: p,
            exp_pole: None,
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// ρ⁻¹ — negate all exponents.
    pub fn inverse(&self) -> Self {
        WeightForm {
            power_factors: self.power_factors.iter().map(|&(r, e)| (r, -e)).collect(),
            exp_poly: self.exp_poly.neg(),
            exp_pole: self.exp_pole.map(|(r, c)| (r, -c)),
            scale: Complex64::new(1.0, 0.0) / self.scale,
        }
    }

    /// (log ρ)′ as a rational function.
    pub fn log_deriv(&self) -> RatFun {
        let mut acc = RatFun::from_poly(self.exp_poly.derivative());
        for &(root, e) in &self.power_factors {
            let num = PolyC::constant(e);
            let den = PolyC::new(vec![-root, Complex64::new(1.0, 0.0)]);
            acc = acc.add(&RatFun::new(num, den));
        }
        if let Some((root, res)) = self.exp_pole {
            // d/dz res/(z−root) = −res/(z−root)²
            let den = PolyC::new(vec![-root, Complex64::new(1.0, 0.0)]);
            acc = acc.add(&RatFun::new(PolyC::constant(-res), den.mul(&den)));
        }
        acc
    }

    /// Principal-branch evaluation; finite and nonzero away from the roots.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = self.scale;
        for &(root, e) in &self.power_factors {
            acc *= (z - root).powc(e);
        }
        if !self.exp_poly.is_zero() {
            acc *= self.exp_poly.eval(z).exp();
        }
        if let Some((root, res)) = self.exp_pole {
            acc *= (res / (z - root)).exp();
        }
        acc
    }
}

/// The weight of (σ, κ): case analysis on the roots of σ.
pub fn weight_form(params: &EquationParams) -> WeightForm {
    let sigma = &params.sigma;
    let kappa = &params.kappa;
    let one = Complex64::new(1.0, 0.0);
    let (roots, structure) = sigma_root_structure(sigma);
    match structure {
        SigmaRoots::TwoDistinct(i, j) => {
            let (r1, r2) = (roots[i], roots[j]);
            let sp = sigma.derivative();
            let e1 = kappa.eval(r1) / sp.eval(r1);
            let e2 = kappa.eval(r2) / sp.eval(r2);
            WeightForm {
                power_factors: vec![(r1, e1), (r2, e2)],
                exp_poly: PolyC::zero(),
                exp_pole: None,
                scale: one,
            }
        }
        SigmaRoots::Double(i) => {
            let r = roots[i];
            let s = sigma.coeff(2);
            // κ/σ = κ′/s · 1/(z−r) + κ(r)/s · 1/(z−r)²
            WeightForm {
                power_factors: vec![(r, kappa.coeff(1) / s)],
                exp_poly: PolyC::zero(),
                exp_pole: Some((r, -kappa.eval(r) / s)),
                scale: one,
            }
        }
        SigmaRoots::Single(i) => {
            let r = roots[i];
            let s = sigma.coeff(1);
            WeightForm {
                power_factors: vec![(r, kappa.eval(r) / s)],
                exp_poly: PolyC::new(vec![Complex64::new(0.0, 0.0), kappa.coeff(1) / s]),
                exp_pole: None,
                scale: one,
            }
        }
        SigmaRoots::None => {
            let s = sigma.coeff(0);
            // ∫κ/s = (κ(0) z + κ′ z²/2)/s
            WeightForm {
                power_factors: vec![],
                exp_poly: PolyC::new(vec![
                    Complex64::new(0.0, 0.0),
                    kappa.coeff(0) / s,
                    kappa.coeff(1) / (2.0 * s),
                ]),
                exp_pole: None,
                scale: one,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::dict;
    use num_complex::Complex64 as C;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    /// σ·(log ρ)′ − κ must vanish identically after clearing denominators.
    fn log_deriv_residual(p: &EquationParams, w: &WeightForm) -> f64 {
        let ld = w.log_deriv();
        let lhs = ld.num.mul(&p.sigma);
        let rhs = ld.den.mul(&p.kappa);
        lhs.residual_against(&rhs)
    }

    #[test]
    fn gauss_weight() {
        let p = dict::gauss_2f1(c(0.3), c(1.2), c(0.8));
        let w = weight_form(&p);
        // ρ = z^{c−1}(z−1)^{a+b−c}
        assert_eq!(w.power_factors.len(), 2);
        for &(root, e) in &w.power_factors {
            if root.norm() < 1e-12 {
                assert!((e - c(0.8 - 1.0)).norm() < 1e-12);
            } else {
                assert!((root - c(1.0)).norm() < 1e-12);
                assert!((e - c(0.3 + 1.2 - 0.8)).norm() < 1e-12);
            }
        }
        assert!(log_deriv_residual(&p, &w) < 1e-12);
    }

    #[test]
    fn two_f0_weight() {
        let p = dict::two_f0(c(0.7), c(1.1));
        let w = weight_form(&p);
        // ρ = z^{a+b−1} e^{1/z}
        assert_eq!(w.power_factors.len(), 1);
        assert!((w.power_factors[0].1 - c(0.8)).norm() < 1e-12);
        let (root, res) = w.exp_pole.expect("pole factor");
        assert!(root.norm() < 1e-12);
        assert!((res - c(1.0)).norm() < 1e-12);
        assert!(log_deriv_residual(&p, &w) < 1e-12);
    }

    #[test]
    fn hermite_weight() {
        let p = dict::hermite(c(0.25));
        let w = weight_form(&p);
        assert!(w.power_factors.is_empty());
        assert!(w
            .exp_poly
            .approx_eq(&PolyC::from_reals(&[0.0, 0.0, -1.0]), 1e-14));
        assert!(log_deriv_residual(&p, &w) < 1e-12);
    }

    #[test]
    fn log_deriv_identity_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let mut r = || C::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let p = EquationParams::new(
                PolyC::new(vec![r(), r(), r()]),
                PolyC::new(vec![r(), r()]),
                r(),
            );
            let p = match p {
                Ok(p) => p,
                Err(_) => continue,
            };
            let w = weight_form(&p);
            assert!(
                log_deriv_residual(&p, &w) < 1e-11,
                "residual too large for σ={} κ={}",
                p.sigma,
                p.kappa
            );
        }
    }

    #[test]
    fn eval_finite_nonzero() {
        let p = dict::kummer_1f1(c(0.4), c(1.3));
        let w = weight_form(&p);
        let v = w.eval(C::new(0.7, 0.2));
        assert!(v.is_finite() && v.norm() > 0.0);
        let inv = w.inverse().eval(C::new(0.7, 0.2));
        assert!((v * inv - c(1.0)).norm() < 1e-12);
    }
}
