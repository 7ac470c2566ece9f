//! The (σ, κ, ω) parametrization of hypergeometric class operators and the
//! ladder of parameter sets it generates.
//!
//! An operator σ∂² + τ∂ + η with deg σ ≤ 2, deg τ ≤ 1, η constant is rewritten
//! as H(σ,κ) + ω where τ = κ + σ′ and η = κ′/2 + ω. The (σ,κ,ω) form makes the
//! symmetries and the ladder structure uniform across all five classical types.

use crate::error::{Error, Result};
use crate::poly::PolyC;
use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct EquationParams {
    pub sigma: PolyC,
    pub kappa: PolyC,
    pub omega: Complex64,
}

/// Ladder index n; integer in most uses, half-integer on the Chebyshev ladder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LadderIndex(pub Complex64);

impl From<f64> for LadderIndex {
    fn from(n: f64) -> Self {
        LadderIndex(Complex64::new(n, 0.0))
    }
}

impl From<Complex64> for LadderIndex {
    fn from(n: Complex64) -> Self {
        LadderIndex(n)
    }
}

impl EquationParams {
    pub fn new(sigma: PolyC, kappa: PolyC, omega: Complex64) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::InvalidDegree("sigma must be nonzero".into()));
        }
        if sigma.degree() > 2 {
            return Err(Error::InvalidDegree(format!(
                "deg sigma = {} > 2",
                sigma.degree()
            )));
        }
        if !kappa.is_zero() && kappa.degree() > 1 {
            return Err(Error::InvalidDegree(format!(
                "deg kappa = {} > 1",
                kappa.degree()
            )));
        }
        Ok(EquationParams {
            sigma,
            kappa,
            omega,
        })
    }

    /// σ″ (a constant; zero unless deg σ = 2).
    pub fn sigma_pp(&self) -> Complex64 {
        self.sigma.coeff(2) * 2.0
    }

    /// κ′ (a constant).
    pub fn kappa_p(&self) -> Complex64 {
        self.kappa.coeff(1)
    }

    /// α = σ″/2, β = κ′ — the Lie-algebra structure constants.
    pub fn alpha_beta(&self) -> (Complex64, Complex64) {
        (self.sigma.coeff(2), self.kappa.coeff(1))
    }

    /// τ = κ + σ′.
    pub fn tau(&self) -> PolyC {
        self.kappa.add(&self.sigma.derivative())
    }

    /// η = κ′/2 + ω.
    pub fn eta(&self) -> Complex64 {
        self.kappa_p() / 2.0 + self.omega
    }

    /// m = κ(0)/σ′(0); the Frobenius index gap at the singular point 0.
    pub fn olver_m(&self) -> Complex64 {
        self.kappa.coeff(0) / self.sigma.coeff(1)
    }

    /// Divides the operator by σ′(0) so that σ′(0) = 1 (same kernel).
    pub fn normalized_at_zero(&self) -> Result<Self> {
        let s1 = self.sigma.coeff(1);
        if self.sigma.coeff(0).norm() > 1e-12 * self.sigma.max_coeff_norm() {
            return Err(Error::NotApplicable("sigma(0) != 0".into()));
        }
        if s1.norm() == 0.0 {
            return Err(Error::NotApplicable("sigma'(0) = 0".into()));
        }
        let inv = Complex64::new(1.0, 0.0) / s1;
        EquationParams::new(
            self.sigma.scale(inv),
            self.kappa.scale(inv),
            self.omega * inv,
        )
    }
}

/// Builds (σ, κ, ω) from the traditional (σ, τ, η): κ = τ − σ′, ω = η − κ′/2.
pub fn params_from_sty(sigma: PolyC, tau: PolyC, eta: Complex64) -> Result<EquationParams> {
    if !tau.is_zero() && tau.degree() > 1 {
        return Err(Error::InvalidDegree(format!(
            "deg tau = {} > 1",
            tau.degree()
        )));
    }
    let kappa = tau.sub(&sigma.derivative());
    let omega = eta - kappa.coeff(1) / 2.0;
    EquationParams::new(sigma, kappa, omega)
}

/// Inverse of `params_from_sty`.
pub fn params_to_sty(p: &EquationParams) -> (PolyC, PolyC, Complex64) {
    (p.sigma.clone(), p.tau(), p.eta())
}

/// Ladder step: κ_n = nσ′ + κ₀, ω_n = n²σ″/2 + nκ₀′ + ω₀.
pub fn ladder_params(base: &EquationParams, n: LadderIndex) -> EquationParams {
    let n = n.0;
    let kappa_n = base.sigma.derivative().scale(n).add(&base.kappa);
    let omega_n = n * n * base.sigma_pp() / 2.0 + n * base.kappa_p() + base.omega;
    EquationParams {
        sigma: base.sigma.clone(),
        kappa: kappa_n,
        omega: omega_n,
    }
}

/// Standard parameter dictionaries of the five classical types.
pub mod dict {
    use super::*;

    /// σ = z(1−z), κ = c−1−(a+b−1)z, ω = −(a−½)(b−½)−¼.
    pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64) -> EquationParams {
        let half = Complex64::new(0.5, 0.0);
        EquationParams {
            sigma: PolyC::from_reals(&[0.0, 1.0, -1.0]),
            kappa: PolyC::new(vec![c - 1.0, -(a + b - 1.0)]),
            omega: -(a - half) * (b - half) - 0.25,
        }
    }

    /// σ = z, κ = c−1−z, ω = −a+½.
    pub fn kummer_1f1(a: Complex64, c: Complex64) -> EquationParams {
        EquationParams {
            sigma: PolyC::from_reals(&[0.0, 1.0]),
            kappa: PolyC::new(vec![c - 1.0, Complex64::new(-1.0, 0.0)]),
            omega: -a + 0.5,
        }
    }

    /// σ = z², κ = −1+(a+b−1)z, ω = (a−½)(b−½)+¼.
    pub fn two_f0(a: Complex64, b: Complex64) -> EquationParams {
        let half = Complex64::new(0.5, 0.0);
        EquationParams {
            sigma: PolyC::from_reals(&[0.0, 0.0, 1.0]),
            kappa: PolyC::new(vec![Complex64::new(-1.0, 0.0), a + b - 1.0]),
            omega: (a - half) * (b - half) + 0.25,
        }
    }

    /// σ = z, κ = c−1, ω = −1.
    pub fn zero_f1(c: Complex64) -> EquationParams {
        EquationParams {
            sigma: PolyC::from_reals(&[0.0, 1.0]),
            kappa: PolyC::new(vec![c - 1.0]),
            omega: Complex64::new(-1.0, 0.0),
        }
    }

    /// σ = 1, κ = −2z, ω = −2a+1.
    pub fn hermite(a: Complex64) -> EquationParams {
        EquationParams {
            sigma: PolyC::one(),
            kappa: PolyC::from_reals(&[0.0, -2.0]),
            omega: -2.0 * a + 1.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;
    use rand::{Rng, SeedableRng};

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn from_sty_2f1_example() {
        // σ = z(1−z), τ = c−(a+b+1)z, η = −ab with (a,b,c) = (0.3, 1.7, 0.9)
        let (a, b, cc) = (c(0.3), c(1.7), c(0.9));
        let sigma = PolyC::from_reals(&[0.0, 1.0, -1.0]);
        let tau = PolyC::new(vec![cc, -(a + b + 1.0)]);
        let p = params_from_sty(sigma, tau, -a * b).unwrap();
        let expect = dict::gauss_2f1(a, b, cc);
        assert!(p.kappa.approx_eq(&expect.kappa, 1e-14));
        assert!((p.omega - expect.omega).norm() < 1e-14);
    }

    #[test]
    fn from_sty_identity_and_hermite() {
        let p = params_from_sty(PolyC::one(), PolyC::zero(), c(0.0)).unwrap();
        assert!(p.kappa.is_zero());
        assert_eq!(p.omega, c(0.0));

        // σ=1, τ=−2z, η=−2a → κ=−2z, ω=−2a+1
        let a = c(0.8);
        let p = params_from_sty(PolyC::one(), PolyC::from_reals(&[0.0, -2.0]), -2.0 * a).unwrap();
        assert!(p.kappa.approx_eq(&PolyC::from_reals(&[0.0, -2.0]), 1e-14));
        assert!((p.omega - (-2.0 * a + 1.0)).norm() < 1e-14);
    }

    #[test]
    fn sty_round_trip_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let mut r = || C::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let sigma = PolyC::new(vec![r(), r(), r()]);
            if sigma.is_zero() {
                continue;
            }
            let tau = PolyC::new(vec![r(), r()]);
            let eta = r();
            let p = params_from_sty(sigma.clone(), tau.clone(), eta).unwrap();
            let (s2, t2, e2) = params_to_sty(&p);
            assert!(s2.approx_eq(&sigma, 1e-14));
            assert!(t2.approx_eq(&tau, 1e-13));
            assert!((e2 - eta).norm() <= 1e-13 * (1.0 + eta.norm()));
        }
    }

    #[test]
    fn ladder_hermite_and_identity() {
        let base = dict::hermite(c(0.4));
        let shifted = ladder_params(&base, 3.0.into());
        // σ″=0, κ₀′=−2 → ω_n = ω₀ − 2n, κ_n = κ₀
        assert!(shifted.kappa.approx_eq(&base.kappa, 1e-14));
        assert!((shifted.omega - (base.omega - 6.0)).norm() < 1e-14);

        let same = ladder_params(&base, 0.0.into());
        assert_eq!(same, base);
    }

    #[test]
    fn ladder_chebyshev_half_integer() {
        // κ₀=0, ω₀=ω+σ″/8, m ∈ ℤ+½ → κ_m = mσ′, ω_m = ω+(m²+¼)σ″/2
        let sigma = PolyC::from_reals(&[4.0, 0.0, -1.0]);
        let omega = c(2.3);
        let spp = sigma.coeff(2) * 2.0;
        let base = EquationParams::new(sigma.clone(), PolyC::zero(), omega + spp / 8.0).unwrap();
        let m = C::new(2.5, 0.0);
        let stepped = ladder_params(&base, m.into());
        assert!(stepped.kappa.approx_eq(&sigma.derivative().scale(m), 1e-14));
        let want = omega + (m * m + 0.25) * spp / 2.0;
        assert!((stepped.omega - want).norm() < 1e-14);
    }

    #[test]
    fn ladder_additivity_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let mut r = || C::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let base = EquationParams::new(
                PolyC::new(vec![r(), r(), r()]),
                PolyC::new(vec![r(), r()]),
                r(),
            );
            let base = match base {
                Ok(b) => b,
                Err(_) => continue,
            };
            let (n, m) = (r(), r());
            let a = ladder_params(&ladder_params(&base, n.into()), m.into());
            let b = ladder_params(&base, (n + m).into());
            assert!(a.kappa.approx_eq(&b.kappa, 1e-12));
            assert!((a.omega - b.omega).norm() <= 1e-12 * (1.0 + b.omega.norm()));
        }
    }

    #[test]
    fn degree_violations_rejected() {
        let bad = params_from_sty(
            PolyC::from_reals(&[0.0, 0.0, 0.0, 1.0]),
            PolyC::zero(),
            c(0.0),
        );
        assert!(matches!(bad, Err(Error::InvalidDegree(_))));
        let bad = params_from_sty(PolyC::one(), PolyC::from_reals(&[0.0, 0.0, 1.0]), c(0.0));
        assert!(matches!(bad, Err(Error::InvalidDegree(_))));
    }
}
