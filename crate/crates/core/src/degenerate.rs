//! The degenerate case: integer Frobenius index gap m, where the two standard
//! solutions at the singular point become proportional, the loop integrals
//! Ψ_m built from power-exponential kernels, and their generating expansions.

use crate::error::{Error, Result};
use crate::gamma::near_integer;
use crate::params::EquationParams;
use crate::poly::PolyC;
use crate::series::olver_f;
use crate::transforms::{named_representation, Named};
use num_complex::Complex64;

/// Parameters (a, b, μ, ν, m) of the degenerate generating-function setup.
/// σ = z − μνz² and the two ladder free terms ω_m, ω̃_m differ by the a/b
/// role swap.
#[derive(Clone, Copy, Debug)]
pub struct DegenerateParams {
    pub a: Complex64,
    pub b: Complex64,
    pub mu: Complex64,
    pub nu: Complex64,
    pub m: i32,
}

impl DegenerateParams {
    pub fn sigma(&self) -> PolyC {
        PolyC::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            -self.mu * self.nu,
        ])
    }

    /// κ_m(z) = m + ((σ″/2)(m−1) − μb − νa)·z with σ″/2 = −μν.
    pub fn kappa_m(&self) -> PolyC {
        let mf = Complex64::new(self.m as f64, 0.0);
        PolyC::new(vec![
            mf,
            -self.mu * self.nu * (mf - 1.0) - self.mu * self.b - self.nu * self.a,
        ])
    }

    /// ω_m = ½(μb + νa) − ab − mμb + (μν/2)(m−1).
    pub fn omega_m(&self) -> Complex64 {
        let mf = Complex64::new(self.m as f64, 0.0);
        (self.mu * self.b + self.nu * self.a) / 2.0 - self.a * self.b - mf * self.mu * self.b
            + self.mu * self.nu / 2.0 * (mf - 1.0)
    }

    /// ω̃_m = ½(μb + νa) − ab − mνa + (μν/2)(m−1).
    pub fn omega_tilde_m(&self) -> Complex64 {
        let mf = Complex64::new(self.m as f64, 0.0);
        (self.mu * self.b + self.nu * self.a) / 2.0 - self.a * self.b - mf * self.nu * self.a
            + self.mu * self.nu / 2.0 * (mf - 1.0)
    }

    pub fn params(&self) -> Result<EquationParams> {
        EquationParams::new(self.sigma(), self.kappa_m(), self.omega_m())
    }

    pub fn params_tilde(&self) -> Result<EquationParams> {
        EquationParams::new(self.sigma(), self.kappa_m(), self.omega_tilde_m())
    }
}

/// Ψ_m(z) via its loop integral.
pub fn psi_loop(p: &DegenerateParams, z: Complex64) -> Result<Complex64> {
    Ok(named_representation(
        Named::PsiLoop {
            a: p.a,
            b: p.b,
            mu: p.mu,
            nu: p.nu,
            m: p.m,
        },
        z,
    )?
    .value)
}

/// Ψ̃_m(z) via its loop integral.
pub fn psi_tilde_loop(p: &DegenerateParams, z: Complex64) -> Result<Complex64> {
    Ok(named_representation(
        Named::PsiTildeLoop {
            a: p.a,
            b: p.b,
            mu: p.mu,
            nu: p.nu,
            m: p.m,
        },
        z,
    )?
    .value)
}

/// The prefactor (−1)^m a(a+μ)···(a+(m−1)μ) relating Ψ_m to 𝐅 for m ≥ 0.
pub fn psi_prefactor(a: Complex64, mu: Complex64, m: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..m {
        acc *= a + mu * j as f64;
    }
    if m % 2 == 1 {
        -acc
    } else {
        acc
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProportionalityReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub max_rel_err: f64,
}

/// In the degenerate case m = κ(0) ∈ ℕ₀ (with σ(0)=0, σ′(0)=1) the power
/// transform produces a proportional solution rather than an independent one:
///   𝐅(σ,κ°,ω°;z) = Π_{j=0}^{m−1}(ω − κ′(j+½) + σ″j(j+1)/2) · (−z)^m · 𝐅(σ,κ,ω;z).
pub fn degenerate_proportionality(
    params: &EquationParams,
    z: Complex64,
) -> Result<ProportionalityReport> {
    let scale = params.sigma.max_coeff_norm();
    if params.sigma.coeff(0).norm() > 1e-12 * scale || (params.sigma.coeff(1) - 1.0).norm() > 1e-12
    {
        return Err(Error::NotApplicable(
            "degenerate case needs sigma(0)=0, sigma'(0)=1".into(),
        ));
    }
    let m = near_integer(params.kappa.coeff(0), 1e-9)
        .filter(|&m| m >= 0)
        .ok_or_else(|| Error::NotApplicable("kappa(0) must be a nonnegative integer".into()))?;
    let kp = params.kappa_p();
    let spp = params.sigma_pp();
    let mf = Complex64::new(m as f64, 0.0);
    let transformed = EquationParams {
        sigma: params.sigma.clone(),
        kappa: PolyC::new(vec![-mf, kp - mf * spp]),
        omega: params.omega - mf * kp + mf * mf * spp / 2.0,
    };
    let lhs = olver_f(&transformed, z)?.value;
    let mut product = Complex64::new(1.0, 0.0);
    for j in 0..m {
        let jf = j as f64;
        product *= params.omega - kp * (jf + 0.5) + spp * jf * (jf + 1.0) / 2.0;
    }
    let rhs = product * (-z).powi(m as i32) * olver_f(params, z)?.value;
    let denom = lhs.norm().max(rhs.norm()).max(1e-300);
    Ok(ProportionalityReport {
        lhs,
        rhs,
        max_rel_err: (lhs - rhs).norm() / denom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::dict;
    use crate::quad::{integrate, ContourSpec};
    use crate::series::{olver_classical, powexp, Classical};
    use num_complex::Complex64 as C;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn proportionality_trivial_m0() {
        let p = dict::kummer_1f1(c(0.7), c(1.0)); // m = c−1 = 0
        let r = degenerate_proportionality(&p, c(0.4)).unwrap();
        assert!(r.max_rel_err < 1e-14, "{r:?}");
    }

    #[test]
    fn proportionality_2f1() {
        // a=0.3, b=1.7, m=2 (c=3), z=0.4
        let p = dict::gauss_2f1(c(0.3), c(1.7), c(3.0));
        let r = degenerate_proportionality(&p, c(0.4)).unwrap();
        assert!(r.max_rel_err < 1e-9, "{r:?}");
    }

    #[test]
    fn two_f1_reflection() {
        // (a−m)_m (b−m)_m 𝐅(a,b;1+m;z) = z^{−m} 𝐅(a−m,b−m;1−m;z)
        use crate::gamma::pochhammer;
        let (a, b, m, z) = (c(0.3), c(1.7), 2i32, c(0.4));
        let mf = m as f64;
        let lhs = pochhammer(a - mf, m as u32)
            * pochhammer(b - mf, m as u32)
            * olver_classical(
                Classical::Gauss2F1 {
                    a,
                    b,
                    c: c(1.0 + mf),
                },
                z,
            )
            .unwrap()
            .value;
        let rhs = z.powi(-m)
            * olver_classical(
                Classical::Gauss2F1 {
                    a: a - mf,
                    b: b - mf,
                    c: c(1.0 - mf),
                },
                z,
            )
            .unwrap()
            .value;
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm(), "{lhs} vs {rhs}");

        // 1F1 analogue: (a−m)_m 𝐅(a;1+m;z) = z^{−m} 𝐅(a−m;1−m;z)
        let lhs = pochhammer(a - mf, m as u32)
            * olver_classical(Classical::Kummer1F1 { a, c: c(1.0 + mf) }, z)
                .unwrap()
                .value;
        let rhs = z.powi(-m)
            * olver_classical(
                Classical::Kummer1F1 {
                    a: a - mf,
                    c: c(1.0 - mf),
                },
                z,
            )
            .unwrap()
            .value;
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm(), "{lhs} vs {rhs}");
    }

    #[test]
    fn zero_f1_reflection() {
        // 𝐅(1+m;z) = z^{−m} 𝐅(1−m;z) at m=1, z=0.25
        let m = 1i32;
        let z = c(0.25);
        let lhs = olver_classical(
            Classical::ZeroF1 {
                c: c(1.0 + m as f64),
            },
            z,
        )
        .unwrap()
        .value;
        let rhs = z.powi(-m)
            * olver_classical(
                Classical::ZeroF1 {
                    c: c(1.0 - m as f64),
                },
                z,
            )
            .unwrap()
            .value;
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm());
    }

    #[test]
    fn parameter_dictionary_reproduces_operator_pair() {
        // the (a,b,μ,ν,m) parametrization must reproduce the two operator
        // families: τ = m+1 + ((σ″/2)(1+m) − μb − νa)z and the free terms
        // η = −mμb − ab, η̃ = −mνa − ab
        let p = DegenerateParams {
            a: c(0.8),
            b: c(0.6),
            mu: c(0.3),
            nu: c(0.2),
            m: 2,
        };
        let mf = c(p.m as f64);
        let spp_half = -p.mu * p.nu;
        let params = p.params().unwrap();
        let tau = params.tau();
        let want_tau = crate::poly::PolyC::new(vec![
            mf + 1.0,
            spp_half * (mf + 1.0) - p.mu * p.b - p.nu * p.a,
        ]);
        assert!(tau.approx_eq(&want_tau, 1e-14), "τ = {tau}");
        let eta = params.eta();
        let want_eta = -mf * p.mu * p.b - p.a * p.b;
        assert!((eta - want_eta).norm() < 1e-14);
        let eta_tilde = p.params_tilde().unwrap().eta();
        let want_eta_tilde = -mf * p.nu * p.a - p.a * p.b;
        assert!((eta_tilde - want_eta_tilde).norm() < 1e-14);
        // the power transform swaps the two families: κ_m° = κ_{−m},
        // ω_m° = ω̃_{−m}
        let rep = crate::symmetry::verify_symmetry(crate::symmetry::SymmetryKind::Power, &params)
            .unwrap();
        let p_neg = DegenerateParams { m: -p.m, ..p };
        assert!(rep.transformed.kappa.approx_eq(&p_neg.kappa_m(), 1e-13));
        assert!((rep.transformed.omega - p_neg.omega_tilde_m()).norm() < 1e-13);
    }

    #[test]
    fn psi_prefactor_values() {
        // Ψ_m(0) = (−1)^m a(a+μ)⋯(a+μ(m−1))/m!
        let p = DegenerateParams {
            a: c(0.8),
            b: c(0.6),
            mu: c(0.3),
            nu: c(0.2),
            m: 2,
        };
        let got = psi_loop(&p, c(0.0)).unwrap();
        let want = psi_prefactor(p.a, p.mu, 2) / 2.0;
        assert!(
            (got - want).norm() < 1e-10 * want.norm().max(1.0),
            "{got} vs {want}"
        );
    }

    #[test]
    fn psi_matches_unified() {
        // Ψ_m(z) = (−1)^m a(a+μ)⋯(a+μ(m−1)) 𝐅(σ,κ_m,ω_m;z), m ≥ 0
        for m in 0..=2i32 {
            let p = DegenerateParams {
                a: c(0.8),
                b: c(0.6),
                mu: c(0.3),
                nu: c(0.2),
                m,
            };
            let z = c(0.3);
            let lhs = psi_loop(&p, z).unwrap();
            let rhs = psi_prefactor(p.a, p.mu, m as u32)
                * olver_f(&p.params().unwrap(), z).unwrap().value;
            assert!(
                (lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0),
                "m={m}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn psi_tilde_reflection() {
        // Ψ_m(z) = z^{−m} Ψ̃_{−m}(z)
        for m in -2..=2i32 {
            let p = DegenerateParams {
                a: c(0.8),
                b: c(0.6),
                mu: c(0.3),
                nu: c(0.2),
                m,
            };
            let p_neg = DegenerateParams { m: -m, ..p };
            let z = c(0.35);
            let lhs = psi_loop(&p, z).unwrap();
            let rhs = z.powi(-m) * psi_tilde_loop(&p_neg, z).unwrap();
            assert!(
                (lhs - rhs).norm() < 1e-9 * lhs.norm().max(1.0),
                "m={m}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn laurent_generating_expansion() {
        // the Laurent coefficients of the kernel on a circle reproduce Ψ_m
        let p = DegenerateParams {
            a: c(0.8),
            b: c(0.6),
            mu: c(0.3),
            nu: c(0.2),
            m: 0,
        };
        let z = c(0.3);
        // sum Σ u^m Ψ_m(z) at a point on the annulus; the kernel pole at
        // u = −1/μ slows the positive-m tail, so go out to |m| = 20
        let u = C::new(0.5, 0.4);
        let mut sum = C::new(0.0, 0.0);
        for m in -20..=20i32 {
            let pm = DegenerateParams { m, ..p };
            sum += u.powi(m) * psi_loop(&pm, z).unwrap();
        }
        let kernel = powexp(-p.a, p.mu, u).unwrap() * powexp(-p.b, p.nu, z / u).unwrap();
        assert!(
            (sum - kernel).norm() < 1e-9 * kernel.norm(),
            "{sum} vs {kernel}"
        );
        // and the raw Laurent coefficient integral agrees with psi_loop
        let radius = 0.7;
        for m in [-2i32, 1] {
            let coeff = integrate(
                |uu| {
                    powexp(-p.a, p.mu, uu).unwrap()
                        * powexp(-p.b, p.nu, z / uu).unwrap()
                        * uu.powi(-m - 1)
                },
                &ContourSpec::circle(c(0.0), radius),
            )
            .unwrap()
            .value
                / C::new(0.0, 2.0 * std::f64::consts::PI);
            let pm = DegenerateParams { m, ..p };
            let want = psi_loop(&pm, z).unwrap();
            assert!((coeff - want).norm() < 1e-9 * want.norm().max(1.0));
        }
    }
}
