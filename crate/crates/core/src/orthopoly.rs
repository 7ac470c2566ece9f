//! Hypergeometric class polynomials: the Rodrigues construction
//! P_n(σ,κ;z) = (1/n!)ρ⁻¹∂ⁿ(σⁿρ), the classical families built on it,
//! their recurrences and generating functions, and orthogonality through
//! exact moments of the weights.
//!
//! The Rodrigues value is computed by the polynomial recursion
//! p₀ = 1, p_{k+1} = ((n−k)σ′ + κ)p_k + σp_k′, P_n = p_n/n!,
//! which unfolds ρ⁻¹∂ᵏ(σⁿρ) = σ^{n−k}p_k exactly, with no quadrature.

use crate::dd::{rodrigues_dd, Dd, PolyDd};
use crate::diffop::hgc_operator;
use crate::error::{Error, Result};
use crate::gamma::{factorial, gamma};
use crate::params::EquationParams;
use crate::poly::PolyC;
use crate::quad::{integrate, ContourSpec};
use crate::weight::{weight_form, WeightForm};
use num_complex::Complex64;
use std::cell::RefCell;
use std::f64::consts::PI;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Rodrigues polynomial P_n(σ,κ;z).
pub fn rodrigues(sigma: &PolyC, kappa: &PolyC, n: u32) -> PolyC {
    let sp = sigma.derivative();
    let mut p = PolyC::one();
    for k in 0..n {
        let factor = sp.scale(Complex64::new((n - k) as f64, 0.0)).add(kappa);
        p = factor.mul(&p).add(&sigma.mul(&p.derivative()));
    }
    p.scale(Complex64::new(1.0 / factorial(n), 0.0))
}

/// Cross-check of the Rodrigues value by the loop integral
/// (ρ⁻¹(z)/2πi) ∮ σⁿ(z+t) ρ(z+t) t^{−n−1} dt around t = 0.
pub fn rodrigues_contour(sigma: &PolyC, kappa: &PolyC, n: u32, z: Complex64) -> Result<Complex64> {
    let params = EquationParams::new(sigma.clone(), kappa.clone(), Complex64::new(0.0, 0.0))?;
    let rho = weight_form(&params);
    // keep the loop clear of the weight's singularities (the roots of σ)
    let clearance = crate::roots::all_roots(sigma)
        .iter()
        .map(|r| (r - z).norm())
        .fold(f64::INFINITY, f64::min);
    let radius = if clearance.is_finite() {
        0.5 * clearance
    } else {
        1.0
    };
    if radius.is_nan() || radius <= 0.0 {
        return Err(Error::DomainError("z sits on a root of sigma".into()));
    }
    // evaluate the ratio ρ(z+t)/ρ(z) in factored form so each power factor
    // reads (1 + t/(z−r))^e with |t/(z−r)| ≤ 1/2: principal branches stay
    // continuous around the whole loop
    let ratio = |t: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &(root, e) in &rho.power_factors {
            acc *= (Complex64::new(1.0, 0.0) + t / (z - root)).powc(e);
        }
        if !rho.exp_poly.is_zero() {
            acc *= (rho.exp_poly.eval(z + t) - rho.exp_poly.eval(z)).exp();
        }
        if let Some((root, res)) = rho.exp_pole {
            acc *= (res / (z + t - root) - res / (z - root)).exp();
        }
        acc
    };
    let r = integrate(
        |t| {
            let s = z + t;
            sigma.eval(s).powi(n as i32) * ratio(t) * t.powi(-(n as i32) - 1)
        },
        &ContourSpec::circle(Complex64::new(0.0, 0.0), radius),
    )?;
    Ok(r.value / Complex64::new(0.0, 2.0 * PI))
}

/// The classical families with their (σ, κ) data and Rodrigues prefactors.
/// κ is derived from the family weight through σρ′ = κρ, which is what the
/// Rodrigues construction and the orthogonality identities require.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    /// weight (1−x)^α(1+x)^β on [−1,1]
    Jacobi { alpha: Complex64, beta: Complex64 },
    /// weight e^{−x}x^α on [0,∞)
    Laguerre { alpha: Complex64 },
    /// weight e^{−1/z}z^θ; no orthogonality interval
    BesselPoly { theta: Complex64 },
    /// weight e^{−x²} on ℝ
    HermitePoly,
}

#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub family: Family,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family }
    }

    pub fn sigma(&self) -> PolyC {
        match self.family {
            Family::Jacobi { .. } => PolyC::from_reals(&[1.0, 0.0, -1.0]),
            Family::Laguerre { .. } => PolyC::from_reals(&[0.0, 1.0]),
            Family::BesselPoly { .. } => PolyC::from_reals(&[0.0, 0.0, 1.0]),
            Family::HermitePoly => PolyC::one(),
        }
    }

    /// κ = σ·(log ρ)′ for the family weight.
    pub fn kappa(&self) -> PolyC {
        match self.family {
            Family::Jacobi { alpha, beta } => PolyC::new(vec![beta - alpha, -(alpha + beta)]),
            Family::Laguerre { alpha } => PolyC::new(vec![alpha, Complex64::new(-1.0, 0.0)]),
            Family::BesselPoly { theta } => PolyC::new(vec![one(), theta]),
            Family::HermitePoly => PolyC::from_reals(&[0.0, -2.0]),
        }
    }

    pub fn weight(&self) -> WeightForm {
        match self.family {
            Family::Jacobi { alpha, beta } => WeightForm {
                power_factors: vec![
                    (Complex64::new(1.0, 0.0), alpha),
                    (Complex64::new(-1.0, 0.0), beta),
                ],
                exp_poly: PolyC::zero(),
                exp_pole: None,
                // (1−x)^α = (−1)^α (x−1)^α; fix the scale so the weight is the
                // classical positive one on (−1,1)
                scale: Complex64::new(0.0, PI).exp().powc(-alpha),
            },
            Family::Laguerre { alpha } => WeightForm {
                power_factors: vec![(Complex64::new(0.0, 0.0), alpha)],
                exp_poly: PolyC::from_reals(&[0.0, -1.0]),
                exp_pole: None,
                scale: one(),
            },
            Family::BesselPoly { theta } => WeightForm {
                power_factors: vec![(Complex64::new(0.0, 0.0), theta)],
                exp_poly: PolyC::zero(),
                exp_pole: Some((Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0))),
                scale: one(),
            },
            Family::HermitePoly => WeightForm::exponential(PolyC::from_reals(&[0.0, 0.0, -1.0])),
        }
    }

    /// Rodrigues prefactor of the classical normalization.
    pub fn prefactor(&self, n: u32) -> Complex64 {
        match self.family {
            Family::Jacobi { .. } => Complex64::new((-0.5f64).powi(n as i32), 0.0),
            Family::Laguerre { .. } | Family::BesselPoly { .. } => one(),
            Family::HermitePoly => Complex64::new((-1.0f64).powi(n as i32), 0.0),
        }
    }
}

/// The classical polynomial of degree ≤ n (Jacobi P_n^{α,β}, Laguerre L_n^α,
/// Bessel B_n^θ, Hermite H_n in the 1/n!-normalized convention).
pub fn classical_poly(spec: &FamilySpec, n: u32) -> PolyC {
    // trim so the degree-degeneracy rules read off exactly
    rodrigues(&spec.sigma(), &spec.kappa(), n)
        .scale(spec.prefactor(n))
        .trimmed(1e-12)
}

/// Applies H(σ,κ) − n(n+1)σ″/2 − (n+½)κ′ to P_n exactly and returns the max
/// coefficient of the result relative to the polynomial's own scale; also
/// enforces the degree/eigenvalue relation n(n−1)σ″/2 + nτ′ + η = 0 for the
/// induced (τ, η).
pub fn eigen_residual(sigma: &PolyC, kappa: &PolyC, n: u32) -> f64 {
    let p = rodrigues(sigma, kappa, n);
    if p.is_zero() {
        return 0.0;
    }
    let nf = n as f64;
    let spp = sigma.coeff(2) * 2.0;
    let kp = kappa.coeff(1);
    let omega = -nf * (nf + 1.0) * spp / 2.0 - (nf + 0.5) * kp;
    let params = EquationParams {
        sigma: sigma.clone(),
        kappa: kappa.clone(),
        omega,
    };
    let image = hgc_operator(&params).apply_poly(&p);
    let mut res = image.max_coeff_norm() / p.max_coeff_norm();
    // eigenvalue relation for (τ, η): τ = κ+σ′, η = κ′/2 + ω
    let tau_p = kp + spp;
    let eta = kp / 2.0 + omega;
    let relation = nf * (nf - 1.0) * spp / 2.0 + nf * tau_p + eta;
    let scale = spp.norm().max(kp.norm()).max(1.0) * (nf * nf + 1.0);
    res = res.max(relation.norm() / scale);
    res
}

#[derive(Clone, Debug)]
pub struct RecurrenceReport {
    /// (identity name, residual) pairs; all identities are exact polynomial
    /// identities so residuals sit at rounding level.
    pub residuals: Vec<(String, f64)>,
}

impl RecurrenceReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

fn poly_identity_residual(lhs: &PolyC, rhs: &PolyC) -> f64 {
    lhs.residual_against(rhs)
}

/// The ladder recurrences of the Rodrigues polynomials (raising/lowering) and
/// the family-specific forms they specialize to.
pub fn polynomial_recurrences(spec: &FamilySpec, n: u32) -> RecurrenceReport {
    let sigma = spec.sigma();
    let kappa = spec.kappa();
    let sp = sigma.derivative();
    let mut residuals = Vec::new();

    // generic: (σ∂ + κ_{−n}) P_n(σ,κ_{−n}) = (n+1) P_{n+1}(σ,κ_{−n−1}),
    // with κ_{−n} = κ − nσ′
    let kappa_mn = kappa.sub(&sp.scale(Complex64::new(n as f64, 0.0)));
    let kappa_mn1 = kappa.sub(&sp.scale(Complex64::new((n + 1) as f64, 0.0)));
    let p_n = rodrigues(&sigma, &kappa_mn, n);
    let p_n1 = rodrigues(&sigma, &kappa_mn1, n + 1);
    let lhs = sigma.mul(&p_n.derivative()).add(&kappa_mn.mul(&p_n));
    let rhs = p_n1.scale(Complex64::new((n + 1) as f64, 0.0));
    residuals.push(("raising".to_string(), poly_identity_residual(&lhs, &rhs)));

    // generic lowering: ∂P_{n+1}(σ,κ_{−n−1}) = (nσ″/2 + κ_{−n}′) P_n(σ,κ_{−n})
    let factor = sigma.coeff(2) * (n as f64) + kappa_mn.coeff(1);
    let lhs = p_n1.derivative();
    let rhs = p_n.scale(factor);
    residuals.push(("lowering".to_string(), poly_identity_residual(&lhs, &rhs)));

    // family-specific pairs
    match spec.family {
        Family::Jacobi { alpha, beta } => {
            if n >= 1 {
                // ∂P_n^{α,β} = ((α+β+n+1)/2) P_{n−1}^{α+1,β+1}
                let pn = classical_poly(spec, n);
                let up = FamilySpec::new(Family::Jacobi {
                    alpha: alpha + 1.0,
                    beta: beta + 1.0,
                });
                let rhs = classical_poly(&up, n - 1).scale((alpha + beta + (n as f64) + 1.0) / 2.0);
                residuals.push((
                    "jacobi lowering".to_string(),
                    poly_identity_residual(&pn.derivative(), &rhs),
                ));
            }
            // −((1−x²)∂ + (β−α) − (α+β)x)/2 · P_n^{α,β} = (n+1)P_{n+1}^{α−1,β−1}
            let pn = classical_poly(spec, n);
            let lhs = sigma
                .mul(&pn.derivative())
                .add(&kappa.mul(&pn))
                .scale(Complex64::new(-0.5, 0.0));
            let down = FamilySpec::new(Family::Jacobi {
                alpha: alpha - 1.0,
                beta: beta - 1.0,
            });
            let rhs = classical_poly(&down, n + 1).scale(Complex64::new((n + 1) as f64, 0.0));
            residuals.push((
                "jacobi raising".to_string(),
                poly_identity_residual(&lhs, &rhs),
            ));
        }
        Family::Laguerre { alpha } => {
            if n >= 1 {
                // ∂L_n^α = −L_{n−1}^{α+1}
                let pn = classical_poly(spec, n);
                let up = FamilySpec::new(Family::Laguerre { alpha: alpha + 1.0 });
                let rhs = classical_poly(&up, n - 1).neg();
                residuals.push((
                    "laguerre lowering".to_string(),
                    poly_identity_residual(&pn.derivative(), &rhs),
                ));
            }
            // (x∂ + α − x) L_n^α = (n+1) L_{n+1}^{α−1}
            let pn = classical_poly(spec, n);
            let lhs = sigma.mul(&pn.derivative()).add(&kappa.mul(&pn));
            let down = FamilySpec::new(Family::Laguerre { alpha: alpha - 1.0 });
            let rhs = classical_poly(&down, n + 1).scale(Complex64::new((n + 1) as f64, 0.0));
            residuals.push((
                "laguerre raising".to_string(),
                poly_identity_residual(&lhs, &rhs),
            ));
        }
        Family::BesselPoly { theta } => {
            if n >= 1 {
                // ∂B_n^θ = (n+θ+1) B_{n−1}^{θ+2} in the convention induced by
                // the Rodrigues weight e^{−1/z}z^θ
                let pn = classical_poly(spec, n);
                let up = FamilySpec::new(Family::BesselPoly { theta: theta + 2.0 });
                let rhs = classical_poly(&up, n - 1).scale(theta + (n as f64) + 1.0);
                residuals.push((
                    "bessel lowering".to_string(),
                    poly_identity_residual(&pn.derivative(), &rhs),
                ));
            }
            // (z²∂ + 1 + θz) B_n^θ = (n+1) B_{n+1}^{θ−2}
            let pn = classical_poly(spec, n);
            let lhs = sigma.mul(&pn.derivative()).add(&kappa.mul(&pn));
            let down = FamilySpec::new(Family::BesselPoly { theta: theta - 2.0 });
            let rhs = classical_poly(&down, n + 1).scale(Complex64::new((n + 1) as f64, 0.0));
            residuals.push((
                "bessel raising".to_string(),
                poly_identity_residual(&lhs, &rhs),
            ));
        }
        Family::HermitePoly => {
            if n >= 1 {
                // ∂H_n = 2H_{n−1}
                let pn = classical_poly(spec, n);
                let rhs = classical_poly(spec, n - 1).scale(Complex64::new(2.0, 0.0));
                residuals.push((
                    "hermite lowering".to_string(),
                    poly_identity_residual(&pn.derivative(), &rhs),
                ));
            }
            // (−∂ + 2x) H_n = (n+1) H_{n+1}
            let pn = classical_poly(spec, n);
            let lhs = PolyC::from_reals(&[0.0, 2.0])
                .mul(&pn)
                .sub(&pn.derivative());
            let rhs = classical_poly(spec, n + 1).scale(Complex64::new((n + 1) as f64, 0.0));
            residuals.push((
                "hermite raising".to_string(),
                poly_identity_residual(&lhs, &rhs),
            ));
        }
    }
    RecurrenceReport { residuals }
}

// ---------------------------------------------------------------------------
// truncated power series in t with polynomial coefficients in x
// ---------------------------------------------------------------------------

/// Coefficients [u₀(x), u₁(x), …] of a series Σ u_k(x) t^k, truncated.
#[derive(Clone, Debug)]
pub struct TSeries {
    pub coeffs: Vec<PolyC>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            coeffs: vec![PolyC::zero(); order + 1],
        }
    }

    pub fn constant(p: PolyC, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let order = self.order();
        let mut out = TSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(s)).collect(),
        }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> TSeries {
        assert!(self.coeffs[0].is_zero(), "exp needs zero constant term");
        let order = self.order();
        let mut out = TSeries::constant(PolyC::one(), order);
        let mut power = TSeries::constant(PolyC::one(), order);
        for k in 1..=order {
            power = power.mul(self);
            out = out.add(&power.scale(Complex64::new(1.0 / factorial(k as u32), 0.0)));
        }
        out
    }

    /// (1 + u)^γ for a series u with zero constant term, via the binomial
    /// series.
    pub fn one_plus_pow(&self, gamma_exp: Complex64) -> TSeries {
        assert!(
            self.coeffs[0].is_zero(),
            "one_plus_pow needs zero constant term"
        );
        let order = self.order();
        let mut out = TSeries::constant(PolyC::one(), order);
        let mut power = TSeries::constant(PolyC::one(), order);
        let mut binom = Complex64::new(1.0, 0.0);
        for k in 1..=order {
            power = power.mul(self);
            binom *= (gamma_exp - ((k - 1) as f64)) / (k as f64);
            out = out.add(&power.scale(binom));
        }
        out
    }
}

/// t·p(x) as a series.
fn t_times(p: PolyC, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    if order >= 1 {
        s.coeffs[1] = p;
    }
    s
}

/// Taylor coefficients in t of the family generating function; coefficient k
/// is 2^k·t^k ↦ P_k^{α−k,β−k} for Jacobi, t^k ↦ L_k^{α−k} for Laguerre,
/// t^k ↦ B_k^{θ−2k} for Bessel and t^k ↦ H_k for Hermite.
pub fn generating_expand(spec: &FamilySpec, t_order: usize) -> Vec<PolyC> {
    let x = PolyC::var();
    match spec.family {
        Family::Jacobi { alpha, beta } => {
            // (1+t(1+x))^α (1−t(1−x))^β
            let u1 = t_times(PolyC::from_reals(&[1.0, 1.0]), t_order);
            let u2 = t_times(PolyC::from_reals(&[-1.0, 1.0]), t_order);
            u1.one_plus_pow(alpha).mul(&u2.one_plus_pow(beta)).coeffs
        }
        Family::Laguerre { alpha } => {
            // e^{−tz}(1+t)^α
            let e = t_times(x.neg(), t_order).exp();
            let b = t_times(PolyC::one(), t_order).one_plus_pow(alpha);
            e.mul(&b).coeffs
        }
        Family::BesselPoly { theta } => {
            // (1+tz)^θ exp(+t/(1+tz)): the sign pairing with the Rodrigues
            // weight e^{−1/z}z^θ (the −t variant belongs to the reciprocal
            // weight convention)
            let tz = t_times(x.clone(), t_order);
            let lead = tz.one_plus_pow(theta);
            let inv = tz.one_plus_pow(Complex64::new(-1.0, 0.0));
            let arg = t_times(PolyC::one(), t_order).mul(&inv);
            lead.mul(&arg.exp()).coeffs
        }
        Family::HermitePoly => {
            // e^{2tx − t²}
            let mut u = t_times(x.scale(Complex64::new(2.0, 0.0)), t_order);
            if t_order >= 2 {
                u.coeffs[2] = PolyC::constant(Complex64::new(-1.0, 0.0));
            }
            u.exp().coeffs
        }
    }
}

/// The generic generating function ρ(z+tσ(z))/ρ(z) = Σ tⁿ P_n(σ,κ_{−n};z),
/// expanded at a fixed sample point z. Returns the t-coefficients.
pub fn generating_expand_generic(
    params: &EquationParams,
    z: Complex64,
    t_order: usize,
) -> Vec<Complex64> {
    let rho = weight_form(params);
    let sz = params.sigma.eval(z);
    let scalar = |v: Complex64| PolyC::constant(v);
    let mut acc = TSeries::constant(PolyC::one(), t_order);
    for &(root, e) in &rho.power_factors {
        // ((z−r) + tσ)^e / (z−r)^e = (1 + tσ/(z−r))^e
        let u = t_times(scalar(sz / (z - root)), t_order);
        acc = acc.mul(&u.one_plus_pow(e));
    }
    if !rho.exp_poly.is_zero() {
        // exp(p(z+tσ) − p(z)): expand p around z
        let p1 = rho.exp_poly.derivative().eval(z);
        let p2 = rho.exp_poly.derivative().derivative().eval(z) / 2.0;
        let mut u = TSeries::zero(t_order);
        if t_order >= 1 {
            u.coeffs[1] = scalar(p1 * sz);
        }
        if t_order >= 2 {
            u.coeffs[2] = scalar(p2 * sz * sz);
        }
        acc = acc.mul(&u.exp());
    }
    if let Some((root, res)) = rho.exp_pole {
        // exp(res/(z+tσ−r) − res/(z−r)) with
        // res/(z+tσ−r) = res/(z−r) · (1 + tσ/(z−r))^{−1}
        let d = z - root;
        let u = t_times(scalar(sz / d), t_order);
        let inv = u.one_plus_pow(Complex64::new(-1.0, 0.0));
        let mut shifted = inv.scale(res / d);
        shifted.coeffs[0] = shifted.coeffs[0].sub(&scalar(res / d));
        acc = acc.mul(&shifted.exp());
    }
    acc.coeffs.iter().map(|p| p.coeff(0)).collect()
}

// ---------------------------------------------------------------------------
// moments and orthogonality
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interval {
    MinusOneOne,
    ZeroInfinity,
    RealLine,
}

/// Exact moments ∫ x^k ρ(x) dx of a family weight over its orthogonality
/// interval. A coherent overall factor (Beta/Gamma value of the weight) is
/// kept in f64; the normalized moments are carried in double-double, because
/// the contractions against degree-20 polynomial products cancel by many
/// orders of magnitude. Parameters must be real (a positive weight).
pub struct MomentTable {
    pub spec: FamilySpec,
    pub interval: Interval,
    /// overall scale multiplying every normalized moment
    global: f64,
    cache: RefCell<Vec<Option<Dd>>>,
}

fn beta_fn(a: Complex64, b: Complex64) -> Complex64 {
    gamma(a) * gamma(b) / gamma(a + b)
}

fn real_param(x: Complex64) -> Result<f64> {
    if x.im != 0.0 {
        return Err(Error::DomainError(
            "orthogonality weights need real parameters".into(),
        ));
    }
    Ok(x.re)
}

impl MomentTable {
    pub fn new(spec: FamilySpec) -> Result<Self> {
        let (interval, global) = match spec.family {
            Family::Jacobi { alpha, beta } => {
                let (a, b) = (real_param(alpha)?, real_param(beta)?);
                if a <= -1.0 || b <= -1.0 {
                    return Err(Error::DomainError("jacobi weight needs α, β > −1".into()));
                }
                let m0 = Complex64::new(2.0, 0.0).powc(alpha + beta + 1.0)
                    * beta_fn(alpha + 1.0, beta + 1.0);
                (Interval::MinusOneOne, m0.re)
            }
            Family::Laguerre { alpha } => {
                let a = real_param(alpha)?;
                if a <= -1.0 {
                    return Err(Error::DomainError("laguerre weight needs α > −1".into()));
                }
                (Interval::ZeroInfinity, gamma(alpha + 1.0).re)
            }
            Family::BesselPoly { .. } => return Err(Error::NoOrthogonalityInterval),
            Family::HermitePoly => (Interval::RealLine, PI.sqrt()),
        };
        Ok(MomentTable {
            spec,
            interval,
            global,
            cache: RefCell::new(Vec::new()),
        })
    }

    /// The coherent overall factor (∫ρ-scale) of the moments.
    pub fn global_factor(&self) -> f64 {
        self.global
    }

    /// Normalized moment m_k = M_k / global, in double-double.
    pub fn moment_normalized(&self, k: usize) -> Dd {
        {
            let cache = self.cache.borrow();
            if let Some(Some(v)) = cache.get(k) {
                return *v;
            }
        }
        // fill the cache up to k (the recurrences walk upward)
        let upto = k;
        let mut vals: Vec<Dd> = Vec::with_capacity(upto + 1);
        match self.spec.family {
            Family::Jacobi { alpha, beta } => {
                // all parameter combinations in double-double: independent
                // f64 roundings per moment would be amplified by the
                // contraction's cancellation
                let a = Dd::from(alpha.re);
                let b = Dd::from(beta.re);
                let b_minus_a = b.sub(a);
                let a_plus_b = a.add(b);
                // m_0 = 1 and the integration-by-parts recurrence
                // (j+α+β+2) m_{j+1} = j m_{j−1} + (β−α) m_j
                vals.push(Dd::ONE);
                if upto >= 1 {
                    vals.push(b_minus_a.div(a_plus_b.add(Dd::from(2.0))));
                }
                for j in 1..upto {
                    let next = Dd::from(j as f64)
                        .mul(vals[j - 1])
                        .add(b_minus_a.mul(vals[j]))
                        .div(a_plus_b.add(Dd::from(j as f64 + 2.0)));
                    vals.push(next);
                }
            }
            Family::Laguerre { alpha } => {
                let a = Dd::from(alpha.re);
                // m_k = (α+1)_k
                let mut acc = Dd::ONE;
                vals.push(acc);
                for i in 1..=upto {
                    acc = acc.mul(a.add(Dd::from(i as f64)));
                    vals.push(acc);
                }
            }
            Family::HermitePoly => {
                // m_{2j} = Γ(j+½)/√π = Π_{i=1..j}(i−½), odd moments vanish
                let mut acc = Dd::ONE;
                vals.push(acc);
                for i in 1..=upto {
                    if i % 2 == 1 {
                        vals.push(Dd::ZERO);
                    } else {
                        acc = acc.mul(Dd::from((i / 2) as f64 - 0.5));
                        vals.push(acc);
                    }
                }
            }
            Family::BesselPoly { .. } => unreachable!("no moments for bessel"),
        }
        let mut cache = self.cache.borrow_mut();
        if cache.len() <= upto {
            cache.resize(upto + 1, None);
        }
        for (i, v) in vals.iter().enumerate() {
            cache[i] = Some(*v);
        }
        vals[k]
    }

    /// ∫ x^k ρ(x) dx.
    pub fn moment(&self, k: usize) -> Complex64 {
        Complex64::new(self.global * self.moment_normalized(k).to_f64(), 0.0)
    }

    /// ∫ p(x) ρ(x) dx / global, contracted in double-double.
    pub fn integrate_poly_dd(&self, p: &PolyDd) -> Dd {
        let mut acc = Dd::ZERO;
        for (k, &c) in p.0.iter().enumerate() {
            acc = acc.add(c.mul(self.moment_normalized(k)));
        }
        acc
    }

    /// ∫ p(x) ρ(x) dx by contracting coefficients against the moments;
    /// complex coefficients are contracted componentwise in double-double.
    pub fn integrate_poly(&self, p: &PolyC) -> Complex64 {
        let mut re = Dd::ZERO;
        let mut im = Dd::ZERO;
        for (k, &c) in p.coeffs().iter().enumerate() {
            let m = self.moment_normalized(k);
            re = re.add(Dd::from(c.re).mul(m));
            im = im.add(Dd::from(c.im).mul(m));
        }
        Complex64::new(self.global * re.to_f64(), self.global * im.to_f64())
    }
}

/// Exact weighted inner product ⟨p, q⟩ = ∫ p q ρ over the family interval.
pub fn inner_product_moments(p: &PolyC, q: &PolyC, spec: &FamilySpec) -> Result<Complex64> {
    let table = MomentTable::new(*spec)?;
    Ok(table.integrate_poly(&p.mul(q)))
}

#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub gram: Vec<Vec<Complex64>>,
    /// Largest off-diagonal entry relative to the geometric mean of the
    /// adjacent diagonal entries.
    pub max_offdiag_rel: f64,
    /// Largest relative deviation of the diagonal from the closed-form norm.
    pub max_diag_err_family: f64,
    /// Largest relative deviation of the diagonal from the general product
    /// formula (1/n!)Π_{j=n+1}^{2n}(−κ′ − jσ″/2)·∫σⁿρ.
    pub max_diag_err_product: f64,
}

/// Closed-form squared norms of the classical families.
pub fn family_norm(spec: &FamilySpec, n: u32) -> Result<Complex64> {
    let nf = n as f64;
    match spec.family {
        Family::Jacobi { alpha, beta } => Ok(gamma(alpha + nf + 1.0)
            * gamma(beta + nf + 1.0)
            * Complex64::new(2.0, 0.0).powc(alpha + beta + 1.0)
            / ((alpha + beta + 2.0 * nf + 1.0) * factorial(n) * gamma(alpha + beta + nf + 1.0))),
        Family::Laguerre { alpha } => Ok(gamma(alpha + nf + 1.0) / factorial(n)),
        Family::HermitePoly => Ok(Complex64::new(
            PI.sqrt() * 2.0f64.powi(n as i32) / factorial(n),
            0.0,
        )),
        Family::BesselPoly { .. } => Err(Error::NoOrthogonalityInterval),
    }
}

/// Family norm divided by the moment table's global factor, in double-double
/// (pure Pochhammer/factorial arithmetic, no Gamma evaluations).
fn family_norm_normalized(spec: &FamilySpec, n: u32) -> Dd {
    let poch = |x: Dd, k: u32| {
        let mut acc = Dd::ONE;
        for i in 0..k {
            acc = acc.mul(x.add(Dd::from(i as f64)));
        }
        acc
    };
    let fact = |k: u32| poch(Dd::ONE, k);
    match spec.family {
        Family::Jacobi { alpha, beta } => {
            let a = Dd::from(alpha.re);
            let b = Dd::from(beta.re);
            let apb1 = a.add(b).add(Dd::ONE);
            // ppw1 / M₀ = (α+1)_n (β+1)_n (α+β+1) / ((α+β+2n+1) n! (α+β+1)_n)
            let num = poch(a.add(Dd::ONE), n)
                .mul(poch(b.add(Dd::ONE), n))
                .mul(apb1);
            let den = apb1
                .add(Dd::from(2.0 * n as f64))
                .mul(fact(n))
                .mul(poch(apb1, n));
            num.div(den)
        }
        Family::Laguerre { alpha } => poch(Dd::from(alpha.re).add(Dd::ONE), n).div(fact(n)),
        Family::HermitePoly => {
            let mut two_n = Dd::ONE;
            for _ in 0..n {
                two_n = two_n.mul(Dd::from(2.0));
            }
            two_n.div(fact(n))
        }
        Family::BesselPoly { .. } => Dd::ZERO,
    }
}

/// Squared norm from the general product formula, with the family's Rodrigues
/// prefactor squared:
///   ⟨P_n,P_n⟩ = pref(n)²·(1/n!)·Π_{j=n+1}^{2n}(−κ′ − jσ″/2)·∫σⁿρ.
pub fn product_norm(spec: &FamilySpec, n: u32) -> Result<Complex64> {
    let table = MomentTable::new(*spec)?;
    Ok(Complex64::new(
        table.global_factor() * product_norm_normalized(spec, &table, n).to_f64(),
        0.0,
    ))
}

/// (σ, κ) of a family with every parameter combination formed in
/// double-double (e.g. Jacobi's −(α+β) must be the exact sum).
fn family_data_dd(spec: &FamilySpec) -> (PolyDd, PolyDd) {
    match spec.family {
        Family::Jacobi { alpha, beta } => {
            let a = Dd::from(alpha.re);
            let b = Dd::from(beta.re);
            (
                PolyDd::from_f64(&[1.0, 0.0, -1.0]),
                PolyDd(vec![b.sub(a), a.add(b).neg()]),
            )
        }
        Family::Laguerre { alpha } => (
            PolyDd::from_f64(&[0.0, 1.0]),
            PolyDd(vec![Dd::from(alpha.re), Dd::from(-1.0)]),
        ),
        Family::BesselPoly { theta } => (
            PolyDd::from_f64(&[0.0, 0.0, 1.0]),
            PolyDd(vec![Dd::ONE, Dd::from(theta.re)]),
        ),
        Family::HermitePoly => (PolyDd::from_f64(&[1.0]), PolyDd::from_f64(&[0.0, -2.0])),
    }
}

fn product_norm_normalized(spec: &FamilySpec, table: &MomentTable, n: u32) -> Dd {
    let (sigma_dd, kappa_dd) = family_data_dd(spec);
    let kp = kappa_dd.0.get(1).copied().unwrap_or(Dd::ZERO);
    let spp = sigma_dd
        .0
        .get(2)
        .copied()
        .unwrap_or(Dd::ZERO)
        .mul(Dd::from(2.0));
    let mut prod = Dd::ONE;
    for j in 2..=n {
        prod = prod.div(Dd::from(j as f64));
    }
    for j in (n + 1)..=(2 * n) {
        prod = prod.mul(kp.neg().sub(spp.mul(Dd::from(j as f64 / 2.0))));
    }
    let mut sigma_n = PolyDd::one();
    for _ in 0..n {
        sigma_n = sigma_n.mul(&sigma_dd);
    }
    let integral = table.integrate_poly_dd(&sigma_n);
    let pref = spec.prefactor(n).re;
    Dd::from(pref * pref).mul(prod).mul(integral)
}

/// The classical polynomial in double-double coefficients.
fn classical_poly_dd(spec: &FamilySpec, n: u32) -> PolyDd {
    let (sigma_dd, kappa_dd) = family_data_dd(spec);
    rodrigues_dd(&sigma_dd, &kappa_dd, n).scale(Dd::from(spec.prefactor(n).re))
}

/// Gram matrix of {P₀,…,P_nmax} with diagonal checks against both the general
/// product formula and the family closed forms. The whole pipeline (Rodrigues
/// recursion, products, moment contraction) runs in double-double; only the
/// coherent overall weight scale is f64.
pub fn orthogonality_check(spec: &FamilySpec, n_max: u32) -> Result<OrthogonalityReport> {
    let table = MomentTable::new(*spec)?;
    let polys: Vec<PolyDd> = (0..=n_max).map(|n| classical_poly_dd(spec, n)).collect();
    let dim = polys.len();
    let mut gram_dd = vec![vec![Dd::ZERO; dim]; dim];
    for i in 0..dim {
        for j in 0..=i {
            let v = table.integrate_poly_dd(&polys[i].mul(&polys[j]));
            gram_dd[i][j] = v;
            gram_dd[j][i] = v;
        }
    }
    let g = table.global_factor();
    let gram: Vec<Vec<Complex64>> = gram_dd
        .iter()
        .map(|row| {
            row.iter()
                .map(|d| Complex64::new(g * d.to_f64(), 0.0))
                .collect()
        })
        .collect();
    let mut max_offdiag: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let scale = (gram_dd[i][i].abs() * gram_dd[j][j].abs())
                    .sqrt()
                    .max(1e-300);
                max_offdiag = max_offdiag.max(gram_dd[i][j].abs() / scale);
            }
        }
    }
    let mut max_diag_family: f64 = 0.0;
    let mut max_diag_product: f64 = 0.0;
    for (n, row) in gram_dd.iter().enumerate() {
        let d = row[n];
        let fam = family_norm_normalized(spec, n as u32);
        let prd = product_norm_normalized(spec, &table, n as u32);
        max_diag_family = max_diag_family.max(d.sub(fam).abs() / fam.abs());
        max_diag_product = max_diag_product.max(d.sub(prd).abs() / prd.abs());
    }
    Ok(OrthogonalityReport {
        gram,
        max_offdiag_rel: max_offdiag,
        max_diag_err_family: max_diag_family,
        max_diag_err_product: max_diag_product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::pochhammer;
    use crate::series::{eval_classical, Classical};
    use num_complex::Complex64 as C;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn rodrigues_hermite_h2() {
        // σ=1, κ=−2x, n=2 → 2x²−1
        let p = rodrigues(&PolyC::one(), &PolyC::from_reals(&[0.0, -2.0]), 2);
        assert!(p.approx_eq(&PolyC::from_reals(&[-1.0, 0.0, 2.0]), 1e-14));
        // n = 0 → 1
        let p = rodrigues(
            &PolyC::from_reals(&[0.0, 1.0, -1.0]),
            &PolyC::from_reals(&[0.3]),
            0,
        );
        assert!(p.approx_eq(&PolyC::one(), 1e-15));
    }

    #[test]
    fn legendre_p1_via_jacobi() {
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(0.0),
            beta: c(0.0),
        });
        let p1 = classical_poly(&spec, 1);
        assert!(p1.approx_eq(&PolyC::var(), 1e-14), "P1 = {p1}");
    }

    #[test]
    fn laguerre_l1() {
        let spec = FamilySpec::new(Family::Laguerre { alpha: c(2.0) });
        let p1 = classical_poly(&spec, 1);
        assert!(
            p1.approx_eq(&PolyC::from_reals(&[3.0, -1.0]), 1e-14),
            "L1 = {p1}"
        );
    }

    #[test]
    fn jacobi_at_one() {
        // P_n^{α,β}(1) = (1+α)_n/n!; n=3, α=0.5 → 2.1875
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(0.5),
            beta: c(-0.3),
        });
        let p3 = classical_poly(&spec, 3);
        let want = pochhammer(c(1.5), 3) / factorial(3);
        assert!(
            (p3.eval(c(1.0)) - want).norm() < 1e-12,
            "{} vs {want}",
            p3.eval(c(1.0))
        );
        assert!((want - c(2.1875)).norm() < 1e-12);
    }

    #[test]
    fn jacobi_matches_2f1_closed_form() {
        // P_n^{α,β}(x) = (1+α)_n/n! · ₂F₁(−n, n+α+β+1; α+1; (1−x)/2)
        let (alpha, beta) = (c(0.7), c(-0.25));
        let spec = FamilySpec::new(Family::Jacobi { alpha, beta });
        for n in 0..=10u32 {
            let p = classical_poly(&spec, n);
            for &x in &[-0.6, 0.1, 0.8] {
                let z = (1.0 - x) / 2.0;
                let f = eval_classical(
                    Classical::Gauss2F1 {
                        a: c(-(n as f64)),
                        b: alpha + beta + (n as f64) + 1.0,
                        c: alpha + 1.0,
                    },
                    c(z),
                    false,
                )
                .unwrap()
                .value;
                let want = pochhammer(alpha + 1.0, n) / factorial(n) * f;
                // compare relative to the coefficient scale: point values near
                // roots amplify the terminating-series cancellation noise
                assert!(
                    (p.eval(c(x)) - want).norm() < 1e-10 * p.max_coeff_norm().max(1.0),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn laguerre_matches_1f1_closed_form() {
        let alpha = c(0.4);
        let spec = FamilySpec::new(Family::Laguerre { alpha });
        for n in 0..=10u32 {
            let p = classical_poly(&spec, n);
            let x = 0.9;
            let f = eval_classical(
                Classical::Kummer1F1 {
                    a: c(-(n as f64)),
                    c: alpha + 1.0,
                },
                c(x),
                false,
            )
            .unwrap()
            .value;
            let want = pochhammer(alpha + 1.0, n) / factorial(n) * f;
            assert!(
                (p.eval(c(x)) - want).norm() < 1e-11 * want.norm().max(1.0),
                "n={n}"
            );
        }
    }

    #[test]
    fn hermite_matches_s_function() {
        // H_n = 2^n/n!·S(−n;x)
        let spec = FamilySpec::new(Family::HermitePoly);
        for n in 1..=6u32 {
            let h = classical_poly(&spec, n);
            let x = 1.3;
            let s = eval_classical(Classical::HermiteS { a: c(-(n as f64)) }, c(x), false)
                .unwrap()
                .value;
            let want = 2.0f64.powi(n as i32) / factorial(n) * s;
            assert!(
                (h.eval(c(x)) - want).norm() < 1e-11 * want.norm().max(1.0),
                "n={n}: {} vs {want}",
                h.eval(c(x))
            );
        }
    }

    #[test]
    fn bessel_rodrigues_and_f20_form() {
        // Rodrigues B_1^θ = 1 + (θ+2)z; the ₂F₀ form matches after z ↦ −z
        let theta = c(0.6);
        let spec = FamilySpec::new(Family::BesselPoly { theta });
        let b1 = classical_poly(&spec, 1);
        assert!(
            b1.approx_eq(&PolyC::new(vec![c(1.0), theta + 2.0]), 1e-13),
            "B1 = {b1}"
        );
        for n in 0..=4u32 {
            let bn = classical_poly(&spec, n);
            let z = c(0.37);
            let f20 = crate::series::f20_terminating(c(-(n as f64)), theta + (n as f64) + 1.0, -z)
                .unwrap()
                .value
                / factorial(n);
            assert!(
                (bn.eval(z) - f20).norm() < 1e-11 * f20.norm().max(1.0),
                "n={n}: {} vs {f20}",
                bn.eval(z)
            );
        }
    }

    #[test]
    fn eigen_residuals_vanish() {
        // Hermite n=3: (∂² − 2x∂ + 2·3)H₃ = 0
        assert!(eigen_residual(&PolyC::one(), &PolyC::from_reals(&[0.0, -2.0]), 3) < 1e-13);
        // Jacobi n=2, α=β=1
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(1.0),
            beta: c(1.0),
        });
        assert!(eigen_residual(&spec.sigma(), &spec.kappa(), 2) < 1e-13);
        // n = 0
        assert!(
            eigen_residual(
                &PolyC::from_reals(&[0.0, 1.0]),
                &PolyC::from_reals(&[0.3, -1.0]),
                0
            ) < 1e-14
        );
    }

    #[test]
    fn recurrences_all_families() {
        let specs = [
            FamilySpec::new(Family::Jacobi {
                alpha: c(0.6),
                beta: c(0.2),
            }),
            FamilySpec::new(Family::Laguerre { alpha: c(0.8) }),
            FamilySpec::new(Family::BesselPoly { theta: c(0.4) }),
            FamilySpec::new(Family::HermitePoly),
        ];
        for spec in specs {
            for n in 1..=4u32 {
                let rep = polynomial_recurrences(&spec, n);
                assert!(
                    rep.max_residual() < 1e-11,
                    "{:?} n={n}: {:?}",
                    spec.family,
                    rep.residuals
                );
            }
        }
    }

    #[test]
    fn generating_functions_reproduce_ladder() {
        // Hermite: coefficient of t^n is H_n
        let spec = FamilySpec::new(Family::HermitePoly);
        let coeffs = generating_expand(&spec, 8);
        for (n, got) in coeffs.iter().enumerate() {
            let want = classical_poly(&spec, n as u32);
            assert!(
                got.approx_eq(&want, 1e-11),
                "hermite n={n}: {got} vs {want}"
            );
        }
        // Jacobi: coefficient of t^n is 2^n P_n^{α−n, β−n}
        let (alpha, beta) = (c(0.9), c(-0.2));
        let spec = FamilySpec::new(Family::Jacobi { alpha, beta });
        let coeffs = generating_expand(&spec, 8);
        for (n, got) in coeffs.iter().enumerate() {
            let shifted = FamilySpec::new(Family::Jacobi {
                alpha: alpha - n as f64,
                beta: beta - n as f64,
            });
            let want = classical_poly(&shifted, n as u32).scale(c(2.0f64.powi(n as i32)));
            assert!(got.approx_eq(&want, 1e-11), "jacobi n={n}");
        }
        // Laguerre: coefficient of t^1 of e^{−tz}(1+t)^α is α−z = L_1^{α−1}
        let spec = FamilySpec::new(Family::Laguerre { alpha: c(1.4) });
        let coeffs = generating_expand(&spec, 8);
        assert!(coeffs[1].approx_eq(&PolyC::new(vec![c(1.4), c(-1.0)]), 1e-13));
        for (n, got) in coeffs.iter().enumerate() {
            let shifted = FamilySpec::new(Family::Laguerre {
                alpha: c(1.4) - n as f64,
            });
            let want = classical_poly(&shifted, n as u32);
            assert!(got.approx_eq(&want, 1e-11), "laguerre n={n}");
        }
        // Bessel: coefficient of t^n is B_n^{θ−2n}
        let theta = c(0.7);
        let spec = FamilySpec::new(Family::BesselPoly { theta });
        let coeffs = generating_expand(&spec, 8);
        for (n, got) in coeffs.iter().enumerate() {
            let shifted = FamilySpec::new(Family::BesselPoly {
                theta: theta - 2.0 * n as f64,
            });
            let want = classical_poly(&shifted, n as u32);
            assert!(got.approx_eq(&want, 1e-11), "bessel n={n}");
        }
    }

    #[test]
    fn generic_generating_function() {
        // ρ(z+tσ)/ρ(z) = Σ tⁿ P_n(σ,κ_{−n};z) at a sample z
        let params = crate::params::dict::gauss_2f1(c(0.4), c(1.1), c(0.8));
        let z = C::new(0.3, 0.1);
        let coeffs = generating_expand_generic(&params, z, 8);
        let sp = params.sigma.derivative();
        for (n, got) in coeffs.iter().enumerate() {
            let kappa_mn = params.kappa.sub(&sp.scale(c(n as f64)));
            let want = rodrigues(&params.sigma, &kappa_mn, n as u32).eval(z);
            assert!(
                (got - want).norm() < 1e-10 * want.norm().max(1.0),
                "n={n}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn simple_moments() {
        // ∫₋₁¹ x² dx = 2/3
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(0.0),
            beta: c(0.0),
        });
        let v = inner_product_moments(&PolyC::var(), &PolyC::var(), &spec).unwrap();
        assert!((v - c(2.0 / 3.0)).norm() < 1e-13);
        // ∫₀^∞ x e^{−x} dx = 1
        let spec = FamilySpec::new(Family::Laguerre { alpha: c(0.0) });
        let v = inner_product_moments(&PolyC::var(), &PolyC::one(), &spec).unwrap();
        assert!((v - c(1.0)).norm() < 1e-13);
        // ∫ x² e^{−x²} dx = √π/2
        let spec = FamilySpec::new(Family::HermitePoly);
        let v = inner_product_moments(&PolyC::var(), &PolyC::var(), &spec).unwrap();
        assert!((v - c(PI.sqrt() / 2.0)).norm() < 1e-13);
    }

    #[test]
    fn bessel_has_no_interval() {
        let spec = FamilySpec::new(Family::BesselPoly { theta: c(0.3) });
        assert!(matches!(
            inner_product_moments(&PolyC::one(), &PolyC::one(), &spec),
            Err(Error::NoOrthogonalityInterval)
        ));
    }

    #[test]
    fn norms_match_both_formulas() {
        // Jacobi α=β=0, n=0: norm² = 2
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(0.0),
            beta: c(0.0),
        });
        assert!((family_norm(&spec, 0).unwrap() - c(2.0)).norm() < 1e-13);
        let rep = orthogonality_check(&spec, 6).unwrap();
        assert!(
            rep.max_offdiag_rel < 1e-10,
            "offdiag {}",
            rep.max_offdiag_rel
        );
        assert!(
            rep.max_diag_err_family < 1e-10,
            "family {}",
            rep.max_diag_err_family
        );
        assert!(
            rep.max_diag_err_product < 1e-10,
            "product {}",
            rep.max_diag_err_product
        );

        // Hermite n=2: ∫H₂² e^{−x²} = 2√π... with the 1/n! convention:
        // √π·2²/2! = 2√π
        let spec = FamilySpec::new(Family::HermitePoly);
        assert!((family_norm(&spec, 2).unwrap() - c(2.0 * PI.sqrt())).norm() < 1e-13);
        let rep = orthogonality_check(&spec, 6).unwrap();
        assert!(rep.max_offdiag_rel < 1e-10);
        assert!(rep.max_diag_err_family < 1e-10);
        assert!(rep.max_diag_err_product < 1e-10);

        // Laguerre α=0, n=1: ∫(1−x)² e^{−x} dx = 1
        let spec = FamilySpec::new(Family::Laguerre { alpha: c(0.0) });
        assert!((family_norm(&spec, 1).unwrap() - c(1.0)).norm() < 1e-13);
        let rep = orthogonality_check(&spec, 6).unwrap();
        assert!(rep.max_offdiag_rel < 1e-10);
        assert!(rep.max_diag_err_family < 1e-10);
        assert!(rep.max_diag_err_product < 1e-10);
    }

    #[test]
    fn jacobi_degree_degeneracies() {
        // case 2: α+β = −n−1−d with α outside {−n,…,−1}: degree drops to
        // −α−β−n−1
        let n = 4u32;
        for d in 0..(n as i32) {
            let alpha = c(0.3);
            let beta = c(-(n as f64) - 1.0 - d as f64) - alpha;
            let spec = FamilySpec::new(Family::Jacobi { alpha, beta });
            let p = classical_poly(&spec, n);
            let want_deg = (-(alpha + beta).re - (n as f64) - 1.0).round() as usize;
            assert_eq!(p.degree(), want_deg, "d={d}: {p}");
        }
        // case 3: additionally α ∈ {−n,…,−1} → the zero polynomial
        let alpha = c(-2.0);
        let beta = c(-6.0) - alpha; // α+β = −6 ∈ {−2n,…,−n−1} for n = 4
        let spec = FamilySpec::new(Family::Jacobi { alpha, beta });
        let p = classical_poly(&spec, 4);
        assert!(p.is_zero(), "want zero polynomial, got {p}");
    }

    #[test]
    fn rodrigues_contour_cross_check() {
        // Hermite n=2 at z=1: H₂(1) = 1
        let v =
            rodrigues_contour(&PolyC::one(), &PolyC::from_reals(&[0.0, -2.0]), 2, c(1.0)).unwrap();
        assert!((v - c(1.0)).norm() < 1e-10, "got {v}");
        // Jacobi-type data at an interior point
        let spec = FamilySpec::new(Family::Jacobi {
            alpha: c(0.5),
            beta: c(0.25),
        });
        let z = c(0.3);
        let via_contour = rodrigues_contour(&spec.sigma(), &spec.kappa(), 3, z).unwrap();
        let via_recursion = rodrigues(&spec.sigma(), &spec.kappa(), 3).eval(z);
        assert!(
            (via_contour - via_recursion).norm() < 1e-9 * via_recursion.norm().max(1.0),
            "{via_contour} vs {via_recursion}"
        );
    }
}
