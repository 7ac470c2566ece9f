//! Power-series evaluation around the singular point: the unified
//! hypergeometric function F(σ,κ,ω;z), its Olver-normalized form 𝐅, and the
//! classical series ₂F₁, ₁F₁, ₀F₁.
//!
//! The unified series is
//!   F(σ,κ,ω;z) = Σ_n Π_{j<n}(ω + (j+½)κ′ + j(j+1)σ″/2)
//!                    / (Π_{j<n}(κ(0) + (j+1)σ′(0)) · n!) · (−z)^n,
//! normalized so F(0) = 1; 𝐅 replaces the denominator product with
//! Γ(m+n+1), m = κ(0)/σ′(0), and is entire in the parameters.

use crate::error::{Error, Result};
use crate::gamma::{factorial, gamma, near_integer, pochhammer, recip_gamma};
use crate::params::EquationParams;
use num_complex::Complex64;

pub const DEFAULT_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_TERMS: usize = 10_000;
/// Fraction of the distance to the nearest finite singularity at which the
/// series evaluator refuses.
pub const CONVERGENCE_GUARD: f64 = 0.95;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMethod {
    Series,
    Integral,
    ClosedForm,
    Continuation,
}

#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub truncation_estimate: f64,
    pub method: EvalMethod,
}

impl EvalResult {
    pub fn closed(value: Complex64) -> Self {
        EvalResult {
            value,
            terms_used: 1,
            truncation_estimate: 0.0,
            method: EvalMethod::ClosedForm,
        }
    }
}

/// Numerator factor ω + (j+½)κ′ + j(j+1)σ″/2 of the unified series.
fn series_numerator(params: &EquationParams, j: u32) -> Complex64 {
    let j = j as f64;
    params.omega + (j + 0.5) * params.kappa_p() + j * (j + 1.0) / 2.0 * params.sigma_pp()
}

/// Denominator factor κ(0) + (j+1)σ′(0).
fn series_denominator(params: &EquationParams, j: u32) -> Complex64 {
    params.kappa.coeff(0) + ((j + 1) as f64) * params.sigma.coeff(1)
}

fn require_singular_origin(params: &EquationParams) -> Result<()> {
    if params.sigma.coeff(0).norm() > 1e-12 * params.sigma.max_coeff_norm() {
        return Err(Error::NotApplicable("series requires sigma(0) = 0".into()));
    }
    Ok(())
}

/// First index J with numerator factor ≈ 0, if any (the series then
/// terminates with degree J).
fn termination_index(params: &EquationParams, max: u32) -> Option<u32> {
    let scale = params.omega.norm().max(params.kappa_p().norm()).max(1.0);
    (0..max).find(|&j| series_numerator(params, j).norm() < 1e-12 * scale)
}

/// Coefficients of the unified series through z^N (c_0 = 1).
pub fn unified_coeffs(params: &EquationParams, n_terms: usize) -> Result<Vec<Complex64>> {
    require_singular_origin(params)?;
    let mut out = Vec::with_capacity(n_terms);
    let mut c = Complex64::new(1.0, 0.0);
    out.push(c);
    for n in 0..n_terms.saturating_sub(1) {
        let num = series_numerator(params, n as u32);
        let den = series_denominator(params, n as u32);
        let den_scale =
            params.kappa.coeff(0).norm() + params.sigma.coeff(1).norm() * (n as f64 + 1.0);
        if den.norm() < 1e-13 * den_scale.max(1.0) {
            if num.norm() == 0.0 {
                // terminated before the pole; remaining coefficients vanish
                out.resize(n_terms, Complex64::new(0.0, 0.0));
                break;
            }
            return Err(Error::PoleInParameters(n as u32));
        }
        c = c * num / (den * ((n + 1) as f64)) * Complex64::new(-1.0, 0.0);
        out.push(c);
    }
    Ok(out)
}

/// Coefficients of the Olver-normalized series 𝐅 = Σ c_n z^n (σ(0)=0,
/// σ′(0)=1); regular for every m = κ(0) including integers ≤ 0.
pub fn olver_coeffs(params: &EquationParams, n_terms: usize) -> Result<Vec<Complex64>> {
    require_singular_origin(params)?;
    if (params.sigma.coeff(1) - 1.0).norm() > 1e-12 {
        return Err(Error::NotApplicable(
            "olver coefficients require sigma'(0) = 1".into(),
        ));
    }
    let m = params.kappa.coeff(0);
    let mut out = vec![Complex64::new(0.0, 0.0); n_terms];
    if let Some(mi) = near_integer(m, 1e-9) {
        let start = (-mi).max(0) as usize;
        let mut prod = Complex64::new(1.0, 0.0);
        for j in 0..start {
            prod *= series_numerator(params, j as u32);
        }
        if start < n_terms {
            let mut c = prod * Complex64::new(-1.0, 0.0).powu(start as u32)
                / factorial((start as i64 + mi) as u32)
                / factorial(start as u32);
            out[start] = c;
            for n in start..n_terms - 1 {
                let num = series_numerator(params, n as u32);
                c = c * num * Complex64::new(-1.0, 0.0)
                    / (((n as i64 + mi + 1) as f64) * ((n + 1) as f64));
                out[n + 1] = c;
            }
        }
    } else {
        let mut c = recip_gamma(m + 1.0);
        out[0] = c;
        for n in 0..n_terms - 1 {
            let num = series_numerator(params, n as u32);
            c = c * num * Complex64::new(-1.0, 0.0) / ((m + (n as f64) + 1.0) * ((n + 1) as f64));
            out[n + 1] = c;
        }
    }
    Ok(out)
}

/// Value and exact term-by-term derivative of a truncated power series at z.
pub fn series_value_and_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for (n, &c) in coeffs.iter().enumerate().rev() {
        value = value * z + c;
        if n >= 1 {
            deriv = deriv * z + c * (n as f64);
        }
    }
    (value, deriv)
}

/// The unified hypergeometric function by direct summation.
pub fn unified_f(
    params: &EquationParams,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<EvalResult> {
    require_singular_origin(params)?;
    let s1 = params.sigma.coeff(1);
    let spp = params.sigma_pp();
    let terminating = termination_index(params, max_terms as u32);
    if s1.norm() < 1e-14 * params.sigma.max_coeff_norm() {
        // double root at 0: the series is asymptotic unless it terminates
        if terminating.is_none() {
            return Err(Error::AsymptoticOnly);
        }
    } else if spp.norm() > 1e-14 && terminating.is_none() {
        // finite singularity at the second root of σ bounds convergence
        let second_root = -2.0 * s1 / spp;
        if z.norm() >= CONVERGENCE_GUARD * second_root.norm() {
            return Err(Error::NoConvergence(format!(
                "|z| = {:.3} beyond {:.2} of the singularity at |z| = {:.3}",
                z.norm(),
                CONVERGENCE_GUARD,
                second_root.norm()
            )));
        }
    }
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small_streak = 0;
    for n in 0..max_terms {
        let num = series_numerator(params, n as u32);
        let den = series_denominator(params, n as u32);
        let den_scale = params.kappa.coeff(0).norm() + s1.norm() * (n as f64 + 1.0);
        if den.norm() < 1e-13 * den_scale.max(1.0) {
            if num.norm() < 1e-12 * params.omega.norm().max(1.0) {
                return Ok(EvalResult {
                    value: sum,
                    terms_used: n + 1,
                    truncation_estimate: 0.0,
                    method: EvalMethod::Series,
                });
            }
            return Err(Error::PoleInParameters(n as u32));
        }
        term = term * num / (den * ((n + 1) as f64)) * (-z);
        let t = term.norm();
        if t < tol * sum.norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(EvalResult {
                    value: sum,
                    terms_used: n + 1,
                    truncation_estimate: t,
                    method: EvalMethod::Series,
                });
            }
        } else {
            small_streak = 0;
        }
        sum += term;
    }
    Err(Error::NoConvergence(format!(
        "series did not converge within {max_terms} terms"
    )))
}

/// Olver-normalized unified function 𝐅(σ,κ,ω;z) = F/Γ(1+m), computed directly
/// so that integer m ≤ 0 is regular (the sum then starts at n = −m).
/// Requires σ(0) = 0, σ′(0) = 1; use `EquationParams::normalized_at_zero`.
pub fn olver_f(params: &EquationParams, z: Complex64) -> Result<EvalResult> {
    require_singular_origin(params)?;
    if (params.sigma.coeff(1) - 1.0).norm() > 1e-12 {
        return Err(Error::NotApplicable(
            "olver normalization requires sigma'(0) = 1".into(),
        ));
    }
    let m = params.kappa.coeff(0);
    let tol = DEFAULT_TOL;
    let max_terms = DEFAULT_MAX_TERMS;
    if let Some(mi) = near_integer(m, 1e-9) {
        // 𝐅 = Σ_{n ≥ max(0,−m)} Π_{j<n} num_j / ((n+m)! n!) (−z)^n
        let start = (-mi).max(0) as usize;
        let mut prod = Complex64::new(1.0, 0.0);
        for j in 0..start {
            prod *= series_numerator(params, j as u32);
        }
        let mut term = prod * (-z).powu(start as u32)
            / factorial((start as i64 + mi) as u32)
            / factorial(start as u32);
        let mut sum = term;
        let mut small_streak = 0;
        for n in start..start + max_terms {
            let num = series_numerator(params, n as u32);
            term = term * num * (-z) / (((n as i64 + mi + 1) as f64) * ((n + 1) as f64));
            let t = term.norm();
            if t < tol * sum.norm().max(1e-300) {
                small_streak += 1;
                if small_streak >= 3 {
                    return Ok(EvalResult {
                        value: sum,
                        terms_used: n - start + 1,
                        truncation_estimate: t,
                        method: EvalMethod::Series,
                    });
                }
            } else {
                small_streak = 0;
            }
            sum += term;
        }
        Err(Error::NoConvergence("olver series stalled".into()))
    } else {
        let mut term = recip_gamma(m + 1.0);
        let mut sum = term;
        let mut small_streak = 0;
        for n in 0..max_terms {
            let num = series_numerator(params, n as u32);
            term = term * num * (-z) / ((m + (n as f64) + 1.0) * ((n + 1) as f64));
            let t = term.norm();
            if t < tol * sum.norm().max(1e-300) {
                small_streak += 1;
                if small_streak >= 3 {
                    return Ok(EvalResult {
                        value: sum,
                        terms_used: n + 1,
                        truncation_estimate: t,
                        method: EvalMethod::Series,
                    });
                }
            } else {
                small_streak = 0;
            }
            sum += term;
        }
        Err(Error::NoConvergence("olver series stalled".into()))
    }
}

/// Classical evaluation targets.
#[derive(Clone, Copy, Debug)]
pub enum Classical {
    /// ₂F₁(a,b;c;z), |z| < 1 unless terminating.
    Gauss2F1 {
        a: Complex64,
        b: Complex64,
        c: Complex64,
    },
    /// ₁F₁(a;c;z).
    Kummer1F1 { a: Complex64, c: Complex64 },
    /// ₀F₁(c;z).
    ZeroF1 { c: Complex64 },
    /// ₂F₀(a,b;−;z) — terminating sums only here; use `f20_general` otherwise.
    TwoF0 { a: Complex64, b: Complex64 },
    /// Hermite S(a;z) = z^{−a} F(a/2,(a+1)/2;−;−z^{−2}), z off (−∞,0].
    HermiteS { a: Complex64 },
}

fn is_nonpositive_int(x: Complex64) -> Option<u32> {
    near_integer(x, 1e-12).and_then(|n| if n <= 0 { Some((-n) as u32) } else { None })
}

/// Terminating ₂F₀ sum Σ (a)_j (b)_j w^j / j!.
pub fn f20_terminating(a: Complex64, b: Complex64, w: Complex64) -> Option<EvalResult> {
    let n = match (is_nonpositive_int(a), is_nonpositive_int(b)) {
        (Some(n), Some(m)) => n.min(m),
        (Some(n), None) => n,
        (None, Some(m)) => m,
        (None, None) => return None,
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        sum += pochhammer(a, j) * pochhammer(b, j) / factorial(j) * w.powu(j);
    }
    Some(EvalResult {
        value: sum,
        terms_used: (n + 1) as usize,
        truncation_estimate: 0.0,
        method: EvalMethod::Series,
    })
}

/// Straight hypergeometric series Σ Π(a_i)_j / Π(c_i)_j · z^j / j! with a
/// relative-term stopping rule.
fn ratio_series(
    nums: &[Complex64],
    dens: &[Complex64],
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<EvalResult> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small_streak = 0;
    for j in 0..max_terms {
        let jf = j as f64;
        let mut ratio = z / (jf + 1.0);
        for &a in nums {
            ratio *= a + jf;
        }
        for &c in dens {
            let d = c + jf;
            if d.norm() < 1e-13 * (c.norm() + jf).max(1.0) {
                return Err(Error::PoleInParameters(j as u32));
            }
            ratio /= d;
        }
        term *= ratio;
        let t = term.norm();
        if t < tol * sum.norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(EvalResult {
                    value: sum,
                    terms_used: j + 1,
                    truncation_estimate: t,
                    method: EvalMethod::Series,
                });
            }
        } else {
            small_streak = 0;
        }
        sum += term;
    }
    Err(Error::NoConvergence("classical series stalled".into()))
}

/// Evaluates a classical function by its own series (independent of the
/// unified evaluator). With `olver_normalized` the ₂F₁/₁F₁/₀F₁ results are
/// divided by Γ(c).
pub fn eval_classical(
    which: Classical,
    z: Complex64,
    olver_normalized: bool,
) -> Result<EvalResult> {
    let tol = DEFAULT_TOL;
    match which {
        Classical::Gauss2F1 { a, b, c } => {
            let terminating = is_nonpositive_int(a).or(is_nonpositive_int(b));
            if terminating.is_none() && z.norm() >= 1.0 {
                return Err(Error::DomainError(
                    "2F1 series needs |z| < 1; use the integral representation".into(),
                ));
            }
            let mut r = ratio_series(&[a, b], &[c], z, tol, DEFAULT_MAX_TERMS)?;
            if olver_normalized {
                r.value *= recip_gamma(c);
            }
            Ok(r)
        }
        Classical::Kummer1F1 { a, c } => {
            let mut r = ratio_series(&[a], &[c], z, tol, DEFAULT_MAX_TERMS)?;
            if olver_normalized {
                r.value *= recip_gamma(c);
            }
            Ok(r)
        }
        Classical::ZeroF1 { c } => {
            let mut r = ratio_series(&[], &[c], z, tol, DEFAULT_MAX_TERMS)?;
            if olver_normalized {
                r.value *= recip_gamma(c);
            }
            Ok(r)
        }
        Classical::TwoF0 { a, b } => crate::f20::f20_general(a, b, z),
        Classical::HermiteS { a } => {
            if z.im == 0.0 && z.re <= 0.0 {
                return Err(Error::DomainError("S(a;z) needs z off (−∞,0]".into()));
            }
            let w = -(z * z).inv();
            let f = crate::f20::f20_general(a / 2.0, (a + 1.0) / 2.0, w)?;
            Ok(EvalResult {
                value: z.powc(-a) * f.value,
                ..f
            })
        }
    }
}

/// Olver-normalized classical values with termwise 1/Γ(c+j) factors, regular
/// for every c including nonpositive integers.
pub fn olver_classical(which: Classical, z: Complex64) -> Result<EvalResult> {
    let tol = DEFAULT_TOL;
    let max_terms = DEFAULT_MAX_TERMS;
    let (nums, c): (Vec<Complex64>, Complex64) = match which {
        Classical::Gauss2F1 { a, b, c } => (vec![a, b], c),
        Classical::Kummer1F1 { a, c } => (vec![a], c),
        Classical::ZeroF1 { c } => (vec![], c),
        _ => return Err(Error::NotApplicable("no Olver form for this type".into())),
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut poch = Complex64::new(1.0, 0.0);
    let mut zj = Complex64::new(1.0, 0.0);
    let mut small_streak = 0;
    for j in 0..max_terms {
        let jf = j as f64;
        if j > 0 {
            for &a in &nums {
                poch *= a + (jf - 1.0);
            }
            zj *= z / jf;
        }
        let term = poch * zj * recip_gamma(c + jf);
        let t = term.norm();
        if j > 2 && t < tol * sum.norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(EvalResult {
                    value: sum,
                    terms_used: j + 1,
                    truncation_estimate: t,
                    method: EvalMethod::Series,
                });
            }
        } else {
            small_streak = 0;
        }
        sum += term;
    }
    Err(Error::NoConvergence(
        "olver classical series stalled".into(),
    ))
}

/// The power-exponential function (1+μu)^{a/μ}, read as e^{au} when μ = 0.
pub fn powexp(a: Complex64, mu: Complex64, u: Complex64) -> Result<Complex64> {
    if mu.norm() == 0.0 {
        return Ok((a * u).exp());
    }
    let base = Complex64::new(1.0, 0.0) + mu * u;
    if base.norm() == 0.0 {
        return Err(Error::DomainError(
            "powexp at its singular point u = -1/mu".into(),
        ));
    }
    Ok(base.powc(a / mu))
}

/// Γ(c) for convenience of callers normalizing classical values.
pub fn gamma_c(c: Complex64) -> Complex64 {
    gamma(c)
}
