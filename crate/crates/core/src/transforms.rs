//! The integral representations: Euler transforms ∫(s−z)^{−n−1}ρ₀⁻¹(s)ds,
//! Laplace transforms ∫δ₀(s)sⁿe^{zs}ds (σ″ = 0), and the named per-type
//! representations scaled to be directly comparable to the series evaluators.
//!
//! Contours are built so that principal branches are continuous on every
//! piece: loops are circles inside the annulus of analyticity of the
//! integrand, keyholes open around the negative real cut, and rays/segments
//! stay clear of the branch points.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::params::EquationParams;
use crate::poly::PolyC;
use crate::quad::{integrate, integrate_nodes, ContourSpec, Node, QuadResult};
use crate::series::powexp;
use crate::weight::{weight_form, WeightForm};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Weight evaluation routed through the node's stable endpoint offsets, so
/// factors singular at a contour endpoint keep full relative accuracy.
fn weight_on_node(w: &WeightForm, node: &Node) -> Complex64 {
    let mut acc = w.scale;
    for &(root, e) in &w.power_factors {
        acc *= node.dist_to(root).powc(e);
    }
    if !w.exp_poly.is_zero() {
        acc *= w.exp_poly.eval(node.point).exp();
    }
    if let Some((root, res)) = w.exp_pole {
        acc *= (res / node.dist_to(root)).exp();
    }
    acc
}

/// b^e with the limits at b = 0 filled in (0 for Re e > 0, 1 for e = 0).
fn powc_zero_aware(base: Complex64, e: Complex64) -> Complex64 {
    if base.norm() < 1e-300 {
        if e.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else if e.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        }
    } else {
        base.powc(e)
    }
}

/// A product of power factors and exponential factors, used for boundary
/// expressions where separate factors would produce 0·∞ at an endpoint.
#[derive(Clone, Debug)]
struct ProductForm {
    scale: Complex64,
    powers: Vec<(Complex64, Complex64)>,
    exp_poly: PolyC,
    exp_poles: Vec<(Complex64, Complex64)>,
}

impl ProductForm {
    fn new() -> Self {
        ProductForm {
            scale: Complex64::new(1.0, 0.0),
            powers: vec![],
            exp_poly: PolyC::zero(),
            exp_poles: vec![],
        }
    }

    fn from_weight(w: &WeightForm) -> Self {
        ProductForm {
            scale: w.scale,
            powers: w.power_factors.clone(),
            exp_poly: w.exp_poly.clone(),
            exp_poles: w.exp_pole.into_iter().collect(),
        }
    }

    fn mul_power(mut self, root: Complex64, e: Complex64) -> Self {
        self.powers.push((root, e));
        self
    }

    fn mul_poly_factored(mut self, p: &PolyC) -> Self {
        let roots = crate::roots::all_roots(p);
        self.scale *= p.leading();
        for r in roots {
            self.powers.push((r, Complex64::new(1.0, 0.0)));
        }
        self
    }

    /// Combines factors sharing a root so endpoint zeros/poles cancel before
    /// evaluation.
    fn merged(&self) -> Self {
        let mut powers: Vec<(Complex64, Complex64)> = Vec::new();
        for &(r, e) in &self.powers {
            if let Some(slot) = powers
                .iter_mut()
                .find(|(r0, _)| (*r0 - r).norm() < 1e-9 * (1.0 + r.norm()))
            {
                slot.1 += e;
            } else {
                powers.push((r, e));
            }
        }
        ProductForm {
            scale: self.scale,
            powers,
            exp_poly: self.exp_poly.clone(),
            exp_poles: self.exp_poles.clone(),
        }
    }

    fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = self.scale;
        for &(r, e) in &self.powers {
            acc *= powc_zero_aware(s - r, e);
            if acc.norm() == 0.0 {
                return acc;
            }
        }
        if !self.exp_poly.is_zero() {
            acc *= self.exp_poly.eval(s).exp();
        }
        for &(r, c) in &self.exp_poles {
            acc *= (c / (s - r)).exp();
        }
        acc
    }
}

impl ProductForm {
    /// Limit along start + T·direction as T → ∞: decided by the exponential
    /// growth direction first, then by the total algebraic degree.
    fn limit_along_ray(&self, direction: Complex64) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        let inf = Complex64::new(f64::INFINITY, 0.0);
        if !self.exp_poly.is_zero() && self.exp_poly.degree() >= 1 {
            let deg = self.exp_poly.degree();
            let growth = self.exp_poly.leading() * direction.powu(deg as u32);
            if growth.re < -1e-12 * growth.norm().max(1e-30) {
                return zero;
            }
            if growth.re > 1e-12 * growth.norm().max(1e-30) {
                return inf;
            }
        }
        let total: Complex64 = self.powers.iter().map(|&(_, e)| e).sum();
        let scale = 1.0 + total.norm();
        if total.re < -1e-12 * scale {
            zero
        } else if total.re > 1e-12 * scale {
            inf
        } else {
            // bounded, possibly oscillatory: report the magnitude
            self.scale
        }
    }
}

fn boundary_difference(form: &ProductForm, contour: &ContourSpec) -> Complex64 {
    let m = form.merged();
    let fix = |v: Complex64| {
        if v.is_finite() {
            v
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        }
    };
    match contour {
        ContourSpec::Circle { .. } | ContourSpec::HankelLoop { .. } => Complex64::new(0.0, 0.0),
        ContourSpec::Segment { from, to } => fix(m.eval(*to)) - fix(m.eval(*from)),
        ContourSpec::HalfLineDE { start, direction } => {
            fix(m.limit_along_ray(*direction)) - fix(m.eval(*start))
        }
    }
}

/// Euler transform fₙ(z) = ∫ (s−z)^{−n−1} ρ₀⁻¹(s) ds for the ladder based at
/// (σ, κ₀) with ω₀ = κ₀′/2. The boundary term σ(s)(s−z)^{−n−2}ρ₀⁻¹(s) is
/// evaluated at the contour endpoints (zero for closed loops); the
/// representation is valid when it vanishes.
pub fn euler_transform(
    sigma: &PolyC,
    kappa0: &PolyC,
    n: Complex64,
    contour: &ContourSpec,
    z: Complex64,
    normalized: bool,
) -> Result<QuadResult> {
    let params = EquationParams::new(sigma.clone(), kappa0.clone(), kappa0.coeff(1) / 2.0)?;
    let rho0_inv = weight_form(&params).inverse();
    let f = |nd: &Node| nd.dist_to(z).powc(-n - 1.0) * weight_on_node(&rho0_inv, nd);
    let mut result = integrate_nodes(f, contour)?;
    let boundary = ProductForm::from_weight(&rho0_inv)
        .mul_poly_factored(sigma)
        .mul_power(z, -n - 2.0);
    result.boundary_term = boundary_difference(&boundary, contour);
    if normalized {
        result.value /= gamma(n + 1.0);
    }
    if result.boundary_term.norm() > 1e-10 * result.value.norm().max(1e-300) {
        return Err(Error::BoundaryTermNonzero(result.boundary_term.norm()));
    }
    Ok(result)
}

/// The elementary kernel δ₀ solving (σ(−∂_s)s + κ₀(−∂_s))δ₀ = 0, as a weight
/// form; requires σ″ = 0.
pub fn laplace_kernel(sigma: &PolyC, kappa0: &PolyC) -> Result<WeightForm> {
    if sigma.degree() >= 2 {
        return Err(Error::NotApplicable(
            "laplace transform needs sigma'' = 0".into(),
        ));
    }
    let s0 = sigma.coeff(0);
    let s1 = sigma.coeff(1);
    let k0 = kappa0.coeff(0);
    let k1 = kappa0.coeff(1);
    // δ₀′/δ₀ = (σ(0)s + κ₀(0) − σ′) / (σ′s + κ₀′)
    if s1.norm() > 1e-14 {
        let r = -k1 / s1;
        let p = (s0 * r + k0 - s1) / s1;
        let mut w = WeightForm::power(r, p);
        w.exp_poly = PolyC::new(vec![Complex64::new(0.0, 0.0), s0 / s1]);
        Ok(w)
    } else if k1.norm() > 1e-14 {
        Ok(WeightForm::exponential(PolyC::new(vec![
            Complex64::new(0.0, 0.0),
            k0 / k1,
            s0 / (2.0 * k1),
        ])))
    } else {
        Err(Error::NotApplicable(
            "laplace kernel undefined for sigma' = kappa0' = 0".into(),
        ))
    }
}

/// Laplace transform gₙ(z) = ∫ δ₀(s) sⁿ e^{zs} ds (σ″ = 0, ω₀ = κ₀′/2).
/// The boundary expression (σ′s + κ₀′)·s^{n+1}·δ₀(s)·e^{sz} is checked at the
/// endpoints.
pub fn laplace_transform(
    sigma: &PolyC,
    kappa0: &PolyC,
    n: Complex64,
    contour: &ContourSpec,
    z: Complex64,
) -> Result<QuadResult> {
    let delta0 = laplace_kernel(sigma, kappa0)?;
    let f = |nd: &Node| {
        weight_on_node(&delta0, nd)
            * nd.dist_to(Complex64::new(0.0, 0.0)).powc(n)
            * (z * nd.point).exp()
    };
    let mut result = integrate_nodes(f, contour)?;
    let linear = PolyC::new(vec![kappa0.coeff(1), sigma.coeff(1)]);
    let mut boundary =
        ProductForm::from_weight(&delta0).mul_power(Complex64::new(0.0, 0.0), n + 1.0);
    if !linear.is_zero() {
        boundary = boundary.mul_poly_factored(&linear);
    }
    boundary.exp_poly = boundary
        .exp_poly
        .add(&PolyC::new(vec![Complex64::new(0.0, 0.0), z]));
    result.boundary_term = boundary_difference(&boundary, contour);
    if result.boundary_term.norm() > 1e-10 * result.value.norm().max(1e-300) {
        return Err(Error::BoundaryTermNonzero(result.boundary_term.norm()));
    }
    Ok(result)
}

/// The named integral representations, scaled exactly as the right-hand sides
/// of the corresponding series/closed-form evaluations.
#[derive(Clone, Copy, Debug)]
pub enum Named {
    /// ∫₁^∞ t^{b−c}(t−1)^{c−a−1}(t−z)^{−b}dt / (Γ(a)Γ(c−a))  →  𝐅(a,b;c;z)
    Repr2F1Euler {
        a: Complex64,
        b: Complex64,
        c: Complex64,
    },
    /// (1/2πi)∮ t^{a−c}e^t(t−z)^{−a}dt over a keyhole around {0,z}  →  𝐅(a;c;z)
    Repr1F1Hankel { a: Complex64, c: Complex64 },
    /// ∫₁^∞ e^{z/t}t^{−c}(t−1)^{c−a−1}dt / (Γ(a)Γ(c−a))  →  𝐅(a;c;z)
    Repr1F1Algebraic { a: Complex64, c: Complex64 },
    /// ∫₀^∞ e^{−1/t}t^{b−a−1}(t−z)^{−b}dt / Γ(a)  →  F(a,b;−;z)
    Repr2F0 { a: Complex64, b: Complex64 },
    /// (1/2πi)∮ e^{t+z/t}t^{−c}dt  →  𝐅(c;z); circle for integer c, keyhole else
    Repr0F1Loop { c: Complex64 },
    /// 2^a/Γ(a) · ∫₀^∞ e^{−t²−2tz}t^{a−1}dt  →  S(a;z)
    ReprHermiteLaplace { a: Complex64 },
    /// (−i/√π) ∫ e^{t²}(z−t)^{−a}dt up a vertical line left of z  →  S(a;z)
    ReprHermiteEuler { a: Complex64 },
    /// (1/2πi)∮ (1+μu)^{−a/μ}(1+νz/u)^{−b/ν}u^{−m−1}du  →  Ψ_m(z)
    PsiLoop {
        a: Complex64,
        b: Complex64,
        mu: Complex64,
        nu: Complex64,
        m: i32,
    },
    /// (1/2πi)∮ (1+μz/v)^{−a/μ}(1+νv)^{−b/ν}v^{−m−1}dv  →  Ψ̃_m(z)
    PsiTildeLoop {
        a: Complex64,
        b: Complex64,
        mu: Complex64,
        nu: Complex64,
        m: i32,
    },
}

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// Circle radius inside the annulus (inner, outer).
fn annulus_radius(inner: f64, outer: f64) -> Result<f64> {
    if inner >= outer || inner.is_nan() {
        return Err(Error::NotApplicable(format!(
            "empty annulus: inner {inner:.3} !< outer {outer:.3}"
        )));
    }
    let outer_eff = if outer.is_finite() {
        outer
    } else {
        (4.0 * (1.0 + inner)).max(1.0)
    };
    let lo = if inner > 0.0 {
        inner
    } else {
        outer_eff / 100.0
    };
    Ok((lo * outer_eff).sqrt())
}

pub fn named_representation(which: Named, z: Complex64) -> Result<QuadResult> {
    match which {
        Named::Repr2F1Euler { a, b, c } => {
            if a.re <= 0.0 || (c - a).re <= 0.0 {
                return Err(Error::NotApplicable(
                    "needs Re a > 0 and Re(c−a) > 0".into(),
                ));
            }
            if z.im == 0.0 && z.re >= 1.0 {
                return Err(Error::NotApplicable("z on the cut [1,∞)".into()));
            }
            let contour = ContourSpec::HalfLineDE {
                start: Complex64::new(1.0, 0.0),
                direction: Complex64::new(1.0, 0.0),
            };
            let one = Complex64::new(1.0, 0.0);
            let zero = Complex64::new(0.0, 0.0);
            let f = |nd: &Node| {
                nd.dist_to(zero).powc(b - c)
                    * nd.dist_to(one).powc(c - a - 1.0)
                    * nd.dist_to(z).powc(-b)
            };
            let mut r = integrate_nodes(f, &contour)?;
            r.value /= gamma(a) * gamma(c - a);
            // boundary: t^{b−c+1}(1−t)^{c−a}(t−z)^{−b−1}, zero at both ends
            let boundary = ProductForm::new()
                .mul_power(Complex64::new(0.0, 0.0), b - c + 1.0)
                .mul_power(Complex64::new(1.0, 0.0), c - a)
                .mul_power(z, -b - 1.0);
            r.boundary_term = boundary_difference(&boundary, &contour);
            Ok(r)
        }
        Named::Repr1F1Hankel { a, c } => {
            let contour = ContourSpec::hankel(vec![Complex64::new(0.0, 0.0), z]);
            let f = |t: Complex64| t.powc(a - c) * t.exp() * (t - z).powc(-a);
            let mut r = integrate(f, &contour)?;
            r.value /= two_pi_i();
            Ok(r)
        }
        Named::Repr1F1Algebraic { a, c } => {
            if a.re <= 0.0 || (c - a).re <= 0.0 {
                return Err(Error::NotApplicable(
                    "needs Re a > 0 and Re(c−a) > 0".into(),
                ));
            }
            let contour = ContourSpec::HalfLineDE {
                start: Complex64::new(1.0, 0.0),
                direction: Complex64::new(1.0, 0.0),
            };
            let one = Complex64::new(1.0, 0.0);
            let f = |nd: &Node| {
                let t = nd.point;
                (z / t).exp() * t.powc(-c) * nd.dist_to(one).powc(c - a - 1.0)
            };
            let mut r = integrate_nodes(f, &contour)?;
            r.value /= gamma(a) * gamma(c - a);
            Ok(r)
        }
        Named::Repr2F0 { a, b } => {
            if a.re <= 0.0 {
                return Err(Error::NotApplicable("needs Re a > 0".into()));
            }
            if z.im == 0.0 && z.re >= 0.0 {
                return Err(Error::BranchCut);
            }
            let contour = ContourSpec::HalfLineDE {
                start: Complex64::new(0.0, 0.0),
                direction: Complex64::new(1.0, 0.0),
            };
            let zero = Complex64::new(0.0, 0.0);
            let f = |nd: &Node| {
                let t = nd.dist_to(zero);
                (-t.inv()).exp() * t.powc(b - a - 1.0) * nd.dist_to(z).powc(-b)
            };
            let mut r = integrate_nodes(f, &contour)?;
            r.value /= gamma(a);
            Ok(r)
        }
        Named::Repr0F1Loop { c } => {
            let f = |t: Complex64| (t + z / t).exp() * t.powc(-c);
            let int_c = crate::gamma::near_integer(c, 1e-9);
            let contour = if int_c.is_some() {
                ContourSpec::circle(Complex64::new(0.0, 0.0), 1.0)
            } else {
                ContourSpec::hankel(vec![Complex64::new(0.0, 0.0)])
            };
            let mut r = integrate(f, &contour)?;
            r.value /= two_pi_i();
            Ok(r)
        }
        Named::ReprHermiteLaplace { a } => {
            if a.re <= 0.0 {
                return Err(Error::NotApplicable("needs Re a > 0".into()));
            }
            let contour = ContourSpec::HalfLineDE {
                start: Complex64::new(0.0, 0.0),
                direction: Complex64::new(1.0, 0.0),
            };
            let f = |t: Complex64| (-t * t - 2.0 * z * t).exp() * t.powc(a - 1.0);
            let mut r = integrate(f, &contour)?;
            r.value *= Complex64::new(2.0, 0.0).powc(a) / gamma(a);
            Ok(r)
        }
        Named::ReprHermiteEuler { a } => {
            // vertical line through x₀ < Re z, upward
            let x0 = z.re - 0.75 * (1.0 + z.norm());
            let y = (x0 * x0 + 45.0).sqrt() + 2.0;
            let contour = ContourSpec::Segment {
                from: Complex64::new(x0, -y),
                to: Complex64::new(x0, y),
            };
            let f = |t: Complex64| (t * t).exp() * (z - t).powc(-a);
            let mut r = integrate(f, &contour)?;
            r.value *= Complex64::new(0.0, -1.0) / PI.sqrt();
            Ok(r)
        }
        Named::PsiLoop { a, b, mu, nu, m } => {
            let inner = (nu * z).norm();
            let outer = if mu.norm() > 0.0 {
                1.0 / mu.norm()
            } else {
                f64::INFINITY
            };
            let radius = annulus_radius(inner, outer)?;
            let f = |u: Complex64| {
                let p1 = powexp(-a, mu, u).unwrap_or(Complex64::new(f64::NAN, 0.0));
                let p2 = powexp(-b, nu, z / u).unwrap_or(Complex64::new(f64::NAN, 0.0));
                p1 * p2 * u.powi(-m - 1)
            };
            let mut r = integrate(f, &ContourSpec::circle(Complex64::new(0.0, 0.0), radius))?;
            r.value /= two_pi_i();
            Ok(r)
        }
        Named::PsiTildeLoop { a, b, mu, nu, m } => {
            let inner = (mu * z).norm();
            let outer = if nu.norm() > 0.0 {
                1.0 / nu.norm()
            } else {
                f64::INFINITY
            };
            let radius = annulus_radius(inner, outer)?;
            let f = |v: Complex64| {
                let p1 = powexp(-a, mu, z / v).unwrap_or(Complex64::new(f64::NAN, 0.0));
                let p2 = powexp(-b, nu, v).unwrap_or(Complex64::new(f64::NAN, 0.0));
                p1 * p2 * v.powi(-m - 1)
            };
            let mut r = integrate(f, &ContourSpec::circle(Complex64::new(0.0, 0.0), radius))?;
            r.value /= two_pi_i();
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{eval_classical, olver_classical, Classical};
    use num_complex::Complex64 as C;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn euler_transform_is_2f1() {
        // (σ,κ₀) for the 2F1 ladder: κ₀ = (c−b) + (b−a−1)t, n = b−1
        let (a, b, cc, z) = (c(1.0), c(0.5), c(2.0), c(0.3));
        let sigma = PolyC::from_reals(&[0.0, 1.0, -1.0]);
        let kappa0 = PolyC::new(vec![cc - b, b - a - 1.0]);
        let contour = ContourSpec::HalfLineDE {
            start: c(1.0),
            direction: c(1.0),
        };
        let r = euler_transform(&sigma, &kappa0, b - 1.0, &contour, z, false).unwrap();
        let want = gamma(a)
            * gamma(cc - a)
            * olver_classical(Classical::Gauss2F1 { a, b, c: cc }, z)
                .unwrap()
                .value;
        assert!(
            (r.value - want).norm() < 1e-9 * want.norm(),
            "got {} want {want}",
            r.value
        );
        assert!(r.boundary_term.norm() < 1e-10 * r.value.norm());
    }

    #[test]
    fn euler_recurrence_by_central_differences() {
        // ∂_z f_n = (n+1) f_{n+1}
        let (a, b, cc) = (c(1.2), c(0.7), c(2.1));
        let sigma = PolyC::from_reals(&[0.0, 1.0, -1.0]);
        let kappa0 = PolyC::new(vec![cc - b, b - a - 1.0]);
        let n = b - 1.0;
        let contour = ContourSpec::HalfLineDE {
            start: c(1.0),
            direction: c(1.0),
        };
        let f = |zz: C, nn: C| {
            euler_transform(&sigma, &kappa0, nn, &contour, zz, false)
                .unwrap()
                .value
        };
        let h = 1e-5;
        let z = c(0.3);
        let dfn = (f(z + h, n) - f(z - h, n)) / (2.0 * h);
        let rhs = (n + 1.0) * f(z, n + 1.0);
        assert!(
            (dfn - rhs).norm() < 1e-6 * rhs.norm().max(1.0),
            "{dfn} vs {rhs}"
        );
    }

    #[test]
    fn laplace_transform_is_1f1() {
        // data (σ=z, κ₀ = (c−a) − z), n = a−1, contour (0,1): equals
        // Γ(a)Γ(c−a)𝐅(a;c;z) up to the (1−s) vs (s−1) phase — compare against
        // the algebraic representation built the same way.
        let (a, cc, z) = (c(0.7), c(1.9), c(0.5));
        let sigma = PolyC::from_reals(&[0.0, 1.0]);
        let kappa0 = PolyC::new(vec![cc - a, c(-1.0)]);
        let contour = ContourSpec::Segment {
            from: c(0.0),
            to: c(1.0),
        };
        let r = laplace_transform(&sigma, &kappa0, a - 1.0, &contour, z).unwrap();
        // δ₀ = (s−1)^{c−a−1}; on (0,1) the principal branch gives
        // (s−1)^{c−a−1} = e^{iπ(c−a−1)}(1−s)^{c−a−1}
        let phase = (C::new(0.0, 1.0) * PI * (cc - a - 1.0)).exp();
        let want = phase
            * gamma(a)
            * gamma(cc - a)
            * olver_classical(Classical::Kummer1F1 { a, c: cc }, z)
                .unwrap()
                .value;
        assert!(
            (r.value - want).norm() < 1e-9 * want.norm(),
            "got {} want {}",
            r.value,
            want
        );
    }

    #[test]
    fn bessel_loop_formula() {
        // (1/2πi)∮ e^{t+z/t} t^{−1} dt = 𝐅(1;1) = Σ 1/(j!)²
        let r = named_representation(Named::Repr0F1Loop { c: c(1.0) }, c(1.0)).unwrap();
        let want = olver_classical(Classical::ZeroF1 { c: c(1.0) }, c(1.0))
            .unwrap()
            .value;
        assert!(
            (r.value - want).norm() < 1e-11,
            "got {} want {want}",
            r.value
        );
        assert!((want - c(2.2795853023360673)).norm() < 1e-9);
    }

    #[test]
    fn hermite_laplace_value() {
        // S(1;1) = 2∫₀^∞ e^{−t²−2t}dt; oracle by direct quadrature
        let r = named_representation(Named::ReprHermiteLaplace { a: c(1.0) }, c(1.0)).unwrap();
        let oracle = integrate(
            |t| (-t * t - 2.0 * t).exp(),
            &ContourSpec::Segment {
                from: c(0.0),
                to: c(12.0),
            },
        )
        .unwrap()
        .value
            * 2.0;
        assert!((r.value - oracle).norm() < 1e-10 * oracle.norm());
        let series = eval_classical(Classical::HermiteS { a: c(1.0) }, c(1.0), false).unwrap();
        assert!((r.value - series.value).norm() < 1e-9 * series.value.norm());
    }

    #[test]
    fn closed_loop_boundary_vanishes_identically() {
        // Rodrigues-style Euler data on a circle: the boundary expression of a
        // closed contour is zero by construction
        let sigma = PolyC::one();
        let kappa0 = PolyC::from_reals(&[0.0, -2.0]);
        let contour = ContourSpec::circle(c(1.0), 0.5);
        let r = euler_transform(&sigma, &kappa0, c(2.0), &contour, c(1.0), false).unwrap();
        assert_eq!(r.boundary_term, C::new(0.0, 0.0));
    }

    #[test]
    fn psi_loop_at_zero() {
        // Ψ₀(0) = 1 for μ = ν = 0 (coefficient of u⁰ in e^{−au})
        let r = named_representation(
            Named::PsiLoop {
                a: c(0.8),
                b: c(0.5),
                mu: c(0.0),
                nu: c(0.0),
                m: 0,
            },
            c(0.0),
        )
        .unwrap();
        assert!((r.value - c(1.0)).norm() < 1e-11, "got {}", r.value);
    }
}
