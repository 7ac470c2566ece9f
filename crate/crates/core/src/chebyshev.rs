//! The Chebyshev ladder: parameter sets with κ = ±σ′/2 whose equations are
//! solved by elementary functions of y(z) = ∫₀^z dx/√σ(x), and the closed
//! forms for the ₂F₁ and ₀F₁ families obtained by differentiating those
//! kernels k times. Differentiation is symbolic on a small expression tree.

use crate::error::{Error, Result};
use crate::gamma::{pochhammer, recip_gamma};
use crate::poly::PolyC;
use crate::quad::{integrate, ContourSpec};
use crate::series::{EvalMethod, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::rc::Rc;

/// Closed-form expression in one variable.
#[derive(Clone, Debug)]
pub enum Expr {
    Const(Complex64),
    Var,
    Add(Rc<Expr>, Rc<Expr>),
    Mul(Rc<Expr>, Rc<Expr>),
    /// base^exponent, principal branch.
    Pow(Rc<Expr>, Complex64),
    Sin(Rc<Expr>),
    Cos(Rc<Expr>),
    Sinh(Rc<Expr>),
    Cosh(Rc<Expr>),
    Exp(Rc<Expr>),
}

use Expr::*;

pub fn c(v: Complex64) -> Rc<Expr> {
    Rc::new(Const(v))
}

pub fn cr(v: f64) -> Rc<Expr> {
    c(Complex64::new(v, 0.0))
}

pub fn var() -> Rc<Expr> {
    Rc::new(Var)
}

pub fn add(a: Rc<Expr>, b: Rc<Expr>) -> Rc<Expr> {
    Rc::new(Add(a, b))
}

pub fn mul(a: Rc<Expr>, b: Rc<Expr>) -> Rc<Expr> {
    Rc::new(Mul(a, b))
}

pub fn pow(a: Rc<Expr>, e: Complex64) -> Rc<Expr> {
    Rc::new(Pow(a, e))
}

pub fn eval(e: &Expr, x: Complex64) -> Complex64 {
    match e {
        Const(v) => *v,
        Var => x,
        Add(a, b) => eval(a, x) + eval(b, x),
        Mul(a, b) => eval(a, x) * eval(b, x),
        Pow(a, p) => eval(a, x).powc(*p),
        Sin(a) => eval(a, x).sin(),
        Cos(a) => eval(a, x).cos(),
        Sinh(a) => eval(a, x).sinh(),
        Cosh(a) => eval(a, x).cosh(),
        Exp(a) => eval(a, x).exp(),
    }
}

pub fn diff(e: &Rc<Expr>) -> Rc<Expr> {
    match &**e {
        Const(_) => cr(0.0),
        Var => cr(1.0),
        Add(a, b) => add(diff(a), diff(b)),
        Mul(a, b) => add(mul(diff(a), b.clone()), mul(a.clone(), diff(b))),
        Pow(a, p) => mul(
            mul(c(*p), pow(a.clone(), p - Complex64::new(1.0, 0.0))),
            diff(a),
        ),
        Sin(a) => mul(Rc::new(Cos(a.clone())), diff(a)),
        Cos(a) => mul(mul(cr(-1.0), Rc::new(Sin(a.clone()))), diff(a)),
        Sinh(a) => mul(Rc::new(Cosh(a.clone())), diff(a)),
        Cosh(a) => mul(Rc::new(Sinh(a.clone())), diff(a)),
        Exp(a) => mul(e.clone(), diff(a)),
    }
}

pub fn diff_n(e: &Rc<Expr>, n: u32) -> Rc<Expr> {
    let mut cur = e.clone();
    for _ in 0..n {
        cur = diff(&cur);
    }
    cur
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// 𝐅(1+k+λ, 1+k−λ; 3/2+k; (1−w)/2)
    ///   = 2^k/(i√π (λ−k)_{2k+1}) ∂_w^k [((w+i√(1−w²))^λ − (w−i√(1−w²))^λ)/√(1−w²)].
    TwoF1Sin,
    /// 𝐅(−k+λ, −k−λ; ½−k; (1−w)/2)
    ///   = (1−w²)^{½+k}/(2√π(−2)^k) ∂_w^k [((w+i√(1−w²))^λ + (w−i√(1−w²))^λ)/√(1−w²)].
    TwoF1Cos,
    /// 𝐅(3/2+k; z) = (1/√π) ∂_z^k [sinh(2√z)/√z].
    ZeroF1Sinh,
    /// 𝐅(½−k; z) = z^{½+k}/√π ∂_z^k [cosh(2√z)/√z].
    ZeroF1Cosh,
}

/// The unified-function parameters the closed form must reproduce, as
/// (a, b, c) for the ₂F₁ kinds or (c,) for the ₀F₁ kinds.
pub fn chebyshev_target(kind: ChebyshevKind, k: u32, lambda: Complex64) -> Vec<Complex64> {
    let kf = k as f64;
    match kind {
        ChebyshevKind::TwoF1Sin => vec![
            lambda + (1.0 + kf),
            -lambda + (1.0 + kf),
            Complex64::new(1.5 + kf, 0.0),
        ],
        ChebyshevKind::TwoF1Cos => vec![lambda - kf, -lambda - kf, Complex64::new(0.5 - kf, 0.0)],
        ChebyshevKind::ZeroF1Sinh => vec![Complex64::new(1.5 + kf, 0.0)],
        ChebyshevKind::ZeroF1Cosh => vec![Complex64::new(0.5 - kf, 0.0)],
    }
}

fn sqrt_one_minus_w2() -> Rc<Expr> {
    pow(
        add(cr(1.0), mul(cr(-1.0), mul(var(), var()))),
        Complex64::new(0.5, 0.0),
    )
}

fn two_f1_kernel(lambda: Complex64, sign: f64) -> Rc<Expr> {
    let root = sqrt_one_minus_w2();
    let i = Complex64::new(0.0, 1.0);
    let u_plus = add(var(), mul(c(i), root.clone()));
    let u_minus = add(var(), mul(c(-i), root.clone()));
    let combo = add(pow(u_plus, lambda), mul(cr(sign), pow(u_minus, lambda)));
    mul(
        combo,
        pow(
            add(cr(1.0), mul(cr(-1.0), mul(var(), var()))),
            Complex64::new(-0.5, 0.0),
        ),
    )
}

fn zero_f1_kernel(hyperbolic_sign: f64) -> Rc<Expr> {
    // sinh(2√z)/√z or cosh(2√z)/√z
    let root = pow(var(), Complex64::new(0.5, 0.0));
    let arg = mul(cr(2.0), root);
    let osc: Rc<Expr> = if hyperbolic_sign > 0.0 {
        Rc::new(Sinh(arg))
    } else {
        Rc::new(Cosh(arg))
    };
    mul(osc, pow(var(), Complex64::new(-0.5, 0.0)))
}

/// Evaluates the k-th Chebyshev closed form. `lambda` is ignored for the ₀F₁
/// kinds. Branch points (w = ±1, z = 0) evaluate the removable limit for the
/// sinh/sin kernels and are rejected for the cosh/cos kernels.
pub fn chebyshev_eval(
    kind: ChebyshevKind,
    k: u32,
    lambda: Complex64,
    arg: Complex64,
) -> Result<EvalResult> {
    let kf = k as f64;
    let one = Complex64::new(1.0, 0.0);
    match kind {
        ChebyshevKind::ZeroF1Sinh => {
            if arg.norm() == 0.0 {
                // limit is 𝐅(3/2+k; 0) = 1/Γ(3/2+k)
                return Ok(EvalResult::closed(recip_gamma(Complex64::new(
                    1.5 + kf,
                    0.0,
                ))));
            }
            let d = diff_n(&zero_f1_kernel(1.0), k);
            let v = eval(&d, arg) / PI.sqrt();
            Ok(EvalResult {
                value: v,
                terms_used: 1,
                truncation_estimate: 0.0,
                method: EvalMethod::ClosedForm,
            })
        }
        ChebyshevKind::ZeroF1Cosh => {
            if arg.norm() == 0.0 {
                return Err(Error::DomainError(
                    "cosh kernel is singular at z = 0".into(),
                ));
            }
            let d = diff_n(&zero_f1_kernel(-1.0), k);
            let v = arg.powc(Complex64::new(0.5 + kf, 0.0)) * eval(&d, arg) / PI.sqrt();
            Ok(EvalResult {
                value: v,
                terms_used: 1,
                truncation_estimate: 0.0,
                method: EvalMethod::ClosedForm,
            })
        }
        ChebyshevKind::TwoF1Sin => {
            if (arg - one).norm() == 0.0 || (arg + one).norm() == 0.0 {
                // kernel difference vanishes; the limit is the value at z = 0
                // of 𝐅, i.e. 1/Γ(3/2+k), only at w = 1
                if (arg - one).norm() == 0.0 {
                    return Ok(EvalResult::closed(recip_gamma(Complex64::new(
                        1.5 + kf,
                        0.0,
                    ))));
                }
                return Err(Error::DomainError("branch point w = -1".into()));
            }
            let d = diff_n(&two_f1_kernel(lambda, -1.0), k);
            let denom = Complex64::new(0.0, 1.0) * PI.sqrt() * pochhammer(lambda - kf, 2 * k + 1);
            let v = Complex64::new(2.0f64.powi(k as i32), 0.0) / denom * eval(&d, arg);
            Ok(EvalResult {
                value: v,
                terms_used: 1,
                truncation_estimate: 0.0,
                method: EvalMethod::ClosedForm,
            })
        }
        ChebyshevKind::TwoF1Cos => {
            if (arg - one).norm() == 0.0 || (arg + one).norm() == 0.0 {
                return Err(Error::DomainError("branch point w = ±1".into()));
            }
            let d = diff_n(&two_f1_kernel(lambda, 1.0), k);
            let pref = (one - arg * arg).powc(Complex64::new(0.5 + kf, 0.0));
            let denom = 2.0 * PI.sqrt() * Complex64::new(-2.0, 0.0).powi(k as i32);
            let v = pref / denom * eval(&d, arg);
            Ok(EvalResult {
                value: v,
                terms_used: 1,
                truncation_estimate: 0.0,
                method: EvalMethod::ClosedForm,
            })
        }
    }
}

/// y(z) = ∫₀^z dx/√σ(x) by quadrature along the straight segment.
pub fn y_of_z(sigma: &PolyC, z: Complex64) -> Result<Complex64> {
    let r = integrate(
        |x| sigma.eval(x).powc(Complex64::new(-0.5, 0.0)),
        &ContourSpec::Segment {
            from: Complex64::new(0.0, 0.0),
            to: z,
        },
    )?;
    Ok(r.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevGauge {
    /// κ = −σ′/2: operator σ∂² + (σ′/2)∂ + ω.
    Plain,
    /// κ = +σ′/2: operator σ∂² + (3σ′/2)∂ + σ″/2 + ω.
    OverSqrtSigma,
}

/// Applies the Chebyshev-ladder operator to a candidate solution by central
/// second differences (step 1e-4) on a grid and returns the max residual.
/// A true elementary solution leaves a residual at the differencing floor
/// (~1e-7); a wrong frequency reading leaves an O(1) residual.
pub fn chebyshev_residual<F: Fn(Complex64) -> Complex64>(
    sigma: &PolyC,
    omega: Complex64,
    gauge: ChebyshevGauge,
    candidate: F,
    grid: &[Complex64],
) -> f64 {
    let h = 1e-4;
    let spp = sigma.coeff(2) * 2.0;
    let mut worst = 0.0f64;
    for &z in grid {
        let fm = candidate(z - h);
        let f0 = candidate(z);
        let fp = candidate(z + h);
        let d1 = (fp - fm) / (2.0 * h);
        let d2 = (fp - 2.0 * f0 + fm) / (h * h);
        let sp = sigma.derivative().eval(z);
        let r = match gauge {
            ChebyshevGauge::Plain => sigma.eval(z) * d2 + sp / 2.0 * d1 + omega * f0,
            ChebyshevGauge::OverSqrtSigma => {
                sigma.eval(z) * d2 + 1.5 * sp * d1 + (spp / 2.0 + omega) * f0
            }
        };
        worst = worst.max(r.norm() / f0.norm().max(1.0));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{olver_classical, Classical};
    use num_complex::Complex64 as C;

    fn cx(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn expression_diff_basics() {
        // d/dz sinh(2√z)/√z at a point, against finite differences
        let k = zero_f1_kernel(1.0);
        let d = diff(&k);
        let z = cx(0.7);
        let h = 1e-6;
        let fd = (eval(&k, z + h) - eval(&k, z - h)) / (2.0 * h);
        assert!((eval(&d, z) - fd).norm() < 1e-8);
    }

    #[test]
    fn zero_f1_sinh_values() {
        // k = 0, z = 1 → sinh 2/√π, equal to 𝐅(3/2;1)
        let r = chebyshev_eval(ChebyshevKind::ZeroF1Sinh, 0, cx(0.0), cx(1.0)).unwrap();
        let want = (2.0f64).sinh() / PI.sqrt();
        assert!((r.value - cx(want)).norm() < 1e-13);
        // limit z → 0 is 1/Γ(3/2) = 2/√π
        let r = chebyshev_eval(ChebyshevKind::ZeroF1Sinh, 0, cx(0.0), cx(0.0)).unwrap();
        assert!((r.value - cx(2.0 / PI.sqrt())).norm() < 1e-14);
    }

    #[test]
    fn zero_f1_cosh_value() {
        let r = chebyshev_eval(ChebyshevKind::ZeroF1Cosh, 0, cx(0.0), cx(1.0)).unwrap();
        let want = (2.0f64).cosh() / PI.sqrt();
        assert!((r.value - cx(want)).norm() < 1e-13);
        assert!(chebyshev_eval(ChebyshevKind::ZeroF1Cosh, 0, cx(0.0), cx(0.0)).is_err());
    }

    #[test]
    fn zero_f1_families_match_series() {
        for k in 0..=2u32 {
            for &z in &[0.35, 1.0, 2.2] {
                let target = chebyshev_target(ChebyshevKind::ZeroF1Sinh, k, cx(0.0))[0];
                let closed = chebyshev_eval(ChebyshevKind::ZeroF1Sinh, k, cx(0.0), cx(z))
                    .unwrap()
                    .value;
                let series = olver_classical(Classical::ZeroF1 { c: target }, cx(z))
                    .unwrap()
                    .value;
                assert!(
                    (closed - series).norm() < 1e-10 * series.norm().max(1.0),
                    "sinh k={k} z={z}: {closed} vs {series}"
                );

                let target = chebyshev_target(ChebyshevKind::ZeroF1Cosh, k, cx(0.0))[0];
                let closed = chebyshev_eval(ChebyshevKind::ZeroF1Cosh, k, cx(0.0), cx(z))
                    .unwrap()
                    .value;
                let series = olver_classical(Classical::ZeroF1 { c: target }, cx(z))
                    .unwrap()
                    .value;
                assert!(
                    (closed - series).norm() < 1e-10 * series.norm().max(1.0),
                    "cosh k={k} z={z}: {closed} vs {series}"
                );
            }
        }
    }

    #[test]
    fn two_f1_families_match_series_k0() {
        let lambda = cx(0.6);
        for &w in &[0.3, -0.2, 0.75] {
            let z = (1.0 - w) / 2.0;
            for kind in [ChebyshevKind::TwoF1Sin, ChebyshevKind::TwoF1Cos] {
                let t = chebyshev_target(kind, 0, lambda);
                let closed = chebyshev_eval(kind, 0, lambda, cx(w)).unwrap().value;
                let series = olver_classical(
                    Classical::Gauss2F1 {
                        a: t[0],
                        b: t[1],
                        c: t[2],
                    },
                    cx(z),
                )
                .unwrap()
                .value;
                assert!(
                    (closed - series).norm() < 1e-10 * series.norm().max(1.0),
                    "{kind:?} w={w}: {closed} vs {series}"
                );
            }
        }
    }

    #[test]
    fn residual_confirms_sqrt_omega_reading() {
        // σ = 1, ω = 4: sin(√ω z) = sin(2z) is annihilated by ∂² + ω;
        // sin(ω z) = sin(4z) is not.
        let sigma = PolyC::one();
        let grid: Vec<C> = [0.2, 0.5, 0.8, 1.1].iter().map(|&x| cx(x)).collect();
        let good = chebyshev_residual(
            &sigma,
            cx(4.0),
            ChebyshevGauge::Plain,
            |z| (2.0 * z).sin(),
            &grid,
        );
        assert!(good < 1e-6, "good candidate residual {good}");
        let bad = chebyshev_residual(
            &sigma,
            cx(4.0),
            ChebyshevGauge::Plain,
            |z| (4.0 * z).sin(),
            &grid,
        );
        assert!(bad > 1e-2, "bad candidate residual {bad}");
    }

    #[test]
    fn residual_for_sigma_z() {
        // σ = z: y = 2√z; sin(√ω·2√z) solves z f″ + ½f′ + ωf = 0
        let sigma = PolyC::from_reals(&[0.0, 1.0]);
        let omega = cx(2.25);
        let grid: Vec<C> = [0.4, 0.9, 1.6].iter().map(|&x| cx(x)).collect();
        let r = chebyshev_residual(
            &sigma,
            omega,
            ChebyshevGauge::Plain,
            |z| {
                let y = 2.0 * z.sqrt();
                (omega.sqrt() * y).sin()
            },
            &grid,
        );
        assert!(r < 1e-6, "residual {r}");
    }

    #[test]
    fn y_of_z_quadrature() {
        // σ = z → y(z) = 2√z, with the integrable endpoint singularity
        let sigma = PolyC::from_reals(&[0.0, 1.0]);
        let y = y_of_z(&sigma, cx(0.81)).unwrap();
        assert!((y - cx(1.8)).norm() < 1e-10, "got {y}");
    }
}
