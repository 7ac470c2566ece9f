//! Quadrature on the contours the integral representations need: circles
//! (trapezoidal rule, spectrally accurate for analytic integrands), segments
//! and half-lines (tanh-sinh / exp-sinh double-exponential rules with level
//! doubling), and keyhole loops assembled from two rays and a circular cap.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const DEFAULT_CIRCLE_NODES: usize = 512;
pub const MAX_DE_LEVEL: usize = 12;
pub const DE_REL_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub enum ContourSpec {
    /// |t − center| = radius, counterclockwise.
    Circle { center: Complex64, radius: f64 },
    /// Straight segment.
    Segment { from: Complex64, to: Complex64 },
    /// start + τ·direction, τ ∈ (0,∞), double-exponential mapped.
    HalfLineDE {
        start: Complex64,
        direction: Complex64,
    },
    /// Keyhole from ∞·e^{iπ∓i(π−approach_angle)}: incoming ray, circular cap
    /// around the enclosed points, outgoing ray.
    HankelLoop {
        enclosed: Vec<Complex64>,
        approach_angle: f64,
        stem_length: f64,
    },
}

impl ContourSpec {
    pub fn circle(center: Complex64, radius: f64) -> Self {
        ContourSpec::Circle { center, radius }
    }

    /// Default loop around the given points: centered at their centroid with
    /// radius 1.5× the max distance (at least `min_radius`).
    pub fn loop_around(points: &[Complex64], min_radius: f64) -> Self {
        let n = points.len().max(1) as f64;
        let center = points.iter().fold(Complex64::new(0.0, 0.0), |s, &p| s + p) / n;
        let maxd = points
            .iter()
            .map(|p| (p - center).norm())
            .fold(0.0f64, f64::max);
        ContourSpec::Circle {
            center,
            radius: (1.5 * maxd).max(min_radius),
        }
    }

    /// Default keyhole enclosing the given points.
    pub fn hankel(enclosed: Vec<Complex64>) -> Self {
        ContourSpec::HankelLoop {
            enclosed,
            approach_angle: 3.0 * PI / 4.0,
            stem_length: 0.0,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_estimate: f64,
    /// Boundary expression difference f(end) − f(start) for open contours;
    /// identically zero for closed ones.
    pub boundary_term: Complex64,
    /// Largest node contribution seen; the scale against which a near-zero
    /// value (cancelling integrand) is judged converged.
    pub node_scale: f64,
}

impl QuadResult {
    fn new(value: Complex64, err: f64) -> Self {
        Self::with_scale(value, err, value.norm())
    }

    fn with_scale(value: Complex64, err: f64, scale: f64) -> Self {
        QuadResult {
            value,
            err_estimate: err,
            boundary_term: Complex64::new(0.0, 0.0),
            node_scale: scale,
        }
    }
}

/// ∮ over a circle by the trapezoidal rule, doubling the node count until the
/// value settles.
fn integrate_circle<F: Fn(&Node) -> Complex64>(
    f: &F,
    center: Complex64,
    radius: f64,
    max_nodes: usize,
) -> QuadResult {
    let mut n = 32usize;
    let eval_with = |n: usize| {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut scale = 0.0f64;
        for k in 0..n {
            let th = 2.0 * PI * (k as f64) / (n as f64);
            let e = Complex64::new(0.0, th).exp();
            let off = radius * e;
            let node = Node {
                point: center + off,
                anchor: center,
                offset: off,
            };
            // dt = i·radius·e^{iθ} dθ
            let term = f(&node) * Complex64::new(0.0, 1.0) * radius * e;
            scale = scale.max(term.norm());
            sum += term;
        }
        (sum * (2.0 * PI / n as f64), scale * 2.0 * PI)
    };
    let (mut prev, mut scale) = eval_with(n);
    loop {
        n *= 2;
        let (cur, s) = eval_with(n);
        scale = scale.max(s);
        let err = (cur - prev).norm();
        if err <= DE_REL_TOL * cur.norm().max(1e-300) || n >= max_nodes {
            return QuadResult::with_scale(cur, err, scale);
        }
        prev = cur;
    }
}

/// tanh-sinh rule on [-1,1] with level doubling. The integrand receives
/// (x, δ) where δ = 1 − |x| is computed in stable form (2/(e^{2s}+1)), so
/// endpoint-singular integrands keep full relative accuracy near ±1.
fn tanh_sinh<F: Fn(f64, f64) -> Complex64>(f: &F) -> (Complex64, f64) {
    // node at u > 0: x = tanh(s), δ = 1 − x, weight w
    let eval_node = |u: f64| -> Option<(f64, f64, f64)> {
        let s = (PI / 2.0) * u.sinh();
        if s > 350.0 {
            return None;
        }
        let x = s.tanh();
        let delta = 2.0 / ((2.0 * s).exp() + 1.0);
        let w = (PI / 2.0) * u.cosh() / s.cosh().powi(2);
        if w.is_nan() || w <= 1e-308 {
            return None;
        }
        Some((x, delta, w))
    };
    let mut h = 1.0f64;
    let mut total = {
        let mut s = f(0.0, 1.0) * (PI / 2.0);
        let mut j = 1;
        while let Some((x, delta, w)) = eval_node(j as f64 * h) {
            let contrib = (f(x, delta) + f(-x, delta)) * w;
            if contrib.is_finite() {
                s += contrib;
            }
            if contrib.norm() < 1e-300 && j > 8 {
                break;
            }
            j += 1;
            if j > 4000 {
                break;
            }
        }
        s * h
    };
    let mut err = f64::INFINITY;
    for _level in 1..=MAX_DE_LEVEL {
        h /= 2.0;
        // new nodes at odd multiples of h
        let mut s = Complex64::new(0.0, 0.0);
        let mut j = 1u64;
        let mut dead = 0;
        loop {
            let u = j as f64 * h;
            match eval_node(u) {
                Some((x, delta, w)) => {
                    let contrib = (f(x, delta) + f(-x, delta)) * w;
                    if contrib.is_finite() {
                        s += contrib;
                    }
                    if contrib.norm() < 1e-300 {
                        dead += 1;
                        if dead > 8 && u > 3.0 {
                            break;
                        }
                    } else {
                        dead = 0;
                    }
                }
                _ => break,
            }
            j += 2;
            if j > 4_000_000 {
                break;
            }
        }
        let refined = total / 2.0 + s * h;
        err = (refined - total).norm();
        total = refined;
        if err <= DE_REL_TOL * total.norm().max(1e-300) {
            break;
        }
    }
    (total, err)
}

/// exp-sinh rule on (0,∞): t = exp((π/2) sinh u).
fn exp_sinh<F: Fn(f64) -> Complex64>(f: &F) -> (Complex64, f64) {
    let eval_node = |u: f64| -> Option<(f64, f64)> {
        let s = (PI / 2.0) * u.sinh();
        if s.abs() > 690.0 {
            return None;
        }
        let t = s.exp();
        let w = t * (PI / 2.0) * u.cosh();
        Some((t, w))
    };
    let mut h = 1.0f64;
    let sum_nodes = |h: f64, odd_only: bool| -> Complex64 {
        let mut s = if odd_only {
            Complex64::new(0.0, 0.0)
        } else {
            f(1.0) * (PI / 2.0)
        };
        for dir in [1.0f64, -1.0] {
            let mut j: u64 = 1;
            let mut dead = 0;
            loop {
                if odd_only && j.is_multiple_of(2) {
                    j += 1;
                    continue;
                }
                let u = dir * j as f64 * h;
                match eval_node(u) {
                    Some((t, w)) if w > 0.0 && w.is_finite() => {
                        let contrib = f(t) * w;
                        if contrib.is_finite() {
                            s += contrib;
                            if contrib.norm() < 1e-300 {
                                dead += 1;
                                if dead > 4 {
                                    break;
                                }
                            } else {
                                dead = 0;
                            }
                        } else {
                            break;
                        }
                    }
                    _ => break,
                }
                j += 1;
                if j > 4_000_000 {
                    break;
                }
            }
        }
        s
    };
    let mut total = sum_nodes(h, false) * h;
    let mut err = f64::INFINITY;
    for _level in 1..=MAX_DE_LEVEL {
        h /= 2.0;
        let add = sum_nodes(h, true) * h;
        let refined = total / 2.0 + add;
        err = (refined - total).norm();
        total = refined;
        if err <= DE_REL_TOL * total.norm().max(1e-300) {
            break;
        }
    }
    (total, err)
}

/// A quadrature node: the point, plus the same point expressed as an exact
/// offset from an anchor (the nearest contour endpoint, or the loop center).
/// Integrands with a singularity at the anchor evaluate (point − anchor)
/// through `offset` and keep full relative accuracy there.
#[derive(Clone, Copy, Debug)]
pub struct Node {
    pub point: Complex64,
    pub anchor: Complex64,
    pub offset: Complex64,
}

impl Node {
    /// point − root, routed through the stable offset when the root is the
    /// anchor itself.
    pub fn dist_to(&self, root: Complex64) -> Complex64 {
        (self.anchor - root) + self.offset
    }
}

/// Integrates an analytic integrand along the contour. Branch choices inside
/// `f` are the caller's responsibility; the prebuilt contours in
/// `transforms` are arranged so that principal branches are continuous on
/// every piece.
pub fn integrate<F: Fn(Complex64) -> Complex64>(f: F, contour: &ContourSpec) -> Result<QuadResult> {
    integrate_nodes(|n: &Node| f(n.point), contour)
}

/// `integrate` with an explicit node budget (clamped to at least 16); the
/// default budget is 2^16 circle nodes / 12 doubling levels.
pub fn integrate_with_budget<F: Fn(Complex64) -> Complex64>(
    f: F,
    contour: &ContourSpec,
    points: usize,
) -> Result<QuadResult> {
    let budget = points.max(16);
    match contour {
        ContourSpec::Circle { center, radius } => {
            if *radius <= 0.0 {
                return Err(Error::DomainError("circle radius must be positive".into()));
            }
            let r = integrate_circle(&|n: &Node| f(n.point), *center, *radius, budget);
            check_converged(r)
        }
        _ => integrate_nodes(|n: &Node| f(n.point), contour),
    }
}

/// Flags results whose refinement stalled far from convergence. A tiny value
/// arising from a cancelling integrand counts as converged when the error is
/// negligible against the node scale.
fn check_converged(r: QuadResult) -> Result<QuadResult> {
    let floor = 1e-13 * r.node_scale;
    if r.err_estimate > 1e-4 * (r.value.norm() + 1e-300) && r.err_estimate > floor {
        return Err(Error::NoConvergence(format!(
            "quadrature stalled: estimate {:.3e} relative to value {:.3e}",
            r.err_estimate,
            r.value.norm()
        )));
    }
    Ok(r)
}

/// Node-aware integration; see [`Node`].
pub fn integrate_nodes<F: Fn(&Node) -> Complex64>(
    f: F,
    contour: &ContourSpec,
) -> Result<QuadResult> {
    match contour {
        ContourSpec::Circle { center, radius } => {
            if *radius <= 0.0 {
                return Err(Error::DomainError("circle radius must be positive".into()));
            }
            check_converged(integrate_circle(&f, *center, *radius, 1 << 16))
        }
        ContourSpec::Segment { from, to } => {
            let half = (to - from) / 2.0;
            // measure from the nearest endpoint: full relative accuracy for
            // endpoint-singular integrands
            let (v, e) = tanh_sinh(&|x, delta| {
                let node = if x >= 0.0 {
                    let off = -half * delta;
                    Node {
                        point: to + off,
                        anchor: *to,
                        offset: off,
                    }
                } else {
                    let off = half * delta;
                    Node {
                        point: from + off,
                        anchor: *from,
                        offset: off,
                    }
                };
                f(&node) * half
            });
            check_converged(QuadResult::new(v, e))
        }
        ContourSpec::HalfLineDE { start, direction } => {
            if direction.norm() == 0.0 {
                return Err(Error::DomainError("half-line needs a direction".into()));
            }
            let (v, e) = exp_sinh(&|t| {
                let off = *direction * t;
                let node = Node {
                    point: start + off,
                    anchor: *start,
                    offset: off,
                };
                f(&node) * direction
            });
            check_converged(QuadResult::new(v, e))
        }
        ContourSpec::HankelLoop {
            enclosed,
            approach_angle,
            stem_length: _,
        } => {
            let (center, radius) = hankel_cap(enclosed);
            let th = *approach_angle;
            let e_up = Complex64::new(0.0, th).exp();
            let e_dn = Complex64::new(0.0, -th).exp();
            // incoming ray: from ∞ toward the cap along e^{-iθ} (reversed sign)
            let start_dn = center + radius * e_dn;
            let (v_in, e_in) = exp_sinh(&|t| {
                let off = e_dn * t;
                let node = Node {
                    point: start_dn + off,
                    anchor: start_dn,
                    offset: off,
                };
                f(&node) * e_dn
            });
            // cap arc θ ∈ (−th, th) through 0, counterclockwise
            let (v_cap, e_cap) = tanh_sinh(&|x, _| {
                let theta = th * x;
                let e = Complex64::new(0.0, theta).exp();
                let off = radius * e;
                let node = Node {
                    point: center + off,
                    anchor: center,
                    offset: off,
                };
                f(&node) * Complex64::new(0.0, 1.0) * radius * e * th
            });
            // outgoing ray along e^{iθ}
            let start_up = center + radius * e_up;
            let (v_out, e_out) = exp_sinh(&|t| {
                let off = e_up * t;
                let node = Node {
                    point: start_up + off,
                    anchor: start_up,
                    offset: off,
                };
                f(&node) * e_up
            });
            check_converged(QuadResult::new(-v_in + v_cap + v_out, e_in + e_cap + e_out))
        }
    }
}

/// Cap circle for a keyhole: centroid of the enclosed points, radius
/// 0.3·(1+|center|) but always clearing the points by a factor 1.6.
pub fn hankel_cap(enclosed: &[Complex64]) -> (Complex64, f64) {
    let n = enclosed.len().max(1) as f64;
    let center = enclosed
        .iter()
        .fold(Complex64::new(0.0, 0.0), |s, &p| s + p)
        / n;
    let maxd = enclosed
        .iter()
        .map(|p| (p - center).norm())
        .fold(0.0f64, f64::max);
    let radius = (0.3 * (1.0 + center.norm())).max(1.6 * maxd);
    (center, radius)
}
