//! Numeric root extraction for the small polynomials of this crate.
//!
//! Degrees 1 and 2 use closed forms (with a documented discriminant threshold
//! deciding root multiplicity); anything larger goes through Durand–Kerner,
//! which is plenty at degree ≤ 12.

use crate::poly::PolyC;
use num_complex::Complex64;

/// |disc| below this times the coefficient scale squared counts as a double root.
pub const DOUBLE_ROOT_DISC: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaRoots {
    /// deg σ = 2, distinct roots.
    TwoDistinct(usize, usize),
    /// deg σ = 2, double root.
    Double(usize),
    /// deg σ = 1.
    Single(usize),
    /// deg σ = 0.
    None,
}

/// Roots of a degree ≤ 2 polynomial together with the multiplicity structure.
/// Returns the roots and a tag; the indices in the tag refer to the vector.
pub fn sigma_root_structure(p: &PolyC) -> (Vec<Complex64>, SigmaRoots) {
    match p.degree() {
        0 => (vec![], SigmaRoots::None),
        1 => {
            let r = -p.coeff(0) / p.coeff(1);
            (vec![r], SigmaRoots::Single(0))
        }
        2 => {
            let a = p.coeff(2);
            let b = p.coeff(1);
            let c = p.coeff(0);
            let disc = b * b - 4.0 * a * c;
            let scale = p.max_coeff_norm();
            if disc.norm() < DOUBLE_ROOT_DISC * scale * scale {
                let r = -b / (2.0 * a);
                (vec![r], SigmaRoots::Double(0))
            } else {
                let sq = disc.sqrt();
                // pick the sign that avoids cancellation in -b ± sq
                let q = if (b + sq).norm() >= (b - sq).norm() {
                    -(b + sq) / 2.0
                } else {
                    -(b - sq) / 2.0
                };
                let r1 = q / a;
                let r2 = c / q;
                (vec![r1, r2], SigmaRoots::TwoDistinct(0, 1))
            }
        }
        _ => panic!("sigma_root_structure expects degree <= 2"),
    }
}

/// All roots (with multiplicity) via Durand–Kerner. Intended for the small,
/// well-scaled polynomials appearing in rational-function normalization.
pub fn all_roots(p: &PolyC) -> Vec<Complex64> {
    let n = if p.is_zero() { 0 } else { p.degree() };
    match n {
        0 => return vec![],
        1 => return vec![-p.coeff(0) / p.coeff(1)],
        2 => {
            let (mut r, tag) = sigma_root_structure(p);
            if let SigmaRoots::Double(_) = tag {
                r.push(r[0]);
            }
            return r;
        }
        _ => {}
    }
    let lead = p.leading();
    let monic: Vec<Complex64> = p.coeffs().iter().map(|&c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // starting points on a circle of radius from the coefficient bound
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            radius * 0.7 * Complex64::new(th.cos(), th.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= zs[i] - zs[j];
                }
            }
            if den.norm() == 0.0 {
                zs[i] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let d = eval(zs[i]) / den;
            zs[i] -= d;
            shift = shift.max(d.norm());
        }
        if shift < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    zs
}
