//! Dense univariate polynomials with complex coefficients.
//!
//! `PolyC` stores coefficients lowest degree first. The zero polynomial is the
//! empty coefficient list. Arithmetic is plain schoolbook; every degree in this
//! crate is tiny (operators of order ≤ 4, polynomials of degree ≤ ~20).

use num_complex::Complex64;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyC {
    /// Coefficients, lowest degree first. Invariant: last entry nonzero.
    coeffs: Vec<Complex64>,
}

impl PolyC {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = PolyC { coeffs };
        p.normalize();
        p
    }

    pub fn from_reals(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        PolyC { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial z.
    pub fn var() -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
    }

    /// c·z^k
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Self::one();
        for &r in roots {
            p = p.mul(&Self::new(vec![-r, Complex64::new(1.0, 0.0)]));
        }
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.norm() == 0.0) {
            self.coeffs.pop();
        }
    }

    /// Copy with coefficients below `rel_tol` of the largest one zeroed and
    /// the degree recomputed. Arithmetic never trims implicitly (tiny
    /// coefficients can carry large weighted contributions); callers that
    /// need a cleaned degree ask for it explicitly.
    pub fn trimmed(&self, rel_tol: f64) -> PolyC {
        let scale = self.max_coeff_norm();
        if scale == 0.0 {
            return PolyC::zero();
        }
        PolyC::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c.norm() < rel_tol * scale {
                        Complex64::new(0.0, 0.0)
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of this crate
    /// (callers that care test `is_zero` first).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of z^k (zero when k exceeds the degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs
            .last()
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn add(&self, other: &PolyC) -> PolyC {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        PolyC::new(v)
    }

    pub fn sub(&self, other: &PolyC) -> PolyC {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyC {
        PolyC {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> PolyC {
        PolyC::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &PolyC) -> PolyC {
        if self.is_zero() || other.is_zero() {
            return PolyC::zero();
        }
        let mut v = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolyC::new(v)
    }

    pub fn derivative(&self) -> PolyC {
        if self.coeffs.len() <= 1 {
            return PolyC::zero();
        }
        PolyC::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * ((i + 1) as f64))
                .collect(),
        )
    }

    pub fn pow(&self, n: usize) -> PolyC {
        let mut acc = PolyC::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// p(a + b·w) as a polynomial in w.
    pub fn compose_affine(&self, a: Complex64, b: Complex64) -> PolyC {
        let arg = PolyC::new(vec![a, b]);
        let mut acc = PolyC::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&PolyC::constant(c));
        }
        acc
    }

    /// Exact division; returns None when `self` is not a polynomial multiple of
    /// `div` within the default tolerance.
    pub fn div_exact(&self, div: &PolyC) -> Option<PolyC> {
        self.div_exact_tol(div, 1e-10)
    }

    /// Exact division with an explicit relative remainder tolerance.
    pub fn div_exact_tol(&self, div: &PolyC, rel_tol: f64) -> Option<PolyC> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PolyC::zero());
        }
        if self.coeffs.len() < div.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dn = div.coeffs.len();
        let lead = div.coeffs[dn - 1];
        let qn = rem.len() - dn + 1;
        let mut q = vec![Complex64::new(0.0, 0.0); qn];
        for k in (0..qn).rev() {
            let c = rem[k + dn - 1] / lead;
            q[k] = c;
            for j in 0..dn {
                rem[k + j] -= c * div.coeffs[j];
            }
        }
        let scale = self.max_coeff_norm().max(1e-300);
        let rem_norm = rem.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if rem_norm <= rel_tol * scale {
            Some(PolyC::new(q))
        } else {
            None
        }
    }

    /// Divides by z^k (drops the k lowest coefficients; they must be zero).
    pub fn shift_down(&self, k: usize) -> PolyC {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        PolyC::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Coefficientwise closeness, relative to the larger max-magnitude
    /// coefficient of the pair.
    pub fn approx_eq(&self, other: &PolyC, rel_tol: f64) -> bool {
        self.residual_against(other) <= rel_tol
    }

    /// Max coefficientwise difference relative to the pair's scale.
    pub fn residual_against(&self, other: &PolyC) -> f64 {
        let scale = self.max_coeff_norm().max(other.max_coeff_norm());
        if scale == 0.0 {
            return 0.0;
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut worst = 0.0f64;
        for k in 0..n {
            worst = worst.max((self.coeff(k) - other.coeff(k)).norm());
        }
        worst / scale
    }
}

fn fmt_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("({}{}i)", c.re, c.im)
    } else {
        format!("({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for PolyC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.norm() == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_complex(c))?,
                1 => write!(f, "{}·z", fmt_complex(c))?,
                _ => write!(f, "{}·z^{}", fmt_complex(c), k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn zero_normalizes() {
        let p = PolyC::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn degree_is_last_nonzero() {
        let p = PolyC::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn mul_and_eval_agree() {
        let p = PolyC::from_reals(&[1.0, 2.0, 3.0]);
        let q = PolyC::from_reals(&[-1.0, 1.0]);
        let pq = p.mul(&q);
        let z = c(0.7, -0.3);
        assert!((pq.eval(z) - p.eval(z) * q.eval(z)).norm() < 1e-14);
    }

    #[test]
    fn div_exact_roundtrip() {
        let p = PolyC::from_reals(&[1.0, 2.0, 3.0]);
        let q = PolyC::from_reals(&[-1.0, 1.0, 0.5]);
        let pq = p.mul(&q);
        let back = pq.div_exact(&q).expect("divides");
        assert!(back.approx_eq(&p, 1e-12));
        assert!(pq.add(&PolyC::one()).div_exact(&q).is_none());
    }

    #[test]
    fn affine_composition() {
        let p = PolyC::from_reals(&[0.0, 0.0, 1.0]); // z^2
        let q = p.compose_affine(c(1.0, 0.0), c(2.0, 0.0)); // (1+2w)^2
        assert!(q.approx_eq(&PolyC::from_reals(&[1.0, 4.0, 4.0]), 1e-14));
    }
}
