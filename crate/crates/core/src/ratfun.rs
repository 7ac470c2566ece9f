//! Rational functions in one variable, the coefficient field of `DiffOp`.
//!
//! Representations are kept reduced: common roots of numerator and denominator
//! (matched within a clustering tolerance) are cancelled and the denominator is
//! made monic. Degrees stay small (≤ ~12 after compositions), so numeric root
//! matching is robust here.

use crate::poly::PolyC;
use crate::roots::all_roots;
use num_complex::Complex64;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct RatFun {
    pub num: PolyC,
    pub den: PolyC,
}

impl RatFun {
    pub fn new(num: PolyC, den: PolyC) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(num: PolyC) -> Self {
        RatFun {
            num,
            den: PolyC::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyC::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyC::one())
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_poly(PolyC::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the numerator if the denominator is (numerically) constant 1.
    pub fn as_poly(&self) -> Option<&PolyC> {
        if self.den.degree() == 0 && !self.den.is_zero() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PolyC::one();
            return;
        }
        // cancel a common monomial factor z^k exactly
        let low_zeros = |p: &PolyC| p.coeffs().iter().take_while(|c| c.norm() == 0.0).count();
        let k = low_zeros(&self.num).min(low_zeros(&self.den));
        if k > 0 {
            self.num = self.num.shift_down(k);
            self.den = self.den.shift_down(k);
        }
        // collapse to a polynomial when the division is exact; this keeps the
        // representation stable without numerically matching repeated roots
        if self.den.degree() > 0 {
            if let Some(q) = self.num.div_exact_tol(&self.den, 1e-12) {
                self.num = q;
                self.den = PolyC::one();
                return;
            }
            // cancel simple shared roots when both sides factor cleanly
            if self.den.degree() <= 2 {
                let den_roots = all_roots(&self.den);
                for r in den_roots {
                    let lin = PolyC::new(vec![-r, Complex64::new(1.0, 0.0)]);
                    if let (Some(qn), Some(qd)) = (
                        self.num.div_exact_tol(&lin, 1e-12),
                        self.den.div_exact_tol(&lin, 1e-12),
                    ) {
                        self.num = qn;
                        self.den = qd;
                    }
                }
            }
        }
        // monic denominator
        let lead = self.den.leading();
        self.den = self.den.scale(Complex64::new(1.0, 0.0) / lead);
        self.num = self.num.scale(Complex64::new(1.0, 0.0) / lead);
    }

    /// Addition with the smallest common denominator that divisibility
    /// testing can find; blindly multiplying denominators lets degrees and
    /// rounding noise snowball in long operator compositions.
    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if let Some(q) = self.den.div_exact_tol(&other.den, 1e-12) {
            // self.den = other.den · q
            return RatFun::new(self.num.add(&other.num.mul(&q)), self.den.clone());
        }
        if let Some(q) = other.den.div_exact_tol(&self.den, 1e-12) {
            return RatFun::new(other.num.add(&self.num.mul(&q)), other.den.clone());
        }
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        // cross-cancel before multiplying so σ-power denominators collapse
        let (mut n1, mut d2) = (self.num.clone(), other.den.clone());
        if d2.degree() > 0 {
            if let Some(q) = n1.div_exact_tol(&d2, 1e-12) {
                n1 = q;
                d2 = PolyC::one();
            }
        }
        let (mut n2, mut d1) = (other.num.clone(), self.den.clone());
        if d1.degree() > 0 {
            if let Some(q) = n2.div_exact_tol(&d1, 1e-12) {
                n2 = q;
                d1 = PolyC::one();
            }
        }
        RatFun::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, s: Complex64) -> RatFun {
        RatFun {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> RatFun {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFun::new(n, self.den.mul(&self.den))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Cross-multiplied residual: how far self and other are from equality,
    /// relative to the scale of the cross products.
    pub fn residual_against(&self, other: &RatFun) -> f64 {
        let lhs = self.num.mul(&other.den);
        let rhs = other.num.mul(&self.den);
        lhs.residual_against(&rhs)
    }

    pub fn approx_eq(&self, other: &RatFun, rel_tol: f64) -> bool {
        self.residual_against(other) <= rel_tol
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_poly() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
