//! Differential operators in one variable with rational-function coefficients.
//!
//! This is the workhorse for verifying operator identities: composition via the
//! Leibniz rule, commutators, gauge conjugation ρ·(·)·ρ⁻¹, and Möbius changes
//! of variable. Equality is decided coefficientwise after cross-multiplying
//! denominators, with relative tolerance 1e-12.

use crate::error::{Error, Result};
use crate::params::EquationParams;
use crate::poly::PolyC;
use crate::ratfun::RatFun;
use crate::weight::WeightForm;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;

/// Operator equality tolerance (relative, coefficientwise).
pub const OP_EQ_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct DiffOp {
    /// Map from derivative order to coefficient; no zero coefficients stored.
    terms: BTreeMap<u32, RatFun>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp {
            terms: BTreeMap::new(),
        }
    }

    pub fn identity() -> Self {
        Self::from_term(0, RatFun::one())
    }

    /// ∂^k
    pub fn d(k: u32) -> Self {
        Self::from_term(k, RatFun::one())
    }

    pub fn from_term(order: u32, coeff: RatFun) -> Self {
        let mut t = BTreeMap::new();
        if !coeff.is_zero() {
            t.insert(order, coeff);
        }
        DiffOp { terms: t }
    }

    /// Multiplication operator by a polynomial.
    pub fn mul_poly(p: &PolyC) -> Self {
        Self::from_term(0, RatFun::from_poly(p.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &RatFun)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, order: u32) -> RatFun {
        self.terms.get(&order).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, order: u32, coeff: RatFun) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&order) {
            Some(prev) => {
                let s = prev.add(&coeff);
                if !s.is_zero() {
                    self.terms.insert(order, s);
                }
            }
            None => {
                self.terms.insert(order, coeff);
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert_add(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> DiffOp {
        if s.norm() == 0.0 {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self.terms.iter().map(|(&k, c)| (k, c.scale(s))).collect(),
        }
    }

    /// Left multiplication by a rational function.
    pub fn scale_fun(&self, f: &RatFun) -> DiffOp {
        if f.is_zero() {
            return DiffOp::zero();
        }
        let mut out = DiffOp::zero();
        for (&k, c) in &self.terms {
            out.insert_add(k, c.mul(f));
        }
        out
    }

    /// self ∘ other, expanded with the Leibniz rule:
    /// f∂^k ∘ g∂^j = f Σ_i C(k,i) g^{(i)} ∂^{k+j−i}.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&k, f) in &self.terms {
            for (&j, g) in &other.terms {
                let mut g_deriv = g.clone();
                let mut binom = 1.0f64;
                for i in 0..=k {
                    if i > 0 {
                        binom = binom * ((k - i + 1) as f64) / (i as f64);
                        g_deriv = g_deriv.derivative();
                    }
                    if g_deriv.is_zero() {
                        break;
                    }
                    out.insert_add(k + j - i, f.mul(&g_deriv).scale(Complex64::new(binom, 0.0)));
                }
            }
        }
        out
    }

    /// [self, other] = self∘other − other∘self.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// The coefficients as polynomials, when every denominator is constant.
    pub fn poly_terms(&self) -> Option<Vec<(u32, PolyC)>> {
        let mut out = Vec::new();
        for (&k, c) in &self.terms {
            let p = c.as_poly()?;
            out.push((k, p.clone()));
        }
        Some(out)
    }

    /// Apply to a polynomial. Panics if a coefficient has a nontrivial
    /// denominator that does not divide out; callers use this on operators
    /// with polynomial coefficients.
    pub fn apply_poly(&self, p: &PolyC) -> PolyC {
        if let Some(terms) = self.poly_terms() {
            let mut acc = PolyC::zero();
            for (k, c) in terms {
                let mut dp = p.clone();
                for _ in 0..k {
                    dp = dp.derivative();
                }
                acc = acc.add(&c.mul(&dp));
            }
            return acc;
        }
        let mut num_acc = PolyC::zero();
        let mut den_acc = PolyC::one();
        for (&k, c) in &self.terms {
            let mut dp = p.clone();
            for _ in 0..k {
                dp = dp.derivative();
            }
            num_acc = num_acc.mul(&c.den).add(&c.num.mul(&dp).mul(&den_acc));
            den_acc = den_acc.mul(&c.den);
        }
        num_acc
            .div_exact(&den_acc)
            .expect("operator-applied-to-polynomial did not clear denominators")
    }

    /// Max coefficientwise residual between two operators: every coefficient of
    /// both is put over one common denominator and the scaled numerators are
    /// compared against the shared scale.
    pub fn residual_against(&self, other: &DiffOp) -> f64 {
        let mut common = PolyC::one();
        for c in self.terms.values().chain(other.terms.values()) {
            if c.den.degree() > 0 {
                common = common.mul(&c.den);
            }
        }
        let orders: Vec<u32> = {
            let mut v: Vec<u32> = self
                .terms
                .keys()
                .chain(other.terms.keys())
                .copied()
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let scaled = |op: &DiffOp, k: u32| -> PolyC {
            let c = op.coeff(k);
            if c.is_zero() {
                return PolyC::zero();
            }
            match common.div_exact(&c.den) {
                Some(q) => c.num.mul(&q),
                None => c.num.mul(&common), // should not happen; degrades gracefully
            }
        };
        let mut scale = 0.0f64;
        let mut diffs: Vec<PolyC> = Vec::new();
        for &k in &orders {
            let a = scaled(self, k);
            let b = scaled(other, k);
            scale = scale.max(a.max_coeff_norm()).max(b.max_coeff_norm());
            diffs.push(a.sub(&b));
        }
        if scale == 0.0 {
            return 0.0;
        }
        diffs.iter().map(|d| d.max_coeff_norm()).fold(0.0, f64::max) / scale
    }

    pub fn approx_eq(&self, other: &DiffOp, rel_tol: f64) -> bool {
        self.residual_against(other) <= rel_tol
    }

    /// Substitute ∂ ↦ ∂ + shift (a rational function), expanding powers.
    /// This is gauge conjugation: w⁻¹ ∘ op ∘ w has shift = (log w)′.
    fn shift_derivative(&self, shift: &RatFun) -> DiffOp {
        let d_shifted = DiffOp::d(1).add(&DiffOp::from_term(0, shift.clone()));
        let mut out = DiffOp::zero();
        for (&k, c) in &self.terms {
            let mut power = DiffOp::identity();
            for _ in 0..k {
                power = d_shifted.compose(&power);
            }
            out = out.add(&power.scale_fun(c));
        }
        out
    }
}

/// H(σ,κ) + ω = σ∂² + (σ′+κ)∂ + κ′/2 + ω.
pub fn hgc_operator(params: &EquationParams) -> DiffOp {
    let sigma = &params.sigma;
    let kappa = &params.kappa;
    let mut op = DiffOp::from_term(2, RatFun::from_poly(sigma.clone()));
    op = op.add(&DiffOp::from_term(
        1,
        RatFun::from_poly(sigma.derivative().add(kappa)),
    ));
    let free = kappa.coeff(1) / 2.0 + params.omega;
    op.add(&DiffOp::from_term(0, RatFun::constant(free)))
}

/// The Casimir restricted to the eigenspace N = n, plus ω:
/// σ∂² + (κ + (n+1)σ′)∂ + (σ″/2)n(n+1) + κ′(n+½) + ω.
pub fn casimir_restrict(params: &EquationParams, n: Complex64) -> DiffOp {
    let sigma = &params.sigma;
    let kappa = &params.kappa;
    let mut op = DiffOp::from_term(2, RatFun::from_poly(sigma.clone()));
    op = op.add(&DiffOp::from_term(
        1,
        RatFun::from_poly(kappa.add(&sigma.derivative().scale(n + 1.0))),
    ));
    let free =
        params.sigma_pp() / 2.0 * n * (n + 1.0) + params.kappa_p() * (n + 0.5) + params.omega;
    op.add(&DiffOp::from_term(0, RatFun::constant(free)))
}

/// ρ·op·ρ⁻¹ (or ρ⁻¹·op·ρ when `invert`), computed by substituting
/// ∂ ↦ ∂ − (log ρ)′ (respectively +).
pub fn gauge_conjugate(op: &DiffOp, weight: &WeightForm, invert: bool) -> DiffOp {
    let mut ld = weight.log_deriv();
    if !invert {
        ld = ld.neg();
    }
    op.shift_derivative(&ld)
}

/// Change of variable z = (a·w + b)/(c·w + d); returns the operator in w.
pub fn mobius_substitute(
    op: &DiffOp,
    map: (Complex64, Complex64, Complex64, Complex64),
) -> Result<DiffOp> {
    let (a, b, c, d) = map;
    let det = a * d - b * c;
    if det.norm() == 0.0 {
        return Err(Error::SingularMap);
    }
    // ∂_z = ((cw+d)²/det) ∂_w
    let cwd = PolyC::new(vec![d, c]);
    let dz = DiffOp::from_term(1, RatFun::from_poly(cwd.mul(&cwd).scale(det.inv())));
    let subst_fun = |f: &RatFun| -> RatFun {
        // f((aw+b)/(cw+d)) with homogenization by (cw+d)^deg
        let substitute_poly = |p: &PolyC| -> (PolyC, usize) {
            let n = if p.is_zero() { 0 } else { p.degree() };
            let top = PolyC::new(vec![b, a]);
            let bot = cwd.clone();
            let mut acc = PolyC::zero();
            for (k, &coef) in p.coeffs().iter().enumerate() {
                let term = top.pow(k).mul(&bot.pow(n - k)).scale(coef);
                acc = acc.add(&term);
            }
            (acc, n)
        };
        let (num_h, num_deg) = substitute_poly(&f.num);
        let (den_h, den_deg) = substitute_poly(&f.den);
        // f = num/den = num_h (cw+d)^{-num_deg} / (den_h (cw+d)^{-den_deg})
        if num_deg >= den_deg {
            RatFun::new(num_h, den_h.mul(&cwd.pow(num_deg - den_deg)))
        } else {
            RatFun::new(num_h.mul(&cwd.pow(den_deg - num_deg)), den_h)
        }
    };
    let mut out = DiffOp::zero();
    for (&k, coef) in &op.terms {
        let mut power = DiffOp::identity();
        for _ in 0..k {
            power = dz.compose(&power);
        }
        out = out.add(&power.scale_fun(&subst_fun(coef)));
    }
    Ok(out)
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·∂")?,
                _ => write!(f, "({c})·∂^{k}")?,
            }
        }
        Ok(())
    }
}
