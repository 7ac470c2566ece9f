//! Double-double (compensated) real arithmetic for the moment contractions.
//!
//! The orthogonality checks contract polynomial products against factorially
//! growing moments; the cancellation condition reaches ~1e7 at degree 20,
//! which plain f64 cannot push below the 1e-10 acceptance tolerance. Carrying
//! ~31 significant digits through the contraction removes the problem. Only
//! the handful of operations the contraction needs are implemented.

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[allow(clippy::should_implement_trait)] // plain methods keep the call sites explicit
impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q0 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from(q0)));
        let q1 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from(q1)));
        let q2 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q0, q1);
        Dd { hi, lo }.add(Dd::from(q2))
    }

    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}

/// Dense real polynomial with double-double coefficients, lowest degree first.
#[derive(Clone, Debug, Default)]
pub struct PolyDd(pub Vec<Dd>);

impl PolyDd {
    pub fn from_f64(coeffs: &[f64]) -> PolyDd {
        PolyDd(coeffs.iter().map(|&c| Dd::from(c)).collect())
    }

    pub fn one() -> PolyDd {
        PolyDd(vec![Dd::ONE])
    }

    pub fn mul(&self, other: &PolyDd) -> PolyDd {
        if self.0.is_empty() || other.0.is_empty() {
            return PolyDd(vec![]);
        }
        let mut out = vec![Dd::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(a.mul(b));
            }
        }
        PolyDd(out)
    }

    pub fn add(&self, other: &PolyDd) -> PolyDd {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Dd::ZERO; n];
        for (i, &a) in self.0.iter().enumerate() {
            out[i] = out[i].add(a);
        }
        for (i, &b) in other.0.iter().enumerate() {
            out[i] = out[i].add(b);
        }
        PolyDd(out)
    }

    pub fn scale(&self, s: Dd) -> PolyDd {
        PolyDd(self.0.iter().map(|&c| c.mul(s)).collect())
    }

    pub fn derivative(&self) -> PolyDd {
        if self.0.len() <= 1 {
            return PolyDd(vec![]);
        }
        PolyDd(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c.mul(Dd::from((i + 1) as f64)))
                .collect(),
        )
    }
}

/// Rodrigues recursion p_{k+1} = ((n−k)σ′ + κ)p_k + σp_k′, P_n = p_n/n!,
/// carried in double-double.
pub fn rodrigues_dd(sigma: &PolyDd, kappa: &PolyDd, n: u32) -> PolyDd {
    let sp = sigma.derivative();
    let mut p = PolyDd::one();
    for k in 0..n {
        let factor = sp.scale(Dd::from((n - k) as f64)).add(kappa);
        p = factor.mul(&p).add(&sigma.mul(&p.derivative()));
    }
    let mut inv_fact = Dd::ONE;
    for j in 2..=n {
        inv_fact = inv_fact.div(Dd::from(j as f64));
    }
    p.scale(inv_fact)
}
