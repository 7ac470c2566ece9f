//! The four-dimensional Lie algebra m_{α,β} spanned by N, A₊, A₋, 𝟙 with
//! [N,A±] = ±A±, [A₊,A₋] = 2αN + β𝟙, realized by first-order operators acting
//! on monomials — the full three-variable form on (t,s,z) and the reduced
//! two-variable form on (w,z). The commutation relations and the Casimir
//! ½(A₋A₊+A₊A₋) + αN² + βN are verified exactly on monomial bases.

use crate::params::EquationParams;
use num_complex::Complex64;
use std::collections::HashMap;

/// A monomial c · v₀^{e₀} v₁^{e₁} v₂^{e₂}. Variables are (w, z, –) in the
/// reduced representation and (t, s, z) in the full one; the z exponent stays
/// nonnegative, the others may be Laurent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonoTerm {
    pub coeff: Complex64,
    pub exps: [i32; 3],
}

#[derive(Clone, Debug)]
enum Action {
    /// Multiply by c·v₀^{e₀}v₁^{e₁}v₂^{e₂}.
    Mul(Complex64, [i32; 3]),
    /// Differentiate in variable index.
    Diff(usize),
}

/// A finite sum of composition chains of primitive actions. Each chain maps a
/// monomial to at most one monomial, so operators act exactly.
#[derive(Clone, Debug, Default)]
pub struct MonomialOperator {
    terms: Vec<Vec<Action>>,
}

impl MonomialOperator {
    pub fn zero() -> Self {
        MonomialOperator { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        MonomialOperator {
            terms: vec![vec![Action::Mul(Complex64::new(1.0, 0.0), [0, 0, 0])]],
        }
    }

    fn single(chain: Vec<Action>) -> Self {
        MonomialOperator { terms: vec![chain] }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        MonomialOperator { terms }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        MonomialOperator {
            terms: self
                .terms
                .iter()
                .map(|chain| {
                    let mut c = chain.clone();
                    c.push(Action::Mul(s, [0, 0, 0]));
                    c
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// self ∘ other (other acts first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut chain = b.clone();
                chain.extend(a.iter().cloned());
                terms.push(chain);
            }
        }
        MonomialOperator { terms }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Applies the operator to a monomial, returning the combined terms and
    /// the largest intermediate coefficient magnitude (the cancellation scale).
    pub fn apply(&self, mono: MonoTerm) -> (Vec<MonoTerm>, f64) {
        let mut acc: HashMap<[i32; 3], Complex64> = HashMap::new();
        let mut scale = 0.0f64;
        for chain in &self.terms {
            let mut cur = mono;
            let mut dead = false;
            for action in chain {
                match *action {
                    Action::Mul(c, exps) => {
                        cur.coeff *= c;
                        for (e, d) in cur.exps.iter_mut().zip(exps) {
                            *e += d;
                        }
                    }
                    Action::Diff(v) => {
                        let e = cur.exps[v];
                        if e == 0 {
                            dead = true;
                            break;
                        }
                        cur.coeff *= e as f64;
                        cur.exps[v] -= 1;
                    }
                }
                if cur.coeff.norm() == 0.0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            scale = scale.max(cur.coeff.norm());
            *acc.entry(cur.exps)
                .or_insert_with(|| Complex64::new(0.0, 0.0)) += cur.coeff;
        }
        let out = acc
            .into_iter()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(exps, coeff)| MonoTerm { coeff, exps })
            .collect();
        (out, scale)
    }

    /// Largest coefficient magnitude of the image, relative to the
    /// cancellation scale; zero for an operator that annihilates the monomial.
    pub fn residual_on(&self, mono: MonoTerm) -> f64 {
        let (terms, scale) = self.apply(mono);
        if scale == 0.0 {
            return 0.0;
        }
        terms.iter().map(|t| t.coeff.norm()).fold(0.0, f64::max) / scale.max(mono.coeff.norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraTag {
    /// α ≠ 0: sl(2,ℂ) ⊕ ℂ.
    Sl2DirectC,
    /// α = 0, β ≠ 0: osc(ℂ).
    Oscillator,
    /// α = β = 0: ℂ² ⋊ so(2,ℂ) ⊕ ℂ.
    EuclideanC2,
}

impl std::fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraTag::Sl2DirectC => write!(f, "sl(2,C)+C"),
            AlgebraTag::Oscillator => write!(f, "osc(C)"),
            AlgebraTag::EuclideanC2 => write!(f, "C^2:so(2,C)+C"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    /// On (w,z): N = w∂_w, A₊ = w∂_z, A₋ = w⁻¹(σ∂_z + σ′w∂_w + κ).
    Reduced,
    /// On (t,s,z): N = t∂_t − s∂_s, A₊ = t∂_z + σ′∂_s, A₋ = s∂_z + σ′∂_t + κ/t.
    Full,
}

#[derive(Clone, Debug)]
pub struct MillerGenerators {
    pub representation: Representation,
    pub n_op: MonomialOperator,
    pub a_plus: MonomialOperator,
    pub a_minus: MonomialOperator,
    pub one: MonomialOperator,
    /// Multiplication by σ(z) − ts (full representation only).
    pub quadric: Option<MonomialOperator>,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub algebra_tag: AlgebraTag,
}

pub fn miller_generators(
    params: &EquationParams,
    representation: Representation,
) -> MillerGenerators {
    let s0 = params.sigma.coeff(0);
    let s1 = params.sigma.coeff(1);
    let s2 = params.sigma.coeff(2);
    let k0 = params.kappa.coeff(0);
    let k1 = params.kappa.coeff(1);
    let alpha = s2;
    let beta = k1;
    let scale = params
        .sigma
        .max_coeff_norm()
        .max(params.kappa.max_coeff_norm())
        .max(1.0);
    let algebra_tag = if alpha.norm() > 1e-12 * scale {
        AlgebraTag::Sl2DirectC
    } else if beta.norm() > 1e-12 * scale {
        AlgebraTag::Oscillator
    } else {
        AlgebraTag::EuclideanC2
    };
    let one = Complex64::new(1.0, 0.0);
    match representation {
        Representation::Reduced => {
            // variables: 0 = w, 1 = z
            let w = 0usize;
            let z = 1usize;
            let n_op = MonomialOperator::single(vec![Action::Diff(w), Action::Mul(one, [1, 0, 0])]);
            let a_plus =
                MonomialOperator::single(vec![Action::Diff(z), Action::Mul(one, [1, 0, 0])]);
            let mut a_minus = MonomialOperator::zero();
            // σ(z) w⁻¹ ∂_z
            for (coef, ze) in [(s0, 0), (s1, 1), (s2, 2)] {
                if coef.norm() > 0.0 {
                    a_minus = a_minus.add(&MonomialOperator::single(vec![
                        Action::Diff(z),
                        Action::Mul(coef, [-1, ze, 0]),
                    ]));
                }
            }
            // σ′(z) ∂_w
            for (coef, ze) in [(s1, 0), (s2 * 2.0, 1)] {
                if coef.norm() > 0.0 {
                    a_minus = a_minus.add(&MonomialOperator::single(vec![
                        Action::Diff(w),
                        Action::Mul(coef, [0, ze, 0]),
                    ]));
                }
            }
            // κ(z) w⁻¹
            for (coef, ze) in [(k0, 0), (k1, 1)] {
                if coef.norm() > 0.0 {
                    a_minus = a_minus.add(&MonomialOperator::single(vec![Action::Mul(
                        coef,
                        [-1, ze, 0],
                    )]));
                }
            }
            MillerGenerators {
                representation,
                n_op,
                a_plus,
                a_minus,
                one: MonomialOperator::identity(),
                quadric: None,
                alpha,
                beta,
                algebra_tag,
            }
        }
        Representation::Full => {
            // variables: 0 = t, 1 = s, 2 = z
            let t = 0usize;
            let s = 1usize;
            let z = 2usize;
            let n_op =
                MonomialOperator::single(vec![Action::Diff(t), Action::Mul(one, [1, 0, 0])]).sub(
                    &MonomialOperator::single(vec![Action::Diff(s), Action::Mul(one, [0, 1, 0])]),
                );
            // A₊ = t∂_z + σ′(z)∂_s
            let mut a_plus =
                MonomialOperator::single(vec![Action::Diff(z), Action::Mul(one, [1, 0, 0])]);
            for (coef, ze) in [(s1, 0), (s2 * 2.0, 1)] {
                if coef.norm() > 0.0 {
                    a_plus = a_plus.add(&MonomialOperator::single(vec![
                        Action::Diff(s),
                        Action::Mul(coef, [0, 0, ze]),
                    ]));
                }
            }
            // A₋ = s∂_z + σ′(z)∂_t + κ(z)/t
            let mut a_minus =
                MonomialOperator::single(vec![Action::Diff(z), Action::Mul(one, [0, 1, 0])]);
            for (coef, ze) in [(s1, 0), (s2 * 2.0, 1)] {
                if coef.norm() > 0.0 {
                    a_minus = a_minus.add(&MonomialOperator::single(vec![
                        Action::Diff(t),
                        Action::Mul(coef, [0, 0, ze]),
                    ]));
                }
            }
            for (coef, ze) in [(k0, 0), (k1, 1)] {
                if coef.norm() > 0.0 {
                    a_minus = a_minus.add(&MonomialOperator::single(vec![Action::Mul(
                        coef,
                        [-1, 0, ze],
                    )]));
                }
            }
            // multiplication by σ(z) − ts
            let mut quadric = MonomialOperator::zero();
            for (coef, ze) in [(s0, 0), (s1, 1), (s2, 2)] {
                if coef.norm() > 0.0 {
                    quadric = quadric.add(&MonomialOperator::single(vec![Action::Mul(
                        coef,
                        [0, 0, ze],
                    )]));
                }
            }
            quadric = quadric.sub(&MonomialOperator::single(vec![Action::Mul(one, [1, 1, 0])]));
            MillerGenerators {
                representation,
                n_op,
                a_plus,
                a_minus,
                one: MonomialOperator::identity(),
                quadric: Some(quadric),
                alpha,
                beta,
                algebra_tag,
            }
        }
    }
}

impl MillerGenerators {
    /// ½(A₋A₊ + A₊A₋) + αN² + βN.
    pub fn casimir(&self) -> MonomialOperator {
        let half = Complex64::new(0.5, 0.0);
        self.a_minus
            .compose(&self.a_plus)
            .add(&self.a_plus.compose(&self.a_minus))
            .scale(half)
            .add(&self.n_op.compose(&self.n_op).scale(self.alpha))
            .add(&self.n_op.scale(self.beta))
    }
}

#[derive(Clone, Debug)]
pub struct CommutationReport {
    pub representation: Representation,
    pub algebra_tag: AlgebraTag,
    /// (check name, max relative residual over the monomial basis).
    pub residuals: Vec<(&'static str, f64)>,
}

impl CommutationReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

/// Applies the defining relations, the Casimir commutations and (in the full
/// representation) commutation with multiplication by σ(z)−ts to every
/// monomial with exponents bounded by `degree_bound`, and reports the largest
/// relative residual of each identity.
pub fn verify_miller_commutation(gens: &MillerGenerators, degree_bound: i32) -> CommutationReport {
    let casimir = gens.casimir();
    let struct_rhs = gens
        .n_op
        .scale(gens.alpha * 2.0)
        .add(&gens.one.scale(gens.beta));
    let mut checks: Vec<(&'static str, MonomialOperator)> = vec![
        (
            "[N,A+]-A+",
            gens.n_op.commutator(&gens.a_plus).sub(&gens.a_plus),
        ),
        (
            "[N,A-]+A-",
            gens.n_op.commutator(&gens.a_minus).add(&gens.a_minus),
        ),
        (
            "[A+,A-]-2aN-b1",
            gens.a_plus.commutator(&gens.a_minus).sub(&struct_rhs),
        ),
        ("[C,N]", casimir.commutator(&gens.n_op)),
        ("[C,A+]", casimir.commutator(&gens.a_plus)),
        ("[C,A-]", casimir.commutator(&gens.a_minus)),
    ];
    if let Some(q) = &gens.quadric {
        checks.push(("[N,s(z)-ts]", gens.n_op.commutator(q)));
        checks.push(("[A+,s(z)-ts]", gens.a_plus.commutator(q)));
        checks.push(("[A-,s(z)-ts]", gens.a_minus.commutator(q)));
    }
    let b = degree_bound;
    let mut basis: Vec<MonoTerm> = Vec::new();
    match gens.representation {
        Representation::Reduced => {
            for we in -b..=b {
                for ze in 0..=b {
                    if we.abs() + ze <= b {
                        basis.push(MonoTerm {
                            coeff: Complex64::new(1.0, 0.0),
                            exps: [we, ze, 0],
                        });
                    }
                }
            }
        }
        Representation::Full => {
            for te in -b..=b {
                for se in -b..=b {
                    for ze in 0..=b {
                        if te.abs() + se.abs() + ze <= b {
                            basis.push(MonoTerm {
                                coeff: Complex64::new(1.0, 0.0),
                                exps: [te, se, ze],
                            });
                        }
                    }
                }
            }
        }
    }
    let residuals = checks
        .into_iter()
        .map(|(name, op)| {
            let worst = basis.iter().map(|&m| op.residual_on(m)).fold(0.0, f64::max);
            (name, worst)
        })
        .collect();
    CommutationReport {
        representation: gens.representation,
        algebra_tag: gens.algebra_tag,
        residuals,
    }
}
