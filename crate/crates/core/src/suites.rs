//! The verification suites behind `verify --suite …` and the acceptance
//! tests: each suite runs a battery of identity checks at pinned tolerances
//! and reports named residuals.

use crate::chebyshev::{
    chebyshev_eval, chebyshev_residual, chebyshev_target, ChebyshevGauge, ChebyshevKind,
};
use crate::classify::{classify_riemann, normal_form_triple, NormalType};
use crate::degenerate::{
    degenerate_proportionality, psi_loop, psi_prefactor, psi_tilde_loop, DegenerateParams,
};
use crate::diffop::hgc_operator;
use crate::f20::f20_general;
use crate::gamma::{factorial, pochhammer};
use crate::miller::{miller_generators, verify_miller_commutation, AlgebraTag, Representation};
use crate::orthopoly::{
    classical_poly, eigen_residual, generating_expand, orthogonality_check, polynomial_recurrences,
    Family, FamilySpec,
};
use crate::params::{dict, ladder_params, EquationParams};
use crate::poly::PolyC;
use crate::quad::{integrate, ContourSpec};
use crate::series::{
    eval_classical, olver_classical, olver_coeffs, olver_f, series_value_and_derivative,
    unified_coeffs, unified_f, Classical, DEFAULT_MAX_TERMS, DEFAULT_TOL,
};
use crate::symmetry::{verify_factorization, verify_symmetry, SymmetryKind};
use crate::transforms::{euler_transform, named_representation, Named};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, residual: f64, tol: f64) {
        let name = name.into();
        self.checks.push(Check {
            pass: residual <= tol && residual.is_finite(),
            name,
            residual,
            tol,
        });
    }

    fn push_bool(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            residual: if ok { 0.0 } else { 1.0 },
            tol: 0.5,
            pass: ok,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn rand_c(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    Complex64::new(rng.gen_range(lo..hi), rng.gen_range(lo..hi))
}

fn rand_real(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    Complex64::new(rng.gen_range(lo..hi), 0.0)
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

/// Draws an admissible (σ, κ, ω) triple within each of the three algebra
/// classes in turn.
fn draw_params(rng: &mut ChaCha8Rng, class: AlgebraTag) -> EquationParams {
    loop {
        let p = match class {
            AlgebraTag::Sl2DirectC => EquationParams::new(
                PolyC::new(vec![rand_c(rng, -1.5, 1.5), rand_c(rng, -1.5, 1.5), {
                    let mut s2 = rand_c(rng, -1.5, 1.5);
                    if s2.norm() < 0.2 {
                        s2 += c(1.0);
                    }
                    s2
                }]),
                PolyC::new(vec![rand_c(rng, -1.5, 1.5), rand_c(rng, -1.5, 1.5)]),
                rand_c(rng, -1.5, 1.5),
            ),
            AlgebraTag::Oscillator => EquationParams::new(
                PolyC::new(vec![rand_c(rng, -1.5, 1.5), rand_c(rng, -1.5, 1.5)]),
                PolyC::new(vec![rand_c(rng, -1.5, 1.5), {
                    let mut k1 = rand_c(rng, -1.5, 1.5);
                    if k1.norm() < 0.2 {
                        k1 += c(1.0);
                    }
                    k1
                }]),
                rand_c(rng, -1.5, 1.5),
            ),
            AlgebraTag::EuclideanC2 => EquationParams::new(
                PolyC::new(vec![rand_c(rng, -1.5, 1.5), rand_c(rng, -1.5, 1.5)]),
                PolyC::new(vec![rand_c(rng, -1.5, 1.5)]),
                rand_c(rng, -1.5, 1.5),
            ),
        };
        if let Ok(p) = p {
            if !p.sigma.is_zero() {
                return p;
            }
        }
    }
}

/// Criterion: commutation relations and Casimir commutation on monomials up
/// to total degree 8, in both representations, for 25 draws spanning the
/// three algebra classes, residual < 1e-12.
pub fn lie_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lie");
    let classes = [
        (AlgebraTag::Sl2DirectC, 9usize),
        (AlgebraTag::Oscillator, 8usize),
        (AlgebraTag::EuclideanC2, 8usize),
    ];
    let mut idx = 0;
    for (class, count) in classes {
        for _ in 0..count {
            let p = draw_params(&mut rng, class);
            for rep in [Representation::Reduced, Representation::Full] {
                let gens = miller_generators(&p, rep);
                if gens.algebra_tag != class {
                    report.push_bool(format!("draw {idx} tag {class:?} ({rep:?})"), false);
                    continue;
                }
                let r = verify_miller_commutation(&gens, 8);
                report.push(
                    format!("draw {idx} {class:?} {rep:?} commutation+casimir"),
                    r.max_residual(),
                    1e-12,
                );
            }
            idx += 1;
        }
    }
    report
}

/// Criterion: basic/power/inversion operator identities < 1e-10, the ℤ₂
/// property, and the per-type parameter maps.
pub fn symmetry_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("symmetry");

    // operator identities over random draws
    for i in 0..12 {
        let p = draw_params(
            &mut rng,
            [AlgebraTag::Sl2DirectC, AlgebraTag::Oscillator][i % 2],
        );
        let rep = verify_symmetry(SymmetryKind::Basic, &p).expect("basic always applies");
        report.push(format!("basic identity draw {i}"), rep.residual, 1e-10);
        let twice = verify_symmetry(SymmetryKind::Basic, &rep.transformed).unwrap();
        let inv = twice.transformed.kappa.residual_against(&p.kappa);
        report.push(format!("basic involution draw {i}"), inv, 1e-10);
    }
    for i in 0..12 {
        // power/inversion need σ(0)=0; build from classical dictionaries
        let a = rand_c(&mut rng, -1.2, 1.2);
        let b = rand_c(&mut rng, -1.2, 1.2);
        let cc = rand_c(&mut rng, -1.2, 1.2) + c(1.5);
        let p = if i % 2 == 0 {
            dict::gauss_2f1(a, b, cc)
        } else {
            dict::kummer_1f1(a, cc)
        };
        let rep = verify_symmetry(SymmetryKind::Power, &p).expect("power applies");
        report.push(format!("power identity draw {i}"), rep.residual, 1e-10);
        let twice = verify_symmetry(SymmetryKind::Power, &rep.transformed).unwrap();
        report.push(
            format!("power involution draw {i}"),
            twice.transformed.kappa.residual_against(&p.kappa)
                + (twice.transformed.omega - p.omega).norm() / (1.0 + p.omega.norm()),
            1e-10,
        );
        let rep = verify_symmetry(SymmetryKind::Inversion, &p).expect("inversion applies");
        report.push(format!("inversion identity draw {i}"), rep.residual, 1e-10);
        // ℤ₂: one exponent branch of the second application returns the
        // original equation (the parameter triple up to an overall sign)
        let back = crate::symmetry::inversion_transforms(&rep.transformed)
            .map(|branches| {
                branches.into_iter().any(|twice| {
                    [c(1.0), c(-1.0)].iter().any(|&s| {
                        twice.sigma.approx_eq(&p.sigma.scale(s), 1e-9)
                            && twice.kappa.approx_eq(&p.kappa.scale(s), 1e-9)
                            && (twice.omega - s * p.omega).norm() < 1e-9 * (1.0 + p.omega.norm())
                    })
                })
            })
            .unwrap_or(false);
        report.push_bool(format!("inversion involution draw {i}"), back);
    }

    // per-type parameter maps
    let (a, b, cc) = (c(0.45), c(1.35), c(0.85));
    let p = dict::gauss_2f1(a, b, cc);
    let basic = verify_symmetry(SymmetryKind::Basic, &p).unwrap();
    let want = dict::gauss_2f1(c(1.0) - b, c(1.0) - a, c(2.0) - cc);
    report.push(
        "2F1 basic map → F(1−b,1−a;2−c)",
        basic.transformed.kappa.residual_against(&want.kappa)
            + (basic.transformed.omega - want.omega).norm(),
        1e-12,
    );
    let power = verify_symmetry(SymmetryKind::Power, &p).unwrap();
    let want = dict::gauss_2f1(b + 1.0 - cc, a + 1.0 - cc, c(2.0) - cc);
    report.push(
        "2F1 power map → F(b+1−c,a+1−c;2−c)",
        power.transformed.kappa.residual_against(&want.kappa)
            + (power.transformed.omega - want.omega).norm(),
        1e-12,
    );
    let p = dict::kummer_1f1(c(0.6), c(1.4));
    let invrep = verify_symmetry(SymmetryKind::Inversion, &p).unwrap();
    let want = dict::two_f0(c(0.6), c(1.0) + c(0.6) - c(1.4));
    report.push(
        "1F1 inversion map → 2F0(a,1+a−c)",
        invrep.transformed.kappa.residual_against(&want.kappa)
            + invrep.transformed.sigma.residual_against(&want.sigma)
            + (invrep.transformed.omega - want.omega).norm(),
        1e-12,
    );
    // and the 2F0 goes back to a 1F1 equation
    let back = verify_symmetry(SymmetryKind::Inversion, &invrep.transformed).unwrap();
    let is_1f1 = back.transformed.sigma.degree() == 1;
    report.push_bool("2F0 inversion returns a 1F1-type equation", is_1f1);
    report
}

/// Criterion: all four factorization/transmutation identities for 50 random
/// (params, n), residual < 1e-10.
pub fn factorization_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("factorization");
    for i in 0..50 {
        let class = [
            AlgebraTag::Sl2DirectC,
            AlgebraTag::Oscillator,
            AlgebraTag::EuclideanC2,
        ][i % 3];
        let p = draw_params(&mut rng, class);
        let n = rand_c(&mut rng, -2.0, 2.0);
        let rep = verify_factorization(&p, n);
        report.push(format!("draw {i} ({class:?})"), rep.max_residual(), 1e-10);
    }
    report
}

/// Criterion: unified series matches the dedicated classical series to 1e-12
/// over 100 draws, plus the two pinned values.
pub fn series_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("series");
    let mut worst_2f1 = 0.0f64;
    let mut worst_1f1 = 0.0f64;
    let mut worst_0f1 = 0.0f64;
    for _ in 0..100 {
        let a = rand_c(&mut rng, -1.5, 1.5);
        let b = rand_c(&mut rng, -1.5, 1.5);
        let cc = rand_c(&mut rng, -1.0, 1.0) + c(1.5);
        let z = rand_c(&mut rng, -0.5, 0.5);
        if z.norm() >= 0.8 {
            continue;
        }
        let u = unified_f(
            &dict::gauss_2f1(a, b, cc),
            z,
            DEFAULT_TOL,
            DEFAULT_MAX_TERMS,
        );
        let d = eval_classical(Classical::Gauss2F1 { a, b, c: cc }, z, false);
        if let (Ok(u), Ok(d)) = (u, d) {
            worst_2f1 = worst_2f1.max(rel_err(u.value, d.value));
        }
        let u = unified_f(&dict::kummer_1f1(a, cc), z, DEFAULT_TOL, DEFAULT_MAX_TERMS);
        let d = eval_classical(Classical::Kummer1F1 { a, c: cc }, z, false);
        if let (Ok(u), Ok(d)) = (u, d) {
            worst_1f1 = worst_1f1.max(rel_err(u.value, d.value));
        }
        let u = unified_f(&dict::zero_f1(cc), z, DEFAULT_TOL, DEFAULT_MAX_TERMS);
        let d = eval_classical(Classical::ZeroF1 { c: cc }, z, false);
        if let (Ok(u), Ok(d)) = (u, d) {
            worst_0f1 = worst_0f1.max(rel_err(u.value, d.value));
        }
    }
    report.push("unified vs 2F1 series (100 draws)", worst_2f1, 1e-12);
    report.push("unified vs 1F1 series (100 draws)", worst_1f1, 1e-12);
    report.push("unified vs 0F1 series (100 draws)", worst_0f1, 1e-12);

    let v = unified_f(
        &dict::gauss_2f1(c(1.0), c(1.0), c(2.0)),
        c(0.5),
        DEFAULT_TOL,
        DEFAULT_MAX_TERMS,
    )
    .unwrap()
    .value;
    report.push(
        "F(1,1;2;1/2) = 2 ln 2",
        (v - c(2.0 * 2.0f64.ln())).norm(),
        1e-12,
    );
    let v = olver_f(&dict::zero_f1(c(1.5)), c(1.0)).unwrap().value;
    report.push(
        "𝐅(3/2;1) = sinh 2/√π",
        (v - c((2.0f64).sinh() / PI.sqrt())).norm(),
        1e-12,
    );
    report
}

/// Criterion: the basic recurrence pairs via exact term-by-term series
/// differentiation (1e-9) and the Euler-transform recurrences via central
/// differences (1e-6).
pub fn recurrence_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("recurrence");

    // pair1/pair2 for the non-normalized F
    for i in 0..10 {
        let a = rand_real(&mut rng, -1.0, 1.0);
        let b = rand_real(&mut rng, -1.0, 1.0);
        let cc = rand_real(&mut rng, 0.4, 1.8);
        let base = match i % 3 {
            0 => dict::gauss_2f1(a, b, cc),
            1 => dict::kummer_1f1(a, cc),
            _ => dict::zero_f1(cc),
        };
        let z = Complex64::new(0.23, 0.11);
        let n_terms = 80;
        let step0 = base.clone();
        let step1 = ladder_params(&base, 1.0.into());
        let (c0, c1) = match (
            unified_coeffs(&step0, n_terms),
            unified_coeffs(&step1, n_terms),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let (f0, df0) = series_value_and_derivative(&c0, z);
        let (f1, df1) = series_value_and_derivative(&c1, z);
        // pair1: ∂F(step0) = −(ω₀+κ₀′/2)/κ₁(0) · F(step1)
        let factor = -(step0.omega + step0.kappa_p() / 2.0) / step1.kappa.coeff(0);
        report.push(format!("pair1 draw {i}"), rel_err(df0, factor * f1), 1e-9);
        // pair2: (σ∂ + κ₁)F(step1) = κ₁(0) F(step0)
        let lhs = step0.sigma.eval(z) * df1 + step1.kappa.eval(z) * f1;
        report.push(
            format!("pair2 draw {i}"),
            rel_err(lhs, step1.kappa.coeff(0) * f0),
            1e-9,
        );
    }

    // pair3/pair4 for the Olver-normalized 𝐅 (σ′(0)=1 dictionaries)
    for i in 0..10 {
        let a = rand_real(&mut rng, -1.0, 1.0);
        let cc = rand_real(&mut rng, 0.3, 1.7);
        let base = match i % 2 {
            0 => dict::gauss_2f1(a, rand_real(&mut rng, -1.0, 1.0), cc),
            _ => dict::kummer_1f1(a, cc),
        };
        let z = Complex64::new(0.19, -0.07);
        let step1 = ladder_params(&base, 1.0.into());
        let (c0, c1) = match (olver_coeffs(&base, 80), olver_coeffs(&step1, 80)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let (f0, df0) = series_value_and_derivative(&c0, z);
        let (f1, df1) = series_value_and_derivative(&c1, z);
        let factor = -(base.omega + base.kappa_p() / 2.0);
        report.push(format!("pair3 draw {i}"), rel_err(df0, factor * f1), 1e-9);
        let lhs = base.sigma.eval(z) * df1 + step1.kappa.eval(z) * f1;
        report.push(format!("pair4 draw {i}"), rel_err(lhs, f0), 1e-9);
    }

    // Euler-transform recurrences by central differences
    let (a, b, cc) = (c(1.2), c(0.7), c(2.1));
    let sigma = PolyC::from_reals(&[0.0, 1.0, -1.0]);
    let kappa0 = PolyC::new(vec![cc - b, b - a - 1.0]);
    let n = b - 1.0;
    let contour = ContourSpec::HalfLineDE {
        start: c(1.0),
        direction: c(1.0),
    };
    let f = |zz: Complex64, nn: Complex64| {
        euler_transform(&sigma, &kappa0, nn, &contour, zz, false)
            .map(|r| r.value)
            .unwrap_or(Complex64::new(f64::NAN, 0.0))
    };
    let z = c(0.3);
    let h = 1e-5;
    let dfn = (f(z + h, n) - f(z - h, n)) / (2.0 * h);
    report.push(
        "euler recurrence ∂f_n = (n+1)f_{n+1}",
        rel_err(dfn, (n + 1.0) * f(z, n + 1.0)),
        1e-6,
    );
    let dfn1 = (f(z + h, n + 1.0) - f(z - h, n + 1.0)) / (2.0 * h);
    let kappa_n1 = kappa0.add(&sigma.derivative().scale(n + 1.0));
    let lhs = sigma.eval(z) * dfn1 + kappa_n1.eval(z) * f(z, n + 1.0);
    let spp = sigma.coeff(2) * 2.0;
    let rhs = -(kappa0.coeff(1) + spp / 2.0 * n) * f(z, n);
    report.push(
        "euler recurrence (σ∂+κ_{n+1})f_{n+1} = −(κ₀′+σ″n/2)f_n",
        rel_err(lhs, rhs),
        1e-6,
    );
    report
}

/// Criterion: every named representation vs its series counterpart (1e-8 over
/// 20 draws), loop radius independence (1e-10), boundary terms (1e-10).
pub fn integral_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("integral");

    let mut worst = [0.0f64; 7];
    let mut boundary_worst = 0.0f64;
    for _ in 0..20 {
        let a = rand_real(&mut rng, 0.2, 1.4);
        let b = rand_real(&mut rng, -1.0, 1.0);
        let cc = a + rand_real(&mut rng, 0.3, 1.5);
        let z = Complex64::new(rng.gen_range(-0.4..0.45), rng.gen_range(-0.3..0.3));

        // 2F1 Euler
        if let Ok(r) = named_representation(Named::Repr2F1Euler { a, b, c: cc }, z) {
            let s = olver_classical(Classical::Gauss2F1 { a, b, c: cc }, z).unwrap();
            worst[0] = worst[0].max(rel_err(r.value, s.value));
            boundary_worst =
                boundary_worst.max(r.boundary_term.norm() / r.value.norm().max(1e-300));
        }
        // 1F1 Hankel (all parameters)
        if let Ok(r) = named_representation(Named::Repr1F1Hankel { a: b, c: cc }, z) {
            let s = olver_classical(Classical::Kummer1F1 { a: b, c: cc }, z).unwrap();
            worst[1] = worst[1].max(rel_err(r.value, s.value));
        }
        // 1F1 algebraic
        if let Ok(r) = named_representation(Named::Repr1F1Algebraic { a, c: cc }, z) {
            let s = olver_classical(Classical::Kummer1F1 { a, c: cc }, z).unwrap();
            worst[2] = worst[2].max(rel_err(r.value, s.value));
        }
        // 2F0 integral vs asymptotic-region continuation
        let w = Complex64::new(-rng.gen_range(0.05..0.3), rng.gen_range(0.02..0.25));
        if let Ok(r) = named_representation(Named::Repr2F0 { a, b }, w) {
            let s = f20_general(a, b, w).unwrap();
            worst[3] = worst[3].max(rel_err(r.value, s.value));
        }
        // 0F1 loop
        if let Ok(r) = named_representation(Named::Repr0F1Loop { c: cc }, z) {
            let s = olver_classical(Classical::ZeroF1 { c: cc }, z).unwrap();
            worst[4] = worst[4].max(rel_err(r.value, s.value));
        }
        // Hermite (z off the left cut)
        let zh = Complex64::new(rng.gen_range(0.3..1.2), rng.gen_range(-0.2..0.2));
        if let Ok(r) = named_representation(Named::ReprHermiteLaplace { a }, zh) {
            let s = eval_classical(Classical::HermiteS { a }, zh, false);
            let s =
                s.unwrap_or_else(|_| crate::series::EvalResult::closed(hermite_s_via_f20(a, zh)));
            worst[5] = worst[5].max(rel_err(r.value, s.value));
        }
        if let Ok(r) = named_representation(Named::ReprHermiteEuler { a }, zh) {
            let s = hermite_s_via_f20(a, zh);
            worst[6] = worst[6].max(rel_err(r.value, s));
        }
    }
    let names = [
        "2F1 Euler vs series",
        "1F1 Hankel vs series",
        "1F1 algebraic vs series",
        "2F0 integral vs continuation",
        "0F1 loop vs series",
        "Hermite Laplace vs series",
        "Hermite Euler vs series",
    ];
    for (name, w) in names.iter().zip(worst) {
        report.push(*name, w, 1e-8);
    }
    report.push("Euler boundary terms", boundary_worst, 1e-10);

    // Laplace boundary term on the (0,1) kernel contour
    {
        let (a, cc, z) = (c(0.7), c(1.9), c(0.4));
        let sigma = PolyC::from_reals(&[0.0, 1.0]);
        let kappa0 = PolyC::new(vec![cc - a, c(-1.0)]);
        let contour = ContourSpec::Segment {
            from: c(0.0),
            to: c(1.0),
        };
        match crate::transforms::laplace_transform(&sigma, &kappa0, a - 1.0, &contour, z) {
            Ok(r) => report.push(
                "Laplace boundary term",
                r.boundary_term.norm() / r.value.norm().max(1e-300),
                1e-10,
            ),
            Err(e) => report.push_bool(format!("laplace transform failed: {e}"), false),
        }
    }

    // loop radius independence
    let f = |t: Complex64| (t + c(1.0) / t).exp() / t;
    let base = integrate(f, &ContourSpec::circle(c(0.0), 1.0))
        .unwrap()
        .value;
    let mut worst_r = 0.0f64;
    for r in [0.5, 2.0] {
        let v = integrate(f, &ContourSpec::circle(c(0.0), r)).unwrap().value;
        worst_r = worst_r.max(rel_err(v, base));
    }
    report.push("0F1 loop radius independence", worst_r, 1e-10);
    report
}

fn hermite_s_via_f20(a: Complex64, z: Complex64) -> Complex64 {
    let w = -(z * z).inv();
    z.powc(-a) * f20_general(a / 2.0, (a + 1.0) / 2.0, w).unwrap().value
}

/// Criterion: terminating ₂F₀ exact; truncation error scaling |w|^{n+1}
/// within a factor 10 for n ≤ 6 on the ray arg w = 3π/4; continuation vs
/// direct integral 1e-8.
pub fn f20_suite(_seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("f20");
    // terminating cases exact
    let v = f20_general(c(-1.0), c(3.0), c(0.2)).unwrap().value;
    report.push("F(−1,3;−;0.2) = 0.4", (v - c(0.4)).norm(), 1e-14);
    let v = f20_general(c(-3.0), c(0.8), c(-0.4)).unwrap().value;
    let mut want = Complex64::new(0.0, 0.0);
    for j in 0..=3u32 {
        want += pochhammer(c(-3.0), j) * pochhammer(c(0.8), j) / factorial(j) * c(-0.4).powu(j);
    }
    report.push("terminating sum exact", (v - want).norm(), 1e-14);

    // asymptotic scaling
    let (a, b) = (c(1.5), c(0.5));
    let dir = Complex64::new(0.0, 3.0 * PI / 4.0).exp();
    for n in 1..=6u32 {
        let mut ratios = Vec::new();
        for &r in &[0.2, 0.1, 0.05] {
            let w = dir * r;
            let f = f20_general(a, b, w).unwrap().value;
            let mut partial = Complex64::new(0.0, 0.0);
            for j in 0..=n {
                partial += pochhammer(a, j) * pochhammer(b, j) / factorial(j) * w.powu(j);
            }
            ratios.push((f - partial).norm() / r.powi(n as i32 + 1));
        }
        let spread = ratios.iter().cloned().fold(0.0f64, f64::max)
            / ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        report.push(
            format!("truncation error ~ |w|^{} (factor {spread:.2})", n + 1),
            spread,
            10.0,
        );
    }

    // continuation vs direct where both apply
    let w = Complex64::new(-0.3, 0.2);
    let direct = f20_general(a, b, w).unwrap().value;
    let n = 2u32;
    let mut head = Complex64::new(0.0, 0.0);
    for j in 0..n {
        head += pochhammer(a, j) * pochhammer(b, j) / factorial(j) * w.powu(j);
    }
    let scale = w.powu(n) * pochhammer(a, n) * pochhammer(b, n) / factorial(n - 1);
    let inner = integrate(
        |s| (c(1.0) - s).powu(n - 1) * f20_general(a + 2.0, b + 2.0, w * s).unwrap().value,
        &ContourSpec::Segment {
            from: c(0.0),
            to: c(1.0),
        },
    )
    .unwrap()
    .value;
    report.push(
        "index-shift continuation vs direct integral",
        rel_err(direct, head + scale * inner),
        1e-8,
    );
    report
}

/// Criterion: Rodrigues vs hypergeometric closed forms (n ≤ 10), generating
/// functions through t-order 8, Gram matrices diagonal with both norm
/// formulas (1e-10), Jacobi degree degeneracies.
pub fn polynomial_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("polynomial");

    // Rodrigues vs closed forms
    let (alpha, beta) = (
        rand_real(&mut rng, -0.6, 1.4),
        rand_real(&mut rng, -0.6, 1.4),
    );
    let spec = FamilySpec::new(Family::Jacobi { alpha, beta });
    let mut worst = 0.0f64;
    for n in 0..=10u32 {
        let p = classical_poly(&spec, n);
        for &x in &[-0.7, 0.2, 0.9] {
            let z = (1.0 - x) / 2.0;
            let f = eval_classical(
                Classical::Gauss2F1 {
                    a: c(-(n as f64)),
                    b: alpha + beta + (n as f64) + 1.0,
                    c: alpha + 1.0,
                },
                c(z),
                false,
            )
            .unwrap()
            .value;
            let want = pochhammer(alpha + 1.0, n) / factorial(n) * f;
            worst = worst.max((p.eval(c(x)) - want).norm() / p.max_coeff_norm().max(1.0));
        }
    }
    report.push("jacobi rodrigues vs 2F1 closed form (n ≤ 10)", worst, 1e-10);

    let alpha = rand_real(&mut rng, -0.5, 1.5);
    let spec = FamilySpec::new(Family::Laguerre { alpha });
    let mut worst = 0.0f64;
    for n in 0..=10u32 {
        let p = classical_poly(&spec, n);
        let x = 0.8;
        let f = eval_classical(
            Classical::Kummer1F1 {
                a: c(-(n as f64)),
                c: alpha + 1.0,
            },
            c(x),
            false,
        )
        .unwrap()
        .value;
        let want = pochhammer(alpha + 1.0, n) / factorial(n) * f;
        worst = worst.max((p.eval(c(x)) - want).norm() / p.max_coeff_norm().max(1.0));
    }
    report.push(
        "laguerre rodrigues vs 1F1 closed form (n ≤ 10)",
        worst,
        1e-10,
    );

    // eigen equation + recurrences
    let specs = [
        FamilySpec::new(Family::Jacobi {
            alpha: c(0.6),
            beta: c(0.2),
        }),
        FamilySpec::new(Family::Laguerre { alpha: c(0.8) }),
        FamilySpec::new(Family::BesselPoly { theta: c(0.4) }),
        FamilySpec::new(Family::HermitePoly),
    ];
    let mut worst_eig = 0.0f64;
    let mut worst_rec = 0.0f64;
    for spec in &specs {
        for n in 0..=8u32 {
            worst_eig = worst_eig.max(eigen_residual(&spec.sigma(), &spec.kappa(), n));
            if n >= 1 {
                worst_rec = worst_rec.max(polynomial_recurrences(spec, n).max_residual());
            }
        }
    }
    report.push("eigen equations all families", worst_eig, 1e-11);
    report.push("ladder recurrences all families", worst_rec, 1e-10);

    // generating functions through t-order 8
    let mut worst = 0.0f64;
    for spec in &specs {
        let coeffs = generating_expand(spec, 8);
        for (n, got) in coeffs.iter().enumerate() {
            let want = match spec.family {
                Family::Jacobi { alpha, beta } => classical_poly(
                    &FamilySpec::new(Family::Jacobi {
                        alpha: alpha - n as f64,
                        beta: beta - n as f64,
                    }),
                    n as u32,
                )
                .scale(c(2.0f64.powi(n as i32))),
                Family::Laguerre { alpha } => classical_poly(
                    &FamilySpec::new(Family::Laguerre {
                        alpha: alpha - n as f64,
                    }),
                    n as u32,
                ),
                Family::BesselPoly { theta } => classical_poly(
                    &FamilySpec::new(Family::BesselPoly {
                        theta: theta - 2.0 * n as f64,
                    }),
                    n as u32,
                ),
                Family::HermitePoly => classical_poly(spec, n as u32),
            };
            worst = worst.max(got.residual_against(&want));
        }
    }
    report.push("generating functions t-order 8", worst, 1e-10);

    // Gram matrices over 20 admissible draws
    let mut worst_off = 0.0f64;
    let mut worst_fam = 0.0f64;
    let mut worst_prd = 0.0f64;
    for i in 0..20 {
        let spec = match i % 3 {
            0 => FamilySpec::new(Family::Jacobi {
                alpha: rand_real(&mut rng, -0.9, 2.0),
                beta: rand_real(&mut rng, -0.9, 2.0),
            }),
            1 => FamilySpec::new(Family::Laguerre {
                alpha: rand_real(&mut rng, -0.9, 2.5),
            }),
            _ => FamilySpec::new(Family::HermitePoly),
        };
        let rep = orthogonality_check(&spec, 10).unwrap();
        worst_off = worst_off.max(rep.max_offdiag_rel);
        worst_fam = worst_fam.max(rep.max_diag_err_family);
        worst_prd = worst_prd.max(rep.max_diag_err_product);
    }
    report.push("gram off-diagonal (n ≤ 10, 20 draws)", worst_off, 1e-10);
    report.push("diagonal vs family norms", worst_fam, 1e-10);
    report.push("diagonal vs product formula", worst_prd, 1e-10);

    // the product-formula norm equals the family closed form over 50 draws
    let mut worst_norms = 0.0f64;
    for i in 0..50 {
        let spec = match i % 3 {
            0 => FamilySpec::new(Family::Jacobi {
                alpha: rand_real(&mut rng, -0.9, 2.0),
                beta: rand_real(&mut rng, -0.9, 2.0),
            }),
            1 => FamilySpec::new(Family::Laguerre {
                alpha: rand_real(&mut rng, -0.9, 2.5),
            }),
            _ => FamilySpec::new(Family::HermitePoly),
        };
        for n in 0..=6u32 {
            let prd = crate::orthopoly::product_norm(&spec, n).unwrap();
            let fam = crate::orthopoly::family_norm(&spec, n).unwrap();
            worst_norms = worst_norms.max(rel_err(prd, fam));
        }
    }
    report.push(
        "product formula vs family norms (50 draws)",
        worst_norms,
        1e-10,
    );

    // Jacobi degree degeneracies
    let n = 4u32;
    let mut ok = true;
    for d in 0..(n as i32) {
        let alpha = c(0.3);
        let beta = c(-(n as f64) - 1.0 - d as f64) - alpha;
        let p = classical_poly(&FamilySpec::new(Family::Jacobi { alpha, beta }), n);
        ok &= p.degree() == d as usize && !p.is_zero();
    }
    let p = classical_poly(
        &FamilySpec::new(Family::Jacobi {
            alpha: c(-2.0),
            beta: c(-4.0),
        }),
        n,
    );
    ok &= p.is_zero();
    report.push_bool("jacobi degree degeneracy cases", ok);
    report
}

/// Criterion: degenerate proportionality (1e-9, m ∈ 0..3), Ψ reflection and
/// Laurent expansions (1e-9), the Bessel formula for m ∈ −2..2 (1e-9).
pub fn degenerate_suite(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("degenerate");

    for m in 0..=3i64 {
        let a = rand_real(&mut rng, 0.2, 0.9);
        let b = rand_real(&mut rng, 0.8, 1.9);
        let p = dict::gauss_2f1(a, b, c(1.0 + m as f64));
        let r = degenerate_proportionality(&p, c(0.4)).unwrap();
        report.push(format!("2F1 proportionality m={m}"), r.max_rel_err, 1e-9);
        let p = dict::kummer_1f1(a, c(1.0 + m as f64));
        let r = degenerate_proportionality(&p, c(0.35)).unwrap();
        report.push(format!("1F1 proportionality m={m}"), r.max_rel_err, 1e-9);
    }

    // Ψ reflection over random draws
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let draw = DegenerateParams {
            a: rand_real(&mut rng, 0.3, 1.2),
            b: rand_real(&mut rng, 0.3, 1.2),
            mu: rand_real(&mut rng, 0.05, 0.5),
            nu: rand_real(&mut rng, 0.05, 0.5),
            m: 0,
        };
        let zr = rand_real(&mut rng, 0.1, 0.6);
        for m in -2..=2i32 {
            let p = DegenerateParams { m, ..draw };
            let p_neg = DegenerateParams { m: -m, ..draw };
            let lhs = psi_loop(&p, zr).unwrap();
            let rhs = zr.powi(-m) * psi_tilde_loop(&p_neg, zr).unwrap();
            worst = worst.max(rel_err(lhs, rhs));
        }
    }
    report.push("Ψ_m = z^{−m}Ψ̃_{−m} (m ∈ −2..2, 20 draws)", worst, 1e-9);

    // a fixed parameter set for the expansions below
    let p0 = DegenerateParams {
        a: c(0.8),
        b: c(0.6),
        mu: c(0.3),
        nu: c(0.2),
        m: 0,
    };
    let z = c(0.3);

    let u = Complex64::new(0.5, 0.4);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in -20..=20i32 {
        sum += u.powi(m) * psi_loop(&DegenerateParams { m, ..p0 }, z).unwrap();
    }
    let kernel = crate::series::powexp(-p0.a, p0.mu, u).unwrap()
        * crate::series::powexp(-p0.b, p0.nu, z / u).unwrap();
    report.push(
        "Laurent generating expansion (Ψ)",
        rel_err(sum, kernel),
        1e-9,
    );

    let mut sum = Complex64::new(0.0, 0.0);
    for m in -20..=20i32 {
        sum += u.powi(m) * psi_tilde_loop(&DegenerateParams { m, ..p0 }, z).unwrap();
    }
    let kernel = crate::series::powexp(-p0.a, p0.mu, z / u).unwrap()
        * crate::series::powexp(-p0.b, p0.nu, u).unwrap();
    report.push(
        "Laurent generating expansion (Ψ̃)",
        rel_err(sum, kernel),
        1e-9,
    );

    let mut worst = 0.0f64;
    for i in 0..6 {
        let draw = DegenerateParams {
            a: rand_real(&mut rng, 0.3, 1.2),
            b: rand_real(&mut rng, 0.3, 1.2),
            mu: rand_real(&mut rng, 0.05, 0.5),
            nu: rand_real(&mut rng, 0.05, 0.5),
            m: 0,
        };
        let zr = rand_real(&mut rng, 0.1, 0.5);
        for m in 0..=3i32 {
            let p = DegenerateParams { m, ..draw };
            let lhs = psi_loop(&p, zr).unwrap();
            let rhs = psi_prefactor(draw.a, draw.mu, m as u32)
                * olver_f(&p.params().unwrap(), zr).unwrap().value;
            worst = worst.max(rel_err(lhs, rhs));
        }
        let _ = i;
    }
    report.push("Ψ_m vs unified function (m ∈ 0..3, 6 draws)", worst, 1e-9);

    // Bessel formula for m ∈ −2..2
    let mut worst = 0.0f64;
    for m in -2..=2i32 {
        let r = named_representation(
            Named::Repr0F1Loop {
                c: c(1.0 + m as f64),
            },
            c(0.7),
        )
        .unwrap()
        .value;
        let s = olver_classical(
            Classical::ZeroF1 {
                c: c(1.0 + m as f64),
            },
            c(0.7),
        )
        .unwrap()
        .value;
        worst = worst.max(rel_err(r, s));
    }
    report.push("Bessel formula 𝐅(1+m;z), m ∈ −2..2", worst, 1e-9);
    report
}

/// Criterion: ₀F₁ closed forms match 𝐅 to 1e-10 for k ∈ {0,1,2}; the √ω
/// frequency reading (good residual < 1e-6, wrong reading > 1e-2 at ω = 4);
/// ₂F₁ closed forms verified at k = 0 (constants for higher k logged).
pub fn chebyshev_suite(_seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("chebyshev");
    let mut worst_sinh = 0.0f64;
    let mut worst_cosh = 0.0f64;
    for k in 0..=2u32 {
        for &z in &[0.35, 1.0, 2.2] {
            let t = chebyshev_target(ChebyshevKind::ZeroF1Sinh, k, c(0.0))[0];
            let closed = chebyshev_eval(ChebyshevKind::ZeroF1Sinh, k, c(0.0), c(z))
                .unwrap()
                .value;
            let series = olver_classical(Classical::ZeroF1 { c: t }, c(z))
                .unwrap()
                .value;
            worst_sinh = worst_sinh.max(rel_err(closed, series));

            let t = chebyshev_target(ChebyshevKind::ZeroF1Cosh, k, c(0.0))[0];
            let closed = chebyshev_eval(ChebyshevKind::ZeroF1Cosh, k, c(0.0), c(z))
                .unwrap()
                .value;
            let series = olver_classical(Classical::ZeroF1 { c: t }, c(z))
                .unwrap()
                .value;
            worst_cosh = worst_cosh.max(rel_err(closed, series));
        }
    }
    report.push("0F1 sinh family k ∈ {0,1,2}", worst_sinh, 1e-10);
    report.push("0F1 cosh family k ∈ {0,1,2}", worst_cosh, 1e-10);
    report.note(
        "0F1 sinh family constant is 1/√π for every k, pinned by the ladder identity ∂𝐅(c;z) = 𝐅(c+1;z)",
    );

    // frequency reading
    let sigma = PolyC::one();
    let grid: Vec<Complex64> = [0.2, 0.5, 0.8, 1.1].iter().map(|&x| c(x)).collect();
    let good = chebyshev_residual(
        &sigma,
        c(4.0),
        ChebyshevGauge::Plain,
        |z| (2.0 * z).sin(),
        &grid,
    );
    report.push("sin(√ω·y) residual (ω = 4, σ = 1)", good, 1e-6);
    let bad = chebyshev_residual(
        &sigma,
        c(4.0),
        ChebyshevGauge::Plain,
        |z| (4.0 * z).sin(),
        &grid,
    );
    report.push_bool(
        format!("sin(ω·y) residual {bad:.3e} > 1e-2 (wrong frequency reading rejected)"),
        bad > 1e-2,
    );

    // σ = z member of the ladder
    let sigma = PolyC::from_reals(&[0.0, 1.0]);
    let omega = c(2.25);
    let grid: Vec<Complex64> = [0.4, 0.9, 1.6].iter().map(|&x| c(x)).collect();
    let r = chebyshev_residual(
        &sigma,
        omega,
        ChebyshevGauge::Plain,
        |z| (omega.sqrt() * 2.0 * z.sqrt()).sin(),
        &grid,
    );
    report.push("σ = z elementary solution residual", r, 1e-6);

    // 2F1 closed forms at k = 0 (and the k = 1,2 constants, logged)
    let lambda = c(0.6);
    let mut worst_k0 = 0.0f64;
    for &w in &[0.3, -0.2, 0.75] {
        let z = (1.0 - w) / 2.0;
        for kind in [ChebyshevKind::TwoF1Sin, ChebyshevKind::TwoF1Cos] {
            let t = chebyshev_target(kind, 0, lambda);
            let closed = chebyshev_eval(kind, 0, lambda, c(w)).unwrap().value;
            let series = olver_classical(
                Classical::Gauss2F1 {
                    a: t[0],
                    b: t[1],
                    c: t[2],
                },
                c(z),
            )
            .unwrap()
            .value;
            worst_k0 = worst_k0.max(rel_err(closed, series));
        }
    }
    report.push("2F1 closed forms k = 0", worst_k0, 1e-9);
    report.note(
        "2F1 closed forms: the sin kernel solves the 3/2+k family, the cos kernel the 1/2−k family",
    );
    for k in 1..=2u32 {
        for kind in [ChebyshevKind::TwoF1Sin, ChebyshevKind::TwoF1Cos] {
            let t = chebyshev_target(kind, k, lambda);
            let w = 0.4;
            let closed = chebyshev_eval(kind, k, lambda, c(w)).unwrap().value;
            let series = olver_classical(
                Classical::Gauss2F1 {
                    a: t[0],
                    b: t[1],
                    c: t[2],
                },
                c((1.0 - w) / 2.0),
            )
            .unwrap()
            .value;
            let fitted = series / closed;
            report.push(
                format!("2F1 {kind:?} k={k} constant"),
                rel_err(closed, series),
                1e-9,
            );
            report.note(format!(
                "2F1 {kind:?} k={k}: fitted constant ratio = {:.12e}+{:.3e}i (1 when the closed-form constant is exact)",
                fitted.re, fitted.im
            ));
        }
    }
    report
}

/// Criterion: the ten normal forms round-trip under classification, Airy is
/// flagged outside the hypergeometric class, and a shifted/scaled ₂F₁
/// operator recovers (a,b,c) up to the swap.
pub fn classification_suite(_seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("classification");
    let cases: Vec<(NormalType, Vec<Complex64>)> = vec![
        (NormalType::Gauss2F1, vec![c(0.3), c(1.4), c(0.9)]),
        (NormalType::TwoF0, vec![c(0.5), c(1.2)]),
        (NormalType::Kummer1F1, vec![c(0.7), c(1.6)]),
        (NormalType::ZeroF1, vec![c(1.3)]),
        (NormalType::Hermite, vec![c(0.4)]),
        (NormalType::Airy, vec![]),
        (NormalType::EulerI, vec![c(0.8)]),
        (NormalType::EulerII, vec![c(1.1)]),
        (NormalType::Helmholtz1d, vec![]),
        (NormalType::Laplace1d, vec![]),
    ];
    for (tag, par) in cases {
        let (sigma, tau, xi) = normal_form_triple(tag, &par);
        match classify_riemann(&sigma, &tau, &xi) {
            Ok(rep) => {
                let identity = (rep.affine_map.0 - c(1.0)).norm() < 1e-9
                    && rep.affine_map.1.norm() < 1e-9
                    && (rep.scalar_divisor - c(1.0)).norm() < 1e-9;
                report.push_bool(
                    format!("{tag} round-trips with identity map"),
                    rep.type_tag == tag && identity,
                );
                if tag == NormalType::Airy {
                    report.push_bool("Airy flagged outside class", !rep.hypergeometric_class);
                }
            }
            Err(e) => report.push_bool(format!("{tag} classification failed: {e}"), false),
        }
    }
    // shifted/scaled 2F1
    let (a, b, cc) = (c(0.6), c(1.9), c(1.2));
    let (sigma, tau, _) = normal_form_triple(NormalType::Gauss2F1, &[a, b, cc]);
    let third = c(1.0 / 3.0);
    let s2 = sigma.compose_affine(third, third).scale(c(18.0));
    let t2 = tau.compose_affine(third, third).scale(c(6.0));
    let x2 = s2.scale(-2.0 * a * b);
    match classify_riemann(&s2, &t2, &x2) {
        Ok(rep) => {
            let get = |n: &str| rep.normal_params.iter().find(|(k, _)| *k == n).unwrap().1;
            let (ra, rb, rc) = (get("a"), get("b"), get("c"));
            let swap_ok = ((ra - a).norm() < 1e-9 && (rb - b).norm() < 1e-9)
                || ((ra - b).norm() < 1e-9 && (rb - a).norm() < 1e-9);
            report.push_bool(
                "shifted/scaled 2F1 recovers (a,b,c) up to swap",
                rep.type_tag == NormalType::Gauss2F1 && swap_ok && (rc - cc).norm() < 1e-9,
            );
        }
        Err(e) => report.push_bool(format!("shifted 2F1 classification failed: {e}"), false),
    }
    report
}

/// The Lie-ladder annihilation property: H(σ,κ)+ω applied to the truncated
/// unified series leaves a residual dominated by the omitted terms.
pub fn annihilation_property(seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("annihilation");
    let mut worst = 0.0f64;
    let mut tested = 0;
    while tested < 200 {
        let a = rand_c(&mut rng, -1.2, 1.2);
        let b = rand_c(&mut rng, -1.2, 1.2);
        let cc = rand_c(&mut rng, -0.8, 0.8) + c(1.5);
        let p = match tested % 3 {
            0 => dict::gauss_2f1(a, b, cc),
            1 => dict::kummer_1f1(a, cc),
            _ => dict::zero_f1(cc),
        };
        let z = rand_c(&mut rng, -0.4, 0.4);
        let n_terms = 60;
        let coeffs = match unified_coeffs(&p, n_terms) {
            Ok(cs) => cs,
            Err(_) => continue,
        };
        let partial = PolyC::new(coeffs.clone());
        let image = hgc_operator(&p).apply_poly(&partial);
        let resid = image.eval(z).norm();
        let value = partial.eval(z).norm().max(1e-300);
        // the residual is the tail the truncation dropped; compare against
        // the first omitted coefficients
        let tail = coeffs[n_terms - 1].norm() * z.norm().powi(n_terms as i32 - 1);
        let bound = (100.0 * DEFAULT_TOL * value).max(1e4 * tail);
        worst = worst.max(resid / bound.max(1e-300));
        tested += 1;
    }
    report.push("series annihilation (200 draws)", worst, 1.0);
    report
}

/// Spot-check a single parameter set against one identity family; used by
/// `verify --suite … --sigma … --kappa …`.
pub fn targeted_suite(which: &str, params: &EquationParams) -> SuiteReport {
    let mut report = SuiteReport::new("targeted");
    match which {
        "lie" => {
            for rep in [Representation::Reduced, Representation::Full] {
                let gens = miller_generators(params, rep);
                let r = verify_miller_commutation(&gens, 8);
                report.note(format!("algebra tag: {}", gens.algebra_tag));
                report.push(
                    format!("{rep:?} commutation + casimir"),
                    r.max_residual(),
                    1e-12,
                );
            }
        }
        "symmetry" => {
            for kind in [
                SymmetryKind::Basic,
                SymmetryKind::Power,
                SymmetryKind::Inversion,
            ] {
                match verify_symmetry(kind, params) {
                    Ok(r) => report.push(format!("{kind:?} identity"), r.residual, 1e-10),
                    Err(e) => report.note(format!("{kind:?}: {e}")),
                }
            }
        }
        "factorization" => {
            for n in [0.0, 1.0, 2.5, -1.5] {
                let r = verify_factorization(params, c(n));
                report.push(format!("identities at n = {n}"), r.max_residual(), 1e-10);
            }
        }
        other => report.push_bool(format!("unknown targeted suite `{other}`"), false),
    }
    report
}

pub fn all_suites(seed: u64) -> Vec<SuiteReport> {
    vec![
        lie_suite(seed),
        symmetry_suite(seed),
        factorization_suite(seed),
        series_suite(seed),
        recurrence_suite(seed),
        integral_suite(seed),
        f20_suite(seed),
        polynomial_suite(seed),
        degenerate_suite(seed),
        chebyshev_suite(seed),
        classification_suite(seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        // the fast suites; the heavy ones run in the acceptance tests
        for rep in [series_suite(7), f20_suite(7), classification_suite(7)] {
            assert!(
                rep.passed(),
                "{} failed: {:?}",
                rep.name,
                rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }
}
