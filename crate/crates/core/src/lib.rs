//! Unified treatment of hypergeometric class equations
//! σ(z)f″ + τ(z)f′ + ηf = 0 with deg σ ≤ 2, deg τ ≤ 1, η constant:
//! the (σ,κ,ω) parametrization and its ladder, the four-dimensional Lie
//! algebra acting behind it, series and contour-integral evaluation of the
//! unified hypergeometric function and the five classical types, and the
//! polynomial ladder (Rodrigues construction, recurrences, generating
//! functions, orthogonality).

pub mod chebyshev;
pub mod classify;
pub mod dd;
pub mod degenerate;
pub mod diffop;
pub mod error;
pub mod f20;
pub mod gamma;
pub mod json;
pub mod miller;
pub mod orthopoly;
pub mod params;
pub mod poly;
pub mod quad;
pub mod ratfun;
pub mod roots;
pub mod series;
pub mod suites;
pub mod symmetry;
pub mod transforms;
pub mod weight;

pub use classify::{classify_riemann, NormalFormReport, NormalType};
pub use diffop::{casimir_restrict, gauge_conjugate, hgc_operator, mobius_substitute, DiffOp};
pub use error::{Error, Result};
pub use miller::{miller_generators, verify_miller_commutation, MillerGenerators, Representation};
pub use params::{ladder_params, params_from_sty, params_to_sty, EquationParams, LadderIndex};
pub use poly::PolyC;
pub use quad::{ContourSpec, QuadResult};
pub use ratfun::RatFun;
pub use series::{eval_classical, olver_f, powexp, unified_f, Classical, EvalResult};
pub use symmetry::{verify_factorization, verify_symmetry, SymmetryKind};
pub use weight::{weight_form, WeightForm};

use num_complex::Complex64;

/// Complex shorthand used across the crate.
pub fn cplx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
