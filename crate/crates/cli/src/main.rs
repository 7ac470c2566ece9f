//! `hgc` — evaluate hypergeometric class functions, classify operators, run
//! verification suites, and emit polynomial tables and plot data.

mod complexarg;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use complexarg::{parse_complex, parse_poly};
use hgc_core::classify::classify_riemann;
use hgc_core::json::{complex as jc, poly as jpoly, Json};
use hgc_core::orthopoly::{classical_poly, Family, FamilySpec};
use hgc_core::params::{dict, ladder_params, EquationParams};
use hgc_core::poly::PolyC;
use hgc_core::series::{
    eval_classical, olver_classical, unified_f, Classical, EvalMethod, EvalResult,
};
use hgc_core::suites;
use hgc_core::transforms::{named_representation, Named};
use num_complex::Complex64;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hgc",
    version,
    about = "Hypergeometric class equations: evaluation, classification, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FnType {
    /// Gauss 2F1(a,b;c;z)
    #[value(name = "2F1", alias = "2f1")]
    Gauss2F1,
    /// Kummer 1F1(a;c;z)
    #[value(name = "1F1", alias = "1f1")]
    Kummer1F1,
    /// 0F1(c;z)
    #[value(name = "0F1", alias = "0f1")]
    ZeroF1,
    /// 2F0(a,b;-;z), off the cut [0,∞)
    #[value(name = "2F0", alias = "2f0")]
    TwoF0,
    /// Hermite S(a;z)
    #[value(name = "hermite-s")]
    HermiteS,
    /// unified F(σ,κ,ω;z) from raw --sigma/--kappa/--omega
    #[value(name = "unified")]
    Unified,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CrossCheck {
    Integral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteName {
    Lie,
    Symmetry,
    Factorization,
    Series,
    Recurrence,
    Integral,
    F20,
    Orthogonality,
    Degenerate,
    Chebyshev,
    Classification,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Jacobi,
    Laguerre,
    Bessel,
    Hermite,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a hypergeometric class function
    Eval {
        #[arg(long = "type", value_enum)]
        fn_type: FnType,
        /// parameter a (complex: `re` or `re+imj`)
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// parameter b
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// parameter c
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// raw σ coefficients, lowest degree first (e.g. `0,1,-1` for z−z²)
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        /// raw κ coefficients, lowest degree first
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        /// raw ω
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        /// argument z
        #[arg(long, short, allow_hyphen_values = true)]
        z: String,
        /// divide by Γ(c) (Olver normalization)
        #[arg(long)]
        olver: bool,
        /// relative term tolerance for series summation
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
        /// series term budget
        #[arg(long, default_value_t = 10_000)]
        max_terms: usize,
        /// also evaluate a named integral representation and report the gap
        #[arg(long, value_enum)]
        cross_check: Option<CrossCheck>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Classify σ∂² + τ∂ + ξ/σ into a tabulated normal form
    Classify {
        /// σ coefficients, lowest degree first
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// τ coefficients, lowest degree first
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        tau: String,
        /// constant free term η (grounded case ξ = η·σ)
        #[arg(long, conflicts_with = "xi", allow_hyphen_values = true)]
        eta: Option<String>,
        /// free-term numerator ξ coefficients (Riemann class)
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Run a verification suite; exit code 0 iff everything passes
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        /// deterministic seed for the random parameter draws
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// targeted σ for the lie/symmetry/factorization suites
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        /// targeted κ
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        /// targeted ω
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
    },
    /// Emit a classical polynomial family table
    Poly {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Tabulate the parameter ladder κ_n, ω_n over an index range
    Ladder {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        omega: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = -3)]
        from: i32,
        #[arg(long, default_value_t = 3)]
        to: i32,
    },
    /// Emit CSV of z versus the function value over a grid
    PlotData {
        #[arg(long = "type", value_enum)]
        fn_type: FnType,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z_from: String,
        #[arg(long, allow_hyphen_values = true)]
        z_to: String,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long)]
        olver: bool,
    },
}

struct UsageError(String);

impl From<hgc_core::Error> for UsageError {
    fn from(e: hgc_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn req(opt: &Option<String>, name: &str) -> Result<Complex64, UsageError> {
    match opt {
        Some(s) => parse_complex(s).map_err(UsageError),
        None => Err(UsageError(format!("--{name} is required for this type"))),
    }
}

fn forbid_raw(
    sigma: &Option<String>,
    kappa: &Option<String>,
    omega: &Option<String>,
) -> Result<(), UsageError> {
    if sigma.is_some() || kappa.is_some() || omega.is_some() {
        return Err(UsageError(
            "named parameters (--a/--b/--c) and raw --sigma/--kappa/--omega are mutually exclusive"
                .into(),
        ));
    }
    Ok(())
}

struct EvalSpec {
    classical: Option<Classical>,
    params: Option<EquationParams>,
    label: &'static str,
    named: Vec<(&'static str, Complex64)>,
}

#[allow(clippy::too_many_arguments)]
fn build_eval_spec(
    fn_type: FnType,
    a: &Option<String>,
    b: &Option<String>,
    c: &Option<String>,
    sigma: &Option<String>,
    kappa: &Option<String>,
    omega: &Option<String>,
) -> Result<EvalSpec, UsageError> {
    let forbid_named = |label: &str| -> Result<(), UsageError> {
        if a.is_some() || b.is_some() || c.is_some() {
            return Err(UsageError(format!(
                "{label} takes raw --sigma/--kappa/--omega, not --a/--b/--c"
            )));
        }
        Ok(())
    };
    match fn_type {
        FnType::Gauss2F1 => {
            forbid_raw(sigma, kappa, omega)?;
            let (a, b, c) = (req(a, "a")?, req(b, "b")?, req(c, "c")?);
            Ok(EvalSpec {
                classical: Some(Classical::Gauss2F1 { a, b, c }),
                params: Some(dict::gauss_2f1(a, b, c)),
                label: "2F1",
                named: vec![("a", a), ("b", b), ("c", c)],
            })
        }
        FnType::Kummer1F1 => {
            forbid_raw(sigma, kappa, omega)?;
            let (a, c) = (req(a, "a")?, req(c, "c")?);
            Ok(EvalSpec {
                classical: Some(Classical::Kummer1F1 { a, c }),
                params: Some(dict::kummer_1f1(a, c)),
                label: "1F1",
                named: vec![("a", a), ("c", c)],
            })
        }
        FnType::ZeroF1 => {
            forbid_raw(sigma, kappa, omega)?;
            let c = req(c, "c")?;
            Ok(EvalSpec {
                classical: Some(Classical::ZeroF1 { c }),
                params: Some(dict::zero_f1(c)),
                label: "0F1",
                named: vec![("c", c)],
            })
        }
        FnType::TwoF0 => {
            forbid_raw(sigma, kappa, omega)?;
            let (a, b) = (req(a, "a")?, req(b, "b")?);
            Ok(EvalSpec {
                classical: Some(Classical::TwoF0 { a, b }),
                params: Some(dict::two_f0(a, b)),
                label: "2F0",
                named: vec![("a", a), ("b", b)],
            })
        }
        FnType::HermiteS => {
            forbid_raw(sigma, kappa, omega)?;
            let a = req(a, "a")?;
            Ok(EvalSpec {
                classical: Some(Classical::HermiteS { a }),
                params: Some(dict::hermite(a)),
                label: "hermite-s",
                named: vec![("a", a)],
            })
        }
        FnType::Unified => {
            forbid_named("--type unified")?;
            let sigma = parse_poly(
                sigma
                    .as_deref()
                    .ok_or_else(|| UsageError("--sigma is required for --type unified".into()))?,
            )
            .map_err(UsageError)?;
            let kappa = match kappa {
                Some(k) => parse_poly(k).map_err(UsageError)?,
                None => PolyC::zero(),
            };
            let omega = match omega {
                Some(w) => parse_complex(w).map_err(UsageError)?,
                None => Complex64::new(0.0, 0.0),
            };
            let p = EquationParams::new(sigma, kappa, omega)?;
            Ok(EvalSpec {
                classical: None,
                params: Some(p),
                label: "unified",
                named: vec![],
            })
        }
    }
}

fn eval_value(
    spec: &EvalSpec,
    z: Complex64,
    olver: bool,
    tol: f64,
    max_terms: usize,
) -> hgc_core::Result<EvalResult> {
    match (&spec.classical, olver) {
        (Some(cl), true) => olver_classical(*cl, z),
        (Some(cl), false) => eval_classical(*cl, z, false),
        (None, false) => unified_f(spec.params.as_ref().unwrap(), z, tol, max_terms),
        (None, true) => {
            // Olver normalization needs σ(0) = 0, σ′(0) = 1; rescale first
            let p = spec.params.as_ref().unwrap().normalized_at_zero()?;
            hgc_core::olver_f(&p, z)
        }
    }
}

fn method_name(m: EvalMethod) -> &'static str {
    match m {
        EvalMethod::Series => "series",
        EvalMethod::Integral => "integral",
        EvalMethod::ClosedForm => "closed-form",
        EvalMethod::Continuation => "continuation",
    }
}

fn cross_check_representation(
    spec: &EvalSpec,
    olver: bool,
    z: Complex64,
) -> Option<(&'static str, hgc_core::Result<Complex64>)> {
    let named = match spec.classical? {
        Classical::Gauss2F1 { a, b, c } => (
            "2F1-euler",
            named_representation(Named::Repr2F1Euler { a, b, c }, z),
        ),
        Classical::Kummer1F1 { a, c } => (
            "1F1-hankel",
            named_representation(Named::Repr1F1Hankel { a, c }, z),
        ),
        Classical::ZeroF1 { c } => (
            "0F1-loop",
            named_representation(Named::Repr0F1Loop { c }, z),
        ),
        Classical::TwoF0 { a, b } => (
            "2F0-integral",
            named_representation(Named::Repr2F0 { a, b }, z),
        ),
        Classical::HermiteS { a } => (
            "hermite-laplace",
            named_representation(Named::ReprHermiteLaplace { a }, z),
        ),
    };
    let (name, result) = named;
    // the named representations produce the Olver-normalized value for the
    // 2F1/1F1/0F1 types; rescale when the series value is unnormalized
    let rescale = |v: Complex64| -> Complex64 {
        if olver {
            return v;
        }
        match spec.classical {
            Some(Classical::Gauss2F1 { c, .. })
            | Some(Classical::Kummer1F1 { c, .. })
            | Some(Classical::ZeroF1 { c }) => v * hgc_core::gamma::gamma(c),
            _ => v,
        }
    };
    Some((name, result.map(|r| rescale(r.value))))
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    fn_type: FnType,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    sigma: Option<String>,
    kappa: Option<String>,
    omega: Option<String>,
    z: String,
    olver: bool,
    tol: f64,
    max_terms: usize,
    cross_check: Option<CrossCheck>,
    format: OutputFormat,
) -> Result<ExitCode, UsageError> {
    let spec = build_eval_spec(fn_type, &a, &b, &c, &sigma, &kappa, &omega)?;
    let z = parse_complex(&z).map_err(UsageError)?;
    let result = eval_value(&spec, z, olver, tol, max_terms)?;

    let mut params_obj = Json::obj();
    for (k, v) in &spec.named {
        params_obj = params_obj.field(k, jc(*v));
    }
    if let (FnType::Unified, Some(p)) = (fn_type, &spec.params) {
        params_obj = params_obj
            .field("sigma", jpoly(&p.sigma))
            .field("kappa", jpoly(&p.kappa))
            .field("omega", jc(p.omega));
    }
    let mut doc = Json::obj()
        .field("command", Json::Str("eval".into()))
        .field("type", Json::Str(spec.label.into()))
        .field("olver_normalized", Json::Bool(olver))
        .field("parameters", params_obj)
        .field("z", jc(z))
        .field("value", jc(result.value))
        .field("terms_used", Json::Int(result.terms_used as i64))
        .field("truncation_estimate", Json::Num(result.truncation_estimate))
        .field("method", Json::Str(method_name(result.method).into()));
    if cross_check.is_some() {
        match cross_check_representation(&spec, olver, z) {
            Some((name, Ok(v))) => {
                let abs = (v - result.value).norm();
                let rel = abs / result.value.norm().max(1e-300);
                doc = doc.field(
                    "cross_check",
                    Json::obj()
                        .field("representation", Json::Str(name.into()))
                        .field("value", jc(v))
                        .field("abs_diff", Json::Num(abs))
                        .field("rel_diff", Json::Num(rel)),
                );
            }
            Some((name, Err(e))) => {
                doc = doc.field(
                    "cross_check",
                    Json::obj()
                        .field("representation", Json::Str(name.into()))
                        .field("error", Json::Str(e.to_string())),
                );
            }
            None => {
                return Err(UsageError(
                    "--cross-check is only available for the named classical types".into(),
                ))
            }
        }
    }
    match format {
        OutputFormat::Json => println!("{}", doc.render()),
        OutputFormat::Text => println!(
            "{}({}) = {} + {}i   [{} terms, method {}]",
            spec.label,
            output::fmt_c(z),
            result.value.re,
            result.value.im,
            result.terms_used,
            method_name(result.method)
        ),
        OutputFormat::Csv => {
            println!("z_re,z_im,value_re,value_im");
            println!(
                "{},{},{},{}",
                output::e15(z.re),
                output::e15(z.im),
                output::e15(result.value.re),
                output::e15(result.value.im)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(
    sigma: String,
    tau: String,
    eta: Option<String>,
    xi: Option<String>,
    format: OutputFormat,
) -> Result<ExitCode, UsageError> {
    let sigma = parse_poly(&sigma).map_err(UsageError)?;
    let tau = parse_poly(&tau).map_err(UsageError)?;
    let xi = match (eta, xi) {
        (Some(e), None) => sigma.scale(parse_complex(&e).map_err(UsageError)?),
        (None, Some(x)) => parse_poly(&x).map_err(UsageError)?,
        (None, None) => PolyC::zero(),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let report = classify_riemann(&sigma, &tau, &xi)?;
    let mut params_obj = Json::obj();
    for (name, value) in &report.normal_params {
        params_obj = params_obj.field(name, jc(*value));
    }
    let doc = Json::obj()
        .field("command", Json::Str("classify".into()))
        .field("type", Json::Str(report.type_tag.to_string()))
        .field(
            "hypergeometric_class",
            Json::Bool(report.hypergeometric_class),
        )
        .field(
            "affine_map",
            Json::obj()
                .field("scale", jc(report.affine_map.0))
                .field("shift", jc(report.affine_map.1)),
        )
        .field("scalar_divisor", jc(report.scalar_divisor))
        .field("normal_params", params_obj);
    match format {
        OutputFormat::Text => println!(
            "{}{}",
            report.type_tag,
            if report.hypergeometric_class {
                ""
            } else {
                " (outside the hypergeometric class)"
            }
        ),
        _ => println!("{}", doc.render()),
    }
    Ok(ExitCode::SUCCESS)
}

fn suite_reports(
    suite: SuiteName,
    seed: u64,
    targeted: Option<&EquationParams>,
) -> Vec<suites::SuiteReport> {
    use SuiteName::*;
    if let Some(p) = targeted {
        return vec![suites::targeted_suite(
            match suite {
                Lie => "lie",
                Symmetry => "symmetry",
                Factorization => "factorization",
                _ => "lie",
            },
            p,
        )];
    }
    match suite {
        Lie => vec![suites::lie_suite(seed)],
        Symmetry => vec![suites::symmetry_suite(seed)],
        Factorization => vec![suites::factorization_suite(seed)],
        Series => vec![suites::series_suite(seed)],
        Recurrence => vec![suites::recurrence_suite(seed)],
        Integral => vec![suites::integral_suite(seed)],
        F20 => vec![suites::f20_suite(seed)],
        Orthogonality => vec![suites::polynomial_suite(seed)],
        Degenerate => vec![suites::degenerate_suite(seed)],
        Chebyshev => vec![suites::chebyshev_suite(seed)],
        Classification => vec![suites::classification_suite(seed)],
        All => suites::all_suites(seed),
    }
}

fn cmd_verify(
    suite: SuiteName,
    seed: u64,
    sigma: Option<String>,
    kappa: Option<String>,
    omega: Option<String>,
) -> Result<ExitCode, UsageError> {
    let targeted = match (&sigma, &kappa) {
        (Some(s), k) => {
            let sigma = parse_poly(s).map_err(UsageError)?;
            let kappa = match k {
                Some(k) => parse_poly(k).map_err(UsageError)?,
                None => PolyC::zero(),
            };
            let omega = match &omega {
                Some(w) => parse_complex(w).map_err(UsageError)?,
                None => Complex64::new(0.0, 0.0),
            };
            if !matches!(
                suite,
                SuiteName::Lie | SuiteName::Symmetry | SuiteName::Factorization
            ) {
                return Err(UsageError(
                    "targeted --sigma/--kappa apply to the lie, symmetry and factorization suites"
                        .into(),
                ));
            }
            Some(EquationParams::new(sigma, kappa, omega)?)
        }
        (None, Some(_)) => {
            return Err(UsageError("--kappa requires --sigma".into()));
        }
        _ => None,
    };
    let reports = suite_reports(suite, seed, targeted.as_ref());
    let all_pass = reports.iter().all(|r| r.passed());
    let mut suites_json = Vec::new();
    for r in &reports {
        let checks: Vec<Json> = r
            .checks
            .iter()
            .map(|c| {
                Json::obj()
                    .field("name", Json::Str(c.name.clone()))
                    .field("residual", Json::Num(c.residual))
                    .field("tolerance", Json::Num(c.tol))
                    .field("pass", Json::Bool(c.pass))
            })
            .collect();
        suites_json.push(
            Json::obj()
                .field("suite", Json::Str(r.name.into()))
                .field("pass", Json::Bool(r.passed()))
                .field("max_residual", Json::Num(r.max_residual()))
                .field("checks", Json::Arr(checks))
                .field(
                    "notes",
                    Json::Arr(r.notes.iter().map(|n| Json::Str(n.clone())).collect()),
                ),
        );
    }
    let doc = Json::obj()
        .field("command", Json::Str("verify".into()))
        .field("seed", Json::Int(seed as i64))
        .field("pass", Json::Bool(all_pass))
        .field("suites", Json::Arr(suites_json));
    println!("{}", doc.render());
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_poly(
    family: FamilyName,
    alpha: Option<String>,
    beta: Option<String>,
    theta: Option<String>,
    n_max: u32,
    format: OutputFormat,
) -> Result<ExitCode, UsageError> {
    let getc = |o: &Option<String>, d: f64| -> Result<Complex64, UsageError> {
        match o {
            Some(s) => parse_complex(s).map_err(UsageError),
            None => Ok(Complex64::new(d, 0.0)),
        }
    };
    let (spec, label, pars): (FamilySpec, &str, Vec<(&str, Complex64)>) = match family {
        FamilyName::Jacobi => {
            let a = getc(&alpha, 0.0)?;
            let b = getc(&beta, 0.0)?;
            (
                FamilySpec::new(Family::Jacobi { alpha: a, beta: b }),
                "jacobi",
                vec![("alpha", a), ("beta", b)],
            )
        }
        FamilyName::Laguerre => {
            let a = getc(&alpha, 0.0)?;
            (
                FamilySpec::new(Family::Laguerre { alpha: a }),
                "laguerre",
                vec![("alpha", a)],
            )
        }
        FamilyName::Bessel => {
            let t = getc(&theta, 0.0)?;
            (
                FamilySpec::new(Family::BesselPoly { theta: t }),
                "bessel",
                vec![("theta", t)],
            )
        }
        FamilyName::Hermite => (FamilySpec::new(Family::HermitePoly), "hermite", vec![]),
    };
    let table: Vec<PolyC> = (0..=n_max).map(|n| classical_poly(&spec, n)).collect();
    match format {
        OutputFormat::Csv => {
            let width = table.iter().map(|p| p.coeffs().len()).max().unwrap_or(1);
            let mut header = String::from("n,degree");
            for k in 0..width {
                header.push_str(&format!(",c{k}_re,c{k}_im"));
            }
            println!("{header}");
            for (n, p) in table.iter().enumerate() {
                let mut row = format!("{n},{}", p.degree());
                for k in 0..width {
                    let c = p.coeff(k);
                    row.push_str(&format!(",{},{}", output::e15(c.re), output::e15(c.im)));
                }
                println!("{row}");
            }
        }
        _ => {
            let mut params_obj = Json::obj();
            for (k, v) in &pars {
                params_obj = params_obj.field(k, jc(*v));
            }
            let rows: Vec<Json> = table
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    Json::obj()
                        .field("n", Json::Int(n as i64))
                        .field("degree", Json::Int(p.degree() as i64))
                        .field("coefficients", jpoly(p))
                })
                .collect();
            let doc = Json::obj()
                .field("command", Json::Str("poly".into()))
                .field("family", Json::Str(label.into()))
                .field("parameters", params_obj)
                .field("table", Json::Arr(rows));
            println!("{}", doc.render());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ladder(
    sigma: String,
    kappa: String,
    omega: String,
    from: i32,
    to: i32,
) -> Result<ExitCode, UsageError> {
    if from > to {
        return Err(UsageError("--from must not exceed --to".into()));
    }
    let base = EquationParams::new(
        parse_poly(&sigma).map_err(UsageError)?,
        parse_poly(&kappa).map_err(UsageError)?,
        parse_complex(&omega).map_err(UsageError)?,
    )?;
    let rows: Vec<Json> = (from..=to)
        .map(|n| {
            let p = ladder_params(&base, (n as f64).into());
            Json::obj()
                .field("n", Json::Int(n as i64))
                .field("kappa_n", jpoly(&p.kappa))
                .field("omega_n", jc(p.omega))
        })
        .collect();
    let doc = Json::obj()
        .field("command", Json::Str("ladder".into()))
        .field("sigma", jpoly(&base.sigma))
        .field("kappa0", jpoly(&base.kappa))
        .field("omega0", jc(base.omega))
        .field("table", Json::Arr(rows));
    println!("{}", doc.render());
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_plot_data(
    fn_type: FnType,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    sigma: Option<String>,
    kappa: Option<String>,
    omega: Option<String>,
    z_from: String,
    z_to: String,
    steps: usize,
    olver: bool,
) -> Result<ExitCode, UsageError> {
    if steps < 2 {
        return Err(UsageError("--steps must be at least 2".into()));
    }
    let spec = build_eval_spec(fn_type, &a, &b, &c, &sigma, &kappa, &omega)?;
    let z0 = parse_complex(&z_from).map_err(UsageError)?;
    let z1 = parse_complex(&z_to).map_err(UsageError)?;
    println!("z_re,z_im,value_re,value_im");
    for i in 0..steps {
        let t = i as f64 / (steps - 1) as f64;
        let z = z0 + (z1 - z0) * t;
        match eval_value(&spec, z, olver, 1e-14, 10_000) {
            Ok(r) => println!(
                "{},{},{},{}",
                output::e15(z.re),
                output::e15(z.im),
                output::e15(r.value.re),
                output::e15(r.value.im)
            ),
            Err(_) => println!("{},{},nan,nan", output::e15(z.re), output::e15(z.im)),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            fn_type,
            a,
            b,
            c,
            sigma,
            kappa,
            omega,
            z,
            olver,
            tol,
            max_terms,
            cross_check,
            format,
        } => cmd_eval(
            fn_type,
            a,
            b,
            c,
            sigma,
            kappa,
            omega,
            z,
            olver,
            tol,
            max_terms,
            cross_check,
            format,
        ),
        Command::Classify {
            sigma,
            tau,
            eta,
            xi,
            format,
        } => cmd_classify(sigma, tau, eta, xi, format),
        Command::Verify {
            suite,
            seed,
            sigma,
            kappa,
            omega,
        } => cmd_verify(suite, seed, sigma, kappa, omega),
        Command::Poly {
            family,
            alpha,
            beta,
            theta,
            n_max,
            format,
        } => cmd_poly(family, alpha, beta, theta, n_max, format),
        Command::Ladder {
            sigma,
            kappa,
            omega,
            from,
            to,
        } => cmd_ladder(sigma, kappa, omega, from, to),
        Command::PlotData {
            fn_type,
            a,
            b,
            c,
            sigma,
            kappa,
            omega,
            z_from,
            z_to,
            steps,
            olver,
        } => cmd_plot_data(
            fn_type, a, b, c, sigma, kappa, omega, z_from, z_to, steps, olver,
        ),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
