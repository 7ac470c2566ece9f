//! Minimal JSON document builder with deterministic rendering: object fields
//! keep insertion order and every float is formatted as %.15e, so identical
//! inputs produce byte-identical output. Complex numbers serialize as
//! [re, im] and polynomials as coefficient arrays, lowest degree first.

use crate::poly::PolyC;
use num_complex::Complex64;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn obj() -> Json {
        Json::Obj(Vec::new())
    }

    pub fn field(mut self, key: &str, value: Json) -> Json {
        if let Json::Obj(ref mut fields) = self {
            fields.push((key.to_string(), value));
        }
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Num(x) => {
                let _ = write!(out, "{}", fmt_f64(*x));
            }
            Json::Str(s) => write_escaped(out, s),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (k, v)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_escaped(out, k);
                    out.push(':');
                    v.write(out);
                }
                out.push('}');
            }
        }
    }
}

/// %.15e rendering; non-finite values become JSON strings.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        let x = if x == 0.0 { 0.0 } else { x }; // canonical zero, no -0
        format!("{x:.15e}")
    } else if x.is_nan() {
        "\"nan\"".to_string()
    } else if x > 0.0 {
        "\"inf\"".to_string()
    } else {
        "\"-inf\"".to_string()
    }
}

fn write_escaped(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

pub fn complex(z: Complex64) -> Json {
    Json::Arr(vec![Json::Num(z.re), Json::Num(z.im)])
}

pub fn poly(p: &PolyC) -> Json {
    Json::Arr(p.coeffs().iter().map(|&c| complex(c)).collect())
}

pub fn params(p: &crate::params::EquationParams) -> Json {
    Json::obj()
        .field("sigma", poly(&p.sigma))
        .field("kappa", poly(&p.kappa))
        .field("omega", complex(p.omega))
}

pub fn weight(w: &crate::weight::WeightForm) -> Json {
    Json::obj()
        .field(
            "power_factors",
            Json::Arr(
                w.power_factors
                    .iter()
                    .map(|&(r, e)| Json::Arr(vec![complex(r), complex(e)]))
                    .collect(),
            ),
        )
        .field("exp_poly", poly(&w.exp_poly))
        .field(
            "exp_pole",
            match w.exp_pole {
                Some((r, c)) => Json::Arr(vec![complex(r), complex(c)]),
                None => Json::Null,
            },
        )
        .field("scale", complex(w.scale))
}

pub fn eval_result(r: &crate::series::EvalResult) -> Json {
    let method = match r.method {
        crate::series::EvalMethod::Series => "series",
        crate::series::EvalMethod::Integral => "integral",
        crate::series::EvalMethod::ClosedForm => "closed-form",
        crate::series::EvalMethod::Continuation => "continuation",
    };
    Json::obj()
        .field("value", complex(r.value))
        .field("terms_used", Json::Int(r.terms_used as i64))
        .field("truncation_estimate", Json::Num(r.truncation_estimate))
        .field("method", Json::Str(method.into()))
}

pub fn quad_result(r: &crate::quad::QuadResult) -> Json {
    Json::obj()
        .field("value", complex(r.value))
        .field("err_estimate", Json::Num(r.err_estimate))
        .field("boundary_term", complex(r.boundary_term))
}
