//! Output formatting helpers shared by the subcommands.

use num_complex::Complex64;

/// %.15e, matching the JSON number rendering.
pub fn e15(x: f64) -> String {
    if x.is_finite() {
        let x = if x == 0.0 { 0.0 } else { x };
        format!("{x:.15e}")
    } else {
        "nan".to_string()
    }
}

pub fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}j", z.re, z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}
