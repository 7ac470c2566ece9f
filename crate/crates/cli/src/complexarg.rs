//! Complex and polynomial flag parsing: a complex value is `re` or `re+imj`
//! (e.g. `1.5`, `-2`, `0.5-0.25j`); a polynomial is a comma-separated list of
//! complex coefficients, lowest degree first.

use hgc_core::poly::PolyC;
use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex value".into());
    }
    if let Some(body) = t.strip_suffix(['j', 'J']) {
        // find the sign splitting re and im (skip a leading sign and signs
        // inside exponents like 1e-3)
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let ch = bytes[i];
            if (ch == b'+' || ch == b'-') && bytes[i - 1] != b'e' && bytes[i - 1] != b'E' {
                split = Some(i);
                break;
            }
        }
        match split {
            Some(i) => {
                let re: f64 = body[..i]
                    .parse()
                    .map_err(|_| format!("bad real part in `{s}`"))?;
                let im_str = &body[i..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str
                        .parse()
                        .map_err(|_| format!("bad imaginary part in `{s}`"))?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                // pure imaginary: `1.5j`, `j`, `-j`
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    other => other
                        .parse()
                        .map_err(|_| format!("bad imaginary value `{s}`"))?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| format!("bad numeric value `{s}`"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn parse_poly(s: &str) -> Result<PolyC, String> {
    let coeffs = s
        .split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyC::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reals_and_complex() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2").unwrap(), Complex64::new(-2.0, 0.0));
        assert_eq!(parse_complex("1+2j").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(
            parse_complex("0.5-0.25j").unwrap(),
            Complex64::new(0.5, -0.25)
        );
        assert_eq!(
            parse_complex("1e-3+2e-4j").unwrap(),
            Complex64::new(1e-3, 2e-4)
        );
        assert_eq!(parse_complex("2j").unwrap(), Complex64::new(0.0, 2.0));
        assert!(parse_complex("frog").is_err());
    }

    #[test]
    fn parses_polynomials() {
        let p = parse_poly("0,1,-1").unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(1), Complex64::new(1.0, 0.0));
        assert_eq!(p.coeff(2), Complex64::new(-1.0, 0.0));
    }
}
