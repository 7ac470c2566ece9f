//! Discrete symmetries and the factorization/transmutation identities,
//! verified as exact operator identities.

use crate::diffop::{gauge_conjugate, hgc_operator, mobius_substitute, DiffOp};
use crate::error::{Error, Result};
use crate::params::{ladder_params, EquationParams};
use crate::poly::PolyC;
use crate::ratfun::RatFun;
use crate::weight::{weight_form, WeightForm};
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryKind {
    /// ρ H(σ,κ) ρ⁻¹ = H(σ,−κ).
    Basic,
    /// z^m (H(σ,κ)+ω) z^{−m} = H(σ,κ°)+ω° when σ(0)=0, σ′(0)=1, m=κ(0).
    Power,
    /// Under w = −1/z and a gauge z^ζ the operator maps to another
    /// hypergeometric class operator; requires σ(0)=0 and σ″≠0 or κ′≠0.
    Inversion,
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub kind: SymmetryKind,
    pub transformed: EquationParams,
    /// Max coefficientwise residual of the operator identity.
    pub residual: f64,
    /// Gauge exponent ζ (inversion only).
    pub exponent: Option<Complex64>,
    /// −1 when the transformed triple was negated to canonical sign.
    pub sign: Complex64,
}

fn canonical_sign(sigma: &PolyC) -> Complex64 {
    let lead = sigma.leading();
    if lead.re < 0.0 || (lead.re == 0.0 && lead.im < 0.0) {
        Complex64::new(-1.0, 0.0)
    } else {
        Complex64::new(1.0, 0.0)
    }
}

/// Transformed parameters under inversion for a given gauge exponent ζ:
/// σ^t = (σ″/2)w − σ′(0)w²,
/// κ^t = (κ(0) + (2ζ+1)σ′(0))w − (ζ+½)σ″ − κ′,
/// ω^t = −σ′(0)(ζ²+ζ+½) − κ(0)(ζ+½).
fn inversion_transform(p: &EquationParams, zeta: Complex64) -> EquationParams {
    let s1 = p.sigma.coeff(1);
    let spp = p.sigma_pp();
    let k0 = p.kappa.coeff(0);
    let kp = p.kappa_p();
    let zero = Complex64::new(0.0, 0.0);
    let sigma_t = PolyC::new(vec![zero, spp / 2.0, -s1]);
    let kappa_t = PolyC::new(vec![-(zeta + 0.5) * spp - kp, k0 + (2.0 * zeta + 1.0) * s1]);
    let omega_t = -s1 * (zeta * zeta + zeta + 0.5) - k0 * (zeta + 0.5);
    EquationParams {
        sigma: sigma_t,
        kappa: kappa_t,
        omega: omega_t,
    }
}

/// Gauge exponents ζ solving (σ″/2)ζ² + (σ″/2 + κ′)ζ + κ′/2 + ω = 0,
/// which is the condition removing the 1/w term from the inverted operator.
pub fn inversion_exponents(p: &EquationParams) -> Result<Vec<Complex64>> {
    let spp = p.sigma_pp();
    let kp = p.kappa_p();
    let a = spp / 2.0;
    let b = spp / 2.0 + kp;
    let c = kp / 2.0 + p.omega;
    if a.norm() > 1e-14 {
        let disc = (b * b - 4.0 * a * c).sqrt();
        let mut roots = vec![(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)];
        roots.sort_by(|x, y| x.norm().total_cmp(&y.norm()));
        Ok(roots)
    } else if b.norm() > 1e-14 {
        Ok(vec![-c / b])
    } else {
        Err(Error::NoExponent)
    }
}

/// Verifies one of the three discrete symmetries as an operator identity and
/// returns the transformed parameters. The transformed triple is normalized so
/// the leading coefficient of σ has nonnegative real part (`sign` records the
/// flip); this makes each symmetry an involution on parameter triples.
pub fn verify_symmetry(kind: SymmetryKind, params: &EquationParams) -> Result<SymmetryReport> {
    let one = Complex64::new(1.0, 0.0);
    let op = hgc_operator(params);
    match kind {
        SymmetryKind::Basic => {
            let rho = weight_form(params);
            let lhs = gauge_conjugate(&op, &rho, false);
            let transformed = EquationParams {
                sigma: params.sigma.clone(),
                kappa: params.kappa.neg(),
                omega: params.omega,
            };
            let rhs = hgc_operator(&transformed);
            Ok(SymmetryReport {
                kind,
                residual: lhs.residual_against(&rhs),
                transformed,
                exponent: None,
                sign: one,
            })
        }
        SymmetryKind::Power => {
            let scale = params.sigma.max_coeff_norm();
            if params.sigma.coeff(0).norm() > 1e-12 * scale
                || (params.sigma.coeff(1) - one).norm() > 1e-12
            {
                return Err(Error::NotApplicable(
                    "power symmetry needs sigma(0)=0 and sigma'(0)=1".into(),
                ));
            }
            let m = params.kappa.coeff(0);
            let kp = params.kappa_p();
            let spp = params.sigma_pp();
            let lhs = gauge_conjugate(&op, &WeightForm::power(Complex64::new(0.0, 0.0), m), false);
            let transformed = EquationParams {
                sigma: params.sigma.clone(),
                kappa: PolyC::new(vec![-m, kp - m * spp]),
                omega: params.omega - m * kp + m * m * spp / 2.0,
            };
            let rhs = hgc_operator(&transformed);
            Ok(SymmetryReport {
                kind,
                residual: lhs.residual_against(&rhs),
                transformed,
                exponent: None,
                sign: one,
            })
        }
        SymmetryKind::Inversion => {
            let scale = params.sigma.max_coeff_norm();
            if params.sigma.coeff(0).norm() > 1e-12 * scale {
                return Err(Error::NotApplicable("inversion needs sigma(0)=0".into()));
            }
            if params.sigma_pp().norm() < 1e-14 && params.kappa_p().norm() < 1e-14 {
                return Err(Error::NotApplicable(
                    "inversion needs sigma'' != 0 or kappa' != 0".into(),
                ));
            }
            let zeta = inversion_exponents(params)?[0];
            // LHS: −z · z^{−ζ}(H+ω)z^{ζ}, then substitute z = −1/w.
            let gauged = gauge_conjugate(
                &op,
                &WeightForm::power(Complex64::new(0.0, 0.0), zeta),
                true,
            );
            let minus_z = DiffOp::from_term(
                0,
                RatFun::from_poly(PolyC::new(vec![
                    Complex64::new(0.0, 0.0),
                    Complex64::new(-1.0, 0.0),
                ])),
            );
            let in_z = minus_z.compose(&gauged);
            let lhs = mobius_substitute(
                &in_z,
                (
                    Complex64::new(0.0, 0.0),
                    Complex64::new(-1.0, 0.0),
                    Complex64::new(1.0, 0.0),
                    Complex64::new(0.0, 0.0),
                ),
            )?;
            let raw = inversion_transform(params, zeta);
            let rhs = hgc_operator(&raw);
            let residual = lhs.residual_against(&rhs);
            let sign = canonical_sign(&raw.sigma);
            let transformed = EquationParams {
                sigma: raw.sigma.scale(sign),
                kappa: raw.kappa.scale(sign),
                omega: raw.omega * sign,
            };
            Ok(SymmetryReport {
                kind,
                residual,
                transformed,
                exponent: Some(zeta),
                sign,
            })
        }
    }
}

/// The canonicalized transformed triples for every admissible gauge exponent
/// (two when σ″ ≠ 0); used to exhibit the ℤ₂ property, where the returning
/// branch may be the other exponent.
pub fn inversion_transforms(params: &EquationParams) -> Result<Vec<EquationParams>> {
    let roots = inversion_exponents(params)?;
    Ok(roots
        .into_iter()
        .map(|zeta| {
            let raw = inversion_transform(params, zeta);
            let s = canonical_sign(&raw.sigma);
            EquationParams {
                sigma: raw.sigma.scale(s),
                kappa: raw.kappa.scale(s),
                omega: raw.omega * s,
            }
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub factor_residual_up: f64,
    pub factor_residual_down: f64,
    pub transmutation_residual_up: f64,
    pub transmutation_residual_down: f64,
}

impl FactorizationReport {
    pub fn max_residual(&self) -> f64 {
        self.factor_residual_up
            .max(self.factor_residual_down)
            .max(self.transmutation_residual_up)
            .max(self.transmutation_residual_down)
    }
}

/// Checks the two factorizations and the two transmutation identities of the
/// ladder at index n, as exact operator identities:
///   H(σ,κ_n)+ω_n = (σ∂+κ_{n+1})∂ + n(n+1)σ″/2 + (n+½)κ₀′ + ω₀
///                = ∂(σ∂+κ_n) + n(n−1)σ″/2 + (n−½)κ₀′ + ω₀
///   ∂(H(σ,κ_n)+ω_n) = (H(σ,κ_{n+1})+ω_{n+1})∂
///   (σ∂+κ_{n+1})(H_{n+1}) = (H_n)(σ∂+κ_{n+1}).
pub fn verify_factorization(params: &EquationParams, n: Complex64) -> FactorizationReport {
    let p_n = ladder_params(params, n.into());
    let p_n1 = ladder_params(params, (n + 1.0).into());
    let h_n = hgc_operator(&p_n);
    let h_n1 = hgc_operator(&p_n1);
    let spp = params.sigma_pp();
    let kp = params.kappa_p();

    let a_minus = |kappa: &PolyC| -> DiffOp {
        DiffOp::from_term(1, RatFun::from_poly(params.sigma.clone()))
            .add(&DiffOp::from_term(0, RatFun::from_poly(kappa.clone())))
    };

    let up = a_minus(&p_n1.kappa)
        .compose(&DiffOp::d(1))
        .add(&DiffOp::from_term(
            0,
            RatFun::constant(n * (n + 1.0) * spp / 2.0 + (n + 0.5) * kp + params.omega),
        ));
    let down = DiffOp::d(1)
        .compose(&a_minus(&p_n.kappa))
        .add(&DiffOp::from_term(
            0,
            RatFun::constant(n * (n - 1.0) * spp / 2.0 + (n - 0.5) * kp + params.omega),
        ));
    let trans_up_lhs = DiffOp::d(1).compose(&h_n);
    let trans_up_rhs = h_n1.compose(&DiffOp::d(1));
    let trans_down_lhs = a_minus(&p_n1.kappa).compose(&h_n1);
    let trans_down_rhs = h_n.compose(&a_minus(&p_n1.kappa));

    FactorizationReport {
        factor_residual_up: h_n.residual_against(&up),
        factor_residual_down: h_n.residual_against(&down),
        transmutation_residual_up: trans_up_lhs.residual_against(&trans_up_rhs),
        transmutation_residual_down: trans_down_lhs.residual_against(&trans_down_rhs),
    }
}

/// Operator identity behind the descending ladder: the n-fold product
/// (σ∂+κ_{−n+1})···(σ∂+κ₀) equals σⁿ ρ₀⁻¹ ∂ⁿ ρ₀ = σⁿ(∂ + κ₀/σ)ⁿ.
pub fn descending_product_residual(params: &EquationParams, n: u32) -> f64 {
    let sigma = RatFun::from_poly(params.sigma.clone());
    let mut lhs = DiffOp::identity();
    for j in 0..n {
        let kappa_j = ladder_params(params, Complex64::new(-(j as f64), 0.0).into()).kappa;
        let factor = DiffOp::from_term(1, sigma.clone())
            .add(&DiffOp::from_term(0, RatFun::from_poly(kappa_j)));
        lhs = factor.compose(&lhs);
    }
    let log_rho = RatFun::new(params.kappa.clone(), params.sigma.clone());
    let gauged_d = DiffOp::d(1).add(&DiffOp::from_term(0, log_rho));
    let mut rhs = DiffOp::identity();
    for _ in 0..n {
        rhs = gauged_d.compose(&rhs);
    }
    let mut sigma_n = RatFun::one();
    for _ in 0..n {
        sigma_n = sigma_n.mul(&sigma);
    }
    let rhs = rhs.scale_fun(&sigma_n);
    lhs.residual_against(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::dict;
    use num_complex::Complex64 as C;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn basic_symmetry_2f1() {
        let (a, b, cc) = (c(0.4), c(1.1), c(0.8));
        let rep = verify_symmetry(SymmetryKind::Basic, &dict::gauss_2f1(a, b, cc)).unwrap();
        assert!(rep.residual < 1e-10, "residual {}", rep.residual);
        // transformed parameters are those of F(1−b, 1−a; 2−c)
        let want = dict::gauss_2f1(c(1.0) - b, c(1.0) - a, c(2.0) - cc);
        assert!(rep.transformed.kappa.approx_eq(&want.kappa, 1e-12));
        assert!((rep.transformed.omega - want.omega).norm() < 1e-12);
    }

    #[test]
    fn power_symmetry_2f1() {
        let (a, b, cc) = (c(0.3), c(1.7), c(1.25));
        let rep = verify_symmetry(SymmetryKind::Power, &dict::gauss_2f1(a, b, cc)).unwrap();
        assert!(rep.residual < 1e-10, "residual {}", rep.residual);
        let want = dict::gauss_2f1(b + 1.0 - cc, a + 1.0 - cc, c(2.0) - cc);
        assert!(rep.transformed.kappa.approx_eq(&want.kappa, 1e-12));
        assert!((rep.transformed.omega - want.omega).norm() < 1e-12);
    }

    #[test]
    fn inversion_1f1_gives_2f0() {
        let (a, cc) = (c(0.6), c(1.4));
        let rep = verify_symmetry(SymmetryKind::Inversion, &dict::kummer_1f1(a, cc)).unwrap();
        assert!(rep.residual < 1e-10, "residual {}", rep.residual);
        // ζ = −a and the transformed equation is the 2F0(a, 1+a−c) one
        assert!((rep.exponent.unwrap() + a).norm() < 1e-12);
        let want = dict::two_f0(a, c(1.0) + a - cc);
        assert!(rep.transformed.sigma.approx_eq(&want.sigma, 1e-12));
        assert!(rep.transformed.kappa.approx_eq(&want.kappa, 1e-12));
        assert!((rep.transformed.omega - want.omega).norm() < 1e-12);
    }

    #[test]
    fn symmetries_are_involutions() {
        let p = dict::gauss_2f1(c(0.35), c(1.45), c(0.85));
        for kind in [SymmetryKind::Basic, SymmetryKind::Power] {
            let once = verify_symmetry(kind, &p).unwrap();
            let twice = verify_symmetry(kind, &once.transformed).unwrap();
            assert!(twice.transformed.sigma.approx_eq(&p.sigma, 1e-10));
            assert!(twice.transformed.kappa.approx_eq(&p.kappa, 1e-10));
            assert!((twice.transformed.omega - p.omega).norm() < 1e-10);
        }
        // Inversion: one of the two exponent branches returns the start.
        let once = verify_symmetry(SymmetryKind::Inversion, &p).unwrap();
        let back = inversion_transforms(&once.transformed)
            .unwrap()
            .into_iter()
            .any(|q| {
                // the same equation up to an overall constant sign
                for s in [C::new(1.0, 0.0), C::new(-1.0, 0.0)] {
                    if q.sigma.approx_eq(&p.sigma.scale(s), 1e-9)
                        && q.kappa.approx_eq(&p.kappa.scale(s), 1e-9)
                        && (q.omega - s * p.omega).norm() < 1e-9
                    {
                        return true;
                    }
                }
                false
            });
        assert!(back, "inversion applied twice does not return to start");
    }

    #[test]
    fn basic_equals_power_for_0f1() {
        // κ′ = 0 makes the two gauge symmetries coincide
        let p = dict::zero_f1(c(1.4));
        let basic = verify_symmetry(SymmetryKind::Basic, &p).unwrap();
        let power = verify_symmetry(SymmetryKind::Power, &p).unwrap();
        assert!(basic
            .transformed
            .kappa
            .approx_eq(&power.transformed.kappa, 1e-13));
        assert!((basic.transformed.omega - power.transformed.omega).norm() < 1e-13);
        // both give the c ↦ 2−c map
        let want = dict::zero_f1(c(2.0) - c(1.4));
        assert!(basic.transformed.kappa.approx_eq(&want.kappa, 1e-13));
    }

    #[test]
    fn hermite_basic_map_flips_parameter() {
        // the transformed Hermite equation classifies back with a ↦ 1−a
        use crate::classify::{classify_riemann, NormalType};
        let a = c(0.65);
        let p = dict::hermite(a);
        let rep = verify_symmetry(SymmetryKind::Basic, &p).unwrap();
        assert!(rep.residual < 1e-12);
        let (sigma, tau, eta) = crate::params::params_to_sty(&rep.transformed);
        let report = classify_riemann(&sigma, &tau, &sigma.scale(eta)).unwrap();
        assert_eq!(report.type_tag, NormalType::Hermite);
        let got = report
            .normal_params
            .iter()
            .find(|(k, _)| *k == "a")
            .unwrap()
            .1;
        assert!((got - (c(1.0) - a)).norm() < 1e-12, "got {got}");
    }

    #[test]
    fn two_f1_inversion_map_via_classification() {
        // inversion sends 2F1(a,b;c) to a 2F1-type equation whose parameters
        // are {a, a−c+1} (or the b-branch) with the third a+b−c+1
        use crate::classify::{classify_riemann, NormalType};
        let (a, b, cc) = (c(0.35), c(1.45), c(0.85));
        let p = dict::gauss_2f1(a, b, cc);
        let rep = verify_symmetry(SymmetryKind::Inversion, &p).unwrap();
        assert!(rep.residual < 1e-10);
        let (sigma, tau, eta) = crate::params::params_to_sty(&rep.transformed);
        let report = classify_riemann(&sigma, &tau, &sigma.scale(eta)).unwrap();
        assert_eq!(report.type_tag, NormalType::Gauss2F1);
        let get = |n: &str| {
            report
                .normal_params
                .iter()
                .find(|(k, _)| *k == n)
                .unwrap()
                .1
        };
        let (ra, rb, rc) = (get("a"), get("b"), get("c"));
        let matches_branch = |x: C, y: C| {
            ((ra - x).norm() < 1e-9 && (rb - y).norm() < 1e-9)
                || ((ra - y).norm() < 1e-9 && (rb - x).norm() < 1e-9)
        };
        let a_branch = matches_branch(a, a - cc + 1.0) && (rc - (a + b - cc + 1.0)).norm() < 1e-9;
        let b_branch = matches_branch(b, b - cc + 1.0) && (rc - (a + b - cc + 1.0)).norm() < 1e-9;
        assert!(a_branch || b_branch, "recovered ({ra}, {rb}; {rc})");
    }

    #[test]
    fn inversion_not_applicable_for_0f1() {
        let err = verify_symmetry(SymmetryKind::Inversion, &dict::zero_f1(c(1.5))).unwrap_err();
        assert!(matches!(err, Error::NotApplicable(_)));
    }

    #[test]
    fn factorization_hermite_and_2f1() {
        let rep = verify_factorization(&dict::hermite(c(0.7)), c(0.0));
        assert!(rep.max_residual() < 1e-10, "residuals {rep:?}");
        let rep = verify_factorization(&dict::gauss_2f1(c(0.2), c(0.9), c(1.3)), c(3.0));
        assert!(rep.max_residual() < 1e-10, "residuals {rep:?}");
    }

    #[test]
    fn factorization_difference_is_constant() {
        // (σ∂+κ_{n+1})∂ − ∂(σ∂+κ_n) = −σ″n − κ′
        let p = dict::gauss_2f1(c(0.45), c(1.25), c(0.95));
        let n = c(2.0);
        let p_n = ladder_params(&p, n.into());
        let p_n1 = ladder_params(&p, (n + 1.0).into());
        let a = DiffOp::from_term(1, RatFun::from_poly(p.sigma.clone()))
            .add(&DiffOp::from_term(0, RatFun::from_poly(p_n1.kappa.clone())))
            .compose(&DiffOp::d(1));
        let b = DiffOp::d(1).compose(
            &DiffOp::from_term(1, RatFun::from_poly(p.sigma.clone()))
                .add(&DiffOp::from_term(0, RatFun::from_poly(p_n.kappa.clone()))),
        );
        let want = DiffOp::from_term(0, RatFun::constant(-p.sigma_pp() * n - p.kappa_p()));
        assert!(a.sub(&b).approx_eq(&want, 1e-12));
    }

    #[test]
    fn descending_product_identity() {
        for n in 0..=4 {
            let r = descending_product_residual(&dict::gauss_2f1(c(0.3), c(0.8), c(1.2)), n);
            assert!(r < 1e-10, "n={n} residual {r}");
        }
    }
}
