use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::su2::{npow, Characters};
use crate::sum::NeumaierComplex;
use crate::types::{ComplexParameter, EvalResult};
use crate::zeta;

/// `Z^m(s) = int zeta_SU(2)(s, g)^m dg` by quadrature over classes.
///
/// The L-series is truncated at `trunc` terms, which makes the integrand a
/// polynomial of degree `m (trunc - 1)` in `cos(theta)`; the rule must
/// integrate that degree exactly. The truncation error is bounded by
///
/// ```text
/// |L^m - L_T^m| <= m M^(m-1) |L - L_T|,   M = zeta(sigma),
/// |L - L_T|(theta) <= T^(-sigma) / (sigma sin theta),
/// int 1/sin(theta) dmu = 4/pi,
/// ```
///
/// together with the uniform `T^(1-sigma)/(sigma-1)` from `|chi_n| <= n`.
pub fn zm_quadrature(
    s: ComplexParameter,
    m: u32,
    trunc: u64,
    rule: &QuadratureRule,
) -> Result<EvalResult> {
    if s.re() <= 1.0 {
        return Err(Error::Domain(format!(
            "moment quadrature requires Re(s) > 1, got {s}"
        )));
    }
    if m < 1 || trunc < 1 {
        return Err(Error::Argument("need m >= 1 and trunc >= 1".into()));
    }
    rule.require_degree((m as u64 * (trunc - 1)) as usize)?;

    let exponent = s.value() + 1.0;
    let coeffs: Vec<Complex64> = (1..=trunc).map(|n| npow(n, exponent)).collect();
    let per_node: Vec<(Complex64, f64)> = rule
        .nodes()
        .par_iter()
        .zip(rule.weights().par_iter())
        .map(|(&theta, &w)| {
            let mut l = NeumaierComplex::default();
            let mut mass = 0.0;
            for (c, chi) in coeffs.iter().zip(Characters::new(theta)) {
                l.add(c * chi);
                mass += c.norm() * chi.abs();
            }
            let lv = l.value();
            (lv.powu(m) * w, w * mass.powi(m as i32))
        })
        .collect();
    let mut total = NeumaierComplex::default();
    let mut magnitude = 0.0;
    for (v, mag) in &per_node {
        total.add(*v);
        magnitude += mag;
    }

    let sigma = s.re();
    let tf = trunc as f64;
    let sup = zeta::zeta_upper(sigma)?;
    let tail_mean = (4.0 / PI * tf.powf(-sigma) / sigma).min(tf.powf(1.0 - sigma) / (sigma - 1.0));
    let truncation = m as f64 * sup.powi(m as i32 - 1) * tail_mean;
    let rounding = 8.0
        * f64::EPSILON
        * magnitude
        * (m as f64 + 2.0 * tf.sqrt() + (rule.order() as f64).log2());
    Ok(EvalResult::new(total.value(), truncation + rounding, trunc))
}
