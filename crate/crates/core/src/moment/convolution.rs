//! Equal-argument means `~Z^m(s) = int sum_n chi_n(g)^m / n^(s+m) dg` for
//! `m = 3, 4`, in closed form and summed from quadrature coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::su2::npow;
use crate::sum::NeumaierComplex;
use crate::types::{ComplexParameter, EvalResult};
use crate::zeta;

use super::coefficients::diagonal_power_integrals;

const EPS: f64 = f64::EPSILON;
const CLOSED_TOL: f64 = 1e-12;
/// Largest allowed gap between `c(n,n,n)` from quadrature and its parity form.
const COEFF_AGREEMENT: f64 = 1e-9;

fn require_above_minus_two(s: &ComplexParameter) -> Result<()> {
    if s.re() > -2.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("requires Re(s) > -2, got s = {s}")))
    }
}

/// `(1 - 2^(-s-3)) zeta(s+3)`.
pub fn tilde_z3_closed(s: ComplexParameter) -> Result<EvalResult> {
    require_above_minus_two(&s)?;
    let z = zeta::riemann_zeta(s.shifted(3.0), CLOSED_TOL)?;
    let factor = Complex64::new(1.0, 0.0) - npow(2, s.value() + 3.0);
    let value = factor * z.value;
    let bound = factor.norm() * z.error_bound + 4.0 * EPS * value.norm() * (1.0 + s.value().norm());
    Ok(EvalResult::new(value, bound, z.terms_used))
}

/// `zeta(s+3)`.
pub fn tilde_z4_closed(s: ComplexParameter) -> Result<EvalResult> {
    require_above_minus_two(&s)?;
    zeta::riemann_zeta(s.shifted(3.0), CLOSED_TOL)
}

const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// `sum_{k >= start} (2k+1)^(-u)` by Euler-Maclaurin, `Re(u) > 1`.
///
/// Returns the value and a bound on the remainder
/// `|B_2p| / (2p)! * int_start^inf |g^(2p)|`.
fn odd_power_tail(u: Complex64, start: u64) -> (Complex64, f64) {
    let sigma = u.re;
    let base = (2 * start + 1) as f64;
    let ln_base = base.ln();
    let at = |shift: f64| (-(u + shift) * ln_base).exp();

    let mut value = at(-1.0) / (2.0 * (u - 1.0)) + at(0.0) * 0.5;
    let mut best = (value, f64::INFINITY);
    // rising factorial (u)_r and (2p)!
    let mut rising = Complex64::new(1.0, 0.0);
    let mut factorial = 1.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let p = j + 1;
        let r_odd = 2 * p - 1;
        rising *= u + (r_odd as f64 - 1.0);
        factorial *= (2 * p - 1) as f64;
        // g^(2p-1)(start) = (-2)^(2p-1) (u)_(2p-1) base^(-u-2p+1)
        let derivative = -(2f64.powi(r_odd as i32)) * rising * at(r_odd as f64);
        let rising_even = rising * (u + r_odd as f64);
        factorial *= (2 * p) as f64;
        value -= derivative * (b / factorial);
        let remainder = b.abs() / factorial
            * 2f64.powi(2 * p as i32)
            * rising_even.norm()
            * base.powf(-sigma - 2.0 * p as f64 + 1.0)
            / (2.0 * (sigma + 2.0 * p as f64 - 1.0));
        if remainder < best.1 {
            best = (value, remainder);
        }
        rising = rising_even;
    }
    best
}

/// `sum_n c(n,n,n) n^(-s-3)` with `c(n,n,n)` taken from quadrature and from
/// its parity form.
///
/// For every `n <= trunc` that the rule can integrate exactly (degree
/// `3(n-1)`), the two coefficient values must agree to `1e-9`, otherwise an
/// [`Error::IdentityViolation`] is returned. Terms past `trunc` are summed by
/// Euler-Maclaurin over odd `n`.
pub fn tilde_z3_direct(
    s: ComplexParameter,
    rule: &QuadratureRule,
    trunc: u64,
) -> Result<EvalResult> {
    require_above_minus_two(&s)?;
    if trunc < 1 {
        return Err(Error::Argument("trunc must be >= 1".into()));
    }
    let checked = (rule.exact_degree() as u64 / 3 + 1).min(trunc);
    let quadrature = diagonal_power_integrals(3, checked, rule)?;
    for (n, q) in (1..=checked).zip(&quadrature) {
        let closed = (n % 2) as f64;
        if (q - closed).abs() >= COEFF_AGREEMENT {
            return Err(Error::IdentityViolation(format!(
                "c({n},{n},{n}): quadrature {q} vs parity form {closed}"
            )));
        }
    }

    let u = s.value() + 3.0;
    let mut partial = NeumaierComplex::default();
    let mut magnitude = 0.0;
    for n in (1..=trunc).step_by(2) {
        let term = npow(n, u);
        magnitude += term.norm() * (2.0 + u.norm() * (n as f64).ln());
        partial.add(term);
    }
    let (tail, remainder) = odd_power_tail(u, trunc.div_ceil(2));
    let value = partial.value() + tail;
    let bound = remainder + 4.0 * EPS * (magnitude + tail.norm() * (1.0 + u.norm()));
    Ok(EvalResult::new(value, bound, trunc))
}

/// `sum_{n <= trunc} q(n) n^(-s-4)` with `q(n) = int chi_n^4 dmu` from
/// quadrature, for `Re(s) > -1`.
///
/// The omitted tail is bounded using only `q(n) <= n^2` (the sup of
/// `chi_n^2` times its unit mean square).
pub fn tilde_z4_direct(
    s: ComplexParameter,
    rule: &QuadratureRule,
    trunc: u64,
) -> Result<EvalResult> {
    if s.re() <= -1.0 {
        return Err(Error::Domain(format!(
            "quadrature-side quartic mean requires Re(s) > -1, got s = {s}"
        )));
    }
    if trunc < 1 {
        return Err(Error::Argument("trunc must be >= 1".into()));
    }
    let q = diagonal_power_integrals(4, trunc, rule)?;
    let u = s.value() + 4.0;
    let mut partial = NeumaierComplex::default();
    let mut magnitude = 0.0;
    for (n, qn) in (1..=trunc).zip(&q) {
        let term = npow(n, u) * *qn;
        magnitude += term.norm() * (2.0 + u.norm() * (n as f64).ln());
        partial.add(term);
    }
    let sigma = s.re();
    let tail = (trunc as f64).powf(-sigma - 1.0) / (sigma + 1.0);
    let bound = tail + 4.0 * EPS * magnitude * (1.0 + trunc as f64);
    Ok(EvalResult::new(partial.value(), bound, trunc))
}
