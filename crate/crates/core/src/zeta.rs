//! Riemann zeta and Dirichlet eta for `Re(s) > 0`.
//!
//! Eta is summed with the Cohen-Villegas-Zagier acceleration of the
//! alternating series. Writing `(k+1)^(-s)` as the moment
//! `int_0^1 x^k w(x) dx` with `w(x) = (-ln x)^(s-1) / Gamma(s)` gives the
//! truncation bound
//!
//! ```text
//! |eta(s) - S_n| <= 2 eta(sigma) Gamma(sigma) / |Gamma(s)| / (3 + sqrt 8)^n
//! ```
//!
//! and `eta(sigma) <= 1`. Zeta follows from `zeta(s) = eta(s) / (1 - 2^(1-s))`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{Budget, ComplexParameter, EvalResult};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Below this `|1 - 2^(1-s)|` the division is refused.
pub const NEAR_SINGULAR_THRESHOLD: f64 = 1e-6;

const EPS: f64 = f64::EPSILON;
const LN_CVZ_RATE: f64 = 1.762_747_174_039_086; // ln(3 + sqrt 8)

/// `ln(Gamma(sigma) / |Gamma(sigma + i t)|)`, rounded up.
///
/// Uses `|Gamma(sigma)/Gamma(sigma+it)|^2 = prod_k (1 + t^2/(sigma+k)^2)`;
/// the product past `k = K` is bounded by `exp(t^2 / (sigma + K - 1))`.
fn ln_gamma_ratio_bound(sigma: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let t2 = t * t;
    let cutoff = (t.abs().ceil() as usize).max(1) + 16;
    let head: f64 = (0..cutoff)
        .map(|k| (t2 / (sigma + k as f64).powi(2)).ln_1p())
        .sum();
    0.5 * (head + t2 / (sigma + cutoff as f64 - 1.0)) * (1.0 + 1e-12)
}

/// Normalised CVZ weights `c_k / d_n` for `k = 0..n`, all in `[0, 1]`.
///
/// `d_n = sum_j e_j` and `c_k = sum_{j>k} e_j` with
/// `e_j = n/(n+j) * C(n+j, 2j) * 4^j`, accumulated in log space so that large
/// `n` does not overflow.
fn cvz_weights(n: usize) -> Vec<f64> {
    let mut log_e = Vec::with_capacity(n + 1);
    log_e.push(0.0f64);
    for j in 1..=n {
        let (nf, jf) = (n as f64, j as f64);
        let ratio = 4.0 * (nf + jf - 1.0) * (nf - jf + 1.0) / ((2.0 * jf) * (2.0 * jf - 1.0));
        log_e.push(log_e[j - 1] + ratio.ln());
    }
    let peak = log_e.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let e: Vec<f64> = log_e.iter().map(|l| (l - peak).exp()).collect();
    let mut suffix = vec![0.0; n + 2];
    for j in (0..=n).rev() {
        suffix[j] = suffix[j + 1] + e[j];
    }
    (0..n).map(|k| suffix[k + 1] / suffix[0]).collect()
}

fn require_right_half_plane(s: &ComplexParameter, what: &str) -> Result<()> {
    if s.re() > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} requires Re(s) > 0, got s = {s}"
        )))
    }
}

fn require_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

pub fn dirichlet_eta(s: ComplexParameter, tol: f64) -> Result<EvalResult> {
    dirichlet_eta_budgeted(s, tol, &Budget::default())
}

/// `eta(s) = sum_{n>=1} (-1)^(n-1) n^(-s)` for `Re(s) > 0`.
pub fn dirichlet_eta_budgeted(
    s: ComplexParameter,
    tol: f64,
    budget: &Budget,
) -> Result<EvalResult> {
    require_right_half_plane(&s, "dirichlet_eta")?;
    require_tol(tol)?;
    let (sigma, t) = (s.re(), s.im());
    let ln_amp = std::f64::consts::LN_2 + ln_gamma_ratio_bound(sigma, t);
    let truncation = |n: u64| (ln_amp - n as f64 * LN_CVZ_RATE).exp();

    // Leave a quarter of the tolerance for rounding.
    let needed = ((ln_amp - (0.75 * tol).ln()) / LN_CVZ_RATE).ceil().max(1.0) as u64;
    if needed > budget.max_terms {
        return Err(Error::ToleranceUnreachable {
            tol,
            budget: budget.max_terms,
            best: truncation(budget.max_terms),
        });
    }
    let n = needed as usize;
    let weights = cvz_weights(n);
    let sv = s.value();
    let mut acc = crate::sum::NeumaierComplex::default();
    let mut magnitude = 0.0;
    for (k, w) in weights.iter().enumerate() {
        let ln_k = ((k + 1) as f64).ln();
        let a = (-sv * ln_k).exp();
        let term = a * *w;
        magnitude += term.norm() * (2.0 + sv.norm() * ln_k);
        if k % 2 == 0 {
            acc.add(term);
        } else {
            acc.add(-term);
        }
    }
    let rounding = 4.0 * EPS * (magnitude + n as f64);
    let bound = truncation(needed) + rounding;
    if bound > tol {
        return Err(Error::ToleranceUnreachable {
            tol,
            budget: budget.max_terms,
            best: bound,
        });
    }
    Ok(EvalResult::new(acc.value(), bound, needed))
}

pub fn riemann_zeta(s: ComplexParameter, tol: f64) -> Result<EvalResult> {
    riemann_zeta_budgeted(s, tol, &Budget::default())
}

/// `zeta(s)` for `Re(s) > 0`, `s != 1`, via the eta function.
pub fn riemann_zeta_budgeted(s: ComplexParameter, tol: f64, budget: &Budget) -> Result<EvalResult> {
    if s.re() == 1.0 && s.im() == 0.0 {
        return Err(Error::Pole);
    }
    require_right_half_plane(&s, "riemann_zeta")?;
    require_tol(tol)?;
    let factor = Complex64::new(1.0, 0.0) - ((1.0 - s.value()) * std::f64::consts::LN_2).exp();
    let fnorm = factor.norm();
    if fnorm < NEAR_SINGULAR_THRESHOLD {
        return Err(Error::NearSingular {
            factor: fnorm,
            threshold: NEAR_SINGULAR_THRESHOLD,
        });
    }
    let eta = dirichlet_eta_budgeted(s, 0.5 * tol * fnorm, budget)?;
    let value = eta.value / factor;
    let rounding = 4.0 * EPS * value.norm() * (1.0 + s.value().norm() / fnorm);
    let bound = eta.error_bound / fnorm + rounding;
    if bound > tol {
        return Err(Error::ToleranceUnreachable {
            tol,
            budget: budget.max_terms,
            best: bound,
        });
    }
    Ok(EvalResult::new(value, bound, eta.terms_used))
}

/// Real-argument zeta with an upper bound, `zeta(sigma) + error`.
pub(crate) fn zeta_upper(sigma: f64) -> Result<f64> {
    let z = riemann_zeta(ComplexParameter::real(sigma), 1e-12)?;
    Ok(z.value.re + z.error_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    /// Alternating partial sums bracket eta(s) for real s > 0; returns the
    /// bracket midpoint and half-width.
    fn eta_leibniz_oracle(s: f64, n: u64) -> (f64, f64) {
        let mut partial = 0.0;
        for k in 1..=n {
            let term = (k as f64).powf(-s);
            partial += if k % 2 == 1 { term } else { -term };
        }
        let next = ((n + 1) as f64).powf(-s) * if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        (partial + next / 2.0, next.abs() / 2.0)
    }

    /// Partial sum plus the integral-test bracket [(N+1)^(1-s), N^(1-s)]/(s-1).
    fn zeta_integral_oracle(s: f64, n: u64) -> (f64, f64) {
        let mut partial = 0.0;
        for k in (1..=n).rev() {
            partial += (k as f64).powf(-s);
        }
        let lo = ((n + 1) as f64).powf(1.0 - s) / (s - 1.0);
        let hi = (n as f64).powf(1.0 - s) / (s - 1.0);
        (partial + (lo + hi) / 2.0, (hi - lo) / 2.0)
    }

    fn re(s: f64) -> ComplexParameter {
        ComplexParameter::real(s)
    }

    #[test]
    fn eta_at_one_is_ln2() {
        let r = dirichlet_eta(re(1.0), 1e-12).unwrap();
        assert!(r.error_bound <= 1e-12);
        assert!((r.value.re - std::f64::consts::LN_2).abs() <= 1e-12);
        assert!((r.value.re - LN_2).abs() <= 1e-12);
        let (mid, half) = eta_leibniz_oracle(1.0, 200_000);
        assert!((r.value.re - mid).abs() <= half + 1e-12);
    }

    #[test]
    fn eta_at_two() {
        let r = dirichlet_eta(re(2.0), 1e-12).unwrap();
        assert!((r.value.re - 0.8224670334241132).abs() <= 1e-12);
        assert!((r.value.re - PI * PI / 12.0).abs() <= 1e-12);
        let (mid, half) = eta_leibniz_oracle(2.0, 200_000);
        assert!((r.value.re - mid).abs() <= half + 1e-12);
    }

    #[test]
    fn eta_conjugate_symmetry() {
        let s = ComplexParameter::new(0.7, 3.2).unwrap();
        let a = dirichlet_eta(s, 1e-12).unwrap();
        let b = dirichlet_eta(s.conj(), 1e-12).unwrap();
        assert!((a.value.conj() - b.value).norm() <= 2e-12);
    }

    #[test]
    fn zeta_reference_values() {
        for (s, expected) in [
            (2.0, 1.6449340668482264),
            (8.0, 1.0040773561979443),
            (3.0, 1.2020569031595943),
        ] {
            let r = riemann_zeta(re(s), 1e-12).unwrap();
            assert!((r.value.re - expected).abs() <= 1e-12, "zeta({s})");
            assert!(r.value.im == 0.0);
        }
    }

    #[test]
    fn zeta_matches_integral_test_oracle() {
        for s in [1.5, 2.0, 3.0, 5.0, 8.0, 12.0] {
            let tol = 1e-12;
            let r = riemann_zeta(re(s), tol).unwrap();
            let (mid, half) = zeta_integral_oracle(s, 1_000_000);
            assert!(
                (r.value.re - mid).abs() <= tol + half + 1e-12,
                "s = {s}: {} vs {mid} +- {half}",
                r.value.re
            );
        }
    }

    #[test]
    fn zeta_at_half_and_on_critical_line() {
        // zeta(1/2) = -1.4603545088095868...
        let r = riemann_zeta(re(0.5), 1e-12).unwrap();
        assert!((r.value.re + 1.4603545088095868).abs() < 1e-11);
        // First nontrivial zero.
        let s = ComplexParameter::new(0.5, 14.134725141734693).unwrap();
        let r = riemann_zeta(s, 1e-10).unwrap();
        assert!(r.value.norm() < 1e-9);
    }

    #[test]
    fn zeta_errors() {
        assert_eq!(riemann_zeta(re(1.0), 1e-12), Err(Error::Pole));
        assert!(matches!(
            riemann_zeta(re(0.0), 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            riemann_zeta(re(-1.0), 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            dirichlet_eta(re(-0.5), 1e-12),
            Err(Error::Domain(_))
        ));
        let spurious = ComplexParameter::new(1.0, 2.0 * PI / LN_2).unwrap();
        assert!(matches!(
            riemann_zeta(spurious, 1e-12),
            Err(Error::NearSingular { .. })
        ));
        assert!(matches!(
            riemann_zeta(re(2.0), 0.0),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let s = ComplexParameter::new(0.5, 50.0).unwrap();
        let tight = Budget::with_terms(10);
        assert!(matches!(
            dirichlet_eta_budgeted(s, 1e-10, &tight),
            Err(Error::ToleranceUnreachable { .. })
        ));
        assert!(dirichlet_eta(s, 1e-10).is_ok());
    }

    #[test]
    fn unreachable_tolerance_is_reported() {
        assert!(matches!(
            riemann_zeta(re(2.0), 1e-30),
            Err(Error::ToleranceUnreachable { .. })
        ));
    }

    #[test]
    fn doubling_budget_never_increases_bound() {
        let s = ComplexParameter::new(0.8, 7.0).unwrap();
        let mut last = f64::INFINITY;
        for budget in [64, 128, 256, 512, 1 << 20] {
            let r = riemann_zeta_budgeted(s, 1e-12, &Budget::with_terms(budget)).unwrap();
            assert!(r.error_bound <= last);
            last = r.error_bound;
        }
    }

    #[test]
    fn large_imaginary_part_does_not_overflow() {
        let s = ComplexParameter::new(2.0, 600.0).unwrap();
        let r = riemann_zeta(s, 1e-10).unwrap();
        assert!(r.value.norm().is_finite() && r.error_bound <= 1e-10);
        // |zeta(2 + it)| lies in [zeta(4)/zeta(2), zeta(2)].
        assert!(r.value.norm() > 0.65 && r.value.norm() < 1.65);
    }
}
