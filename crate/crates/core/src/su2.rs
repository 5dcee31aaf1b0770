//! `SU(2)`: conjugacy classes, characters of `Sym^(n-1)`, the twisted
//! L-function `zeta_SU(2)(s, [theta])` and integration over classes.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::sum::NeumaierComplex;
use crate::types::{Budget, ComplexParameter, EvalResult};
use crate::zeta;

const EPS: f64 = f64::EPSILON;

/// Conjugacy class with eigenvalues `exp(+-i theta)`, `0 <= theta <= pi`.
///
/// Two classes are equal iff their angles are bitwise equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugacyClassSU2 {
    theta: f64,
}

impl ConjugacyClassSU2 {
    pub fn new(theta: f64) -> Result<Self> {
        if (0.0..=PI).contains(&theta) {
            Ok(Self { theta })
        } else {
            Err(Error::Argument(format!(
                "class angle must lie in [0, pi], got {theta}"
            )))
        }
    }

    pub fn identity() -> Self {
        Self { theta: 0.0 }
    }

    /// The central element `-1`.
    pub fn minus_identity() -> Self {
        Self { theta: PI }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn is_identity(&self) -> bool {
        self.theta == 0.0
    }

    pub fn is_minus_identity(&self) -> bool {
        self.theta == PI
    }
}

/// Characters `chi_1(theta), chi_2(theta), ...` from the Chebyshev recurrence
/// `chi_{n+1} = 2 cos(theta) chi_n - chi_{n-1}`.
#[derive(Debug, Clone)]
pub struct Characters {
    two_cos: f64,
    prev: f64,
    cur: f64,
    n: u64,
}

impl Characters {
    pub fn new(theta: f64) -> Self {
        Self {
            two_cos: 2.0 * theta.cos(),
            prev: 0.0,
            cur: 1.0,
            n: 1,
        }
    }
}

impl Iterator for Characters {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let n = self.n as f64;
        let out = self.cur.clamp(-n, n);
        let next = self.two_cos * self.cur - self.prev;
        self.prev = self.cur;
        self.cur = next;
        self.n += 1;
        Some(out)
    }
}

/// `tr Sym^(n-1)` at the class, i.e. `sin(n theta) / sin(theta)`, with the
/// limits `n` at `theta = 0` and `(-1)^(n-1) n` at `theta = pi`.
pub fn character(n: u64, cls: ConjugacyClassSU2) -> Result<f64> {
    if n < 1 {
        return Err(Error::Argument("character index must be >= 1".into()));
    }
    Ok(Characters::new(cls.theta)
        .nth((n - 1) as usize)
        .expect("infinite iterator"))
}

/// `int f dmu` for the Weyl measure, approximated by the rule.
pub fn weyl_integrate<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule) -> f64 {
    rule.iter().map(|(t, w)| w * f(t)).sum()
}

/// `n^(-s)` computed as `exp(-s ln n)`.
pub(crate) fn npow(n: u64, s: Complex64) -> Complex64 {
    (-s * (n as f64).ln()).exp()
}

pub fn witten_l_su2(s: ComplexParameter, cls: ConjugacyClassSU2, tol: f64) -> Result<EvalResult> {
    witten_l_su2_budgeted(s, cls, tol, &Budget::default())
}

/// `zeta_SU(2)(s, [theta]) = sum_{n>=1} chi_n(theta) n^(-s-1)`.
///
/// Convergence regions: `Re(s) > 1` at `theta = 0` (where it is `zeta(s)`),
/// `Re(s) > 0` at `theta = pi` (where it is `eta(s)`), and `Re(s) > -1` for
/// interior angles, where the partial sums of `sin(n theta)` stay bounded.
pub fn witten_l_su2_budgeted(
    s: ComplexParameter,
    cls: ConjugacyClassSU2,
    tol: f64,
    budget: &Budget,
) -> Result<EvalResult> {
    if cls.is_identity() {
        if s.re() <= 1.0 {
            return Err(Error::Domain(format!(
                "L-series at theta = 0 diverges for Re(s) <= 1 (s = {s})"
            )));
        }
        return zeta::riemann_zeta_budgeted(s, tol, budget);
    }
    if cls.is_minus_identity() {
        return zeta::dirichlet_eta_budgeted(s, tol, budget);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Argument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if s.re() <= -1.0 {
        return Err(Error::Domain(format!(
            "L-series at interior theta diverges for Re(s) <= -1 (s = {s})"
        )));
    }
    interior_l(s, cls.theta, tol, budget)
}

/// Tail estimate for `sum_{n>N} sin(n theta) f(n)`, `f(n) = n^(-s-1)`.
///
/// With `z = e^{i theta}` and `w = z / (1 - z)`, summation by parts `K` times
/// gives
///
/// ```text
/// sum_{n>N} z^n f(n) = z^{N+1}/(1-z) sum_{k<K} w^k D^k f(N+1) + w^K sum_{n>N} z^n D^K f(n)
/// ```
///
/// where `D` is the forward difference. The remainder is bounded by
/// `|w|^K |(s+1)_K| N^(-sigma-K) / (sigma+K)`. `K = 0` is the plain
/// absolute bound.
struct TailCorrection {
    correction: Complex64,
    bound: f64,
}

fn tail_candidates(s: Complex64, theta: f64, n: u64) -> TailCorrection {
    const MAX_ORDER: usize = 40;
    let sigma = s.re;
    let sin_t = theta.sin();
    let z = Complex64::from_polar(1.0, theta);
    let one_minus_z = Complex64::new(1.0, 0.0) - z;
    let w = z / one_minus_z;
    let w_abs = w.norm();
    let nf = n as f64;

    let mut best = TailCorrection {
        correction: Complex64::new(0.0, 0.0),
        bound: f64::INFINITY,
    };
    if sigma > 0.0 {
        best.bound = nf.powf(-sigma) / sigma / sin_t;
    }
    if sigma > 1.0 {
        // |chi_n| <= n
        best.bound = best.bound.min(nf.powf(1.0 - sigma) / (sigma - 1.0));
    }

    // Forward-difference table of f at N+1 .. N+MAX_ORDER.
    let sp1 = s + 1.0;
    let mut diffs: Vec<Complex64> = (1..=MAX_ORDER as u64).map(|j| npow(n + j, sp1)).collect();
    let f_scale = diffs[0].norm();
    let lead_z = Complex64::from_polar(1.0, (n + 1) as f64 * theta) / one_minus_z;
    let lead_zbar = Complex64::from_polar(1.0, -((n + 1) as f64) * theta) / one_minus_z.conj();

    let mut sum_z = Complex64::new(0.0, 0.0);
    let mut sum_zbar = Complex64::new(0.0, 0.0);
    let mut w_pow = Complex64::new(1.0, 0.0);
    let mut pochhammer = 1.0;
    let mut rounding_series = 0.0;
    for k in 1..=MAX_ORDER {
        // Include the D^{k-1} term, then diffs becomes D^k.
        let d = diffs[0];
        sum_z += w_pow * d;
        sum_zbar += w_pow.conj() * d;
        rounding_series += (2.0 * w_abs).powi(k as i32 - 1);
        w_pow *= w;
        for j in 0..diffs.len() - 1 {
            diffs[j] = diffs[j + 1] - diffs[j];
        }
        diffs.pop();
        pochhammer *= (sp1 + (k as f64 - 1.0)).norm();
        if sigma + k as f64 <= 0.0 {
            continue;
        }
        let remainder = w_abs.powi(k as i32) * pochhammer * nf.powf(-sigma - k as f64)
            / (sigma + k as f64)
            / sin_t;
        let rounding =
            8.0 * EPS * k as f64 * f_scale * rounding_series / one_minus_z.norm() / sin_t;
        let bound = remainder + rounding;
        if bound < best.bound {
            let tail = (lead_z * sum_z - lead_zbar * sum_zbar) / Complex64::new(0.0, 2.0);
            best = TailCorrection {
                correction: tail / sin_t,
                bound,
            };
        }
        if diffs.is_empty() {
            break;
        }
    }
    best
}

fn interior_l(s: ComplexParameter, theta: f64, tol: f64, budget: &Budget) -> Result<EvalResult> {
    let sv = s.value();
    let sp1 = sv + 1.0;
    let sin_t = theta.sin();
    let mut chars = Characters::new(theta);
    let mut partial = NeumaierComplex::default();
    let mut abs_mass = 0.0;
    let mut n_done: u64 = 0;
    let mut target: u64 = 32;
    let mut best = f64::INFINITY;
    loop {
        while n_done < target {
            n_done += 1;
            let chi = chars.next().expect("infinite iterator");
            let f = npow(n_done, sp1);
            partial.add(f * chi);
            // recurrence error grows at most like n * min(n, 1/sin)
            let growth = n_done as f64 * (n_done as f64).min(1.0 / sin_t);
            abs_mass += f.norm() * (1.0 + growth);
        }
        let tail = tail_candidates(sv, theta, n_done);
        let rounding = 4.0 * EPS * abs_mass;
        let bound = tail.bound + rounding;
        best = best.min(bound);
        if bound <= tol {
            return Ok(EvalResult::new(
                partial.value() + tail.correction,
                bound,
                n_done,
            ));
        }
        let next = target.saturating_mul(2);
        if next > budget.max_terms {
            return Err(Error::ToleranceUnreachable {
                tol,
                budget: budget.max_terms,
                best,
            });
        }
        target = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn class(theta: f64) -> ConjugacyClassSU2 {
        ConjugacyClassSU2::new(theta).unwrap()
    }

    #[test]
    fn endpoint_characters() {
        for n in 1..=60u64 {
            assert_eq!(character(n, class(0.0)).unwrap(), n as f64);
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            assert_eq!(character(n, class(PI)).unwrap(), sign * n as f64);
        }
    }

    #[test]
    fn character_at_quarter_turn() {
        assert!((character(3, class(FRAC_PI_2)).unwrap() + 1.0).abs() < 1e-15);
        assert!(character(0, class(1.0)).is_err());
    }

    #[test]
    fn character_matches_sine_ratio_in_interior() {
        for &theta in &[0.3, 1.0, 2.0, 3.0] {
            for n in 1..=50u64 {
                let direct = (n as f64 * theta).sin() / theta.sin();
                assert!((character(n, class(theta)).unwrap() - direct).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn endpoint_continuity() {
        let near = class(1e-9);
        for n in 1..=100u64 {
            assert!((character(n, near).unwrap() - n as f64).abs() <= 1e-6);
        }
    }

    #[test]
    fn rejects_out_of_range_angle() {
        assert!(ConjugacyClassSU2::new(-0.1).is_err());
        assert!(ConjugacyClassSU2::new(3.2).is_err());
        assert!(ConjugacyClassSU2::new(f64::NAN).is_err());
    }

    #[test]
    fn weyl_integration_of_characters() {
        let rule = QuadratureRule::for_degree(2 * 40);
        assert!((weyl_integrate(|_| 1.0, &rule) - 1.0).abs() < 1e-14);
        for n in 2..=40u64 {
            let v = weyl_integrate(|t| character(n, class(t)).unwrap(), &rule);
            assert!(v.abs() < 1e-13, "n = {n}: {v}");
        }
        let v = weyl_integrate(|t| character(2, class(t)).unwrap().powi(2), &rule);
        assert!((v - 1.0).abs() < 1e-13);
    }

    #[test]
    fn l_function_endpoints() {
        let s = ComplexParameter::real(2.0);
        let zero = witten_l_su2(s, class(0.0), 1e-12).unwrap();
        assert!((zero.value.re - 1.6449340668482264).abs() <= 1e-12);
        let pi = witten_l_su2(s, class(PI), 1e-12).unwrap();
        assert!((pi.value.re - 0.8224670334241132).abs() <= 1e-12);
    }

    /// Leibniz series 1 - 1/3 + 1/5 - ..., accelerated by averaging the two
    /// bracketing partial sums repeatedly (Euler's transform on the tail).
    fn leibniz_oracle() -> f64 {
        let mut sums = Vec::new();
        let mut acc = 0.0;
        for k in 0..40u32 {
            let term = 1.0 / (2 * k + 1) as f64;
            acc += if k % 2 == 0 { term } else { -term };
            sums.push(acc);
        }
        while sums.len() > 1 {
            sums = sums.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        }
        sums[0]
    }

    #[test]
    fn l_function_at_quarter_turn_and_s_zero() {
        let oracle = leibniz_oracle();
        assert!((oracle - FRAC_PI_4).abs() < 1e-10);
        let r = witten_l_su2(ComplexParameter::real(0.0), class(FRAC_PI_2), 1e-12).unwrap();
        assert!((r.value.re - FRAC_PI_4).abs() < 1e-10);
        assert!((r.value.re - FRAC_PI_4).abs() <= r.error_bound.max(1e-13));
        assert!(r.value.im.abs() < 1e-15);
    }

    #[test]
    fn l_function_matches_plain_partial_sums() {
        // Direct summation with the absolute tail bound, for Re(s) large.
        let s = ComplexParameter::new(3.0, 1.5).unwrap();
        for &theta in &[0.2, 1.1, 2.9] {
            let r = witten_l_su2(s, class(theta), 1e-12).unwrap();
            let n_max = 200_000u64;
            let mut direct = Complex64::new(0.0, 0.0);
            for (n, chi) in (1..=n_max).zip(Characters::new(theta)) {
                direct += npow(n, s.value() + 1.0) * chi;
            }
            let tail = (n_max as f64).powf(-2.0) / 2.0;
            assert!((r.value - direct).norm() <= r.error_bound + tail + 1e-12);
        }
    }

    #[test]
    fn l_function_domain_errors() {
        assert!(matches!(
            witten_l_su2(ComplexParameter::real(0.5), class(0.0), 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            witten_l_su2(ComplexParameter::real(0.0), class(PI), 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            witten_l_su2(ComplexParameter::real(-1.0), class(1.0), 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn l_function_near_identity_is_continuous() {
        let s = ComplexParameter::real(3.0);
        let at_zero = witten_l_su2(s, class(0.0), 1e-12).unwrap();
        let near = witten_l_su2(s, class(1e-4), 1e-10).unwrap();
        // d/dtheta of the series vanishes at 0; the offset is O(theta^2).
        assert!((at_zero.value - near.value).norm() < 1e-6);
    }
}
