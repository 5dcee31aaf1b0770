use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::su2::Characters;

/// `c(n_1, .., n_m) = (2/pi) int_0^pi prod sin(n_j t) / sin^(m-2)(t) dt`.
///
/// Evaluated as the Weyl integral of `chi_{n_1} ... chi_{n_m}`, a polynomial
/// of degree `sum (n_j - 1)` in `cos(t)`; the rule must be exact to that
/// degree.
pub fn coeff_quadrature(indices: &[u64], rule: &QuadratureRule) -> Result<f64> {
    if indices.len() < 2 {
        return Err(Error::Argument(format!(
            "coefficient needs at least two indices, got {}",
            indices.len()
        )));
    }
    if indices.iter().any(|&n| n < 1) {
        return Err(Error::Argument("coefficient indices must be >= 1".into()));
    }
    let degree: u64 = indices.iter().map(|n| n - 1).sum();
    rule.require_degree(degree as usize)?;
    let top = *indices.iter().max().expect("non-empty") as usize;
    let mut chi = vec![0.0; top];
    let mut total = 0.0;
    for (theta, w) in rule.iter() {
        chi.iter_mut()
            .zip(Characters::new(theta))
            .for_each(|(slot, c)| *slot = c);
        let product: f64 = indices.iter().map(|&n| chi[n as usize - 1]).product();
        total += w * product;
    }
    Ok(total)
}

/// `int chi_n^power dmu` for `n = 1..=max_n`, entry `n - 1`, in one pass
/// over the rule.
pub fn diagonal_power_integrals(power: u32, max_n: u64, rule: &QuadratureRule) -> Result<Vec<f64>> {
    if max_n < 1 || power < 1 {
        return Err(Error::Argument("need max_n >= 1 and power >= 1".into()));
    }
    rule.require_degree((power as u64 * (max_n - 1)) as usize)?;
    let mut sums = vec![0.0; max_n as usize];
    for (theta, w) in rule.iter() {
        for (slot, c) in sums.iter_mut().zip(Characters::new(theta)) {
            *slot += w * c.powi(power as i32);
        }
    }
    Ok(sums)
}

/// `(2/pi) int_0^pi sin^4(n t) / sin^2(t) dt = int chi_n^4 dmu`.
pub fn quartic_diag_integral(n: u64, rule: &QuadratureRule) -> Result<f64> {
    if n < 1 {
        return Err(Error::Argument("index must be >= 1".into()));
    }
    coeff_quadrature(&[n, n, n, n], rule)
}
