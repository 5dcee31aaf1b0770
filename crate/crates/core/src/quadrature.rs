//! Quadrature rules for the Weyl measure `(2/pi) sin^2(theta) dtheta` on `[0, pi]`.
//!
//! Class functions of `SU(2)` that are finite sums of characters are
//! polynomials in `cos(theta)`, so the natural rule is Gauss quadrature for
//! the weight `sqrt(1 - x^2)` (Chebyshev polynomials of the second kind).
//! With `k` nodes it integrates every polynomial of degree `<= 2k - 1` in
//! `cos(theta)` exactly. A Gauss-Legendre rule in `theta` is provided as an
//! independent cross-check.

use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    order: usize,
    exact_degree: usize,
}

impl QuadratureRule {
    /// Validates and wraps raw nodes and weights.
    ///
    /// `exact_degree` is the largest degree `d` such that every polynomial of
    /// degree `<= d` in `cos(theta)` is integrated exactly against the Weyl
    /// measure.
    pub fn from_parts(nodes: Vec<f64>, weights: Vec<f64>, exact_degree: usize) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::Argument(
                "nodes and weights must be non-empty and of equal length".into(),
            ));
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("nodes must be strictly increasing".into()));
        }
        if nodes.iter().any(|&t| !(t > 0.0 && t < PI)) {
            return Err(Error::Argument(
                "nodes must lie in the open interval (0, pi)".into(),
            ));
        }
        if weights
            .iter()
            .any(|&w| w.is_nan() || w <= 0.0 || !w.is_finite())
        {
            return Err(Error::Argument("weights must be positive".into()));
        }
        let mass: f64 = weights.iter().sum();
        if (mass - 1.0).abs() > 1e-14 {
            return Err(Error::Argument(format!(
                "weights sum to {mass}, expected 1"
            )));
        }
        let order = nodes.len();
        Ok(Self {
            nodes,
            weights,
            order,
            exact_degree,
        })
    }

    /// Gauss rule for the Weyl measure with `k` nodes, exact to degree `2k - 1`.
    ///
    /// Nodes `theta_j = j pi / (k+1)`, weights `2 sin^2(theta_j) / (k+1)`.
    pub fn chebyshev_u(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("rule needs at least one node".into()));
        }
        let h = PI / (k + 1) as f64;
        let nodes: Vec<f64> = (1..=k).map(|j| j as f64 * h).collect();
        let mut weights: Vec<f64> = nodes
            .iter()
            .map(|t| 2.0 * t.sin().powi(2) / (k + 1) as f64)
            .collect();
        // Exact mass is 1; remove the accumulated rounding.
        let mass: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= mass);
        Self::from_parts(nodes, weights, 2 * k - 1)
    }

    /// Smallest Chebyshev rule exact for polynomials of degree `degree` in `cos(theta)`.
    pub fn for_degree(degree: usize) -> Self {
        Self::chebyshev_u(degree / 2 + 1).expect("k >= 1")
    }

    /// Gauss-Legendre rule with `n` nodes in `theta`, mapped affinely onto
    /// `[0, pi]` and multiplied by the Weyl density.
    ///
    /// The integrand `p(cos theta) sin^2 theta` is entire, so once `n`
    /// exceeds twice its trigonometric degree by a margin of 16 the rule is
    /// exact to rounding; `exact_degree` records that threshold.
    pub fn gauss_legendre(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(
                "Gauss-Legendre rule needs at least two nodes".into(),
            ));
        }
        let (xs, ws) = legendre_nodes(n);
        let nodes: Vec<f64> = xs.iter().map(|x| 0.5 * PI * (x + 1.0)).collect();
        let mut weights: Vec<f64> = nodes
            .iter()
            .zip(&ws)
            .map(|(t, w)| w * t.sin().powi(2))
            .collect();
        let mass: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= mass);
        // trig degree of p(cos) sin^2 is deg p + 2
        let exact_degree = (n.saturating_sub(16) / 2).saturating_sub(2);
        Self::from_parts(nodes, weights, exact_degree)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exact_degree(&self) -> usize {
        self.exact_degree
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    pub(crate) fn require_degree(&self, required: usize) -> Result<()> {
        if required <= self.exact_degree {
            Ok(())
        } else {
            Err(Error::InsufficientRule {
                required,
                available: self.exact_degree,
            })
        }
    }
}

/// Nodes (ascending) and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs[i] = -x;
        xs[n - 1 - i] = x;
        ws[i] = w;
        ws[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        xs[n / 2] = 0.0;
    }
    (xs, ws)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weyl_moment_oracle(power: u32) -> f64 {
        // (2/pi) int_0^pi cos^p sin^2: zero for odd p, else Catalan-type
        // value C_{p/2} / 2^p.
        if power % 2 == 1 {
            return 0.0;
        }
        let h = power / 2;
        let mut catalan = 1.0;
        for k in 0..h {
            catalan = catalan * 2.0 * (2 * k + 1) as f64 / (k + 2) as f64;
        }
        catalan / 2f64.powi(power as i32)
    }

    #[test]
    fn total_mass_is_one() {
        for k in [1, 2, 7, 64, 1000] {
            let r = QuadratureRule::chebyshev_u(k).unwrap();
            assert!((r.weights().iter().sum::<f64>() - 1.0).abs() <= 1e-14);
        }
        for n in [2, 5, 40, 300] {
            let r = QuadratureRule::gauss_legendre(n).unwrap();
            assert!((r.weights().iter().sum::<f64>() - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn chebyshev_rule_exact_on_monomials() {
        let rule = QuadratureRule::chebyshev_u(6).unwrap();
        for p in 0..=11 {
            let q: f64 = rule.iter().map(|(t, w)| w * t.cos().powi(p as i32)).sum();
            assert!((q - weyl_moment_oracle(p)).abs() < 1e-14, "p = {p}");
        }
        // Degree 12 is beyond the rule.
        let q: f64 = rule.iter().map(|(t, w)| w * t.cos().powi(12)).sum();
        assert!((q - weyl_moment_oracle(12)).abs() > 1e-6);
    }

    #[test]
    fn legendre_rule_agrees_on_trig_polynomials() {
        let gl = QuadratureRule::gauss_legendre(80).unwrap();
        let cu = QuadratureRule::chebyshev_u(40).unwrap();
        for p in 0..=gl.exact_degree() as i32 {
            let a: f64 = gl.iter().map(|(t, w)| w * t.cos().powi(p)).sum();
            let b: f64 = cu.iter().map(|(t, w)| w * t.cos().powi(p)).sum();
            assert!((a - b).abs() < 1e-13, "p = {p}: {a} vs {b}");
        }
    }

    #[test]
    fn nodes_interior_and_increasing() {
        for rule in [
            QuadratureRule::chebyshev_u(33).unwrap(),
            QuadratureRule::gauss_legendre(33).unwrap(),
        ] {
            assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(rule.nodes().iter().all(|&t| t > 0.0 && t < PI));
            assert!(rule.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn rejects_malformed_rules() {
        assert!(QuadratureRule::from_parts(vec![0.0, 1.0], vec![0.5, 0.5], 1).is_err());
        assert!(QuadratureRule::from_parts(vec![2.0, 1.0], vec![0.5, 0.5], 1).is_err());
        assert!(QuadratureRule::from_parts(vec![1.0, 2.0], vec![0.5, 0.4], 1).is_err());
        assert!(QuadratureRule::from_parts(vec![1.0, 2.0], vec![1.5, -0.5], 1).is_err());
        assert!(QuadratureRule::chebyshev_u(0).is_err());
    }
}
