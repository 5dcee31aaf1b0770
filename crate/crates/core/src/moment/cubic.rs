use std::fmt::Write as _;

use rayon::prelude::*;

use crate::divisor::divisor_counts;
use crate::error::{Error, Result};
use crate::su2::npow;
use crate::sum::{Neumaier, NeumaierComplex};
use crate::types::{Budget, ComplexParameter, EvalResult};
use crate::zeta;

/// Dimensions `(n1, n2, n3)` of three irreducible `SU(2)` representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleIndex {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl TripleIndex {
    pub fn new(n1: u64, n2: u64, n3: u64) -> Result<Self> {
        if n1 == 0 || n2 == 0 || n3 == 0 {
            return Err(Error::Argument(format!(
                "triple ({n1}, {n2}, {n3}) has a zero component"
            )));
        }
        Ok(Self { n1, n2, n3 })
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.n1, self.n2, self.n3]
    }

    pub fn norm(&self) -> u64 {
        self.n1 * self.n2 * self.n3
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeTriple {
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

impl LatticeTriple {
    pub fn new(m1: u64, m2: u64, m3: u64) -> Self {
        Self { m1, m2, m3 }
    }

    /// `(m1+m2+1)(m2+m3+1)(m3+m1+1)`.
    pub fn norm(&self) -> u64 {
        (self.m1 + self.m2 + 1) * (self.m2 + self.m3 + 1) * (self.m3 + self.m1 + 1)
    }
}

/// `sgn(n)` for odd `n`, zero for even `n`.
pub fn sign_a(n: i64) -> i64 {
    if n % 2 == 0 {
        0
    } else {
        n.signum()
    }
}

/// Strict triangle inequalities and odd perimeter.
pub fn condition_star_star(t: &TripleIndex) -> bool {
    let [a, b, c] = t.as_array().map(|v| v as i128);
    a + b - c > 0 && b + c - a > 0 && c + a - b > 0 && (a + b + c) % 2 == 1
}

/// The cubic coefficient `c(n1, n2, n3)` in closed form.
pub fn coeff_closed(t: &TripleIndex) -> u8 {
    u8::from(condition_star_star(t))
}

/// `[A(n1+n2-n3) + A(n2+n3-n1) + A(n3+n1-n2) - A(n1+n2+n3)] / 2`, the
/// product-to-sum form of the cubic coefficient.
pub fn coeff_sign_decomposition(t: &TripleIndex) -> i64 {
    let [a, b, c] = t.as_array().map(|v| v as i64);
    let twice = sign_a(a + b - c) + sign_a(b + c - a) + sign_a(c + a - b) - sign_a(a + b + c);
    twice / 2
}

pub fn triple_to_lattice(t: &TripleIndex) -> Result<LatticeTriple> {
    if !condition_star_star(t) {
        return Err(Error::Precondition(format!(
            "({}, {}, {}) violates the triangle/odd-perimeter condition",
            t.n1, t.n2, t.n3
        )));
    }
    let (a, b, c) = (t.n1, t.n2, t.n3);
    Ok(LatticeTriple {
        m1: (b + c - a - 1) / 2,
        m2: (c + a - b - 1) / 2,
        m3: (a + b - c - 1) / 2,
    })
}

pub fn lattice_to_triple(l: &LatticeTriple) -> TripleIndex {
    TripleIndex {
        n1: l.m2 + l.m3 + 1,
        n2: l.m3 + l.m1 + 1,
        n3: l.m1 + l.m2 + 1,
    }
}

/// Multiplicities `r(N)` of the cubic-moment Dirichlet series up to a norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    max_norm: u64,
    counts: Vec<u32>,
}

impl CoefficientTable {
    pub fn max_norm(&self) -> u64 {
        self.max_norm
    }

    /// `r(n)`; zero outside `1..=max_norm`.
    pub fn get(&self, n: u64) -> u32 {
        self.counts.get(n as usize).copied().unwrap_or(0)
    }

    /// `(N, r(N))` for every `N` with `r(N) > 0`, increasing in `N`.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(n, &r)| (n as u64, r))
    }

    /// `sum_{N <= max_norm} r(N)`.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&r| r as u64).sum()
    }

    /// CSV with header `N,r`, increasing `N`, zero rows omitted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,r\n");
        for (n, r) in self.iter_nonzero() {
            writeln!(out, "{n},{r}").expect("writing to a String");
        }
        out
    }
}

pub fn z3_coefficients(max_norm: u64) -> Result<CoefficientTable> {
    z3_coefficients_budgeted(max_norm, &Budget::default())
}

/// Counts lattice triples by norm.
///
/// Iterates over factor triples `a = m1+m2+1`, `b = m2+m3+1`, `c = m3+m1+1`
/// with `abc <= max_norm` and solves back for `m`; a solution exists iff
/// `a + b + c` is odd and the strict triangle inequalities hold.
pub fn z3_coefficients_budgeted(max_norm: u64, budget: &Budget) -> Result<CoefficientTable> {
    if max_norm < 1 {
        return Err(Error::Argument("max_norm must be >= 1".into()));
    }
    if max_norm > budget.max_norm {
        return Err(Error::Resource {
            what: "max_norm",
            requested: max_norm,
            limit: budget.max_norm,
        });
    }
    let len = max_norm as usize + 1;
    let counts = (1..=max_norm)
        .into_par_iter()
        .fold(
            || vec![0u32; len],
            |mut acc, a| {
                for b in 1..=max_norm / a {
                    let ab = a * b;
                    let lo = a.abs_diff(b) + 1;
                    let hi = (a + b - 1).min(max_norm / ab);
                    // odd perimeter: c has the parity opposite to a + b
                    let mut c = if (a + b + lo) % 2 == 1 { lo } else { lo + 1 };
                    while c <= hi {
                        acc[(ab * c) as usize] += 1;
                        c += 2;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u32; len],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(u, v)| *u += v);
                x
            },
        );
    Ok(CoefficientTable { max_norm, counts })
}

pub fn z3_series(s: ComplexParameter, max_norm: u64, tol: f64) -> Result<EvalResult> {
    z3_series_budgeted(s, max_norm, tol, &Budget::default())
}

/// Partial sum of `sum_N r(N) N^(-s-1)` over `N <= max_norm` with a tail bound.
///
/// Distinct lattice triples give distinct ordered factorisations `(a, b, c)`
/// of `N`, so `r(N) <= d_3(N)` and the tail is at most
/// `zeta(sigma+1)^3 - sum_{N <= max_norm} d_3(N) N^(-sigma-1)`.
pub fn z3_series_budgeted(
    s: ComplexParameter,
    max_norm: u64,
    tol: f64,
    budget: &Budget,
) -> Result<EvalResult> {
    if s.re() <= 0.0 {
        return Err(Error::Domain(format!(
            "cubic moment series requires Re(s) > 0, got {s}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Argument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let table = z3_coefficients_budgeted(max_norm, budget)?;
    let exponent = s.value() + 1.0;
    let mut partial = NeumaierComplex::default();
    let mut magnitude = 0.0;
    for (n, r) in table.iter_nonzero() {
        let term = npow(n, exponent) * r as f64;
        magnitude += term.norm() * (2.0 + exponent.norm() * (n as f64).ln());
        partial.add(term);
    }

    let u = s.re() + 1.0;
    let zeta_hi = zeta::zeta_upper(u)?;
    let d3 = divisor_counts(3, max_norm as usize);
    let mut head = Neumaier::default();
    for (n, &d) in d3.iter().enumerate().skip(1) {
        head.add(d as f64 * (n as f64).powf(-u));
    }
    let head_value = head.value();
    let tail = (zeta_hi.powi(3) - head_value * (1.0 - 4.0 * f64::EPSILON)).max(0.0)
        + 8.0 * f64::EPSILON * zeta_hi.powi(3);
    let bound = tail + 4.0 * f64::EPSILON * magnitude;
    if bound > tol {
        return Err(Error::ToleranceUnreachable {
            tol,
            budget: max_norm,
            best: bound,
        });
    }
    Ok(EvalResult::new(partial.value(), bound, max_norm))
}
