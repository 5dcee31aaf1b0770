//! Diagonal embedding `H -> G = H x ... x H` (m copies).
//!
//! Irreducibles of `G` are external tensor products `rho_1 x ... x rho_m`
//! of degree `deg rho_1 ... deg rho_m`, so the G-side L-function at
//! `(h, ..., h)` is a sum over m-tuples of irreps of `H`. It is computed
//! that way here, independently of the m-th power of the H-side
//! L-function it must equal.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::divisor::divisor_counts;
use crate::error::{Error, Result};
use crate::finite::{witten_l_finite, CharacterTable, SParameter, Scalar};
use crate::moment::{z3_series, zm_quadrature};
use crate::quadrature::QuadratureRule;
use crate::su2::{npow, witten_l_su2, Characters, ConjugacyClassSU2};
use crate::sum::{Neumaier, NeumaierComplex};
use crate::types::{ComplexParameter, EvalResult};
use crate::zeta;

const EPS: f64 = f64::EPSILON;
const L_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub enum DiagonalClass<'a> {
    Su2(ConjugacyClassSU2),
    Finite {
        table: &'a CharacterTable,
        class_index: usize,
    },
}

/// Both sides of `zeta_G(s, (h, .., h)) = zeta_H(s, h)^m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalProduct {
    /// Sum over irreducibles of the product group.
    pub tuple_sum: EvalResult,
    /// `zeta_H(s, h)^m`.
    pub power: EvalResult,
}

impl DiagonalProduct {
    pub fn agrees(&self) -> bool {
        self.tuple_sum.agrees_with(&self.power)
    }
}

/// Evaluates both sides and fails with [`Error::IdentityViolation`] if they
/// disagree beyond their combined error bounds.
///
/// For `SU(2)` the tuple sum runs over irreducibles of `G` of degree at most
/// `trunc`.
pub fn product_l_diag(
    class: &DiagonalClass<'_>,
    m: u32,
    s: ComplexParameter,
    trunc: u64,
) -> Result<DiagonalProduct> {
    if m < 1 {
        return Err(Error::Argument("m must be >= 1".into()));
    }
    let product = match class {
        DiagonalClass::Finite { table, class_index } => {
            let (tuple, power) = finite_diagonal(table, &s, *class_index, m)?;
            let slack = |v: Complex64| 16.0 * EPS * (1.0 + v.norm()) * m as f64;
            DiagonalProduct {
                tuple_sum: EvalResult::new(
                    tuple,
                    slack(tuple),
                    (table.irreps().len() as u64).pow(m),
                ),
                power: EvalResult::new(power, slack(power), table.irreps().len() as u64),
            }
        }
        DiagonalClass::Su2(cls) => su2_diagonal(*cls, m, s, trunc)?,
    };
    if !product.agrees() {
        return Err(Error::IdentityViolation(format!(
            "diagonal product: tuple sum {} vs power {} (bounds {:e}, {:e})",
            product.tuple_sum.value,
            product.power.value,
            product.tuple_sum.error_bound,
            product.power.error_bound
        )));
    }
    Ok(product)
}

/// Tuple sum and power for a finite group, generic over exact and complex `s`.
pub fn finite_diagonal<P: SParameter>(
    table: &CharacterTable,
    s: &P,
    class_index: usize,
    m: u32,
) -> Result<(P::Value, P::Value)> {
    if m < 1 {
        return Err(Error::Argument("m must be >= 1".into()));
    }
    let single = witten_l_finite(table, s, class_index)?;
    let irreps = table.irreps();
    let count = irreps.len();
    let mut tuple = vec![0usize; m as usize];
    let mut total = P::Value::zero();
    loop {
        let mut trace = P::Value::one();
        let mut degree = 1u64;
        for &i in &tuple {
            trace = trace * P::Value::from_rational(&irreps[i].values[class_index]);
            degree *= irreps[i].dim;
        }
        total = total + trace * s.dim_power(degree, 1);
        // odometer
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                let power = (0..m).fold(P::Value::one(), |acc, _| acc * single.clone());
                return Ok((total, power));
            }
            tuple[pos] += 1;
            if tuple[pos] < count {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

fn su2_diagonal(
    cls: ConjugacyClassSU2,
    m: u32,
    s: ComplexParameter,
    trunc: u64,
) -> Result<DiagonalProduct> {
    let sigma = s.re();
    let interior = !cls.is_identity() && !cls.is_minus_identity();
    if sigma <= 1.0 && !(interior && sigma > 0.0) {
        return Err(Error::Domain(format!(
            "product-group series at theta = {} needs Re(s) > {}",
            cls.theta(),
            if interior { 0 } else { 1 }
        )));
    }
    if trunc < 1 {
        return Err(Error::Argument("trunc must be >= 1".into()));
    }
    let degree_cap = trunc as usize;
    let chars: Vec<f64> = Characters::new(cls.theta()).take(degree_cap).collect();
    let weights: Vec<Complex64> = (1..=trunc).map(|n| npow(n, s.value() + 1.0)).collect();

    let mut acc = NeumaierComplex::default();
    let mut magnitude = 0.0;
    let mut terms = 0u64;
    walk_tuples(m, 1, 1.0, degree_cap, &chars, &mut |degree, trace| {
        let term = weights[degree - 1] * trace;
        magnitude += term.norm();
        terms += 1;
        acc.add(term);
    });

    // Tail over degrees N > trunc, using d_m(N) ordered factorisations.
    let d = divisor_counts(m, degree_cap);
    let tail_for = |u: f64| -> Result<f64> {
        let z = zeta::zeta_upper(u)?;
        let mut head = Neumaier::default();
        for (n, &c) in d.iter().enumerate().skip(1) {
            head.add(c as f64 * (n as f64).powf(-u));
        }
        let full = z.powi(m as i32);
        Ok((full - head.value() * (1.0 - 4.0 * EPS)).max(0.0) + 8.0 * EPS * full)
    };
    let mut tail = f64::INFINITY;
    if sigma > 1.0 {
        // |chi_n| <= n
        tail = tail.min(tail_for(sigma)?);
    }
    if interior {
        let inv_sin = 1.0 / cls.theta().sin();
        tail = tail.min(inv_sin.powi(m as i32) * tail_for(sigma + 1.0)?);
    }
    let growth = (m as f64) + (trunc as f64).sqrt();
    let tuple_sum = EvalResult::new(acc.value(), tail + 8.0 * EPS * magnitude * growth, terms);

    let l = witten_l_su2(s, cls, L_TOL)?;
    let power_value = l.value.powu(m);
    let base = l.value.norm();
    let power_bound = (base + l.error_bound).powi(m as i32) - base.powi(m as i32)
        + 4.0 * EPS * m as f64 * power_value.norm();
    let power = EvalResult::new(power_value, power_bound, l.terms_used);
    Ok(DiagonalProduct { tuple_sum, power })
}

/// Visits every tuple `(n_1, .., n_m)` with `n_1 ... n_m <= cap`, passing the
/// product degree and `chi_{n_1} ... chi_{n_m}`.
fn walk_tuples(
    remaining: u32,
    degree: usize,
    trace: f64,
    cap: usize,
    chars: &[f64],
    visit: &mut dyn FnMut(usize, f64),
) {
    if remaining == 0 {
        visit(degree, trace);
        return;
    }
    for n in 1..=cap / degree {
        walk_tuples(
            remaining - 1,
            degree * n,
            trace * chars[n - 1],
            cap,
            chars,
            visit,
        );
    }
}

/// Settings for [`tilde_z_diag`].
#[derive(Debug, Clone, Copy)]
pub struct DiagonalMeanOptions {
    pub tol: f64,
    /// Norm cutoff for the cubic Dirichlet series.
    pub max_norm: u64,
    /// L-series truncation for the quadrature route (`m >= 4`).
    pub trunc: u64,
}

impl Default for DiagonalMeanOptions {
    fn default() -> Self {
        Self {
            tol: 1e-5,
            max_norm: 10_000,
            trunc: 200,
        }
    }
}

/// `~Z^m_{G,H}(s)` for `G = SU(2)^m` and the diagonal `H = SU(2)`, through
/// `~Z^m_{G,H} = Z^m_H`: the first moment is 1, the second is
/// `zeta(2s+2)`, the third is the cubic Dirichlet series, and higher moments
/// go through quadrature.
pub fn tilde_z_diag(m: u32, s: ComplexParameter, opts: &DiagonalMeanOptions) -> Result<EvalResult> {
    if s.re() <= 0.0 {
        return Err(Error::Domain(format!("requires Re(s) > 0, got s = {s}")));
    }
    match m {
        0 => Err(Error::Argument("m must be >= 1".into())),
        1 => Ok(EvalResult::exact(Complex64::new(1.0, 0.0))),
        2 => zeta::riemann_zeta(
            ComplexParameter::from_complex(2.0 * s.value() + 2.0)?,
            opts.tol,
        ),
        3 => z3_series(s, opts.max_norm, opts.tol),
        _ => {
            let degree = (m as u64 * (opts.trunc - 1)) as usize;
            zm_quadrature(s, m, opts.trunc, &QuadratureRule::for_degree(degree))
        }
    }
}
