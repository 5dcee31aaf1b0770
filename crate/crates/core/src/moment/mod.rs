//! Power means of the `SU(2)` L-function over Haar measure.
//!
//! Expanding `Z^m(s) = int zeta(s, g)^m dg` term by term gives
//!
//! ```text
//! Z^m(s) = sum_{n_1..n_m >= 1} c(n_1, .., n_m) / (n_1 ... n_m)^(s+1),
//! c(n_1, .., n_m) = int chi_{n_1} ... chi_{n_m} dmu.
//! ```
//!
//! For `m = 3` the coefficient is the indicator of strict triangle
//! inequalities with odd perimeter, and reparametrising that support by
//! `Z_{>=0}^3` turns the cubic moment into the Dirichlet series
//! `sum ((m1+m2+1)(m2+m3+1)(m3+m1+1))^(-s-1)`.

mod coefficients;
mod convolution;
mod cubic;
mod mean;

pub use coefficients::{coeff_quadrature, diagonal_power_integrals, quartic_diag_integral};
pub use convolution::{tilde_z3_closed, tilde_z3_direct, tilde_z4_closed, tilde_z4_direct};
pub use cubic::{
    coeff_closed, coeff_sign_decomposition, condition_star_star, lattice_to_triple, sign_a,
    triple_to_lattice, z3_coefficients, z3_coefficients_budgeted, z3_series, z3_series_budgeted,
    CoefficientTable, LatticeTriple, TripleIndex,
};
pub use mean::zm_quadrature;
