//! Witten zeta and L-functions for `SU(2)` and finite groups, together with
//! their power means over Haar measure.
//!
//! Every numeric answer comes back as an [`EvalResult`]: a value plus an
//! absolute error bound covering series truncation and quadrature, and a
//! floating-point rounding allowance. Finite-group quantities at integer `s`
//! are computed in exact rational arithmetic.
//!
//! Module map:
//!
//! * [`zeta`]: Riemann zeta and Dirichlet eta in `Re(s) > 0`.
//! * [`su2`]: `SU(2)` characters, the twisted L-function and Weyl integration.
//! * [`quadrature`]: quadrature rules for the Weyl measure on `[0, pi]`.
//! * [`moment`]: moment coefficients, the cubic-moment Dirichlet series and
//!   the equal-argument (convolution) means.
//! * [`finite`]: exact character tables, with `S_3` built in.
//! * [`product`]: diagonal embeddings into product groups.
//! * [`verify`]: the identity suite behind `witten verify`.

pub mod divisor;
pub mod error;
pub mod finite;
pub mod moment;
pub mod product;
pub mod quadrature;
pub mod su2;
mod sum;
pub mod types;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use finite::{CharacterTable, ExactScalar};
pub use moment::{CoefficientTable, LatticeTriple, TripleIndex};
pub use quadrature::QuadratureRule;
pub use su2::ConjugacyClassSU2;
pub use types::{Budget, ComplexParameter, EvalResult};

pub use num_complex::Complex64;
