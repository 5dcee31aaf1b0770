use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite point `s` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexParameter(Complex64);

impl ComplexParameter {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Argument(format!(
                "non-finite parameter {re} + {im}i"
            )));
        }
        Ok(Self(Complex64::new(re, im)))
    }

    /// Real parameter. Panics on non-finite input.
    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0).expect("finite real parameter")
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    /// `s + shift` for a real shift.
    pub fn shifted(&self, shift: f64) -> Self {
        Self(self.0 + shift)
    }

    pub fn is_real(&self) -> bool {
        self.0.im == 0.0
    }
}

impl From<f64> for ComplexParameter {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for ComplexParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else if self.0.im < 0.0 {
            write!(f, "{}-{}i", self.0.re, -self.0.im)
        } else {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        }
    }
}

/// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `a+i` (whitespace ignored).
impl FromStr for ComplexParameter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot parse complex number {text:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let parse_real = |s: &str| s.parse::<f64>().map_err(|_| bad());
        let Some(body) = t.strip_suffix(['i', 'j']) else {
            return Self::new(parse_real(&t)?, 0.0);
        };
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() {
            0.0
        } else {
            parse_real(re_text)?
        };
        let im = match im_text {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => parse_real(other)?,
        };
        Self::new(re, im)
    }
}

/// A numeric answer with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    /// Bound on `|value - exact|`.
    pub error_bound: f64,
    pub terms_used: u64,
}

impl EvalResult {
    pub fn new(value: Complex64, error_bound: f64, terms_used: u64) -> Self {
        debug_assert!(error_bound >= 0.0);
        Self {
            value,
            error_bound,
            terms_used,
        }
    }

    pub fn exact(value: Complex64) -> Self {
        Self::new(value, 0.0, 1)
    }

    /// True when `other` lies inside this result's error interval.
    pub fn contains(&self, other: Complex64) -> bool {
        (self.value - other).norm() <= self.error_bound
    }

    /// True when the two error discs intersect.
    pub fn agrees_with(&self, other: &EvalResult) -> bool {
        (self.value - other.value).norm() <= self.error_bound + other.error_bound
    }
}

/// Work limits for series evaluation and coefficient enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of series terms for a single evaluation.
    pub max_terms: u64,
    /// Largest norm `N` accepted by the Dirichlet coefficient enumeration.
    pub max_norm: u64,
}

impl Budget {
    pub const DEFAULT_TERMS: u64 = 10_000_000;
    pub const DEFAULT_NORM: u64 = 10_000_000;

    pub fn with_terms(max_terms: u64) -> Self {
        Self {
            max_terms,
            ..Self::default()
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_terms: Self::DEFAULT_TERMS,
            max_norm: Self::DEFAULT_NORM,
        }
    }
}
