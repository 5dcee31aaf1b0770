//! Witten L-functions and mean values of finite groups from exact character
//! tables.
//!
//! Evaluation is generic over the parameter type: an integer `s` keeps every
//! quantity in exact rational arithmetic (`dim^(-s)` is rational), a complex
//! `s` evaluates in `Complex64`.

use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::su2::npow;
use crate::types::ComplexParameter;

/// Exact character value. Tables are restricted to rational characters.
pub type ExactScalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: String,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    pub dim: u64,
    /// One value per conjugacy class, in table order.
    pub values: Vec<ExactScalar>,
}

/// A validated character table, keyed by conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    order: u64,
    classes: Vec<ConjugacyClass>,
    irreps: Vec<Irrep>,
    identity: usize,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CharacterTable {
    /// Builds a table, rejecting anything that is not an exact character
    /// table: class sizes must sum to the order, `sum dim^2 = |G|`, and both
    /// orthogonality relations must hold exactly.
    pub fn new(order: u64, classes: Vec<ConjugacyClass>, irreps: Vec<Irrep>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidTable(msg));
        if order == 0 {
            return invalid("group order must be positive".into());
        }
        if classes.is_empty() || classes.iter().any(|c| c.size == 0) {
            return invalid("class sizes must be positive".into());
        }
        let size_sum: u64 = classes.iter().map(|c| c.size).sum();
        if size_sum != order {
            return invalid(format!("class sizes sum to {size_sum}, order is {order}"));
        }
        if irreps.len() != classes.len() {
            return invalid(format!(
                "{} irreps for {} classes",
                irreps.len(),
                classes.len()
            ));
        }
        if let Some(bad) = irreps
            .iter()
            .position(|r| r.values.len() != classes.len() || r.dim == 0)
        {
            return invalid(format!(
                "irrep {bad} has a zero dimension or the wrong number of values"
            ));
        }
        let dim_squares: u64 = irreps.iter().map(|r| r.dim * r.dim).sum();
        if dim_squares != order {
            return invalid(format!(
                "sum of squared dimensions is {dim_squares}, order is {order}"
            ));
        }
        let identity = (0..classes.len()).find(|&k| {
            classes[k].size == 1 && irreps.iter().all(|r| r.values[k] == rat(r.dim as i64))
        });
        let Some(identity) = identity else {
            return invalid("no class of size 1 where every character equals its dimension".into());
        };

        let g = rat(order as i64);
        for (i, a) in irreps.iter().enumerate() {
            for (j, b) in irreps.iter().enumerate() {
                let inner = classes
                    .iter()
                    .zip(a.values.iter().zip(&b.values))
                    .fold(BigRational::zero(), |acc, (c, (x, y))| {
                        acc + rat(c.size as i64) * x * y
                    });
                let expected = if i == j {
                    g.clone()
                } else {
                    BigRational::zero()
                };
                if inner != expected {
                    return invalid(format!("row orthogonality fails for irreps {i}, {j}"));
                }
            }
        }
        for k in 0..classes.len() {
            for l in 0..classes.len() {
                let inner = irreps.iter().fold(BigRational::zero(), |acc, r| {
                    acc + &r.values[k] * &r.values[l]
                });
                let expected = if k == l {
                    &g / rat(classes[k].size as i64)
                } else {
                    BigRational::zero()
                };
                if inner != expected {
                    return invalid(format!("column orthogonality fails for classes {k}, {l}"));
                }
            }
        }
        Ok(Self {
            order,
            classes,
            irreps,
            identity,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn identity_class(&self) -> usize {
        self.identity
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    fn check_class(&self, index: usize) -> Result<()> {
        if index < self.classes.len() {
            Ok(())
        } else {
            Err(Error::Index {
                index,
                len: self.classes.len(),
            })
        }
    }

    /// Parses `{order, classes: [{label, size}], irreps: [{dim, values}]}`;
    /// values are integers or `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let classes = doc
            .classes
            .into_iter()
            .map(|c| ConjugacyClass {
                label: c.label,
                size: c.size,
            })
            .collect();
        let irreps = doc
            .irreps
            .into_iter()
            .map(|r| {
                let values = r
                    .values
                    .iter()
                    .map(RawValue::to_exact)
                    .collect::<Result<Vec<_>>>()?;
                Ok(Irrep { dim: r.dim, values })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.order, classes, irreps)
    }

    pub fn to_json(&self) -> String {
        let doc = TableDocument {
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ClassDocument {
                    label: c.label.clone(),
                    size: c.size,
                })
                .collect(),
            irreps: self
                .irreps
                .iter()
                .map(|r| IrrepDocument {
                    dim: r.dim,
                    values: r.values.iter().map(RawValue::from_exact).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table document serialises")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDocument {
    order: u64,
    classes: Vec<ClassDocument>,
    irreps: Vec<IrrepDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ClassDocument {
    label: String,
    size: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct IrrepDocument {
    dim: u64,
    values: Vec<RawValue>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Text(String),
}

impl RawValue {
    fn to_exact(&self) -> Result<ExactScalar> {
        match self {
            RawValue::Int(n) => Ok(rat(*n)),
            RawValue::Text(t) => parse_rational(t),
        }
    }

    fn from_exact(q: &ExactScalar) -> Self {
        match (q.is_integer(), q.to_integer().to_i64()) {
            (true, Some(n)) => RawValue::Int(n),
            _ => RawValue::Text(format!("{}/{}", q.numer(), q.denom())),
        }
    }
}

fn parse_rational(text: &str) -> Result<ExactScalar> {
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match text.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(int(p)?, q))
        }
        None => Ok(BigRational::from_integer(int(text)?)),
    }
}

/// Field operations needed to evaluate L-functions from a table.
pub trait Scalar:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(q: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Scalar for Complex64 {
    fn from_rational(q: &BigRational) -> Self {
        let re = q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
        Complex64::new(re, 0.0)
    }
}

/// The variable `s`: how to raise a dimension to `-(s + shift)`.
pub trait SParameter {
    type Value: Scalar;

    fn dim_power(&self, dim: u64, shift: i64) -> Self::Value;
}

/// Integer `s`, exact.
impl SParameter for i64 {
    type Value = BigRational;

    fn dim_power(&self, dim: u64, shift: i64) -> BigRational {
        let exponent = -(self + shift);
        let base = BigInt::from(dim);
        let magnitude = num_traits::pow(base, exponent.unsigned_abs() as usize);
        if exponent >= 0 {
            BigRational::from_integer(magnitude)
        } else {
            BigRational::new(BigInt::one(), magnitude)
        }
    }
}

impl SParameter for ComplexParameter {
    type Value = Complex64;

    fn dim_power(&self, dim: u64, shift: i64) -> Complex64 {
        npow(dim, self.value() + shift as f64)
    }
}

fn power<T: Scalar>(x: &T, m: u32) -> T {
    (0..m).fold(T::one(), |acc, _| acc * x.clone())
}

fn from_int<T: Scalar>(n: i64) -> T {
    T::from_rational(&rat(n))
}

fn require_m(m: u32) -> Result<()> {
    if m >= 1 {
        Ok(())
    } else {
        Err(Error::Argument("m must be >= 1".into()))
    }
}

/// `zeta_G(s) = sum_rho dim^(-s)`.
pub fn witten_zeta_finite<P: SParameter>(table: &CharacterTable, s: &P) -> P::Value {
    table
        .irreps
        .iter()
        .fold(P::Value::zero(), |acc, r| acc + s.dim_power(r.dim, 0))
}

/// `zeta_G(s, g) = sum_rho chi_rho(g) dim^(-s-1)` at the given class.
pub fn witten_l_finite<P: SParameter>(
    table: &CharacterTable,
    s: &P,
    class_index: usize,
) -> Result<P::Value> {
    table.check_class(class_index)?;
    Ok(table.irreps.iter().fold(P::Value::zero(), |acc, r| {
        acc + P::Value::from_rational(&r.values[class_index]) * s.dim_power(r.dim, 1)
    }))
}

/// `Z^m(s) = (1/|G|) sum_classes size * zeta_G(s, class)^m`.
pub fn z_m_bruteforce<P: SParameter>(table: &CharacterTable, s: &P, m: u32) -> Result<P::Value> {
    require_m(m)?;
    let mut total = P::Value::zero();
    for (k, class) in table.classes.iter().enumerate() {
        let l = witten_l_finite(table, s, k)?;
        total = total + from_int::<P::Value>(class.size as i64) * power(&l, m);
    }
    Ok(total / from_int(table.order as i64))
}

/// `((2 + 2^-s)^m + 2 (2 - 2^(-s-1))^m) / 6`.
pub fn z_m_s3_closed<P: SParameter>(s: &P, m: u32) -> Result<P::Value> {
    require_m(m)?;
    let two = from_int::<P::Value>(2);
    let identity = two.clone() + s.dim_power(2, 0);
    let three_cycle = two.clone() - s.dim_power(2, 1);
    Ok((power(&identity, m) + two * power(&three_cycle, m)) / from_int(6))
}

/// `~Z^m(s) = (1/|G|) sum_classes size * sum_rho chi_rho^m dim^(-s-m)`.
pub fn tilde_z_m_bruteforce<P: SParameter>(
    table: &CharacterTable,
    s: &P,
    m: u32,
) -> Result<P::Value> {
    require_m(m)?;
    let mut total = P::Value::zero();
    for r in &table.irreps {
        let weight = s.dim_power(r.dim, m as i64);
        for (class, value) in table.classes.iter().zip(&r.values) {
            let chi = P::Value::from_rational(value);
            total =
                total + from_int::<P::Value>(class.size as i64) * power(&chi, m) * weight.clone();
        }
    }
    Ok(total / from_int(table.order as i64))
}

/// The closed form `(3 + (-1)^m)/2 + (2^-1 + (-1)^m)/3 * 2^(-s-m)` as
/// printed for `S_3`. It disagrees with [`tilde_z_m_bruteforce`]; see the
/// `paper_discrepancy` checks in [`crate::verify`].
pub fn tilde_z_m_s3_printed<P: SParameter>(s: &P, m: u32) -> Result<P::Value> {
    require_m(m)?;
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let half = P::Value::from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)));
    let first = from_int::<P::Value>(3 + sign) / from_int(2);
    let second = (half + from_int(sign)) / from_int(3);
    Ok(first + second * s.dim_power(2, m as i64))
}

/// Mean over the trivial subgroup: `zeta_G(s, 1)^m`.
pub fn z_over_trivial_subgroup<P: SParameter>(
    table: &CharacterTable,
    s: &P,
    m: u32,
) -> Result<P::Value> {
    require_m(m)?;
    Ok(power(&witten_l_finite(table, s, table.identity)?, m))
}

/// `S_3` with classes `e`, transpositions, 3-cycles and irreps trivial,
/// sign and the two-dimensional standard representation.
pub fn s3_table() -> CharacterTable {
    let class = |label: &str, size| ConjugacyClass {
        label: label.into(),
        size,
    };
    let irrep = |dim, values: [i64; 3]| Irrep {
        dim,
        values: values.iter().map(|&v| rat(v)).collect(),
    };
    CharacterTable::new(
        6,
        vec![
            class("e", 1),
            class("transposition", 3),
            class("3-cycle", 2),
        ],
        vec![
            irrep(1, [1, 1, 1]),
            irrep(1, [1, -1, 1]),
            irrep(2, [2, 0, -1]),
        ],
    )
    .expect("S_3 table is valid")
}

/// Renders an exact value as `p/q` (or `p`).
pub fn format_exact(q: &ExactScalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn exact_to_f64(q: &ExactScalar) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn s3_structure() {
        let t = s3_table();
        assert_eq!(t.order(), 6);
        assert_eq!(t.irreps().iter().map(|r| r.dim * r.dim).sum::<u64>(), 6);
        assert_eq!(t.irreps()[2].values, vec![rat(2), rat(0), rat(-1)]);
        assert_eq!(t.identity_class(), 0);
    }

    #[test]
    fn s3_l_values_exact() {
        let t = s3_table();
        for s in -3i64..=4 {
            let two_pow = s.dim_power(2, 0);
            assert_eq!(
                witten_l_finite(&t, &s, 0).unwrap(),
                rat(2) + two_pow.clone()
            );
            assert_eq!(witten_l_finite(&t, &s, 1).unwrap(), rat(0));
            assert_eq!(
                witten_l_finite(&t, &s, 2).unwrap(),
                rat(2) - s.dim_power(2, 1)
            );
            assert_eq!(witten_zeta_finite(&t, &s), rat(2) + two_pow);
        }
        assert!(matches!(
            witten_l_finite(&t, &0i64, 3),
            Err(Error::Index { .. })
        ));
    }

    #[test]
    fn s3_means() {
        let t = s3_table();
        for s in 0i64..=3 {
            assert_eq!(z_m_bruteforce(&t, &s, 1).unwrap(), rat(1));
            assert_eq!(
                z_m_bruteforce(&t, &s, 2).unwrap(),
                rat(2) + s.dim_power(2, s + 2)
            );
        }
        assert_eq!(z_m_bruteforce(&t, &0i64, 2).unwrap(), q(9, 4));
        let expected = (q(5, 2).pow(3) + rat(2) * q(7, 4).pow(3)) / rat(6);
        assert_eq!(z_m_bruteforce(&t, &1i64, 3).unwrap(), expected);
        assert_eq!(z_m_s3_closed(&0i64, 3).unwrap(), q(45, 8));
        for m in 1..=6 {
            for s in 0i64..=3 {
                assert_eq!(
                    z_m_s3_closed(&s, m).unwrap(),
                    z_m_bruteforce(&t, &s, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn s3_means_complex() {
        let t = s3_table();
        let s = ComplexParameter::new(0.3, 1.7).unwrap();
        for m in 1..=5 {
            let a = z_m_s3_closed(&s, m).unwrap();
            let b = z_m_bruteforce(&t, &s, m).unwrap();
            assert!((a - b).norm() <= 1e-12);
        }
        let one = z_m_bruteforce(&t, &s, 1).unwrap();
        assert!((one - 1.0).norm() <= 1e-12);
    }

    #[test]
    fn s3_convolution_means() {
        let t = s3_table();
        for s in -2i64..=4 {
            assert_eq!(tilde_z_m_bruteforce(&t, &s, 1).unwrap(), rat(1));
        }
        // (1/6)[6 + 6 + (4 + 0 + 2)/4]
        assert_eq!(tilde_z_m_bruteforce(&t, &0i64, 2).unwrap(), q(9, 4));
        // (1/6)[6 + (1 - 3 + 2) + (8 + 0 - 2)/8]
        assert_eq!(tilde_z_m_bruteforce(&t, &0i64, 3).unwrap(), q(9, 8));
        assert_eq!(tilde_z_m_s3_printed(&0i64, 2).unwrap(), q(17, 8));
        // m = 1 printed form: 1 + (1/2 - 1)/3 * 2^(-s-1) != 1
        assert_eq!(tilde_z_m_s3_printed(&0i64, 1).unwrap(), q(11, 12));
    }

    #[test]
    fn json_roundtrip_and_rationals() {
        let t = s3_table();
        let text = t.to_json();
        assert_eq!(CharacterTable::from_json(&text).unwrap(), t);
        let doc = r#"{"order":2,"classes":[{"label":"e","size":1},{"label":"g","size":1}],
            "irreps":[{"dim":1,"values":[1,"2/2"]},{"dim":1,"values":["1","-1"]}]}"#;
        let c2 = CharacterTable::from_json(doc).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.class_index("g"), Some(1));
    }

    #[test]
    fn rejects_invalid_tables() {
        let bad_orth = r#"{"order":2,"classes":[{"label":"e","size":1},{"label":"g","size":1}],
            "irreps":[{"dim":1,"values":[1,1]},{"dim":1,"values":[1,1]}]}"#;
        assert!(matches!(
            CharacterTable::from_json(bad_orth),
            Err(Error::InvalidTable(_))
        ));
        let bad_sizes = r#"{"order":3,"classes":[{"label":"e","size":1},{"label":"g","size":1}],
            "irreps":[{"dim":1,"values":[1,1]},{"dim":1,"values":[1,-1]}]}"#;
        assert!(matches!(
            CharacterTable::from_json(bad_sizes),
            Err(Error::InvalidTable(_))
        ));
        let bad_value = r#"{"order":2,"classes":[{"label":"e","size":1},{"label":"g","size":1}],
            "irreps":[{"dim":1,"values":[1,"1/0"]},{"dim":1,"values":[1,-1]}]}"#;
        assert!(matches!(
            CharacterTable::from_json(bad_value),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            CharacterTable::from_json("{"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn trivial_subgroup_mean() {
        let t = s3_table();
        for s in 0i64..=3 {
            let lhs = z_over_trivial_subgroup(&t, &s, 2).unwrap();
            let zeta = witten_zeta_finite(&t, &s);
            assert_eq!(lhs, zeta.clone() * zeta);
        }
    }
}
