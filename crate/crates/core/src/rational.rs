//! Exact rational numbers and the scalar trait shared by all vector code.

use std::fmt::Debug;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Totally ordered exact scalar usable as an outcome coordinate.
pub trait Scalar: Clone + Ord + Debug + Add<Output = Self> + Zero {
    fn to_rational(&self) -> Rational;
}

impl Scalar for u64 {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(*self))
    }
}

impl Scalar for i64 {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(*self))
    }
}

impl Scalar for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

pub fn from_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn to_rationals<T: Scalar>(values: &[T]) -> Vec<Rational> {
    values.iter().map(Scalar::to_rational).collect()
}

/// Parses `a`, `a/b` or a finite decimal such as `-2.375`, exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((numer, denom)) = text.split_once('/') {
        let numer = parse_integer(numer)?;
        let denom = parse_integer(denom)?;
        if denom.is_zero() {
            return None;
        }
        return Some(Rational::new(numer, denom));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) || whole.len() - whole_digits.len() > 1 {
            return None;
        }
        let digits = format!("{whole_digits}{frac}");
        let magnitude = BigInt::from_str(&digits).ok()?;
        let scale = num_traits::pow(BigInt::from(10u8), frac.len());
        let value = Rational::new(magnitude, scale);
        return Some(if negative { -value } else { value });
    }
    parse_integer(text).map(Rational::from_integer)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let text = text.trim();
    let digits = text.trim_start_matches(['-', '+']);
    if digits.is_empty() || text.len() - digits.len() > 1 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

/// Serde adapters that encode rationals as canonical strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("invalid rational `{text}`")))
    }

    pub mod vec {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::de::Error as _;
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
            let mut seq = serializer.serialize_seq(Some(values.len()))?;
            for value in values {
                seq.serialize_element(&format_rational(value))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(deserializer)?;
            texts
                .iter()
                .map(|text| parse_rational(text).ok_or_else(|| D::Error::custom(format!("invalid rational `{text}`"))))
                .collect()
        }
    }

    pub mod vec_vec {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::de::Error as _;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(values: &[Vec<Rational>], serializer: S) -> Result<S::Ok, S::Error> {
            let texts: Vec<Vec<String>> = values.iter().map(|row| row.iter().map(format_rational).collect()).collect();
            texts.serialize(serializer)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Vec<Rational>>, D::Error> {
            let texts = Vec::<Vec<String>>::deserialize(deserializer)?;
            texts
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|text| parse_rational(text).ok_or_else(|| D::Error::custom(format!("invalid rational `{text}`"))))
                        .collect()
                })
                .collect()
        }
    }

    pub mod option_vec {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::de::Error as _;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(values: &Option<Vec<Rational>>, serializer: S) -> Result<S::Ok, S::Error> {
            values
                .as_ref()
                .map(|row| row.iter().map(format_rational).collect::<Vec<_>>())
                .serialize(serializer)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<Vec<Rational>>, D::Error> {
            let texts = Option::<Vec<String>>::deserialize(deserializer)?;
            texts
                .map(|row| {
                    row.iter()
                        .map(|text| parse_rational(text).ok_or_else(|| D::Error::custom(format!("invalid rational `{text}`"))))
                        .collect()
                })
                .transpose()
        }
    }
}
