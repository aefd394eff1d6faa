use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// An exact rational value. Serialized as a string, `"16/3"` or `"16"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ExactValue(BigRational);

impl ExactValue {
    pub fn integer<T: Into<BigInt>>(v: T) -> Self {
        ExactValue(BigRational::from_integer(v.into()))
    }

    pub fn ratio<T: Into<BigInt>>(numer: T, denom: T) -> Self {
        ExactValue(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Self {
        ExactValue(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactValue(BigRational::one())
    }

    /// `coeff * base^exp`, with a negative exponent giving a fraction.
    pub fn scaled_power(coeff: i64, base: i64, exp: i64) -> Self {
        let b = BigRational::from_integer(BigInt::from(base));
        let p = if exp >= 0 {
            Pow::pow(&b, exp as u64)
        } else {
            Pow::pow(&b.recip(), exp.unsigned_abs())
        };
        ExactValue(p * BigRational::from_integer(BigInt::from(coeff)))
    }

    pub fn pow2(exp: u64) -> Self {
        ExactValue::integer(BigInt::one() << exp)
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The value as `u128` when it is a non-negative integer that fits.
    pub fn to_u128(&self) -> Option<u128> {
        if self.is_integer() {
            self.0.to_integer().to_u128()
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<u128> for ExactValue {
    fn from(v: u128) -> Self {
        ExactValue::integer(v)
    }
}

impl From<u64> for ExactValue {
    fn from(v: u64) -> Self {
        ExactValue::integer(v)
    }
}

impl Add for ExactValue {
    type Output = ExactValue;
    fn add(self, rhs: Self) -> Self {
        ExactValue(self.0 + rhs.0)
    }
}

impl Mul for ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: Self) -> Self {
        ExactValue(self.0 * rhs.0)
    }
}

impl Mul<&ExactValue> for u64 {
    type Output = ExactValue;
    fn mul(self, rhs: &ExactValue) -> ExactValue {
        ExactValue(BigRational::from_integer(BigInt::from(self)) * &rhs.0)
    }
}

impl PartialEq<u128> for ExactValue {
    fn eq(&self, other: &u128) -> bool {
        self.to_u128() == Some(*other)
    }
}

impl PartialOrd<u128> for ExactValue {
    fn partial_cmp(&self, other: &u128) -> Option<Ordering> {
        Some(self.cmp(&ExactValue::from(*other)))
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("not a rational: {s:?}");
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(ExactValue(BigRational::new(n, d)))
            }
            None => Ok(ExactValue::integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl From<ExactValue> for String {
    fn from(v: ExactValue) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for ExactValue {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}
