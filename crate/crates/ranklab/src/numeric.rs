//! Exact arbitrary-precision rational scalars.
//!
//! Every value flowing through this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in canonical form (positive denominator, gcd(|p|, q) = 1).
//! Equality tests on rank sums are exact, so decision procedures built on them
//! never misreport due to rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Error produced when a scalar token cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("scientific notation is not supported: `{0}`")]
    ScientificNotation(String),
}

/// An exact rational number.
///
/// Accepted textual forms are integers (`-17`), decimals (`3.25`, converted
/// exactly, never through binary floating point) and ratios (`-6/4`, reduced
/// to `-3/2`). Scientific notation is rejected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Builds `p/q` in canonical form. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "denominator must be non-zero");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Canonical form: denominator positive and coprime with the numerator.
    /// Holds for every scalar this crate constructs; exposed so tests can
    /// assert it as a field predicate.
    pub fn is_canonical(&self) -> bool {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.sign() != Sign::Plus {
            return false;
        }
        if numer.is_zero() {
            return denom.is_one();
        }
        num::Integer::gcd(numer, denom).is_one()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from(i64::from(n))
    }
}

impl From<u64> for Scalar {
    fn from(n: u64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }
}

fn parse_integer(token: &str, whole: &str) -> Result<BigInt, ParseScalarError> {
    let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError::Malformed(whole.to_string()));
    }
    // Validated above; num's parser accepts exactly this shape.
    Ok(BigInt::from_str(token).expect("validated integer token"))
}

fn parse_digits(token: &str, whole: &str) -> Result<BigInt, ParseScalarError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError::Malformed(whole.to_string()));
    }
    Ok(BigInt::from_str(token).expect("validated digit token"))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let token = s.trim();
        if token.is_empty() {
            return Err(ParseScalarError::Malformed(s.to_string()));
        }
        if token.contains(['e', 'E']) {
            return Err(ParseScalarError::ScientificNotation(token.to_string()));
        }
        if let Some((num_part, den_part)) = token.split_once('/') {
            let p = parse_integer(num_part, token)?;
            let q = parse_digits(den_part, token)?;
            if q.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(token.to_string()));
            }
            return Ok(Scalar(BigRational::new(p, q)));
        }
        if let Some((int_part, frac_part)) = token.split_once('.') {
            let (sign, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            let int = parse_digits(int_digits, token)?;
            let frac = parse_digits(frac_part, token)?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let numerator = (int * &scale + frac) * BigInt::from(sign);
            return Ok(Scalar(BigRational::new(numerator, scale)));
        }
        Ok(Scalar(BigRational::from_integer(parse_integer(token, token)?)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// A scalar extended with a positive-infinity sentinel.
///
/// The minimum gap of a sequence with fewer than two elements is empty-min,
/// reported as `Infinity`; it compares greater than every finite scalar.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extended {
    Finite(Scalar),
    Infinity,
}

impl Extended {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Scalar> {
        match self {
            Extended::Finite(value) => Some(value),
            Extended::Infinity => None,
        }
    }

    /// `self >= bound`, with infinity at least anything.
    pub fn is_at_least(&self, bound: &Scalar) -> bool {
        match self {
            Extended::Finite(value) => value >= bound,
            Extended::Infinity => true,
        }
    }
}

impl From<Scalar> for Extended {
    fn from(value: Scalar) -> Self {
        Extended::Finite(value)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(value) => value.fmt(f),
            Extended::Infinity => write!(f, "inf"),
        }
    }
}
