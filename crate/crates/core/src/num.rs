//! Scalar abstractions: the ring/field traits the generic containers are
//! built over, plus helpers for the exact rational scalar type.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

pub type BigInt = num_bigint::BigInt;

/// Arbitrary-precision rational scalar, always in canonical form
/// (positive denominator, reduced). Serializes as `"p/q"` or `"p"`.
pub type Rational = num_rational::BigRational;

/// Commutative ring with identity. Implemented by [`Rational`], `f64`,
/// algebraic numbers and polynomials, so matrix and polynomial code is
/// written once.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

/// Ring with exact division by known divisors, as required by fraction-free
/// (Bareiss) elimination.
pub trait ExactDivRing: Ring {
    /// Divide `self` by `d`, which must divide exactly.
    fn exact_div(&self, d: &Self) -> Self;
}

pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Sign trichotomy of a real quantity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn of_i64(n: i64) -> Sign {
        match n.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Field with an exact, decidable ordering; the scalar contract of the
/// exact-feasibility kernel.
pub trait OrderedField: Field {
    fn sign(&self) -> Sign;

    fn compare(&self, rhs: &Self) -> Ordering {
        match (self.clone() - rhs.clone()).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    fn is_positive_s(&self) -> bool {
        self.sign() == Sign::Positive
    }

    fn is_negative_s(&self) -> bool {
        self.sign() == Sign::Negative
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl ExactDivRing for Rational {
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        Self::one() / self
    }
}

impl OrderedField for Rational {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.numer().is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        self.cmp(rhs)
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Field for f64 {}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

/// Parse a rational from the `"p/q"` / `"p"` wire format.
/// Rejects zero denominators and malformed input.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| format!("invalid integer `{numer_str}` in rational `{s}`"))?;
    let denom: BigInt = match denom_str {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid integer `{d}` in rational `{s}`"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in rational `{s}`"));
    }
    Ok(Rational::new(numer, denom))
}

/// `"p/q"` when the denominator is not 1, plain `"p"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits for out-of-range values
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

pub fn rat_i64(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), rat_i64(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat_i64(-1, 2));
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn rational_sign() {
        assert_eq!(rat_i64(-3, 7).sign(), Sign::Negative);
        assert_eq!(rat_int(0).sign(), Sign::Zero);
        assert_eq!(rat_i64(5, 2).sign(), Sign::Positive);
    }
}
