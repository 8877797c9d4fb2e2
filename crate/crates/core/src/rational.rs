//! Exact rational scalars and the small integer helpers used throughout.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, positive
//! denominator, arbitrary precision. The textual form is `"p/q"`, with the
//! denominator omitted when it is 1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Falling factorial `(x)_k = x(x-1)...(x-k+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

pub fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Small random rational with numerator in `-9..=9` and denominator in `1..=6`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

pub fn is_nonnegative_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Rational to `usize` when it is a nonnegative integer that fits.
pub fn to_usize(x: &Rational) -> Option<usize> {
    if !is_nonnegative_integer(x) {
        return None;
    }
    usize::try_from(x.to_integer()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_omits_unit_denominator() {
        assert_eq!(format_rational(&int(3)), "3");
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&ratio(0, 7)), "0");
    }

    #[test]
    fn parse_normalizes_and_rejects_garbage() {
        assert_eq!(parse_rational("6/-4").unwrap(), ratio(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&int(2), 3), int(0));
        assert_eq!(falling_factorial(&int(-1), 3), int(-6));
        assert_eq!(falling_factorial(&int(5), 0), int(1));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
