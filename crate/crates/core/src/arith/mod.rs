//! Exact scalars, Bernoulli numbers and truncated λ-series.

mod bernoulli;
mod series;

pub use bernoulli::{bernoulli, BernoulliTable, BERNOULLI_MAX};
pub use series::{
    series_add, series_exp, series_inverse, series_log, series_mul, series_neg, series_scale,
    series_mismatch, series_sub, LambdaSeries,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps the canonical form (positive denominator, reduced),
/// so structural equality is value equality.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Config(format!("invalid rational '{text}', expected p/q"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("2/3").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(*r.denom() > BigInt::zero());
    }

    proptest! {
        #[test]
        fn addition_is_exact(a in -1000i64..1000, b in 1i64..200, c in -1000i64..1000, d in 1i64..200) {
            let sum = rat(a, b) + rat(c, d);
            prop_assert_eq!(sum * int(b) * int(d), int(a * d + c * b));
        }
    }
}
