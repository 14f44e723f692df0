//! Exact arbitrary-precision rational scalars and square-root tests.
//!
//! Everything in this crate computes over [`Rational`]. The type is backed by
//! `num_rational::BigRational`, which keeps values in lowest terms with a
//! positive denominator, so equality is plain structural equality and no
//! floating point appears anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always reduced.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"` or `"p/q"` (optionally signed, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s)?)),
        Some((n, d)) => {
            let n = int(n)?;
            let d = int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Render as `"p"` when the value is an integer, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact integer square root: `Some(s)` with `s ≥ 0` and `s² = n`.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Exact nonnegative square root of a rational.
///
/// Present exactly when numerator and denominator (in lowest terms) are both
/// perfect integer squares.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(BigRational::new(n, d))
}
