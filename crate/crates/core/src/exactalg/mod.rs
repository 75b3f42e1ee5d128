//! Exact scalar, polynomial and series arithmetic.
//!
//! Nothing in here touches floating point. The variable of every
//! [`TruncatedSeries`] is `u = s * log q`, so Taylor coefficients at `s = 0`
//! of expressions in `q^{-s}` are rational; `log q` itself never appears.

mod laurent;
mod matrix;
mod poly;
mod qsqrt;
mod ratfunc;
mod series;

pub use laurent::LaurentProfile;
pub use matrix::RationalMatrix;
pub(crate) use poly::format_poly;
pub use poly::{Degree, IntPolynomial};
pub use qsqrt::QSqrtScalar;
pub use ratfunc::RationalFunction;
pub use series::{poly_eval_exponential, TruncatedSeries, DEFAULT_SERIES_ORDER};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for a possibly negative exponent.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if exp < 0 {
        assert!(!base.is_zero(), "zero raised to a negative power");
        base.recip()
    } else {
        base.clone()
    };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^r`.
pub fn sign_pow(r: u32) -> i64 {
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_pow_negative_exponent() {
        assert_eq!(rat_pow(&int(2), -3), rat(1, 8));
        assert_eq!(rat_pow(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(rat_pow(&int(5), 0), int(1));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(9), BigInt::from(362_880));
    }
}
