use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Degree of a polynomial; the zero polynomial has degree `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with big-integer coefficients, low degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `T^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * t + Rational::from_integer(c.clone())
        })
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact quotient `self / divisor` over `Z`, or `None` if the division
    /// leaves a remainder or needs non-integral coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dlead = divisor.coeffs.last()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            let (qk, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * c;
            }
            quot[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Coefficient list in the opposite order, padded to `len`.
    pub fn reversed(&self, len: usize) -> Vec<BigInt> {
        (0..len).rev().map(|k| self.coeff(k)).collect()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_poly(f, &self.coeffs, "T")
    }
}

/// Writes `c0 + c1*x + ...` skipping zero terms, e.g. `x + x^2`.
pub(crate) fn format_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let show_mag = k == 0 || !mag.is_one();
        match (k, show_mag) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{mag}*{var}")?,
            (1, false) => write!(f, "{var}")?,
            (_, true) => write!(f, "{mag}*{var}^{k}")?,
            (_, false) => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_has_neg_infinite_degree() {
        assert_eq!(
            IntPolynomial::from_i64s(&[0, 0]).degree(),
            Degree::NegInfinity
        );
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(
            IntPolynomial::from_i64s(&[3, 0, 1, 0]).degree(),
            Degree::Finite(2)
        );
    }

    #[test]
    fn exact_division() {
        let a = IntPolynomial::from_i64s(&[1, 2, 2]);
        let b = IntPolynomial::from_i64s(&[1, -2, 2]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(prod.add(&IntPolynomial::one()).div_exact(&b), None);
        // 2T / 4T does not have integral quotient
        assert_eq!(
            IntPolynomial::from_i64s(&[0, 2]).div_exact(&IntPolynomial::from_i64s(&[0, 4])),
            None
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::from_i64s(&[1, -2, 2]).to_string(),
            "1 - 2*T + 2*T^2"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64s(&[0, -1]).to_string(), "-T");
    }
}
