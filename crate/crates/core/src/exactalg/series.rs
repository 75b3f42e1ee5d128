use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, IntPolynomial, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_SERIES_ORDER: usize = 12;

/// Power series `sum_{j<=N} a_j u^j` truncated at order `N`.
///
/// Binary operations produce the smaller of the two orders; nothing is ever
/// extended past what the inputs determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Takes coefficients `a_0..=a_N`; an empty vector is treated as the
    /// order-0 zero series.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series of `u` itself.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `exp(rate * u)`.
    pub fn exp_linear(rate: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for j in 0..=order {
            if j > 0 {
                term = term * rate / Rational::from_integer(BigInt::from(j));
            }
            coeffs.push(term.clone());
        }
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    /// `j! * a_j`, the `j`-th derivative at `u = 0`.
    pub fn derivative_at_zero(&self, j: usize) -> Rational {
        &self.coeffs[j] * Rational::from_integer(factorial(j as u32))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|j| &self.coeffs[j] + &other.coeffs[j])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|j| &self.coeffs[j] - &other.coeffs[j])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|j| {
                (0..=j).fold(Rational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &other.coeffs[j - i]
                })
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `u -> -u`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, a)| if j % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// Logarithm of a series with constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm(self.coeffs[0].to_string()));
        }
        // f * g' = f'  =>  n g_n = n f_n - sum_{j=1}^{n-1} (n-j) f_j g_{n-j}
        let f = &self.coeffs;
        let mut g = vec![Rational::zero(); f.len()];
        for n in 1..f.len() {
            let mut acc = Rational::from_integer(BigInt::from(n)) * &f[n];
            for j in 1..n {
                acc -= Rational::from_integer(BigInt::from(n - j)) * &f[j] * &g[n - j];
            }
            g[n] = acc / Rational::from_integer(BigInt::from(n));
        }
        Ok(Self::new(g))
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm(self.coeffs[0].to_string()));
        }
        // h' = g' h  =>  n h_n = sum_{k=1}^n k g_k h_{n-k}
        let g = &self.coeffs;
        let mut h = vec![Rational::zero(); g.len()];
        h[0] = Rational::one();
        for n in 1..g.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += Rational::from_integer(BigInt::from(k)) * &g[k] * &h[n - k];
            }
            h[n] = acc / Rational::from_integer(BigInt::from(n));
        }
        Ok(Self::new(h))
    }
}

/// Series in `u` of `sum_j c_j (scale * e^{k u})^j` through order `order`.
///
/// With `k = -1` and `scale = 1` this is `P(q^{-s})` written in
/// `u = s log q`.
pub fn poly_eval_exponential(
    p: &IntPolynomial,
    k: i64,
    scale: &Rational,
    order: usize,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut scale_pow = Rational::one();
    for (j, c) in p.coeffs().iter().enumerate() {
        if j > 0 {
            scale_pow *= scale;
        }
        if c.is_zero() {
            continue;
        }
        let weight = Rational::from_integer(c.clone()) * &scale_pow;
        let rate = Rational::from_integer(BigInt::from(k) * BigInt::from(j));
        out = out.add(&TruncatedSeries::exp_linear(&rate, order).scale(&weight));
    }
    out
}
