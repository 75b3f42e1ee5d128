use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat_pow, QSqrtScalar, Rational};

/// Laurent polynomial `sum_k c_k Z^k` in `Z = q^{-s}` with coefficients in
/// `Q(sqrt q)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentProfile {
    q: u64,
    terms: BTreeMap<i64, QSqrtScalar>,
}

impl LaurentProfile {
    pub fn zero(q: u64) -> Self {
        LaurentProfile {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(q: u64, k: i64, c: QSqrtScalar) -> Self {
        let mut p = Self::zero(q);
        p.add_term(k, c);
        p
    }

    pub fn from_terms(q: u64, terms: impl IntoIterator<Item = (i64, QSqrtScalar)>) -> Self {
        let mut p = Self::zero(q);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn from_rational_terms(q: u64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        Self::from_terms(
            q,
            terms
                .into_iter()
                .map(|(k, c)| (k, QSqrtScalar::rational(c, q))),
        )
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn add_term(&mut self, k: i64, c: QSqrtScalar) {
        assert_eq!(c.q(), self.q, "coefficient over a different q");
        let sum = match self.terms.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    pub fn coeff(&self, k: i64) -> QSqrtScalar {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| QSqrtScalar::zero(self.q))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QSqrtScalar)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(min exponent, max exponent)`, `None` for the zero profile.
    pub fn exponent_span(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// The substitution `s -> -s`, i.e. `Z -> 1/Z`.
    pub fn involute(&self) -> Self {
        LaurentProfile {
            q: self.q,
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    /// `(log q)^{-r} (d/ds)^r` at `s = 0`, which is `sum_k c_k (-k)^r`.
    pub fn s_derivative_at_zero(&self, r: u32) -> QSqrtScalar {
        self.terms
            .iter()
            .fold(QSqrtScalar::zero(self.q), |acc, (&k, c)| {
                let w = Rational::from_integer(BigInt::from(-k).pow(r));
                &acc + &c.scale(&w)
            })
    }

    /// True when `involute(self) == sign * self`.
    pub fn is_symmetric(&self, sign: i64) -> bool {
        self.involute() == self.scale(&Rational::from_integer(sign.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.q, self.terms.iter().map(|(&k, v)| (k, v.scale(c))))
    }

    pub fn scale_by(&self, c: &QSqrtScalar) -> Self {
        Self::from_terms(self.q, self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    /// Multiply by `Z^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentProfile {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + shift, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q);
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q);
        let mut out = Self::zero(self.q);
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// Value at a nonzero rational `Z`.
    pub fn eval(&self, z: &Rational) -> QSqrtScalar {
        assert!(!z.is_zero() || self.terms.keys().all(|&k| k >= 0));
        self.terms
            .iter()
            .fold(QSqrtScalar::zero(self.q), |acc, (&k, c)| {
                &acc + &c.scale(&rat_pow(z, k))
            })
    }
}
