//! Cycle statistics of permutations: the descent-like count `delta`, the
//! polynomials `f_n`, and the permutation sums `A_g` built from Frobenius
//! traces together with their exponential generating function.

mod permsum;

pub use permsum::{PermSumContext, DEFAULT_PERM_BOUND};

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, Rational};

pub const DEFAULT_FPOLY_BOUND: u32 = 10;

/// A permutation of `{1, ..., l}` consisting of a single `l`-cycle;
/// `images[i - 1] = c(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPermutation {
    images: Vec<usize>,
}

impl CyclicPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty cycle".into()));
        }
        let distinct: HashSet<_> = images.iter().collect();
        if distinct.len() != n || images.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} is not a permutation of 1..={n}"
            )));
        }
        let mut len = 1;
        let mut cur = images[0];
        while cur != 1 {
            cur = images[cur - 1];
            len += 1;
        }
        if len != n {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} is not a single cycle"
            )));
        }
        Ok(CyclicPermutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of `i` with `c(i) <= i`; 1 for the trivial cycle.
    pub fn delta(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c <= i + 1)
            .count()
    }
}

/// All `(n-1)!` cyclic permutations of `{1..n}`, written as the cycles
/// `(1, a_2, ..., a_n)`.
pub fn cyclic_permutations(n: usize) -> impl Iterator<Item = CyclicPermutation> {
    let rest: Vec<usize> = (2..=n).collect();
    rest.into_iter()
        .permutations(n.saturating_sub(1))
        .map(move |order| {
            let mut images = vec![0usize; n];
            let mut prev = 1usize;
            for &next in &order {
                images[prev - 1] = next;
                prev = next;
            }
            images[prev - 1] = 1;
            CyclicPermutation { images }
        })
}

/// `f_n(x) = sum_i a_i x^i`, stored as `a_1, ..., a_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPolynomial {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl FPolynomial {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `a_1, ..., a_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_i`, zero outside `1..=n`.
    pub fn coeff(&self, i: usize) -> BigInt {
        if i == 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i - 1).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut pow = x.clone();
        for a in &self.coeffs {
            acc += Rational::from_integer(a.clone()) * &pow;
            pow *= x;
        }
        acc
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut padded = vec![BigInt::zero()];
        padded.extend(self.coeffs.iter().cloned());
        crate::exactalg::format_poly(f, &padded, "x")
    }
}

/// `f_1 = x`, `f_{n+1} = n x f_n + x (1 - x) f_n'`.
pub fn f_poly_recursive(n: u32) -> Result<FPolynomial> {
    if n == 0 {
        return Err(Error::InvalidInput("f_n is defined for n >= 1".into()));
    }
    // dense coefficients of x^0..=x^n
    let mut f = vec![BigInt::zero(), BigInt::one()];
    for m in 1..n {
        let mut next = vec![BigInt::zero(); m as usize + 2];
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // m x a x^i
            next[i + 1] += a * BigInt::from(m);
            // x (1 - x) i a x^{i-1} = i a x^i - i a x^{i+1}
            let ia = a * BigInt::from(i);
            next[i] += &ia;
            next[i + 1] -= ia;
        }
        f = next;
    }
    Ok(FPolynomial {
        n,
        coeffs: f[1..=n as usize].to_vec(),
    })
}

/// Histogram of `delta` over all cyclic permutations of `{1..n}`.
pub fn f_poly_enumerated(n: u32, bound: u32) -> Result<FPolynomial> {
    if n == 0 {
        return Err(Error::InvalidInput("f_n is defined for n >= 1".into()));
    }
    if n > bound {
        return Err(Error::EnumerationBudget {
            what: format!("cyclic permutations of {n} letters"),
            needed: factorial(n - 1).try_into().unwrap_or(u128::MAX),
            budget: factorial(bound - 1).try_into().unwrap_or(u128::MAX),
        });
    }
    let mut coeffs = vec![BigInt::zero(); n as usize];
    for c in cyclic_permutations(n as usize) {
        coeffs[c.delta() - 1] += 1;
    }
    Ok(FPolynomial { n, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, TruncatedSeries};

    #[test]
    fn delta_examples() {
        assert_eq!(CyclicPermutation::new(vec![1]).unwrap().delta(), 1);
        assert_eq!(CyclicPermutation::new(vec![2, 3, 1]).unwrap().delta(), 1);
        assert_eq!(CyclicPermutation::new(vec![3, 1, 2]).unwrap().delta(), 2);
        assert!(CyclicPermutation::new(vec![1, 2]).is_err());
        assert!(CyclicPermutation::new(vec![2, 2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for n in 1..=7 {
            let all: Vec<_> = cyclic_permutations(n).collect();
            assert_eq!(all.len() as u64, (1..n as u64).product::<u64>().max(1));
            for c in &all {
                assert!(CyclicPermutation::new(c.images().to_vec()).is_ok());
                assert!((1..=n).contains(&c.delta()));
            }
        }
    }

    #[test]
    fn small_f_polys() {
        assert_eq!(f_poly_recursive(1).unwrap().to_string(), "x");
        assert_eq!(f_poly_recursive(2).unwrap().to_string(), "x");
        assert_eq!(f_poly_recursive(3).unwrap().to_string(), "x + x^2");
        assert_eq!(f_poly_recursive(4).unwrap().to_string(), "x + 4*x^2 + x^3");
        assert_eq!(f_poly_enumerated(1, 10).unwrap().to_string(), "x");
        assert_eq!(f_poly_enumerated(3, 10).unwrap().to_string(), "x + x^2");
    }

    #[test]
    fn recursion_matches_enumeration() {
        for n in 1..=8 {
            let r = f_poly_recursive(n).unwrap();
            assert_eq!(r, f_poly_enumerated(n, DEFAULT_FPOLY_BOUND).unwrap());
            assert_eq!(r.total(), factorial(n - 1));
        }
    }

    #[test]
    fn enumeration_bound() {
        assert!(matches!(
            f_poly_enumerated(11, DEFAULT_FPOLY_BOUND),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn derivative_identity_small() {
        // n! [u^n] log(1 - a e^{-u}) = (-1)^{n-1} f_n(a) / (1-a)^n
        let a = int(3);
        let order = 6;
        let e = TruncatedSeries::exp_linear(&int(-1), order).scale(&-a.clone());
        let f = TruncatedSeries::one(order).add(&e);
        let g = f.scale(&(int(1) - &a).recip()).log().unwrap();
        for n in 1..=order {
            let lhs = g.derivative_at_zero(n);
            let sign = if n % 2 == 1 { int(1) } else { int(-1) };
            let fp = f_poly_recursive(n as u32).unwrap();
            let rhs = sign * fp.eval(&a) / crate::exactalg::rat_pow(&(int(1) - &a), n as i64);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
