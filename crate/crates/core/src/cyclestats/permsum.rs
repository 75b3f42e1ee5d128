use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{f_poly_recursive, CyclicPermutation};
use crate::error::{Error, Result};
use crate::exactalg::{factorial, poly_eval_exponential, Rational, TruncatedSeries};
use crate::lfunctions::FrobeniusModule;

/// Largest `r` for which `S_r` is enumerated.
pub const DEFAULT_PERM_BOUND: u32 = 8;

/// Frobenius data plus the integer `d` that enters the fixed-point weight.
#[derive(Clone, Debug)]
pub struct PermSumContext {
    module: FrobeniusModule,
    d: i64,
}

/// Cycle weights `A_c` keyed by `(length, delta)`.
struct CycleWeights {
    fixed_point: Rational,
    by_shape: HashMap<(usize, usize), Rational>,
}

impl PermSumContext {
    pub fn new(module: FrobeniusModule, d: i64) -> Self {
        PermSumContext { module, d }
    }

    pub fn module(&self) -> &FrobeniusModule {
        &self.module
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    fn half_d(&self) -> Rational {
        Rational::new(BigInt::from(self.d), BigInt::from(2))
    }

    #[allow(clippy::needless_range_loop)]
    fn weights(&self, max_len: usize) -> CycleWeights {
        let table = self.module.trace_table(max_len.max(1) as u32);
        let fixed_point = -table[1][1].clone() - self.half_d();
        let mut by_shape = HashMap::new();
        for len in 2..=max_len {
            for delta in 1..=len {
                by_shape.insert((len, delta), -table[delta][len].clone());
            }
        }
        CycleWeights {
            fixed_point,
            by_shape,
        }
    }

    /// `Gamma_l = sum_{c in C_l} A_c`.
    pub fn gamma_ell(&self, ell: u32) -> Result<Rational> {
        if ell == 0 {
            return Err(Error::InvalidInput("Gamma_l needs l >= 1".into()));
        }
        let table = self.module.trace_table(ell);
        if ell == 1 {
            return Ok(-table[1][1].clone() - self.half_d());
        }
        let f = f_poly_recursive(ell)?;
        let sum = f
            .coeffs()
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, a)| {
                acc + Rational::from_integer(a.clone()) * &table[i + 1][ell as usize]
            });
        Ok(-sum)
    }

    /// `A_g` for a permutation of `{1..r}` given by its images (1-based).
    pub fn a_g(&self, images: &[usize]) -> Result<Rational> {
        validate_permutation(images)?;
        let w = self.weights(images.len());
        Ok(a_g_with(&w, images))
    }

    /// `sum_{g in S_r} A_g`; the empty sum convention gives 1 at `r = 0`.
    pub fn perm_sum(&self, r: u32, bound: u32) -> Result<Rational> {
        check_bound(r, bound)?;
        let w = self.weights(r as usize);
        let r = r as usize;
        let total = (1..=r)
            .permutations(r)
            .fold(Rational::zero(), |acc, g| acc + a_g_with(&w, &g));
        Ok(total)
    }

    /// `sum_r (sum_{g in S_r} A_g) x^r / r!` through `x^order`, by brute force.
    pub fn perm_sum_egf(&self, order: u32, bound: u32) -> Result<TruncatedSeries> {
        check_bound(order, bound)?;
        let coeffs = (0..=order)
            .map(|r| {
                self.perm_sum(r, bound)
                    .map(|s| s / Rational::from_integer(factorial(r)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries::new(coeffs))
    }

    fn gamma_egf(&self, order: u32) -> Result<TruncatedSeries> {
        let mut coeffs = vec![Rational::zero(); order as usize + 1];
        for ell in 1..=order {
            coeffs[ell as usize] = self.gamma_ell(ell)? / Rational::from_integer(factorial(ell));
        }
        Ok(TruncatedSeries::new(coeffs))
    }

    /// `q^{ds/2} L(s) / L(0)` expanded in `u = s log q`, then rewritten in
    /// `x = -u`.
    fn closed_form_series(&self, order: u32) -> TruncatedSeries {
        let order = order as usize;
        let l = self.module.l_function();
        let l_series = poly_eval_exponential(l.coeffs(), -1, &Rational::one(), order);
        let l0 = l_series.coeff(0).clone();
        TruncatedSeries::exp_linear(&self.half_d(), order)
            .mul(&l_series)
            .scale(&l0.recip())
            .negate_variable()
    }

    /// Brute-force EGF of the permutation sums equals `exp(sum Gamma_l x^l / l!)`.
    pub fn check_exp_identity(&self, order: u32, bound: u32) -> Result<bool> {
        let lhs = self.perm_sum_egf(order, bound)?;
        let rhs = self.gamma_egf(order)?.exp()?;
        Ok(lhs == rhs)
    }

    /// Brute-force EGF of the permutation sums equals the series of
    /// `q^{ds/2} L(s,eta) / L(0,eta)` under `x = -(log q) s`.
    pub fn check_closed_form(&self, order: u32, bound: u32) -> Result<bool> {
        let lhs = self.perm_sum_egf(order, bound)?;
        Ok(lhs == self.closed_form_series(order))
    }
}

fn check_bound(r: u32, bound: u32) -> Result<()> {
    if r > bound {
        return Err(Error::EnumerationBudget {
            what: format!("S_{r} enumeration"),
            needed: factorial(r).try_into().unwrap_or(u128::MAX),
            budget: factorial(bound).try_into().unwrap_or(u128::MAX),
        });
    }
    Ok(())
}

fn validate_permutation(images: &[usize]) -> Result<()> {
    let n = images.len();
    let mut seen = vec![false; n];
    for &v in images {
        if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} is not a permutation of 1..={n}"
            )));
        }
    }
    Ok(())
}

/// Product of cycle weights. A cycle of length > 1 on an ordered subset is
/// first transported to `{1..l}` preserving order.
fn a_g_with(w: &CycleWeights, images: &[usize]) -> Rational {
    let n = images.len();
    let mut visited = vec![false; n];
    let mut acc = Rational::one();
    for start in 1..=n {
        if visited[start - 1] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start - 1] = true;
        let mut cur = images[start - 1];
        while cur != start {
            visited[cur - 1] = true;
            cycle.push(cur);
            cur = images[cur - 1];
        }
        if cycle.len() == 1 {
            acc *= &w.fixed_point;
            continue;
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        let rank = |v: usize| sorted.binary_search(&v).unwrap() + 1;
        let mut local = vec![0usize; cycle.len()];
        for &v in &cycle {
            local[rank(v) - 1] = rank(images[v - 1]);
        }
        let c = CyclicPermutation::new(local).expect("cycle of a permutation");
        acc *= &w.by_shape[&(c.len(), c.delta())];
        if acc.is_zero() {
            break;
        }
    }
    acc
}
