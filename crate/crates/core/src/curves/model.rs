use serde::{Deserialize, Serialize};

use super::field::{fp_poly, is_prime, FiniteFieldSpec, ZERO};
use super::zeta::PointCounts;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Which curve of the pair to count on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveSide {
    /// `X: y^2 = f1 f2`
    Base,
    /// `X': u^2 = f1, v^2 = f2`
    Cover,
}

/// Split hyperelliptic double cover over a prime field `F_p`.
///
/// `X'` maps to `X` by `(x, u, v) -> (x, u v)`; with both `f1` and `f2` of
/// even degree and coprime the map is unramified everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCoverModel {
    p: u64,
    f1: Vec<u64>,
    f2: Vec<u64>,
}

impl SplitCoverModel {
    pub fn new(p: u64, f1: &[i64], f2: &[i64]) -> Result<Self> {
        let bad = |msg: String| Err(Error::ModelInvariantViolation(msg));
        if !is_prime(p) || p == 2 {
            return bad(format!("q = {p} must be an odd prime"));
        }
        let reduce = |f: &[i64]| -> Vec<u64> {
            fp_poly::trim(f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
        };
        let (f1, f2) = (reduce(f1), reduce(f2));
        for (name, f) in [("f1", &f1), ("f2", &f2)] {
            match fp_poly::degree(f) {
                Some(d) if d > 0 && d % 2 == 0 => {}
                _ => return bad(format!("{name} must have even positive degree mod {p}")),
            }
        }
        if fp_poly::degree(&fp_poly::gcd(&f1, &f2, p)) != Some(0) {
            return bad("f1 and f2 must be coprime".into());
        }
        let prod = fp_poly::mul(&f1, &f2, p);
        let dprod = fp_poly::derivative(&prod, p);
        if fp_poly::degree(&fp_poly::gcd(&prod, &dprod, p)) != Some(0) {
            return bad("f1*f2 must be squarefree".into());
        }
        Ok(SplitCoverModel { p, f1, f2 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f1(&self) -> &[u64] {
        &self.f1
    }

    pub fn f2(&self) -> &[u64] {
        &self.f2
    }

    pub fn swapped(&self) -> Self {
        SplitCoverModel {
            p: self.p,
            f1: self.f2.clone(),
            f2: self.f1.clone(),
        }
    }

    /// Genus of `X`: `deg(f1 f2)/2 - 1`.
    pub fn base_genus(&self) -> usize {
        (self.f1.len() - 1 + self.f2.len() - 1) / 2 - 1
    }

    /// Genus of `X'`, which is `2 g_X - 1` for an unramified double cover.
    pub fn cover_genus(&self) -> usize {
        2 * self.base_genus() - 1
    }

    /// Number of `F_{p^i}`-points of both smooth projective models, base
    /// first. One pass over the field serves both curves.
    pub fn count_both(&self, i: u32, budget: u64) -> Result<(u64, u64)> {
        if i == 0 {
            return Err(Error::InvalidInput(
                "extension degree must be positive".into(),
            ));
        }
        let size = (self.p as u128).checked_pow(i).unwrap_or(u128::MAX);
        if size > budget as u128 {
            return Err(Error::EnumerationBudget {
                what: format!("F_{}^{} enumeration", self.p, i),
                needed: size,
                budget: budget as u128,
            });
        }
        let field = FiniteFieldSpec::first_irreducible(self.p, i)?;
        let t = field.tables();
        let lift = |f: &[u64]| -> Vec<u32> {
            f.iter()
                .map(|&c| if c == 0 { ZERO } else { t.lift(c) })
                .collect()
        };
        let (l1, l2) = (lift(&self.f1), lift(&self.f2));

        let mut base = 0i64;
        let mut cover = 0i64;
        let xs = std::iter::once(ZERO).chain(0..(t.order() as u32 - 1));
        for x in xs {
            let c1 = t.chi(t.eval(&l1, x));
            let c2 = t.chi(t.eval(&l2, x));
            base += 1 + c1 * c2;
            cover += (1 + c1) * (1 + c2);
        }
        let e1 = t.chi(*l1.last().unwrap());
        let e2 = t.chi(*l2.last().unwrap());
        base += 1 + e1 * e2;
        cover += (1 + e1) * (1 + e2);
        Ok((base as u64, cover as u64))
    }

    pub fn count_points(&self, which: CurveSide, i: u32, budget: u64) -> Result<u64> {
        let (b, c) = self.count_both(i, budget)?;
        Ok(match which {
            CurveSide::Base => b,
            CurveSide::Cover => c,
        })
    }

    /// Counts over `F_{p^1} .. F_{p^m}` for both curves.
    pub fn point_counts(&self, m: u32, budget: u64) -> Result<(PointCounts, PointCounts)> {
        let mut base = Vec::with_capacity(m as usize);
        let mut cover = Vec::with_capacity(m as usize);
        for i in 1..=m {
            let (b, c) = self.count_both(i, budget)?;
            base.push(b);
            cover.push(c);
        }
        Ok((
            PointCounts::new(self.p, base)?,
            PointCounts::new(self.p, cover)?,
        ))
    }
}
