//! Degrees of special cycles from normalized derivatives, computed along
//! independent routes so each can check the other.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclestats::PermSumContext;
use crate::eisenstein::{
    constant_term, density_profile, fourier_higher_derivative, nonsingular_term, parity_permits,
    ConstantTermProfile, DensityPolynomial,
};
use crate::error::{Error, Result};
use crate::exactalg::{factorial, LaurentProfile, QSqrtScalar, Rational};
use crate::lfunctions::{FrobeniusModule, LEtaFunction};

/// `2 sum_j c_j (d - 2j)^r`.
pub fn degree_constant_analytic(l: &LEtaFunction, d: i64, r: u32) -> Rational {
    let sum = l
        .coeffs()
        .coeffs()
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (j, c)| {
            acc + c * BigInt::from(d - 2 * j as i64).pow(r)
        });
    Rational::from_integer(sum * 2)
}

/// `(-2)^r * 2 L(1) * sum_{g in S_r} A_g`.
pub fn degree_constant_combinatorial(
    l: &LEtaFunction,
    d: i64,
    r: u32,
    bound: u32,
) -> Result<Rational> {
    let ctx = PermSumContext::new(FrobeniusModule::new(l)?, d);
    combinatorial_with(&ctx, r, bound)
}

fn combinatorial_with(ctx: &PermSumContext, r: u32, bound: u32) -> Result<Rational> {
    let prym = Rational::from_integer(ctx.module().l_function().value_at_one() * 2);
    let sign = Rational::from_integer(BigInt::from(-2).pow(r));
    Ok(sign * prym * ctx.perm_sum(r, bound)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub r: u32,
    pub analytic: Rational,
    pub combinatorial: Option<Rational>,
    pub agree: bool,
}

/// Both routes for `r = 0 ..= r_max`. Rows are computed unconditionally,
/// including off parity.
pub fn cross_check_degrees(
    l: &LEtaFunction,
    d: i64,
    r_max: u32,
    bound: u32,
) -> Result<Vec<DegreeReport>> {
    let ctx = PermSumContext::new(FrobeniusModule::new(l)?, d);
    (0..=r_max)
        .map(|r| {
            let analytic = degree_constant_analytic(l, d, r);
            let combinatorial = combinatorial_with(&ctx, r, bound)?;
            Ok(DegreeReport {
                r,
                agree: analytic == combinatorial,
                analytic,
                combinatorial: Some(combinatorial),
            })
        })
        .collect()
}

/// `sum_k m_k (d - 2k)^r`.
pub fn degree_nonsingular(den: &DensityPolynomial, d: i64, r: u32) -> Result<Rational> {
    let m = den.padded(d)?;
    Ok(m.iter().enumerate().fold(Rational::zero(), |acc, (k, c)| {
        acc + c * Rational::from_integer(BigInt::from(d - 2 * k as i64).pow(r))
    }))
}

/// Degree on a single component, half the total. Only for even `r > 0`.
pub fn epsilon_component_degree(den: &DensityPolynomial, d: i64, r: u32) -> Result<Rational> {
    if r == 0 {
        return Err(Error::HalvingHypothesisViolation(
            "halving fails in general at r = 0".into(),
        ));
    }
    if r % 2 == 1 {
        return Err(Error::HalvingHypothesisViolation(format!(
            "r = {r} must be even"
        )));
    }
    Ok(degree_nonsingular(den, d, r)? / Rational::from_integer(2.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermComparison {
    pub label: String,
    pub lhs: QSqrtScalar,
    pub rhs: QSqrtScalar,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermwiseReport {
    pub r: u32,
    pub parity_permits: bool,
    pub terms: Vec<TermComparison>,
}

impl TermwiseReport {
    pub fn all_equal(&self) -> bool {
        self.terms.iter().all(|t| t.equal)
    }
}

fn comparison(label: &str, lhs: QSqrtScalar, rhs: QSqrtScalar) -> TermComparison {
    TermComparison {
        label: label.to_string(),
        equal: lhs == rhs,
        lhs,
        rhs,
    }
}

/// Compares the `r`-th normalized derivative of each Fourier term against
/// `q^{-d/2}` times the matching degree. For the constant term the target is
/// `eta(L)` times that on parity and `0` off parity.
pub fn termwise_comparison(
    profile: &ConstantTermProfile,
    fourier_terms: &[(String, DensityPolynomial)],
    r: u32,
) -> Result<TermwiseReport> {
    let ctx = profile.context();
    let q = ctx.q();
    let d = ctx.d();
    let pref = QSqrtScalar::q_half_power(q, -d);
    let permits = parity_permits(ctx, r);

    let lhs = fourier_higher_derivative(&constant_term(profile), r);
    let rhs = if permits {
        let deg = degree_constant_analytic(profile.l_function(), d, r)
            * Rational::from_integer(ctx.eta_l().into());
        pref.scale(&deg)
    } else {
        QSqrtScalar::zero(q)
    };
    let mut terms = vec![comparison("constant", lhs, rhs)];
    for (label, den) in fourier_terms {
        let lhs = fourier_higher_derivative(&nonsingular_term(ctx, den)?, r);
        let rhs = pref.scale(&degree_nonsingular(den, d, r)?);
        terms.push(comparison(label, lhs, rhs));
    }
    Ok(TermwiseReport {
        r,
        parity_permits: permits,
        terms,
    })
}

/// Symmetric density terms have vanishing `r`-th derivative whenever
/// `(-1)^r` disagrees with the declared sign. Returns the offending `r`.
pub fn density_vanishing_failures(
    q: u64,
    den: &DensityPolynomial,
    d: i64,
    r_max: u32,
) -> Result<Vec<u32>> {
    let Some(eps) = den.epsilon() else {
        return Err(Error::InvalidInput(
            "vanishing check needs a declared epsilon".into(),
        ));
    };
    let profile = density_profile(q, den, d)?;
    Ok((0..=r_max)
        .filter(|&r| crate::exactalg::sign_pow(r) != eps)
        .filter(|&r| !fourier_higher_derivative(&profile, r).is_zero())
        .collect())
}

/// Connected components `Y_alpha` of a CM cycle, each with its own
/// constant-term profile.
#[derive(Clone, Debug)]
pub struct CoverFamily {
    components: Vec<ConstantTermProfile>,
}

impl CoverFamily {
    pub fn new(components: Vec<ConstantTermProfile>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::FamilyInconsistency(
                "family has no components".into(),
            ));
        };
        let q = first.context().q();
        if let Some(bad) = components.iter().find(|c| c.context().q() != q) {
            return Err(Error::FamilyInconsistency(format!(
                "components over q = {q} and q = {}",
                bad.context().q()
            )));
        }
        Ok(CoverFamily { components })
    }

    pub fn components(&self) -> &[ConstantTermProfile] {
        &self.components
    }

    pub fn q(&self) -> u64 {
        self.components[0].context().q()
    }

    fn product(&self) -> LaurentProfile {
        self.components.iter().fold(
            LaurentProfile::monomial(self.q(), 0, QSqrtScalar::one(self.q())),
            |acc, c| acc.mul(&constant_term(c)),
        )
    }
}

/// `r`-th normalized derivative of the product of component profiles.
pub fn cm_intersection(family: &CoverFamily, r: u32) -> QSqrtScalar {
    fourier_higher_derivative(&family.product(), r)
}

/// Product over components of the `r_alpha`-th normalized derivatives.
pub fn cm_refined(family: &CoverFamily, multi_index: &[u32]) -> Result<QSqrtScalar> {
    if multi_index.len() != family.components.len() {
        return Err(Error::FamilyInconsistency(format!(
            "multi-index has {} entries for {} components",
            multi_index.len(),
            family.components.len()
        )));
    }
    let q = family.q();
    Ok(family
        .components
        .iter()
        .zip(multi_index)
        .fold(QSqrtScalar::one(q), |acc, (c, &ri)| {
            acc * fourier_higher_derivative(&constant_term(c), ri)
        }))
}

/// All multi-indices of the given length summing to `r`.
pub fn compositions(r: u32, parts: usize) -> Vec<Vec<u32>> {
    (0..parts)
        .map(|_| 0..=r)
        .multi_cartesian_product()
        .filter(|v| v.iter().sum::<u32>() == r)
        .collect()
}

fn multinomial(r: u32, parts: &[u32]) -> Rational {
    let den = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p));
    Rational::new(factorial(r), den)
}

/// Multinomial sum of refined values; equals `cm_intersection` by Leibniz.
pub fn cm_leibniz_sum(family: &CoverFamily, r: u32) -> QSqrtScalar {
    compositions(r, family.components.len()).iter().fold(
        QSqrtScalar::zero(family.q()),
        |acc, idx| {
            let term = cm_refined(family, idx).expect("index length matches family");
            acc + term.scale(&multinomial(r, idx))
        },
    )
}

#[cfg(test)]
mod tests;
