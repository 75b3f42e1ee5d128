//! Constant terms and Fourier coefficients of the normalized Eisenstein
//! series, as Laurent polynomials in `Z = q^{-s}`.
//!
//! Unit-modulus character prefactors are dropped throughout; every identity
//! checked here is invariant under a common unit factor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curves::ZetaData;
use crate::error::{Error, Result};
use crate::exactalg::{rat_pow, sign_pow, LaurentProfile, QSqrtScalar, Rational, RationalFunction};
use crate::lfunctions::LEtaFunction;

/// Numerical data of a Fourier coefficient: rank `n`, field size `q`,
/// `w = deg omega_X`, the degrees of the two line bundles, and `eta(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierContext {
    n: u32,
    q: u64,
    w: i64,
    deg_l_frak: i64,
    deg_e: i64,
    eta_l: i64,
}

impl FourierContext {
    pub fn new(n: u32, q: u64, w: i64, deg_l_frak: i64, deg_e: i64, eta_l: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("rank n must be positive".into()));
        }
        if q < 2 {
            return Err(Error::InvalidContext(format!("q = {q} must be at least 2")));
        }
        if w < 0 || w % 2 != 0 {
            return Err(Error::InvalidContext(format!(
                "w = {w} must be even and non-negative"
            )));
        }
        if eta_l != 1 && eta_l != -1 {
            return Err(Error::InvalidContext(format!(
                "eta(L) = {eta_l} must be 1 or -1"
            )));
        }
        Ok(FourierContext {
            n,
            q,
            w,
            deg_l_frak,
            deg_e,
            eta_l,
        })
    }

    /// Rank-one context with prescribed `d`; the degrees are split as
    /// `deg L = d - w`, `deg E = 0`.
    pub fn rank_one(q: u64, w: i64, d: i64, eta_l: i64) -> Result<Self> {
        Self::new(1, q, w, d - w, 0, eta_l)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn deg_l_frak(&self) -> i64 {
        self.deg_l_frak
    }

    pub fn deg_e(&self) -> i64 {
        self.deg_e
    }

    pub fn eta_l(&self) -> i64 {
        self.eta_l
    }

    /// `d = n (deg L + w) - deg E`.
    pub fn d(&self) -> i64 {
        self.n as i64 * (self.deg_l_frak + self.w) - self.deg_e
    }
}

/// Coefficients `m_0 .. m_d'` of `Den(X) = sum m_k X^k`, `X = q^{-2s}`, with an
/// optional declared symmetry `m_{d-k} = epsilon * m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityPolynomial {
    m: Vec<Rational>,
    epsilon: Option<i64>,
}

impl DensityPolynomial {
    pub fn new(m: Vec<Rational>, epsilon: Option<i64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidInput(
                "density needs at least one coefficient".into(),
            ));
        }
        if let Some(e) = epsilon {
            if e != 1 && e != -1 {
                return Err(Error::DensitySymmetryViolation(format!(
                    "epsilon = {e} must be 1 or -1"
                )));
            }
        }
        Ok(DensityPolynomial { m, epsilon })
    }

    pub fn from_i64s(m: &[i64], epsilon: Option<i64>) -> Result<Self> {
        Self::new(
            m.iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            epsilon,
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.m
    }

    pub fn epsilon(&self) -> Option<i64> {
        self.epsilon
    }

    /// Coefficients padded to exactly `d + 1` entries. Trailing entries past
    /// `d` must vanish, and a declared symmetry is checked against `d`.
    pub fn padded(&self, d: i64) -> Result<Vec<Rational>> {
        let mismatch = || Error::DensityDegreeMismatch {
            expected: d + 1,
            found: self.m.len() as i64,
        };
        if d < 0 {
            return Err(mismatch());
        }
        let len = d as usize + 1;
        if self.m.iter().skip(len).any(|c| !c.is_zero()) {
            return Err(mismatch());
        }
        let mut out = self.m.clone();
        out.resize(len, Rational::zero());
        out.truncate(len);
        if let Some(e) = self.epsilon {
            let e = Rational::from_integer(e.into());
            if let Some(k) = (0..len).find(|&k| out[len - 1 - k] != &e * &out[k]) {
                return Err(Error::DensitySymmetryViolation(format!(
                    "m_{} = {} but epsilon * m_{} = {}",
                    len - 1 - k,
                    out[len - 1 - k],
                    k,
                    &e * &out[k]
                )));
            }
        }
        Ok(out)
    }
}

/// An `L(s, eta)` together with a rank-one context; the input of the
/// constant-term computation.
#[derive(Clone, Debug)]
pub struct ConstantTermProfile {
    l: LEtaFunction,
    ctx: FourierContext,
}

impl ConstantTermProfile {
    pub fn new(l: LEtaFunction, ctx: FourierContext) -> Result<Self> {
        if ctx.n != 1 {
            return Err(Error::InvalidContext(format!(
                "constant term needs n = 1, got n = {}",
                ctx.n
            )));
        }
        if ctx.q != l.q() {
            return Err(Error::QMismatch(ctx.q, l.q()));
        }
        if ctx.w != l.w() as i64 {
            return Err(Error::InvalidContext(format!(
                "w = {} but deg L = {}",
                ctx.w,
                l.w()
            )));
        }
        Ok(ConstantTermProfile { l, ctx })
    }

    /// Shorthand for a rank-one context read off from `L` itself.
    pub fn with_d(l: LEtaFunction, d: i64, eta_l: i64) -> Result<Self> {
        let ctx = FourierContext::rank_one(l.q(), l.w() as i64, d, eta_l)?;
        Self::new(l, ctx)
    }

    pub fn l_function(&self) -> &LEtaFunction {
        &self.l
    }

    pub fn context(&self) -> &FourierContext {
        &self.ctx
    }

    pub fn d(&self) -> i64 {
        self.ctx.d()
    }

    pub fn eta_l(&self) -> i64 {
        self.ctx.eta_l
    }

    /// Character prefactors are always dropped.
    pub fn reduced(&self) -> bool {
        true
    }
}

/// `W(s) = eta q^{d(s-1/2)} L(2s) + q^{-d(s+1/2)} q^{w(1/2+2s)} L(2s+1)` for
/// arbitrary coefficients, with no validation of `c`.
pub fn constant_term_raw(q: u64, c: &[BigInt], d: i64, w: i64, eta_l: i64) -> LaurentProfile {
    let qr = Rational::from_integer(q.into());
    let pref = QSqrtScalar::q_half_power(q, -d);
    let first = LaurentProfile::from_rational_terms(
        q,
        c.iter()
            .enumerate()
            .map(|(j, cj)| (2 * j as i64 - d, Rational::from_integer(cj * eta_l))),
    );
    let second = LaurentProfile::from_rational_terms(
        q,
        c.iter().enumerate().map(|(j, cj)| {
            (
                d - 2 * w + 2 * j as i64,
                Rational::from_integer(cj.clone()) * rat_pow(&qr, -(j as i64)),
            )
        }),
    )
    .scale_by(&QSqrtScalar::q_half_power(q, w));
    first.add(&second).scale_by(&pref)
}

pub fn constant_term(profile: &ConstantTermProfile) -> LaurentProfile {
    constant_term_raw(
        profile.ctx.q,
        profile.l.coeffs().coeffs(),
        profile.d(),
        profile.ctx.w,
        profile.ctx.eta_l,
    )
}

/// `W(-s) = eta W(s)`, exactly.
pub fn check_constant_term_symmetry(profile: &ConstantTermProfile) -> bool {
    constant_term(profile).is_symmetric(profile.ctx.eta_l)
}

/// `q^{ds} Den(q^{-2s})`, i.e. `sum_k m_k Z^{2k-d}`.
pub fn density_profile(q: u64, den: &DensityPolynomial, d: i64) -> Result<LaurentProfile> {
    let m = den.padded(d)?;
    Ok(LaurentProfile::from_rational_terms(
        q,
        m.into_iter()
            .enumerate()
            .map(|(k, c)| (2 * k as i64 - d, c)),
    ))
}

/// The normalized `a`-th Fourier coefficient `q^{-dn/2} sum_k m_k Z^{2k-d}`.
pub fn nonsingular_term(ctx: &FourierContext, den: &DensityPolynomial) -> Result<LaurentProfile> {
    let d = ctx.d();
    Ok(density_profile(ctx.q, den, d)?
        .scale_by(&QSqrtScalar::q_half_power(ctx.q, -d * ctx.n as i64)))
}

/// `(log q)^{-r} (d/ds)^r` at `s = 0`.
pub fn fourier_higher_derivative(term: &LaurentProfile, r: u32) -> QSqrtScalar {
    term.s_derivative_at_zero(r)
}

/// Rational coefficients of `p(q^{-i} T^2)` given those of `p(T)`.
fn substitute_scaled_square(q: u64, p: &[BigInt], i: u32) -> Vec<Rational> {
    let qr = Rational::from_integer(q.into());
    let mut out = vec![Rational::zero(); 2 * p.len().max(1) - 1];
    for (k, c) in p.iter().enumerate() {
        out[2 * k] = Rational::from_integer(c.clone()) * rat_pow(&qr, -(i as i64) * k as i64);
    }
    out
}

/// The factors `L(i + 2s, eta^i)`, `1 <= i <= n`, as rational functions of
/// `T = q^{-s}`. For even `i` the factor is the full zeta function of `X`.
pub fn script_l_factor(
    n: u32,
    l: &LEtaFunction,
    zeta_x: &ZetaData,
) -> Result<Vec<RationalFunction>> {
    if n == 0 {
        return Err(Error::InvalidContext("n must be positive".into()));
    }
    if l.q() != zeta_x.q() {
        return Err(Error::QMismatch(l.q(), zeta_x.q()));
    }
    let q = l.q();
    let qr = Rational::from_integer(q.into());
    (1..=n)
        .map(|i| {
            if i % 2 == 1 {
                let num = substitute_scaled_square(q, l.coeffs().coeffs(), i);
                RationalFunction::from_rational_polys(&num, &[Rational::one()])
            } else {
                let num = substitute_scaled_square(q, zeta_x.numerator().coeffs(), i);
                let a = rat_pow(&qr, -(i as i64));
                let b = rat_pow(&qr, 1 - i as i64);
                let den = [
                    Rational::one(),
                    Rational::zero(),
                    -(&a + &b),
                    Rational::zero(),
                    a * b,
                ];
                RationalFunction::from_rational_polys(&num, &den)
            }
        })
        .collect()
}

/// `E_a` split as a Laurent part times `L_n(s)^{-1}`.
#[derive(Clone, Debug)]
pub struct UnnormalizedFourier {
    pub profile: LaurentProfile,
    pub inverse_factor: RationalFunction,
    nw: i64,
    script_l: RationalFunction,
}

impl UnnormalizedFourier {
    /// `q^{nws} L_n(s)`, the normalizing factor that was divided out.
    pub fn normalizer(&self) -> &RationalFunction {
        &self.script_l
    }

    /// Evaluates `E_a` at a rational `T = q^{-s}`; `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<QSqrtScalar> {
        let inv = self.inverse_factor.eval(t)?;
        Some(self.profile.eval(t).scale(&inv))
    }

    /// Multiplying back by `q^{nws} L_n(s)` recovers `normalized`, checked
    /// symbolically and at `samples` rational points away from poles.
    pub fn check_round_trip(&self, normalized: &LaurentProfile, samples: usize) -> bool {
        if !self.inverse_factor.mul(&self.script_l).is_one() {
            return false;
        }
        if self.profile.shift(-self.nw) != *normalized {
            return false;
        }
        let mut checked = 0;
        for t in sample_points() {
            if checked == samples {
                break;
            }
            let (Some(e), Some(norm)) = (self.eval(&t), self.script_l.eval(&t)) else {
                continue;
            };
            let lhs = e.scale(&(norm * rat_pow(&t, -self.nw)));
            if lhs != normalized.eval(&t) {
                return false;
            }
            checked += 1;
        }
        checked == samples
    }
}

fn sample_points() -> impl Iterator<Item = Rational> {
    (2i64..).flat_map(|den| {
        (1..den)
            .filter(move |num| num_integer::Integer::gcd(num, &den) == 1)
            .flat_map(move |num| {
                let t = Rational::new(num.into(), den.into());
                [t.clone(), -t]
            })
    })
}

pub fn unnormalized_fourier(
    ctx: &FourierContext,
    den: &DensityPolynomial,
    l: &LEtaFunction,
    zeta_x: &ZetaData,
) -> Result<UnnormalizedFourier> {
    if ctx.q != l.q() {
        return Err(Error::QMismatch(ctx.q, l.q()));
    }
    let normalized = nonsingular_term(ctx, den)?;
    let nw = ctx.n as i64 * ctx.w;
    let script_l = script_l_factor(ctx.n, l, zeta_x)?.iter().fold(
        RationalFunction::polynomial(crate::exactalg::IntPolynomial::one()),
        |acc, f| acc.mul(f),
    );
    Ok(UnnormalizedFourier {
        profile: normalized.shift(nw),
        inverse_factor: script_l.recip()?,
        nw,
        script_l,
    })
}

/// `(-1)^r = eta(L)^n`, the parity under which the special cycle can be
/// non-empty. Off parity every symmetric term has vanishing `r`-th derivative.
pub fn parity_permits(ctx: &FourierContext, r: u32) -> bool {
    let eta_n = if ctx.n.is_multiple_of(2) {
        1
    } else {
        ctx.eta_l
    };
    sign_pow(r) == eta_n
}

#[cfg(test)]
mod tests;
