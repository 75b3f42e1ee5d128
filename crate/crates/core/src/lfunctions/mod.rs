//! The L-function `L(s, eta)` of a double cover, its Frobenius module, and
//! the two expansions of `log L` at `s = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclestats::f_poly_recursive;
use crate::error::{Error, Result};
use crate::exactalg::{
    factorial, poly_eval_exponential, rat_pow, sign_pow, IntPolynomial, Rational, RationalMatrix,
    TruncatedSeries,
};

/// `L(s, eta) = sum_k c_k T^k` with `T = q^{-s}`, of even degree
/// `w = deg omega_X`, normalized by `c_0 = 1` and satisfying
/// `c_{w-j} = q^{w/2 - j} c_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LEtaFunction {
    q: u64,
    w: usize,
    coeffs: IntPolynomial,
}

/// True iff `p` has even degree `w` and `c_{w-j} = q^{w/2-j} c_j` for all `j`.
pub fn check_functional_equation(q: u64, p: &IntPolynomial) -> bool {
    let Some(w) = p.degree().finite() else {
        return false;
    };
    if w % 2 == 1 {
        return false;
    }
    let qr = Rational::from_integer(q.into());
    let half = (w / 2) as i64;
    (0..=w).all(|j| {
        Rational::from_integer(p.coeff(w - j))
            == rat_pow(&qr, half - j as i64) * Rational::from_integer(p.coeff(j))
    })
}

impl LEtaFunction {
    pub fn new(q: u64, coeffs: IntPolynomial) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidLFunction(format!(
                "q = {q} is not a prime power"
            )));
        }
        if coeffs.coeff(0) != BigInt::one() {
            return Err(Error::InvalidLFunction(format!(
                "constant coefficient must be 1, got {}",
                coeffs.coeff(0)
            )));
        }
        if !check_functional_equation(q, &coeffs) {
            return Err(Error::LFunctionFeViolation(format!(
                "L = {coeffs} fails c_(w-j) = q^(w/2-j) c_j with q = {q}"
            )));
        }
        let w = coeffs.degree().finite().expect("c_0 = 1");
        Ok(LEtaFunction { q, w, coeffs })
    }

    pub fn from_i64s(q: u64, coeffs: &[i64]) -> Result<Self> {
        Self::new(q, IntPolynomial::from_i64s(coeffs))
    }

    /// `L = 1`, the case `V = 0`.
    pub fn trivial(q: u64) -> Self {
        Self::new(q, IntPolynomial::one()).expect("L = 1 is valid")
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `deg omega_X`.
    pub fn w(&self) -> usize {
        self.w
    }

    pub fn coeffs(&self) -> &IntPolynomial {
        &self.coeffs
    }

    /// `L(0, eta)`, the value at `T = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.eval_int(&BigInt::one())
    }

    /// Geometric inputs have `L(0, eta) = |Prym(F_q)| / 2 > 0`; synthetic
    /// inputs may not. Callers surface a `false` here as a warning only.
    pub fn value_at_one_positive(&self) -> bool {
        self.value_at_one() > BigInt::zero()
    }
}

impl fmt::Display for LEtaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (q = {})", self.coeffs, self.q)
    }
}

/// Frobenius `phi` on `V`, realized as the companion matrix `M` of the
/// reversed L-polynomial so that `det(I - T M) = L(T)`.
#[derive(Clone, Debug)]
pub struct FrobeniusModule {
    l: LEtaFunction,
    matrix: RationalMatrix,
    resolvent: RationalMatrix,
}

impl FrobeniusModule {
    pub fn new(l: &LEtaFunction) -> Result<Self> {
        let w = l.w;
        let mut m = RationalMatrix::zero(w);
        for i in 1..w {
            m.set(i, i - 1, Rational::one());
        }
        // last column: -c_w, ..., -c_1 from the top
        for i in 0..w {
            m.set(i, w - 1, -Rational::from_integer(l.coeffs.coeff(w - i)));
        }
        // det(tI - M) = t^w + c_1 t^{w-1} + ... + c_w
        let charpoly = m.characteristic_polynomial();
        let matches = (0..=w).all(|k| charpoly[w - k] == Rational::from_integer(l.coeffs.coeff(k)));
        if !matches {
            return Err(Error::InvalidLFunction(
                "companion matrix does not realize L".into(),
            ));
        }
        let resolvent = RationalMatrix::identity(w)
            .sub(&m)
            .inverse()
            .ok_or(Error::SingularAtOne)?;
        Ok(FrobeniusModule {
            l: l.clone(),
            matrix: m,
            resolvent,
        })
    }

    pub fn l_function(&self) -> &LEtaFunction {
        &self.l
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// `(I - M)^{-1}`.
    pub fn resolvent(&self) -> &RationalMatrix {
        &self.resolvent
    }

    /// `det(I - M)`, computed from the matrix rather than from `L`.
    pub fn det_one_minus_phi(&self) -> Rational {
        RationalMatrix::identity(self.dim())
            .sub(&self.matrix)
            .determinant()
    }

    /// `Tr(phi^a (1 - phi)^{-b} | V)`.
    pub fn trace_functional(&self, a: u32, b: u32) -> Rational {
        self.matrix.pow(a).mul(&self.resolvent.pow(b)).trace()
    }

    /// All `Tr(phi^a (1-phi)^{-b})` for `a, b <= max`, indexed `[a][b]`.
    pub fn trace_table(&self, max: u32) -> Vec<Vec<Rational>> {
        let n = max as usize + 1;
        let mut m_pows = Vec::with_capacity(n);
        let mut r_pows = Vec::with_capacity(n);
        let mut m_acc = RationalMatrix::identity(self.dim());
        let mut r_acc = RationalMatrix::identity(self.dim());
        for _ in 0..n {
            m_pows.push(m_acc.clone());
            r_pows.push(r_acc.clone());
            m_acc = m_acc.mul(&self.matrix);
            r_acc = r_acc.mul(&self.resolvent);
        }
        m_pows
            .iter()
            .map(|ma| r_pows.iter().map(|rb| ma.mul(rb).trace()).collect())
            .collect()
    }
}

/// `log L(s, eta)` around `s = 0`, split as `log L(0, eta)` plus a series in
/// `u = s log q` with zero constant term. `l_at_zero` is kept as an exact
/// rational instead of taking its logarithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogExpansion {
    pub l_at_zero: Rational,
    pub series: TruncatedSeries,
}

/// Expands `log sum_k c_k e^{-k u}` directly.
pub fn log_taylor_direct(l: &LEtaFunction, order: usize) -> Result<LogExpansion> {
    let s = poly_eval_exponential(&l.coeffs, -1, &Rational::one(), order);
    let l0 = s.coeff(0).clone();
    if l0.is_zero() {
        return Err(Error::SingularAtOne);
    }
    let series = s.scale(&l0.recip()).log()?;
    Ok(LogExpansion {
        l_at_zero: l0,
        series,
    })
}

/// Expands `log L` through the cycle-statistic traces: the coefficient of
/// `u^l` is `-(-1)^l / l! * sum_{c in C_l} Tr(phi^{delta(c)} (1-phi)^{-l})`.
pub fn log_taylor_trace(module: &FrobeniusModule, order: usize) -> Result<LogExpansion> {
    let table = module.trace_table(order as u32);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (ell, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let f = f_poly_recursive(ell as u32)?;
        let cycle_sum = f
            .coeffs()
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, a)| {
                acc + Rational::from_integer(a.clone()) * &table[i + 1][ell]
            });
        let sign = -sign_pow(ell as u32);
        *slot = cycle_sum * Rational::new(BigInt::from(sign), factorial(ell as u32));
    }
    Ok(LogExpansion {
        l_at_zero: module.det_one_minus_phi(),
        series: TruncatedSeries::new(coeffs),
    })
}
