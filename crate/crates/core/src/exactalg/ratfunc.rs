use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, Rational};
use crate::error::{Error, Result};

/// Quotient of two integer polynomials in `T`, kept in a canonical form:
/// numerator and denominator share no common factor over `Q`, their joint
/// integer content is 1, and the lowest nonzero denominator coefficient is
/// positive. Structural equality is therefore equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

type RatPoly = Vec<Rational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let b = trim(b.clone());
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut rem = trim(a.clone());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let f = rem.last().unwrap() / &lead;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &f * c;
        }
        quot[shift] = f;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    match x.last().cloned() {
        Some(lead) => x.into_iter().map(|c| c / &lead).collect(),
        None => x,
    }
}

fn mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        Self::from_rational_polys(&num.to_rationals(), &den.to_rationals())
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("unit denominator")
    }

    /// Builds the canonical form of `num / den` from rational coefficient
    /// lists (low degree first).
    pub fn from_rational_polys(num: &[Rational], den: &[Rational]) -> Result<Self> {
        let den = trim(den.to_vec());
        if den.is_empty() {
            return Err(Error::InvalidInput(
                "rational function with zero denominator".into(),
            ));
        }
        let num = trim(num.to_vec());
        if num.is_empty() {
            return Ok(RationalFunction {
                num: IntPolynomial::zero(),
                den: IntPolynomial::one(),
            });
        }
        let g = gcd(&num, &den);
        let (n, _) = divrem(&num, &g);
        let (d, _) = divrem(&den, &g);

        // clear denominators jointly, then strip the joint content
        let lcm = n
            .iter()
            .chain(&d)
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let to_int = |p: &RatPoly| -> Vec<BigInt> {
            p.iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        };
        let (mut ni, mut di) = (to_int(&n), to_int(&d));
        let content = ni.iter().chain(&di).fold(BigInt::zero(), |g, c| g.gcd(c));
        let low = di
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator");
        let sign = if low.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let unit = content * sign;
        for c in ni.iter_mut().chain(di.iter_mut()) {
            *c = &*c / &unit;
        }
        Ok(RationalFunction {
            num: IntPolynomial::new(ni),
            den: IntPolynomial::new(di),
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_rational_polys(
            &mul(&self.num.to_rationals(), &other.num.to_rationals()),
            &mul(&self.den.to_rationals(), &other.den.to_rationals()),
        )
        .expect("product of nonzero denominators")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "reciprocal of the zero rational function".into(),
            ));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at a rational `T`, `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn cancels_common_factors() {
        // (1 - T^2) / (2 - 2T) = (1 + T)/2
        let f = RationalFunction::new(
            IntPolynomial::from_i64s(&[1, 0, -1]),
            IntPolynomial::from_i64s(&[2, -2]),
        )
        .unwrap();
        assert_eq!(f.numerator(), &IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(f.denominator(), &IntPolynomial::from_i64s(&[2]));
        assert_eq!(f.eval(&int(3)), Some(int(2)));
    }

    #[test]
    fn canonical_sign_and_content() {
        let f =
            RationalFunction::from_rational_polys(&[rat(-1, 2)], &[rat(-3, 4), rat(1, 4)]).unwrap();
        assert_eq!(f.numerator(), &IntPolynomial::from_i64s(&[2]));
        assert_eq!(f.denominator(), &IntPolynomial::from_i64s(&[3, -1]));
    }

    #[test]
    fn product_with_inverse_is_one() {
        let f = RationalFunction::new(
            IntPolynomial::from_i64s(&[4, -3, 1]),
            IntPolynomial::from_i64s(&[3, 0, -4, 1]),
        )
        .unwrap();
        assert!(f.mul(&f.recip().unwrap()).is_one());
        assert!(RationalFunction::new(IntPolynomial::one(), IntPolynomial::zero()).is_err());
    }
}
