use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_traits::{One, Zero};

use super::{rat_pow, Rational};

/// An element `a + b*sqrt(q)` of `Q(sqrt q)` for a fixed positive integer `q`.
///
/// When `q` is a perfect square the `b` part is folded into `a` at
/// construction, so equality is always component-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrtScalar {
    a: Rational,
    b: Rational,
    q: u64,
}

fn exact_sqrt(q: u64) -> Option<u64> {
    let m = q.sqrt();
    (m * m == q).then_some(m)
}

impl QSqrtScalar {
    pub fn new(a: Rational, b: Rational, q: u64) -> Self {
        assert!(q > 0, "q must be positive");
        match exact_sqrt(q) {
            Some(m) if !b.is_zero() => QSqrtScalar {
                a: a + b * Rational::from_integer(m.into()),
                b: Rational::zero(),
                q,
            },
            _ => QSqrtScalar { a, b, q },
        }
    }

    pub fn rational(a: Rational, q: u64) -> Self {
        Self::new(a, Rational::zero(), q)
    }

    pub fn zero(q: u64) -> Self {
        Self::rational(Rational::zero(), q)
    }

    pub fn one(q: u64) -> Self {
        Self::rational(Rational::one(), q)
    }

    pub fn sqrt_q(q: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), q)
    }

    /// `q^(e/2)` for any integer `e`.
    pub fn q_half_power(q: u64, e: i64) -> Self {
        let qr = Rational::from_integer(q.into());
        let whole = rat_pow(&qr, e.div_euclid(2));
        if e.rem_euclid(2) == 0 {
            Self::rational(whole, q)
        } else {
            Self::new(Rational::zero(), whole, q)
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSqrtScalar {
            a: &self.a * c,
            b: &self.b * c,
            q: self.q,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.q), |acc, _| &acc * self)
    }

    fn check_q(&self, other: &Self) {
        assert_eq!(self.q, other.q, "mixing Q(sqrt q) scalars with different q");
    }
}

impl fmt::Display for QSqrtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*sqrt({})", self.b, self.q),
            (false, false) => write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.q),
        }
    }
}

impl<'a> Add<&'a QSqrtScalar> for &'a QSqrtScalar {
    type Output = QSqrtScalar;
    fn add(self, rhs: &QSqrtScalar) -> QSqrtScalar {
        self.check_q(rhs);
        QSqrtScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            q: self.q,
        }
    }
}

impl<'a> Sub<&'a QSqrtScalar> for &'a QSqrtScalar {
    type Output = QSqrtScalar;
    fn sub(self, rhs: &QSqrtScalar) -> QSqrtScalar {
        self.check_q(rhs);
        QSqrtScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            q: self.q,
        }
    }
}

impl<'a> Mul<&'a QSqrtScalar> for &'a QSqrtScalar {
    type Output = QSqrtScalar;
    fn mul(self, rhs: &QSqrtScalar) -> QSqrtScalar {
        self.check_q(rhs);
        let q = Rational::from_integer(self.q.into());
        QSqrtScalar {
            a: &self.a * &rhs.a + &self.b * &rhs.b * q,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            q: self.q,
        }
    }
}

impl Neg for &QSqrtScalar {
    type Output = QSqrtScalar;
    fn neg(self) -> QSqrtScalar {
        QSqrtScalar {
            a: -&self.a,
            b: -&self.b,
            q: self.q,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSqrtScalar> for QSqrtScalar {
            type Output = QSqrtScalar;
            fn $m(self, rhs: QSqrtScalar) -> QSqrtScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSqrtScalar {
    type Output = QSqrtScalar;
    fn neg(self) -> QSqrtScalar {
        -&self
    }
}
