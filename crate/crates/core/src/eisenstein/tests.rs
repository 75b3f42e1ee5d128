use super::*;
use crate::exactalg::{int, rat, IntPolynomial};

fn fix_l2() -> LEtaFunction {
    LEtaFunction::from_i64s(2, &[1, -2, 2]).unwrap()
}

fn fix_w6(eta: i64) -> ConstantTermProfile {
    ConstantTermProfile::with_d(fix_l2(), 6, eta).unwrap()
}

fn rat_profile(q: u64, terms: &[(i64, Rational)]) -> LaurentProfile {
    LaurentProfile::from_rational_terms(q, terms.iter().cloned())
}

// W(Z) / q^{-d/2}, straight from the two summands with Z = q^{-s}
fn constant_term_oracle(q: u64, c: &[i64], d: i64, w: i64, eta: i64, z: &Rational) -> Rational {
    let qr = int(q as i64);
    let l_at = |x: &Rational| {
        c.iter()
            .enumerate()
            .fold(int(0), |acc, (j, cj)| acc + int(*cj) * rat_pow(x, j as i64))
    };
    let z2 = z * z;
    let first = int(eta) * rat_pow(z, -d) * l_at(&z2);
    let second = rat_pow(&qr, w / 2) * rat_pow(z, d - 2 * w) * l_at(&(z2 / &qr));
    first + second
}

#[test]
fn context_degree() {
    let ctx = FourierContext::new(1, 2, 2, 5, 1, 1).unwrap();
    assert_eq!(ctx.d(), 6);
    let ctx = FourierContext::new(3, 3, 2, 1, 4, -1).unwrap();
    assert_eq!(ctx.d(), 5);
    assert!(FourierContext::new(1, 2, 3, 0, 0, 1).is_err());
    assert!(FourierContext::new(0, 2, 2, 0, 0, 1).is_err());
    assert!(FourierContext::new(1, 2, 2, 0, 0, 0).is_err());
}

#[test]
fn constant_term_trivial() {
    let p = ConstantTermProfile::with_d(LEtaFunction::trivial(2), 0, 1).unwrap();
    assert_eq!(constant_term(&p), rat_profile(2, &[(0, int(2))]));
    assert!(check_constant_term_symmetry(&p));
}

#[test]
fn constant_term_fix_w6() {
    let expected = rat_profile(
        2,
        &[
            (-6, rat(1, 8)),
            (-4, rat(-1, 4)),
            (-2, rat(1, 4)),
            (2, rat(1, 4)),
            (4, rat(-1, 4)),
            (6, rat(1, 8)),
        ],
    );
    let w = constant_term(&fix_w6(1));
    assert_eq!(w, expected);
    assert!(check_constant_term_symmetry(&fix_w6(1)));
    assert_eq!(
        fourier_higher_derivative(&w, 2),
        QSqrtScalar::rational(int(3), 2)
    );

    let negated = constant_term(&fix_w6(-1));
    let first_negated = rat_profile(
        2,
        &[
            (-6, rat(-1, 8)),
            (-4, rat(1, 4)),
            (-2, rat(-1, 4)),
            (2, rat(1, 4)),
            (4, rat(-1, 4)),
            (6, rat(1, 8)),
        ],
    );
    assert_eq!(negated, first_negated);
    assert!(check_constant_term_symmetry(&fix_w6(-1)));
}

#[test]
fn constant_term_matches_direct_evaluation() {
    let cases: &[(u64, &[i64], i64, i64)] = &[
        (2, &[1, -2, 2], 6, 1),
        (2, &[1, -2, 2], 3, -1),
        (3, &[1, 1, 3], -2, 1),
        (5, &[1, -3, 5], 1, -1),
        (3, &[1, 2, 4, 6, 9], 7, 1),
    ];
    for &(q, c, d, eta) in cases {
        let w = c.len() as i64 - 1;
        let l = LEtaFunction::from_i64s(q, c).unwrap();
        let p = ConstantTermProfile::with_d(l, d, eta).unwrap();
        let profile = constant_term(&p);
        assert!(check_constant_term_symmetry(&p));
        for z in [rat(1, 2), rat(-2, 3), int(3), rat(5, 7)] {
            let oracle =
                QSqrtScalar::q_half_power(q, -d).scale(&constant_term_oracle(q, c, d, w, eta, &z));
            assert_eq!(profile.eval(&z), oracle, "q={q} c={c:?} d={d} z={z}");
        }
    }
}

#[test]
fn symmetry_detects_fe_violation() {
    let bad = [1, -2, 3].map(BigInt::from);
    assert!(!constant_term_raw(2, &bad, 6, 2, 1).is_symmetric(1));
    let good = [1, -2, 2].map(BigInt::from);
    assert!(constant_term_raw(2, &good, 6, 2, 1).is_symmetric(1));
}

#[test]
fn profile_rejects_inconsistent_context() {
    let ctx = FourierContext::rank_one(3, 2, 6, 1).unwrap();
    assert!(matches!(
        ConstantTermProfile::new(fix_l2(), ctx),
        Err(Error::QMismatch(3, 2))
    ));
    let ctx = FourierContext::rank_one(2, 4, 6, 1).unwrap();
    assert!(ConstantTermProfile::new(fix_l2(), ctx).is_err());
    let ctx = FourierContext::new(2, 2, 2, 2, 0, 1).unwrap();
    assert!(ConstantTermProfile::new(fix_l2(), ctx).is_err());
}

#[test]
fn nonsingular_examples() {
    let unit = DensityPolynomial::from_i64s(&[1], None).unwrap();
    let ctx0 = FourierContext::rank_one(2, 0, 0, 1).unwrap();
    assert_eq!(
        nonsingular_term(&ctx0, &unit).unwrap(),
        rat_profile(2, &[(0, int(1))])
    );
    for r in 1..6 {
        assert!(fourier_higher_derivative(&nonsingular_term(&ctx0, &unit).unwrap(), r).is_zero());
    }

    let ctx1 = FourierContext::rank_one(2, 0, 1, 1).unwrap();
    let den = DensityPolynomial::from_i64s(&[1, 1], Some(1)).unwrap();
    let term = nonsingular_term(&ctx1, &den).unwrap();
    let inv_sqrt2 = QSqrtScalar::new(int(0), rat(1, 2), 2);
    assert_eq!(term.coeff(-1), inv_sqrt2);
    assert_eq!(term.coeff(1), inv_sqrt2);
    assert!(!term.coeff(-1).is_rational());
    let plain = density_profile(2, &den, 1).unwrap();
    assert_eq!(
        fourier_higher_derivative(&plain, 2),
        QSqrtScalar::rational(int(2), 2)
    );
}

#[test]
fn density_padding_and_symmetry() {
    let den = DensityPolynomial::from_i64s(&[1, 0], None).unwrap();
    assert_eq!(den.padded(2).unwrap(), vec![int(1), int(0), int(0)]);
    assert_eq!(den.padded(0).unwrap(), vec![int(1)]);
    let long = DensityPolynomial::from_i64s(&[1, 0, 3], None).unwrap();
    assert!(matches!(
        long.padded(1),
        Err(Error::DensityDegreeMismatch {
            expected: 2,
            found: 3
        })
    ));
    assert!(long.padded(-1).is_err());
    let anti = DensityPolynomial::from_i64s(&[2, 0, -2], Some(-1)).unwrap();
    assert!(anti.padded(2).is_ok());
    assert!(matches!(
        anti.padded(3),
        Err(Error::DensitySymmetryViolation(_))
    ));
    assert!(DensityPolynomial::from_i64s(&[1], Some(2)).is_err());
}

#[test]
fn symmetric_density_profiles_follow_sign() {
    for (m, eps) in [
        (vec![1, -2, -2, 1], 1),
        (vec![3, 1, 0, -1, -3], -1),
        (vec![1, 0, 1], 1),
    ] {
        let d = m.len() as i64 - 1;
        let den = DensityPolynomial::from_i64s(&m, Some(eps)).unwrap();
        for n in 1..=2 {
            let ctx = FourierContext::new(n, 3, 0, d, d * (n as i64 - 1), 1).unwrap();
            assert_eq!(ctx.d(), d);
            let term = nonsingular_term(&ctx, &den).unwrap();
            assert!(term.is_symmetric(eps));
            for r in 0..=6 {
                if sign_pow(r) != eps {
                    assert!(fourier_higher_derivative(&term, r).is_zero());
                }
            }
        }
    }
}

#[test]
fn script_l_examples() {
    let l = fix_l2();
    let zeta1 = ZetaData::new(2, 0, IntPolynomial::one()).unwrap();
    let f = script_l_factor(1, &l, &zeta1).unwrap();
    assert_eq!(f.len(), 1);
    let expected = RationalFunction::from_rational_polys(
        &[int(1), int(0), int(-1), int(0), rat(1, 2)],
        &[int(1)],
    )
    .unwrap();
    assert_eq!(f[0], expected);

    let f = script_l_factor(2, &l, &zeta1).unwrap();
    assert_eq!(f[1].eval(&int(1)), Some(rat(8, 3)));
    assert!(f.iter().all(|g| !g.denominator().is_zero()));
    assert!(script_l_factor(0, &l, &zeta1).is_err());
    let zeta3 = ZetaData::new(3, 0, IntPolynomial::one()).unwrap();
    assert!(matches!(
        script_l_factor(1, &l, &zeta3),
        Err(Error::QMismatch(2, 3))
    ));
}

#[test]
fn script_l_matches_direct_evaluation() {
    // genus one zeta over F_2 with 1 + T + 2T^2, and L = 1 - 2T + 2T^2
    let l = fix_l2();
    let px = [1i64, 1, 2];
    let zeta = ZetaData::new(2, 1, IntPolynomial::from_i64s(&px)).unwrap();
    let factors = script_l_factor(4, &l, &zeta).unwrap();
    for t in [rat(1, 3), rat(-2, 5), int(3)] {
        for (idx, f) in factors.iter().enumerate() {
            let i = idx as i64 + 1;
            let x = &t * &t * rat_pow(&int(2), -i);
            let poly = |c: &[i64]| {
                c.iter().enumerate().fold(int(0), |acc, (k, ck)| {
                    acc + int(*ck) * rat_pow(&x, k as i64)
                })
            };
            let oracle = if i % 2 == 1 {
                poly(&[1, -2, 2])
            } else {
                poly(&px) / ((int(1) - &x) * (int(1) - int(2) * &x))
            };
            assert_eq!(f.eval(&t), Some(oracle));
        }
    }
}

#[test]
fn unnormalized_round_trip() {
    let zeta = ZetaData::new(2, 1, IntPolynomial::from_i64s(&[1, 1, 2])).unwrap();
    let l = fix_l2();
    let unit = DensityPolynomial::from_i64s(&[1], None).unwrap();
    let ctx = FourierContext::rank_one(2, 0, 0, 1).unwrap();
    let trivial = LEtaFunction::trivial(2);
    let zeta0 = ZetaData::new(2, 0, IntPolynomial::one()).unwrap();
    let uf = unnormalized_fourier(&ctx, &unit, &trivial, &zeta0).unwrap();
    assert!(uf.check_round_trip(&nonsingular_term(&ctx, &unit).unwrap(), 10));

    for n in 1..=3 {
        let ctx = FourierContext::new(n, 2, 2, 1, 0, -1).unwrap();
        let d = ctx.d();
        let mut m = vec![0i64; d as usize + 1];
        m[0] = 1;
        m[d as usize] = 2;
        let den = DensityPolynomial::from_i64s(&m, None).unwrap();
        let uf = unnormalized_fourier(&ctx, &den, &l, &zeta).unwrap();
        let normalized = nonsingular_term(&ctx, &den).unwrap();
        assert!(uf.check_round_trip(&normalized, 10));
        let (lo, hi) = normalized.exponent_span().unwrap();
        assert_eq!(hi - lo, 2 * d);
        assert!(!uf.check_round_trip(&normalized.scale(&int(2)), 10));
    }
}

#[test]
fn parity_examples() {
    let ctx = |n, eta| FourierContext::new(n, 2, 2, 1, 0, eta).unwrap();
    assert!(parity_permits(&ctx(1, -1), 1));
    assert!(!parity_permits(&ctx(1, 1), 1));
    assert!(parity_permits(&ctx(1, 1), 2));
    for r in [1, 3, 5] {
        assert!(!parity_permits(&ctx(2, -1), r));
    }
    let w = constant_term(&fix_w6(1));
    assert!(fourier_higher_derivative(&w, 1).is_zero());
}
