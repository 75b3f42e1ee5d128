use ffeis::cyclestats::PermSumContext;
use ffeis::degrees::{cm_intersection, cm_leibniz_sum, cross_check_degrees, CoverFamily};
use ffeis::eisenstein::{check_constant_term_symmetry, constant_term, ConstantTermProfile};
use ffeis::exactalg::{LaurentProfile, QSqrtScalar, Rational, TruncatedSeries};
use ffeis::lfunctions::{log_taylor_direct, log_taylor_trace, FrobeniusModule, LEtaFunction};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..8).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn laurent() -> impl Strategy<Value = LaurentProfile> {
    prop::collection::vec((-6i64..7, rational(), rational()), 0..6).prop_map(|terms| {
        LaurentProfile::from_terms(
            2,
            terms
                .into_iter()
                .map(|(k, a, b)| (k, QSqrtScalar::new(a, b, 2))),
        )
    })
}

/// L-functions satisfying the functional equation, built from their first
/// half of coefficients.
fn fe_valid_l() -> impl Strategy<Value = LEtaFunction> {
    (
        prop::sample::select(vec![2u64, 3, 5]),
        prop::collection::vec(-4i64..5, 0..3),
    )
        .prop_map(|(q, half)| {
            let h = half.len();
            let w = 2 * h;
            let mut c = vec![BigInt::zero(); w + 1];
            c[0] = 1.into();
            for (j, v) in half.iter().enumerate() {
                c[j + 1] = BigInt::from(*v);
            }
            for j in 0..h {
                c[w - j] = BigInt::from(q).pow((h - j) as u32) * &c[j];
            }
            LEtaFunction::new(q, ffeis::exactalg::IntPolynomial::new(c)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn involution_is_an_involution(p in laurent(), r in 0u32..7) {
        prop_assert_eq!(p.involute().involute(), p.clone());
        let sign = if r % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(
            p.involute().s_derivative_at_zero(r),
            p.s_derivative_at_zero(r).scale(&Rational::from_integer(sign.into()))
        );
    }

    #[test]
    fn derivative_is_multiplicative_by_leibniz(a in laurent(), b in laurent()) {
        let prod = a.mul(&b);
        let lhs = prod.s_derivative_at_zero(2);
        let two = Rational::from_integer(2.into());
        let rhs = &(&a.s_derivative_at_zero(2) * &b.s_derivative_at_zero(0))
            + &(&(&a.s_derivative_at_zero(1) * &b.s_derivative_at_zero(1)).scale(&two)
                + &(&a.s_derivative_at_zero(0) * &b.s_derivative_at_zero(2)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_log_round_trip(coeffs in prop::collection::vec(rational(), 1..7)) {
        let mut c = vec![Rational::zero()];
        c.extend(coeffs);
        let s = TruncatedSeries::new(c);
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn constant_term_symmetric_for_valid_l(l in fe_valid_l(), d in -6i64..9, eta in prop::sample::select(vec![1i64, -1])) {
        let p = ConstantTermProfile::with_d(l, d, eta).unwrap();
        prop_assert!(check_constant_term_symmetry(&p));
        let w = constant_term(&p);
        for r in (0..=6).filter(|r| (if r % 2 == 0 { 1 } else { -1 }) != eta) {
            prop_assert!(w.s_derivative_at_zero(r).is_zero());
        }
    }

    #[test]
    fn two_degree_routes_agree(l in fe_valid_l(), d in -6i64..9) {
        prop_assume!(!l.value_at_one().is_zero());
        let reports = cross_check_degrees(&l, d, 5, 8).unwrap();
        prop_assert!(reports.iter().all(|r| r.agree));
    }

    #[test]
    fn log_taylor_routes_agree(l in fe_valid_l()) {
        prop_assume!(!l.value_at_one().is_zero());
        let module = FrobeniusModule::new(&l).unwrap();
        prop_assert_eq!(log_taylor_direct(&l, 7).unwrap(), log_taylor_trace(&module, 7).unwrap());
    }

    #[test]
    fn generating_identities_hold(l in fe_valid_l(), d in -4i64..7) {
        prop_assume!(!l.value_at_one().is_zero());
        let ctx = PermSumContext::new(FrobeniusModule::new(&l).unwrap(), d);
        prop_assert!(ctx.check_exp_identity(5, 8).unwrap());
        prop_assert!(ctx.check_closed_form(5, 8).unwrap());
    }

    #[test]
    fn cm_leibniz_random_families(
        members in prop::collection::vec((fe_valid_l(), -4i64..7, prop::sample::select(vec![1i64, -1])), 1..4)
    ) {
        let q = members[0].0.q();
        let comps: Vec<_> = members
            .into_iter()
            .filter(|(l, _, _)| l.q() == q)
            .map(|(l, d, eta)| ConstantTermProfile::with_d(l, d, eta).unwrap())
            .collect();
        let family = CoverFamily::new(comps).unwrap();
        for r in 0..=4 {
            prop_assert_eq!(cm_intersection(&family, r), cm_leibniz_sum(&family, r));
        }
    }
}
