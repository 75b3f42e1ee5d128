use super::*;
use crate::exactalg::{int, rat, TruncatedSeries};

fn fix_l2() -> LEtaFunction {
    LEtaFunction::from_i64s(2, &[1, -2, 2]).unwrap()
}

fn sample_ls() -> Vec<LEtaFunction> {
    vec![
        LEtaFunction::trivial(2),
        fix_l2(),
        LEtaFunction::from_i64s(3, &[1, 1, 3]).unwrap(),
        LEtaFunction::from_i64s(3, &[1, 2, 4, 6, 9]).unwrap(),
        LEtaFunction::from_i64s(2, &[1, 1, 2, 3, 4, 4, 8]).unwrap(),
    ]
}

// 2 * r! [u^r] e^{du} sum_j c_j e^{-2ju}
fn analytic_series_oracle(l: &LEtaFunction, d: i64, r: u32) -> Rational {
    let order = r as usize;
    let series =
        l.coeffs()
            .coeffs()
            .iter()
            .enumerate()
            .fold(TruncatedSeries::zero(order), |acc, (j, c)| {
                let e = TruncatedSeries::exp_linear(&int(d - 2 * j as i64), order);
                acc.add(&e.scale(&Rational::from_integer(c.clone())))
            });
    series.derivative_at_zero(order) * int(2)
}

#[test]
fn analytic_examples() {
    let trivial = LEtaFunction::trivial(5);
    for d in [-3, 0, 4] {
        for r in 0..5 {
            assert_eq!(degree_constant_analytic(&trivial, d, r), int(2 * d.pow(r)));
        }
    }
    assert_eq!(degree_constant_analytic(&fix_l2(), 6, 1), int(4));
    assert_eq!(degree_constant_analytic(&fix_l2(), 6, 2), int(24));
    for l in sample_ls() {
        for d in [-4, 1, 6] {
            for r in 0..6 {
                assert_eq!(
                    degree_constant_analytic(&l, d, r),
                    analytic_series_oracle(&l, d, r)
                );
            }
        }
    }
}

#[test]
fn combinatorial_examples() {
    assert_eq!(
        degree_constant_combinatorial(&fix_l2(), 6, 1, 8).unwrap(),
        int(4)
    );
    assert_eq!(
        degree_constant_combinatorial(&fix_l2(), 6, 2, 8).unwrap(),
        int(24)
    );
    let trivial = LEtaFunction::trivial(3);
    assert_eq!(
        degree_constant_combinatorial(&trivial, 3, 4, 8).unwrap(),
        int(162)
    );
    assert!(matches!(
        degree_constant_combinatorial(&fix_l2(), 6, 9, 8),
        Err(Error::EnumerationBudget { .. })
    ));
}

#[test]
fn two_routes_agree() {
    let reports = cross_check_degrees(&LEtaFunction::trivial(2), 3, 5, 8).unwrap();
    assert_eq!(reports.len(), 6);
    for rep in &reports {
        assert!(rep.agree);
        assert_eq!(rep.analytic, int(2 * 3i64.pow(rep.r)));
    }
    for l in sample_ls() {
        for d in [-2, 0, 3, 6] {
            let reports = cross_check_degrees(&l, d, 5, 8).unwrap();
            assert!(reports.iter().all(|rep| rep.agree), "{l} d={d}");
        }
    }
}

#[test]
fn off_parity_vanishing() {
    for l in sample_ls() {
        for d in [-1, 2, 5] {
            for eta in [1, -1] {
                let w = constant_term(&ConstantTermProfile::with_d(l.clone(), d, eta).unwrap());
                for r in (0..=6).filter(|&r| crate::exactalg::sign_pow(r) != eta) {
                    assert!(fourier_higher_derivative(&w, r).is_zero());
                }
            }
        }
    }
}

#[test]
fn nonsingular_examples() {
    let unit = DensityPolynomial::from_i64s(&[1], None).unwrap();
    assert_eq!(degree_nonsingular(&unit, 0, 0).unwrap(), int(1));
    for r in 1..7 {
        assert!(degree_nonsingular(&unit, 0, r).unwrap().is_zero());
    }
    let pair = DensityPolynomial::from_i64s(&[1, 1], None).unwrap();
    assert_eq!(degree_nonsingular(&pair, 1, 2).unwrap(), int(2));
    let ends = DensityPolynomial::from_i64s(&[1, 0, 1], None).unwrap();
    assert_eq!(degree_nonsingular(&ends, 2, 2).unwrap(), int(8));
    assert!(matches!(
        degree_nonsingular(&ends, 1, 2),
        Err(Error::DensityDegreeMismatch { .. })
    ));
}

#[test]
fn halving() {
    let ends = DensityPolynomial::from_i64s(&[1, 0, 1], None).unwrap();
    assert_eq!(epsilon_component_degree(&ends, 2, 2).unwrap(), int(4));
    for r in [2, 4, 6] {
        assert_eq!(
            epsilon_component_degree(&ends, 2, r).unwrap() * int(2),
            degree_nonsingular(&ends, 2, r).unwrap()
        );
    }
    for r in [0, 1, 3] {
        assert!(matches!(
            epsilon_component_degree(&ends, 2, r),
            Err(Error::HalvingHypothesisViolation(_))
        ));
    }
}

#[test]
fn termwise_fix_w6() {
    let p = ConstantTermProfile::with_d(fix_l2(), 6, 1).unwrap();
    let terms = vec![(
        "a1".to_string(),
        DensityPolynomial::from_i64s(&[1, 0, -1, 2, -1, 0, 1], None).unwrap(),
    )];
    let rep = termwise_comparison(&p, &terms, 2).unwrap();
    assert!(rep.parity_permits);
    assert_eq!(rep.terms[0].lhs, QSqrtScalar::rational(int(3), 2));
    assert_eq!(
        rep.terms[0].rhs,
        QSqrtScalar::rational(rat(1, 8) * int(24), 2)
    );
    assert!(rep.all_equal());
    for r in 0..=6 {
        for eta in [1, -1] {
            for d in [3, 6] {
                let p = ConstantTermProfile::with_d(fix_l2(), d, eta).unwrap();
                let rep = termwise_comparison(&p, &terms[..(d == 6) as usize], r).unwrap();
                assert!(rep.all_equal(), "r={r} eta={eta} d={d}");
            }
        }
    }
}

#[test]
fn termwise_unit() {
    let p = ConstantTermProfile::with_d(LEtaFunction::trivial(2), 0, 1).unwrap();
    let unit = vec![(
        "unit".to_string(),
        DensityPolynomial::from_i64s(&[1], None).unwrap(),
    )];
    let rep = termwise_comparison(&p, &unit, 0).unwrap();
    assert_eq!(rep.terms[1].lhs, QSqrtScalar::one(2));
    assert_eq!(rep.terms[1].rhs, QSqrtScalar::one(2));
    assert!(rep.all_equal());
}

#[test]
fn density_vanishing() {
    let den = DensityPolynomial::from_i64s(&[1, 3, 3, 1], Some(1)).unwrap();
    assert!(density_vanishing_failures(3, &den, 3, 6)
        .unwrap()
        .is_empty());
    let den = DensityPolynomial::from_i64s(&[1, 0, -1], Some(-1)).unwrap();
    assert!(density_vanishing_failures(3, &den, 2, 6)
        .unwrap()
        .is_empty());
    let undeclared = DensityPolynomial::from_i64s(&[1, 2], None).unwrap();
    assert!(density_vanishing_failures(3, &undeclared, 1, 6).is_err());
}

fn w6(eta: i64, d: i64) -> ConstantTermProfile {
    ConstantTermProfile::with_d(fix_l2(), d, eta).unwrap()
}

#[test]
fn cm_examples() {
    let single = CoverFamily::new(vec![w6(1, 6)]).unwrap();
    for r in 0..4 {
        let rep = termwise_comparison(&w6(1, 6), &[], r).unwrap();
        assert_eq!(cm_intersection(&single, r), rep.terms[0].lhs);
    }
    let pair = CoverFamily::new(vec![w6(1, 6), w6(1, 6)]).unwrap();
    let one = cm_refined(&single, &[1]).unwrap();
    assert_eq!(cm_refined(&pair, &[1, 1]).unwrap(), &one * &one);
    assert!(cm_refined(&pair, &[2]).is_err());

    let mixed = CoverFamily::new(vec![w6(-1, 4), w6(1, 6), w6(-1, 2)]).unwrap();
    for fam in [&single, &pair, &mixed] {
        for r in 0..=4 {
            assert_eq!(cm_intersection(fam, r), cm_leibniz_sum(fam, r));
        }
    }
    let l3 = LEtaFunction::from_i64s(3, &[1, 1, 3]).unwrap();
    let other_q = ConstantTermProfile::with_d(l3, 2, 1).unwrap();
    assert!(matches!(
        CoverFamily::new(vec![w6(1, 6), other_q]),
        Err(Error::FamilyInconsistency(_))
    ));
    assert!(CoverFamily::new(vec![]).is_err());
}

#[test]
fn cm_matches_series_product() {
    // even d keeps every coefficient rational
    let fam = CoverFamily::new(vec![w6(-1, 4), w6(1, 2)]).unwrap();
    let order = 4;
    let series = fam
        .components()
        .iter()
        .map(|c| {
            constant_term(c)
                .terms()
                .fold(TruncatedSeries::zero(order), |acc, (k, v)| {
                    let e = TruncatedSeries::exp_linear(&int(-k), order);
                    acc.add(&e.scale(&v.to_rational().unwrap()))
                })
        })
        .fold(TruncatedSeries::one(order), |acc, s| acc.mul(&s));
    for r in 0..=order as u32 {
        let v = cm_intersection(&fam, r);
        assert_eq!(
            v.to_rational().unwrap(),
            series.derivative_at_zero(r as usize)
        );
    }
}

#[test]
fn compositions_count() {
    assert_eq!(compositions(4, 1), vec![vec![4]]);
    assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    assert_eq!(compositions(4, 3).len(), 15);
}
