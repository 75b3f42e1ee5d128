//! The full identity suite over a fixture bundle.

use serde_json::{json, Value};

use super::input::Bundle;
use crate::curves::{analyze_model, CoverAnalysis};
use crate::cyclestats::{f_poly_enumerated, f_poly_recursive, PermSumContext, DEFAULT_PERM_BOUND};
use crate::degrees::{
    cm_intersection, cm_leibniz_sum, cross_check_degrees, density_vanishing_failures,
    termwise_comparison, CoverFamily,
};
use crate::eisenstein::{check_constant_term_symmetry, ConstantTermProfile, DensityPolynomial};
use crate::error::{Error, Result};
use crate::lfunctions::{
    check_functional_equation, log_taylor_direct, log_taylor_trace, FrobeniusModule, LEtaFunction,
};

pub const CHECK_NAMES: [&str; 11] = [
    "zeta and L functional equations",
    "L as quotient of zeta numerators",
    "log-Taylor coefficients, direct vs traces",
    "cycle polynomials, recursion vs enumeration",
    "permutation-sum EGF vs exp of cycle sums",
    "permutation-sum EGF closed form",
    "constant-term symmetry",
    "constant-term degree, analytic vs combinatorial",
    "term-wise derivative comparison",
    "CM product Leibniz rule",
    "density parity vanishing",
];

const DEFAULT_FPOLY_MAX: u32 = 8;
const CM_R_MAX: u32 = 4;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub order: usize,
    pub r_max: u32,
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .enumerate()
            .map(|(i, c)| {
                json!({
                    "index": i + 1,
                    "name": c.name,
                    "status": if c.passed() { "PASS" } else { "FAIL" },
                    "cases": c.cases,
                    "failures": c.failures,
                })
            })
            .collect();
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        json!({ "checks": checks, "passed": passed, "total": self.checks.len() })
    }

    pub fn to_text(&self) -> String {
        let total = self.checks.len();
        let mut out = String::new();
        for (i, c) in self.checks.iter().enumerate() {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out += &format!(
                "{status} {:>2}/{total} {} ({} cases)\n",
                i + 1,
                c.name,
                c.cases
            );
            for f in &c.failures {
                out += &format!("       {f}\n");
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out += &format!("{passed}/{total} checks passed\n");
        out
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(index: usize) -> Self {
        Tally {
            name: CHECK_NAMES[index],
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String, e: &Error) {
        self.cases += 1;
        self.failures.push(format!("{what}: {e}"));
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

pub fn verify_all(bundle: &Bundle, opts: &VerifyOptions) -> Result<VerifyReport> {
    if bundle.is_empty() {
        return Err(Error::InvalidInput(
            "verify bundle has no L-functions, curves or densities".into(),
        ));
    }
    let d_values = bundle
        .d_values
        .clone()
        .unwrap_or_else(|| (-3..=6).collect());
    let perm_order = opts.r_max.min(DEFAULT_PERM_BOUND);
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    // 1: functional equations, and recovery of every curve
    let mut fe = Tally::new(0);
    let mut ls: Vec<LEtaFunction> = Vec::new();
    for li in &bundle.l_functions {
        let ok = li.l.first() == Some(&1) && check_functional_equation(li.q, &li.poly());
        fe.record(ok, || {
            format!(
                "L = {:?} over q = {} fails its functional equation",
                li.l, li.q
            )
        });
        if ok {
            match li.build() {
                Ok(l) => ls.push(l),
                Err(e) => fe.error(format!("L = {:?}", li.l), &e),
            }
        }
    }
    let mut analyses: Vec<CoverAnalysis> = Vec::new();
    for ci in &bundle.curves {
        let label = format!("curve p = {} f1 = {:?} f2 = {:?}", ci.p, ci.f1, ci.f2);
        match ci
            .build()
            .and_then(|m| analyze_model(&m, ci.m, opts.budget))
        {
            Ok(a) => {
                fe.record(true, String::new);
                analyses.push(a);
            }
            Err(e) => fe.error(label, &e),
        }
    }
    checks.push(fe.finish());

    // 2: P_X * L = P_X'
    let mut div = Tally::new(1);
    for a in &analyses {
        let product = a.base_zeta.numerator().mul(&a.l_poly);
        div.record(product == *a.cover_zeta.numerator(), || {
            format!("P_X * L != P_X' for L = {}", a.l_poly)
        });
        let w = 2 * a.base_zeta.genus() - 2;
        div.record(a.l_poly.degree().finite() == Some(w), || {
            format!("deg L = {} but 2g - 2 = {w}", a.l_poly.degree())
        });
        match LEtaFunction::new(a.base_zeta.q(), a.l_poly.clone()) {
            Ok(l) => ls.push(l),
            Err(e) => div.error(format!("curve L = {}", a.l_poly), &e),
        }
    }
    checks.push(div.finish());

    let modules: Vec<(LEtaFunction, Option<FrobeniusModule>)> = ls
        .iter()
        .map(|l| (l.clone(), FrobeniusModule::new(l).ok()))
        .collect();

    // 3: log-Taylor two routes
    let mut taylor = Tally::new(2);
    for (l, module) in &modules {
        let Some(module) = module else {
            taylor.error(format!("L = {l}"), &Error::SingularAtOne);
            continue;
        };
        match (
            log_taylor_direct(l, opts.order),
            log_taylor_trace(module, opts.order),
        ) {
            (Ok(a), Ok(b)) => taylor.record(a == b, || format!("routes differ for L = {l}")),
            (Err(e), _) | (_, Err(e)) => taylor.error(format!("L = {l}"), &e),
        }
    }
    checks.push(taylor.finish());

    // 4: f_n two routes
    let mut fpoly = Tally::new(3);
    for n in 1..=bundle.fpoly_max.unwrap_or(DEFAULT_FPOLY_MAX) {
        match (f_poly_recursive(n), f_poly_enumerated(n, n)) {
            (Ok(a), Ok(b)) => fpoly.record(a == b, || format!("f_{n}: {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => fpoly.error(format!("f_{n}"), &e),
        }
    }
    checks.push(fpoly.finish());

    // 5, 6: generating identities
    let mut exp_id = Tally::new(4);
    let mut closed = Tally::new(5);
    for (l, module) in &modules {
        let Some(module) = module else { continue };
        for &d in &d_values {
            let ctx = PermSumContext::new(module.clone(), d);
            match ctx.check_exp_identity(perm_order, DEFAULT_PERM_BOUND) {
                Ok(ok) => exp_id.record(ok, || format!("L = {l}, d = {d}")),
                Err(e) => exp_id.error(format!("L = {l}, d = {d}"), &e),
            }
            match ctx.check_closed_form(perm_order, DEFAULT_PERM_BOUND) {
                Ok(ok) => closed.record(ok, || format!("L = {l}, d = {d}")),
                Err(e) => closed.error(format!("L = {l}, d = {d}"), &e),
            }
        }
    }
    checks.push(exp_id.finish());
    checks.push(closed.finish());

    let profiles: Vec<ConstantTermProfile> = ls
        .iter()
        .flat_map(|l| {
            d_values.iter().flat_map(move |&d| {
                [1, -1].map(|eta| ConstantTermProfile::with_d(l.clone(), d, eta))
            })
        })
        .collect::<Result<_>>()?;

    // 7: W(-s) = eta W(s)
    let mut sym = Tally::new(6);
    for p in &profiles {
        sym.record(check_constant_term_symmetry(p), || {
            format!("L = {}, d = {}, eta = {}", p.l_function(), p.d(), p.eta_l())
        });
    }
    checks.push(sym.finish());

    // 8: degree two routes
    let mut deg = Tally::new(7);
    for (l, module) in &modules {
        if module.is_none() {
            continue;
        }
        for &d in &d_values {
            match cross_check_degrees(l, d, perm_order, DEFAULT_PERM_BOUND) {
                Ok(reports) => {
                    for rep in reports {
                        deg.record(rep.agree, || {
                            format!(
                                "L = {l}, d = {d}, r = {}: {} vs {:?}",
                                rep.r, rep.analytic, rep.combinatorial
                            )
                        });
                    }
                }
                Err(e) => deg.error(format!("L = {l}, d = {d}"), &e),
            }
        }
    }
    checks.push(deg.finish());

    let densities: Vec<DensityPolynomial> = bundle
        .densities
        .iter()
        .map(|d| d.build())
        .collect::<Result<_>>()?;

    // 9: term-wise comparison
    let mut term = Tally::new(8);
    for p in &profiles {
        let terms: Vec<(String, DensityPolynomial)> = densities
            .iter()
            .enumerate()
            .filter(|(_, den)| den.padded(p.d()).is_ok())
            .map(|(i, den)| (format!("density {}", i + 1), den.clone()))
            .collect();
        for r in 0..=opts.r_max {
            match termwise_comparison(p, &terms, r) {
                Ok(rep) => {
                    for t in rep.terms {
                        term.record(t.equal, || {
                            format!(
                                "L = {}, d = {}, r = {r}, {}: {} vs {}",
                                p.l_function(),
                                p.d(),
                                t.label,
                                t.lhs,
                                t.rhs
                            )
                        });
                    }
                }
                Err(e) => term.error(format!("L = {}, d = {}", p.l_function(), p.d()), &e),
            }
        }
    }
    checks.push(term.finish());

    // 10: CM Leibniz, families of one to three components per q
    let mut cm = Tally::new(9);
    let mut qs: Vec<u64> = profiles.iter().map(|p| p.context().q()).collect();
    qs.dedup();
    for q in qs {
        let same_q: Vec<ConstantTermProfile> = profiles
            .iter()
            .filter(|p| p.context().q() == q)
            .step_by(3)
            .take(3)
            .cloned()
            .collect();
        for size in 1..=same_q.len() {
            let family = CoverFamily::new(same_q[..size].to_vec())?;
            for r in 0..=CM_R_MAX {
                cm.record(
                    cm_intersection(&family, r) == cm_leibniz_sum(&family, r),
                    || format!("q = {q}, {size} components, r = {r}"),
                );
            }
        }
    }
    checks.push(cm.finish());

    // 11: symmetric densities vanish off parity
    let mut van = Tally::new(10);
    for (i, den) in densities.iter().enumerate() {
        if den.epsilon().is_none() {
            continue;
        }
        let d = den.coeffs().len() as i64 - 1;
        for q in [2, 3] {
            match density_vanishing_failures(q, den, d, opts.r_max) {
                Ok(bad) => van.record(bad.is_empty(), || {
                    format!("density {} nonzero at r = {bad:?}", i + 1)
                }),
                Err(e) => van.error(format!("density {}", i + 1), &e),
            }
        }
    }
    checks.push(van.finish());

    Ok(VerifyReport { checks })
}
