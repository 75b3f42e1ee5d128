//! Command-line front end. Every command reads one JSON document and writes
//! one report; exit code 1 means bad input, 2 means a failed identity.

mod input;
mod render;
mod verify;

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use input::Bundle;
pub use verify::{verify_all, CheckResult, VerifyOptions, VerifyReport, CHECK_NAMES};

use crate::curves::{
    analyze_model, zeta_from_counts, PointCounts, ZetaData, DEFAULT_ENUMERATION_BUDGET,
};
use crate::cyclestats::{f_poly_recursive, PermSumContext, DEFAULT_PERM_BOUND};
use crate::degrees::{
    cm_intersection, cm_leibniz_sum, cm_refined, cross_check_degrees, degree_nonsingular,
    epsilon_component_degree, termwise_comparison, CoverFamily,
};
use crate::eisenstein::{
    check_constant_term_symmetry, constant_term, fourier_higher_derivative, nonsingular_term,
    parity_permits, unnormalized_fourier, ConstantTermProfile,
};
use crate::error::{Error, Result};
use crate::exactalg::{IntPolynomial, DEFAULT_SERIES_ORDER};
use crate::lfunctions::{log_taylor_direct, log_taylor_trace, FrobeniusModule, LEtaFunction};
use input::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Point counts of X and X' over F_{p^i}
    Count,
    /// Zeta numerators and L(s, eta) from a model or from counts
    Zeta,
    /// Validate an L-function and describe its Frobenius module
    Lfun,
    /// log L(s, eta) around s = 0 by two routes
    Taylor,
    /// The cycle polynomial f_n
    Fpoly {
        #[arg(long)]
        n: Option<u32>,
    },
    /// Permutation sums, cycle sums and their generating identities
    Permsum,
    /// Constant term and Fourier coefficients of the normalized series
    Eis,
    /// Degrees of special cycles by every available route
    Degree,
    /// Derivatives of products over a CM family
    Cm,
    /// Run the full identity suite
    Verify,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "ffeis",
    version,
    about = "Exact special-cycle degree and Eisenstein identities over function fields"
)]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
    /// JSON input file, or - for standard input
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Inline JSON input
    #[arg(long, global = true, conflicts_with = "input")]
    pub json: Option<String>,
    /// Report destination (standard output by default)
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Series truncation order
    #[arg(long, global = true, default_value_t = DEFAULT_SERIES_ORDER)]
    pub order: usize,
    /// Largest derivative order
    #[arg(long = "r-max", global = true, default_value_t = 6)]
    pub r_max: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumeration budget (field elements per extension)
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u64,
}

/// Result of one invocation: exit code, report body, and diagnostics for
/// standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
    pub diagnostics: Vec<String>,
}

struct Report {
    json: Value,
    text: String,
    warnings: Vec<String>,
    identity_failure: Option<String>,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            warnings: Vec::new(),
            identity_failure: None,
        }
    }
}

fn read_input(config: &JobConfig) -> Result<Option<String>> {
    if let Some(text) = &config.json {
        return Ok(Some(text.clone()));
    }
    let Some(path) = &config.input else {
        return Ok(None);
    };
    let io_err =
        |e: std::io::Error| Error::InvalidInput(format!("cannot read {}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(Some(s))
    } else {
        fs::read_to_string(path).map(Some).map_err(io_err)
    }
}

fn require_input(config: &JobConfig) -> Result<String> {
    read_input(config)?
        .ok_or_else(|| Error::InvalidInput("this command needs --input or --json".into()))
}

pub fn run(config: &JobConfig) -> Outcome {
    match dispatch(config) {
        Ok(report) => {
            let mut output = match config.format {
                Format::Json => {
                    serde_json::to_string_pretty(&report.json).expect("serializable report")
                }
                Format::Text => report.text.trim_end().to_string(),
            };
            output.push('\n');
            let mut diagnostics: Vec<String> = report
                .warnings
                .iter()
                .map(|w| format!("warning: {w}"))
                .collect();
            let exit_code = match report.identity_failure {
                Some(name) => {
                    diagnostics.push(format!("identity failed: {name}"));
                    2
                }
                None => 0,
            };
            Outcome {
                exit_code,
                output,
                diagnostics,
            }
        }
        Err(e) => Outcome {
            exit_code: 1,
            output: String::new(),
            diagnostics: vec![format!("error: {e}")],
        },
    }
}

/// Parses process arguments, runs, writes the report and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match JobConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = run(&config);
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    if !outcome.output.is_empty() {
        match &config.output {
            Some(path) => {
                if let Err(e) = fs::write(path, &outcome.output) {
                    eprintln!(
                        "error: [INVALID_INPUT] cannot write {}: {e}",
                        path.display()
                    );
                    return 1;
                }
            }
            None => print!("{}", outcome.output),
        }
    }
    outcome.exit_code
}

fn dispatch(config: &JobConfig) -> Result<Report> {
    match &config.command {
        Command::Count => cmd_count(config),
        Command::Zeta => cmd_zeta(config),
        Command::Lfun => cmd_lfun(config),
        Command::Taylor => cmd_taylor(config),
        Command::Fpoly { n } => cmd_fpoly(config, *n),
        Command::Permsum => cmd_permsum(config),
        Command::Eis => cmd_eis(config),
        Command::Degree => cmd_degree(config),
        Command::Cm => cmd_cm(config),
        Command::Verify => cmd_verify(config),
    }
}

fn counts_json(c: &PointCounts) -> Value {
    json!(c.counts())
}

fn cmd_count(config: &JobConfig) -> Result<Report> {
    let inp: input::ModelInput = parse(&require_input(config)?)?;
    let model = inp.build()?;
    let m = inp.m.unwrap_or(2 * model.cover_genus() as u32);
    let (base, cover) = model.point_counts(m, config.budget)?;
    let json = json!({
        "p": model.p(),
        "base_genus": model.base_genus(),
        "cover_genus": model.cover_genus(),
        "base": counts_json(&base),
        "cover": counts_json(&cover),
    });
    let mut text = format!(
        "p = {}, g_X = {}, g_X' = {}\n i  #X(F_q^i)  #X'(F_q^i)\n",
        model.p(),
        model.base_genus(),
        model.cover_genus()
    );
    for (i, (b, c)) in base.counts().iter().zip(cover.counts()).enumerate() {
        text += &format!("{:>2}  {b:>10}  {c:>11}\n", i + 1);
    }
    Ok(Report::new(json, text))
}

fn l_warning(l: &IntPolynomial) -> Option<String> {
    use num_traits::Signed;
    let v = l.eval_int(&1.into());
    (!v.is_positive())
        .then(|| format!("L(1) = {v} is not positive, so 2 L(1) is not a group order"))
}

fn cmd_zeta(config: &JobConfig) -> Result<Report> {
    match parse::<input::ZetaInput>(&require_input(config)?)? {
        input::ZetaInput::Model(inp) => {
            let model = inp.build()?;
            let a = analyze_model(&model, inp.m, config.budget)?;
            let json = json!({
                "q": a.base_zeta.q(),
                "base_genus": a.base_zeta.genus(),
                "cover_genus": a.cover_zeta.genus(),
                "base_counts": counts_json(&a.base_counts),
                "cover_counts": counts_json(&a.cover_counts),
                "P_base": render::poly(a.base_zeta.numerator()),
                "P_cover": render::poly(a.cover_zeta.numerator()),
                "L": render::poly(&a.l_poly),
                "L_at_one": a.l_poly.eval_int(&1.into()).to_string(),
            });
            let text = format!(
                "q = {}\nP_X(T)  = {}\nP_X'(T) = {}\nL(T)    = {}\n",
                a.base_zeta.q(),
                a.base_zeta.numerator(),
                a.cover_zeta.numerator(),
                a.l_poly
            );
            let mut report = Report::new(json, text);
            report.warnings.extend(l_warning(&a.l_poly));
            Ok(report)
        }
        input::ZetaInput::Counts(inp) => {
            let z = zeta_from_counts(&PointCounts::new(inp.q, inp.counts)?, inp.g)?;
            let json = json!({ "q": z.q(), "g": z.genus(), "P": render::poly(z.numerator()) });
            let text = format!(
                "q = {}, g = {}\nP(T) = {}\n",
                z.q(),
                z.genus(),
                z.numerator()
            );
            Ok(Report::new(json, text))
        }
    }
}

fn cmd_lfun(config: &JobConfig) -> Result<Report> {
    let inp: input::LInput = parse(&require_input(config)?)?;
    let l = inp.build()?;
    let module = FrobeniusModule::new(&l)?;
    let table = module.trace_table(2);
    let traces: Vec<Value> = (1..=2)
        .flat_map(|a| (0..=2).map(move |b| (a, b)))
        .map(|(a, b)| json!({ "a": a, "b": b, "trace": render::rational(&table[a][b]) }))
        .collect();
    let json = json!({
        "q": l.q(),
        "w": l.w(),
        "L": render::poly(l.coeffs()),
        "L_at_one": l.value_at_one().to_string(),
        "prym_order": (l.value_at_one() * num_bigint::BigInt::from(2)).to_string(),
        "traces": traces,
    });
    let mut text = format!(
        "L(T) = {l}\nq = {}, w = {}\nL(1) = {}\n",
        l.q(),
        l.w(),
        l.value_at_one()
    );
    for (a, row) in table.iter().enumerate().skip(1).take(2) {
        for (b, v) in row.iter().enumerate().take(3) {
            text += &format!("Tr(M^{a} (I-M)^-{b}) = {v}\n");
        }
    }
    let mut report = Report::new(json, text);
    report.warnings.extend(l_warning(l.coeffs()));
    Ok(report)
}

fn cmd_taylor(config: &JobConfig) -> Result<Report> {
    let inp: input::LInput = parse(&require_input(config)?)?;
    let l = inp.build()?;
    let direct = log_taylor_direct(&l, config.order)?;
    let trace = log_taylor_trace(&FrobeniusModule::new(&l)?, config.order)?;
    let agree = direct == trace;
    let json = json!({
        "L_at_zero": render::rational(&direct.l_at_zero),
        "direct": render::series(&direct.series),
        "trace": render::series(&trace.series),
        "agree": agree,
    });
    let text = format!(
        "log L(s) = log {} + sum_j a_j u^j, u = s log q\n{}\nroutes agree: {agree}\n",
        direct.l_at_zero,
        render::series_text(&direct.series)
    );
    let mut report = Report::new(json, text);
    if !agree {
        report.identity_failure = Some(CHECK_NAMES[2].into());
    }
    Ok(report)
}

fn cmd_fpoly(config: &JobConfig, n: Option<u32>) -> Result<Report> {
    let n = match n {
        Some(n) => n,
        None => parse::<input::FpolyInput>(&require_input(config)?)?.n,
    };
    let f = f_poly_recursive(n)?;
    let json = json!({
        "n": n,
        "coeffs": f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "poly": f.to_string(),
    });
    Ok(Report::new(json, f.to_string()))
}

fn cmd_permsum(config: &JobConfig) -> Result<Report> {
    let inp: input::PermSumInput = parse(&require_input(config)?)?;
    let l = LEtaFunction::from_i64s(inp.q, &inp.l)?;
    let ctx = PermSumContext::new(FrobeniusModule::new(&l)?, inp.d);
    let r_max = config.r_max;
    let mut rows = Vec::new();
    let mut text = format!("L(T) = {l}, d = {}\n r  Gamma_r  sum_(S_r) A_g\n", inp.d);
    for r in 0..=r_max {
        let sum = ctx.perm_sum(r, DEFAULT_PERM_BOUND)?;
        let gamma = if r == 0 {
            None
        } else {
            Some(ctx.gamma_ell(r)?)
        };
        text += &format!(
            "{r:>2}  {}  {sum}\n",
            gamma.as_ref().map_or("-".to_string(), |g| g.to_string())
        );
        rows.push(json!({
            "r": r,
            "gamma": gamma.as_ref().map(render::rational),
            "perm_sum": render::rational(&sum),
        }));
    }
    let exp_ok = ctx.check_exp_identity(r_max, DEFAULT_PERM_BOUND)?;
    let closed_ok = ctx.check_closed_form(r_max, DEFAULT_PERM_BOUND)?;
    text += &format!("exp identity: {exp_ok}\nclosed form: {closed_ok}\n");
    let json = json!({ "rows": rows, "exp_identity": exp_ok, "closed_form": closed_ok });
    let mut report = Report::new(json, text);
    if !exp_ok {
        report.identity_failure = Some(CHECK_NAMES[4].into());
    } else if !closed_ok {
        report.identity_failure = Some(CHECK_NAMES[5].into());
    }
    Ok(report)
}

fn cmd_eis(config: &JobConfig) -> Result<Report> {
    let inp: input::EisInput = parse(&require_input(config)?)?;
    let ctx = inp.context.build()?;
    let mut json = json!({ "d": ctx.d() });
    let mut text = format!("d = {}\n", ctx.d());
    let parity: Vec<bool> = (0..=config.r_max)
        .map(|r| parity_permits(&ctx, r))
        .collect();
    json["parity_permits"] = json!(parity);
    let mut failure = None;

    let l = inp
        .l
        .as_ref()
        .map(|c| LEtaFunction::from_i64s(ctx.q(), c))
        .transpose()?;
    if let (Some(l), 1) = (&l, ctx.n()) {
        let profile = ConstantTermProfile::new(l.clone(), ctx.clone())?;
        let w = constant_term(&profile);
        let symmetric = check_constant_term_symmetry(&profile);
        let derivs: Vec<_> = (0..=config.r_max)
            .map(|r| fourier_higher_derivative(&w, r))
            .collect();
        json["constant_term"] = json!({
            "profile": render::laurent(&w),
            "symmetric": symmetric,
            "derivatives": derivs.iter().map(render::qsqrt).collect::<Vec<_>>(),
        });
        text += &format!(
            "constant term W = {}\nsymmetric: {symmetric}\n",
            render::laurent_text(&w)
        );
        for (r, v) in derivs.iter().enumerate() {
            text += &format!("  r = {r}: {v}\n");
        }
        if !symmetric {
            failure = Some(CHECK_NAMES[6].into());
        }
    }
    if let Some(den_in) = &inp.density {
        let den = den_in.build()?;
        let term = nonsingular_term(&ctx, &den)?;
        let derivs: Vec<_> = (0..=config.r_max)
            .map(|r| fourier_higher_derivative(&term, r))
            .collect();
        let mut entry = json!({
            "profile": render::laurent(&term),
            "derivatives": derivs.iter().map(render::qsqrt).collect::<Vec<_>>(),
        });
        text += &format!("nonsingular term = {}\n", render::laurent_text(&term));
        for (r, v) in derivs.iter().enumerate() {
            text += &format!("  r = {r}: {v}\n");
        }
        if let (Some(l), Some(zx)) = (&l, &inp.zeta_x) {
            let zeta = ZetaData::new(ctx.q(), zx.g, IntPolynomial::from_i64s(&zx.p))?;
            let uf = unnormalized_fourier(&ctx, &den, l, &zeta)?;
            let ok = uf.check_round_trip(&term, 10);
            entry["unnormalized"] = json!({
                "profile": render::laurent(&uf.profile),
                "inverse_numerator": render::poly(uf.inverse_factor.numerator()),
                "inverse_denominator": render::poly(uf.inverse_factor.denominator()),
                "round_trip": ok,
            });
            text += &format!("normalization round trip: {ok}\n");
            if !ok {
                failure = Some("normalization round trip".into());
            }
        }
        json["nonsingular_term"] = entry;
    }
    let mut report = Report::new(json, text);
    report.identity_failure = failure;
    Ok(report)
}

fn cm_section(
    family_in: &[input::ProfileInput],
    multi: Option<&[u32]>,
    r_max: u32,
) -> Result<(Value, String, bool)> {
    let family = CoverFamily::new(family_in.iter().map(|p| p.build()).collect::<Result<_>>()?)?;
    let mut rows = Vec::new();
    let mut text = format!("CM family with {} components\n", family.components().len());
    let mut all_ok = true;
    for r in 0..=r_max {
        let total = cm_intersection(&family, r);
        let leibniz = cm_leibniz_sum(&family, r);
        let ok = total == leibniz;
        all_ok &= ok;
        text += &format!(
            "  r = {r}: {total} (Leibniz {})\n",
            if ok { "ok" } else { "FAILED" }
        );
        rows.push(json!({ "r": r, "intersection": render::qsqrt(&total), "leibniz": ok }));
    }
    let mut json = json!({ "rows": rows });
    if let Some(idx) = multi {
        let v = cm_refined(&family, idx)?;
        text += &format!("refined {idx:?}: {v}\n");
        json["refined"] = json!({ "multi_index": idx, "value": render::qsqrt(&v) });
    }
    Ok((json, text, all_ok))
}

fn cmd_degree(config: &JobConfig) -> Result<Report> {
    let inp: input::DegreeInput = parse(&require_input(config)?)?;
    let r_max = inp.r_max.unwrap_or(config.r_max);
    let l = LEtaFunction::from_i64s(inp.q, &inp.l)?;
    let mut failure = None;

    let reports = cross_check_degrees(&l, inp.d, r_max, DEFAULT_PERM_BOUND)?;
    let mut text = format!("L(T) = {l}, d = {}\nconstant term degrees:\n", inp.d);
    let rows: Vec<Value> = reports
        .iter()
        .map(|rep| {
            text += &format!(
                "  r = {}: analytic {}, combinatorial {}, {}\n",
                rep.r,
                rep.analytic,
                rep.combinatorial
                    .as_ref()
                    .map_or("-".into(), |c| c.to_string()),
                if rep.agree { "agree" } else { "DISAGREE" }
            );
            json!({
                "r": rep.r,
                "analytic": render::rational(&rep.analytic),
                "combinatorial": rep.combinatorial.as_ref().map(render::rational),
                "agree": rep.agree,
            })
        })
        .collect();
    if reports.iter().any(|r| !r.agree) {
        failure = Some(CHECK_NAMES[7].to_string());
    }

    let profile = ConstantTermProfile::with_d(l.clone(), inp.d, inp.eta_l)?;
    let mut terms = Vec::new();
    let mut term_rows = Vec::new();
    for (i, t) in inp.den_terms.iter().enumerate() {
        let label = t.label.clone().unwrap_or_else(|| format!("a{}", i + 1));
        let den = t.build()?;
        let mut degs = Vec::new();
        let mut halves = Vec::new();
        for r in 0..=r_max {
            degs.push(render::rational(&degree_nonsingular(&den, inp.d, r)?));
            halves.push(match epsilon_component_degree(&den, inp.d, r) {
                Ok(v) => render::rational(&v),
                Err(_) => Value::Null,
            });
        }
        text += &format!("density {label}: degrees {}\n", Value::Array(degs.clone()));
        term_rows.push(json!({ "label": label, "degrees": degs, "epsilon_component": halves }));
        terms.push((label, den));
    }
    let mut termwise = Vec::new();
    for r in 0..=r_max {
        let rep = termwise_comparison(&profile, &terms, r)?;
        if !rep.all_equal() && failure.is_none() {
            failure = Some(CHECK_NAMES[8].to_string());
        }
        termwise.push(json!({
            "r": r,
            "parity_permits": rep.parity_permits,
            "terms": rep.terms.iter().map(|t| json!({
                "label": t.label,
                "lhs": render::qsqrt(&t.lhs),
                "rhs": render::qsqrt(&t.rhs),
                "equal": t.equal,
            })).collect::<Vec<_>>(),
        }));
        text += &format!(
            "term-wise r = {r}: {}\n",
            if rep.all_equal() {
                "all equal"
            } else {
                "MISMATCH"
            }
        );
    }
    let mut json = json!({
        "constant_term": rows,
        "den_terms": term_rows,
        "termwise": termwise,
    });
    if !inp.family.is_empty() {
        let (cm_json, cm_text, ok) = cm_section(&inp.family, None, r_max.min(4))?;
        json["family"] = cm_json;
        text += &cm_text;
        if !ok && failure.is_none() {
            failure = Some(CHECK_NAMES[9].to_string());
        }
    }
    let mut report = Report::new(json, text);
    report.identity_failure = failure;
    Ok(report)
}

fn cmd_cm(config: &JobConfig) -> Result<Report> {
    let inp: input::CmInput = parse(&require_input(config)?)?;
    let (json, text, ok) = cm_section(&inp.family, inp.multi_index.as_deref(), config.r_max)?;
    let mut report = Report::new(json, text);
    if !ok {
        report.identity_failure = Some(CHECK_NAMES[9].into());
    }
    Ok(report)
}

fn cmd_verify(config: &JobConfig) -> Result<Report> {
    let bundle = match read_input(config)? {
        Some(text) => parse::<Bundle>(&text)?,
        None => Bundle::default_bundle(),
    };
    let opts = VerifyOptions {
        order: config.order,
        r_max: config.r_max,
        budget: config.budget,
    };
    let report = verify_all(&bundle, &opts)?;
    let mut out = Report::new(report.to_json(), report.to_text());
    out.identity_failure = report.first_failure().map(|c| c.name.to_string());
    Ok(out)
}
