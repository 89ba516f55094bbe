use crate::config::{parse_combination, read_json, RunConfig, SideArg, TangentFile};
use crate::render::{Rendered, Summary};
use anyhow::{anyhow, Result};
use qtangent::calculus::{
    classify_functions, classify_group_algebra_with, function_cross_checks, functions_report, group_algebra_report,
    verify_tangent, CheckStatus, ClassificationReport, CrossCheck, Provenance, TangentSpace,
};
use qtangent::hopf::{CalculusSide, HopfElement, HopfPair, Side};
use qtangent::uq::{run_qsuite, QSuiteReport};
use qtangent::{Cyclotomic, Rational};
use serde::Serialize;
use std::sync::Arc;

/// A finished run: the report plus whether every mathematical check passed.
pub struct Outcome {
    pub rendered: Rendered,
    pub passed: bool,
    /// First failure, printed to stderr.
    pub failure: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub reports: Vec<ClassificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cross_checks: Vec<CrossCheck>,
}

#[derive(Serialize)]
pub struct TangentCheckRecord {
    pub check: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct TangentReport {
    pub group: String,
    pub side: CalculusSide,
    pub dimension: usize,
    pub checks: Vec<TangentCheckRecord>,
}

/// Failures are a math outcome (exit 2); anything raised before the
/// computation starts is an input error (exit 1).
pub enum RunError {
    Input(anyhow::Error),
    Math(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for RunError {
    fn from(e: E) -> Self {
        RunError::Input(e.into())
    }
}

fn math<E: Into<anyhow::Error>>(e: E) -> RunError {
    RunError::Math(e.into())
}

fn sides(side: SideArg) -> Vec<CalculusSide> {
    match side {
        SideArg::Functions => vec![CalculusSide::Functions],
        SideArg::GroupAlgebra => vec![CalculusSide::GroupAlgebra],
        SideArg::Both => vec![CalculusSide::Functions, CalculusSide::GroupAlgebra],
    }
}

fn lambda_hat(cfg: &RunConfig, g: &qtangent::group::FiniteGroup) -> Result<Option<HopfElement<Cyclotomic>>> {
    let Some(s) = &cfg.lambda else { return Ok(None) };
    let l = parse_combination(g, Side::Group, s)?;
    Ok(Some(HopfElement::from_terms(Side::Group, l.terms().map(|(i, c)| (i, Cyclotomic::rational(c.clone()))))))
}

fn classification(
    cfg: &RunConfig,
    group: &Arc<qtangent::group::FiniteGroup>,
    side: CalculusSide,
    lambda: Option<&HopfElement<Cyclotomic>>,
) -> Result<ClassificationReport, RunError> {
    match side {
        CalculusSide::Functions => {
            let c = classify_functions(group).map_err(math)?;
            functions_report(&c, &cfg.checks).map_err(math)
        }
        CalculusSide::GroupAlgebra => {
            let c = classify_group_algebra_with(group, lambda).map_err(math)?;
            group_algebra_report(&c, &cfg.checks).map_err(math)
        }
    }
}

fn first_failure(r: &ClassificationReport) -> Option<String> {
    if !r.direct_sum.holds {
        return Some(format!(
            "{} {}: dimensions sum to {} not {}",
            r.group,
            r.side.as_str(),
            r.direct_sum.dimension_sum,
            r.direct_sum.expected
        ));
    }
    for c in &r.calculi {
        for (name, rec) in &c.verification {
            if rec.status == "fail" {
                let what = c.class_representative.clone().unwrap_or_else(|| format!("dim {}", c.dimension));
                return Some(format!(
                    "{} {} {}: {name} failed: {}",
                    r.group,
                    c.kind,
                    what,
                    rec.counterexample.as_deref().unwrap_or("no witness")
                ));
            }
        }
    }
    None
}

pub fn classify(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let group = Arc::new(cfg.load_group()?);
    let lambda = lambda_hat(cfg, &group)?;
    let side = match cfg.side {
        SideArg::Both => return Err(RunError::Input(anyhow!("classify takes a single --side"))),
        SideArg::Functions => CalculusSide::Functions,
        SideArg::GroupAlgebra => CalculusSide::GroupAlgebra,
    };
    if lambda.is_some() && side != CalculusSide::GroupAlgebra {
        return Err(RunError::Input(anyhow!("--lambda applies to --side group_algebra")));
    }
    let report = classification(cfg, &group, side, lambda.as_ref())?;
    let failure = first_failure(&report);
    let passed = report.all_passed();
    let rendered = Rendered::new(&report, Summary::Classification(vec![report.clone()]))?;
    Ok(Outcome { rendered, passed, failure })
}

pub fn verify(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let group = Arc::new(cfg.load_group()?);
    if let Some(path) = &cfg.tangent_file {
        return verify_tangent_file(cfg, &group, path);
    }
    let lambda = lambda_hat(cfg, &group)?;
    let mut reports = Vec::new();
    let mut cross_checks = Vec::new();
    for side in sides(cfg.side) {
        reports.push(classification(cfg, &group, side, lambda.as_ref())?);
        if side == CalculusSide::Functions {
            let c = classify_functions(&group).map_err(math)?;
            cross_checks = function_cross_checks(&c).map_err(math)?;
        }
    }
    let mut failure = reports.iter().find_map(first_failure);
    if failure.is_none() {
        failure = cross_checks.iter().find(|c| !c.passed()).map(|c| {
            format!("{}: cross-check {} failed: {}", group.label(), c.name, c.counterexample.as_deref().unwrap_or(""))
        });
    }
    let passed = reports.iter().all(|r| r.all_passed()) && cross_checks.iter().all(|c| c.passed());
    let report = VerifyReport { group: group.label().to_string(), reports: reports.clone(), cross_checks: cross_checks.clone() };
    let rendered = Rendered::new(&report, Summary::Verify(reports, cross_checks))?;
    Ok(Outcome { rendered, passed, failure })
}

fn verify_tangent_file(
    cfg: &RunConfig,
    group: &Arc<qtangent::group::FiniteGroup>,
    path: &std::path::Path,
) -> Result<Outcome, RunError> {
    let file: TangentFile = read_json(path, "tangent file")?;
    let side = match file.side.as_str() {
        "functions" => CalculusSide::Functions,
        "group_algebra" => CalculusSide::GroupAlgebra,
        other => return Err(RunError::Input(anyhow!("unknown side {other:?} in tangent file"))),
    };
    let pair = HopfPair::new(group.clone());
    let elements = file
        .elements
        .iter()
        .map(|s| parse_combination(group, side.h_side(), s))
        .collect::<Result<Vec<HopfElement<Rational>>>>()?;
    let t = TangentSpace::from_spanning(&pair, side, elements, Provenance::User)?;
    let v = verify_tangent(&t, &cfg.checks).map_err(math)?;
    let checks: Vec<TangentCheckRecord> = v
        .outcomes
        .iter()
        .map(|(c, s)| TangentCheckRecord {
            check: c.name().into(),
            status: s.label().into(),
            counterexample: match s {
                CheckStatus::Fail(w) => Some(w.clone()),
                _ => None,
            },
        })
        .collect();
    let failure = checks
        .iter()
        .find(|c| c.status == "fail")
        .map(|c| format!("{} failed: {}", c.check, c.counterexample.as_deref().unwrap_or("")));
    let report = TangentReport { group: group.label().to_string(), side, dimension: t.dim(), checks };
    let passed = v.all_passed();
    let rendered = Rendered::new(&report, Summary::Tangent(report.side, report.dimension, v.outcomes.clone()))?;
    Ok(Outcome { rendered, passed, failure })
}

pub fn qsuite(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let report: QSuiteReport = run_qsuite(&cfg.qchecks, cfg.max_degree).map_err(math)?;
    let failure = report.checks.iter().find(|c| !c.passed()).map(|c| {
        let w = c.witness.as_ref().map(|w| w.to_string()).or_else(|| c.detail.clone()).unwrap_or_default();
        format!("{} failed: {w}", c.check)
    });
    let passed = report.all_passed();
    let rendered = Rendered::new(&report, Summary::Qsuite(report.clone()))?;
    Ok(Outcome { rendered, passed, failure })
}
