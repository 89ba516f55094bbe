use crate::config::Format;
use anyhow::Result;
use qtangent::calculus::{Check, CheckStatus, ClassificationReport, CrossCheck};
use qtangent::hopf::CalculusSide;
use qtangent::uq::QSuiteReport;
use serde::Serialize;
use std::fmt::Write as _;

/// What the flat formats need; JSON is the full report.
pub enum Summary {
    Classification(Vec<ClassificationReport>),
    Verify(Vec<ClassificationReport>, Vec<CrossCheck>),
    Tangent(CalculusSide, usize, Vec<(Check, CheckStatus)>),
    Qsuite(QSuiteReport),
}

pub struct Rendered {
    json: String,
    summary: Summary,
}

impl Rendered {
    pub fn new<T: Serialize>(report: &T, summary: Summary) -> Result<Self> {
        let mut json = serde_json::to_string_pretty(report)?;
        json.push('\n');
        Ok(Rendered { json, summary })
    }

    pub fn format(&self, f: Format) -> Result<String> {
        Ok(match f {
            Format::Json => self.json.clone(),
            Format::Csv => self.csv()?,
            Format::Text => self.text(),
        })
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.summary {
            Summary::Classification(rs) | Summary::Verify(rs, _) => {
                w.write_record(["group", "side", "kind", "dimension", "label", "parameter_space", "exterior_rank2", "verified"])?;
                for r in rs {
                    for c in &r.calculi {
                        let label = c.class_representative.clone().unwrap_or_else(|| {
                            c.instantiation.as_ref().map_or(String::new(), |i| lambda_label(&i.lambda_support))
                        });
                        let ok = c.verification.values().all(|v| v.status != "fail");
                        w.write_record([
                            r.group.as_str(),
                            r.side.as_str(),
                            c.kind.as_str(),
                            &c.dimension.to_string(),
                            &label,
                            c.parameter_space.as_deref().unwrap_or(""),
                            &c.exterior_rank2.to_string(),
                            if ok { "pass" } else { "fail" },
                        ])?;
                    }
                }
                if let Summary::Verify(rs, cross) = &self.summary {
                    let group = rs.first().map_or("", |r| r.group.as_str());
                    for x in cross {
                        w.write_record([group, "functions", "cross_check", "", x.name.as_str(), "", "", x.status.as_str()])?;
                    }
                }
            }
            Summary::Tangent(side, dim, outcomes) => {
                w.write_record(["side", "dimension", "check", "status"])?;
                for (c, s) in outcomes {
                    w.write_record([side.as_str(), &dim.to_string(), c.name(), s.label()])?;
                }
            }
            Summary::Qsuite(r) => {
                w.write_record(["check", "status", "detail"])?;
                for c in &r.checks {
                    w.write_record([c.check.as_str(), c.status.as_str(), c.detail.as_deref().unwrap_or("")])?;
                }
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match &self.summary {
            Summary::Classification(rs) | Summary::Verify(rs, _) => {
                for r in rs {
                    let _ = writeln!(out, "{} (order {}), side {}", r.group, r.order, r.side.as_str());
                    for c in &r.calculi {
                        let what = match (&c.class_representative, &c.parameter_space) {
                            (Some(rep), _) => format!("class of {rep}"),
                            (None, Some(ps)) => format!("character of degree {}, {ps}", c.dimension),
                            _ => String::new(),
                        };
                        let fails: Vec<&str> =
                            c.verification.iter().filter(|(_, v)| v.status == "fail").map(|(k, _)| k.as_str()).collect();
                        let verdict = if fails.is_empty() { "all checks pass".to_string() } else { format!("FAILED: {}", fails.join(", ")) };
                        let _ = writeln!(
                            out,
                            "  {} {what}: dim {}, exterior rank 2 = {}, {verdict}",
                            c.kind, c.dimension, c.exterior_rank2
                        );
                        if let Some(i) = &c.instantiation {
                            let _ = writeln!(
                                out,
                                "    lambda-hat = {} ({}), tangent dim {}, rank {}",
                                lambda_label(&i.lambda_support),
                                i.source,
                                i.tangent_dimension,
                                i.rank
                            );
                        }
                    }
                    let _ = writeln!(out, "  dimensions sum to {} of {}", r.direct_sum.dimension_sum, r.direct_sum.expected);
                }
                if let Summary::Verify(_, cross) = &self.summary {
                    for x in cross {
                        let _ = writeln!(out, "  cross-check {}: {} ({} instances)", x.name, x.status, x.instances);
                    }
                }
            }
            Summary::Tangent(side, dim, outcomes) => {
                let _ = writeln!(out, "tangent space on side {}, dim {dim}", side.as_str());
                for (c, s) in outcomes {
                    match s {
                        CheckStatus::Fail(w) => {
                            let _ = writeln!(out, "  {c}: fail ({w})");
                        }
                        _ => {
                            let _ = writeln!(out, "  {c}: {}", s.label());
                        }
                    }
                }
            }
            Summary::Qsuite(r) => {
                let _ = writeln!(out, "U_q(sl2) spin-1/2 suite, max degree {}", r.max_degree);
                for c in &r.checks {
                    let _ = writeln!(out, "  {}: {} ({})", c.check, c.status, c.detail.as_deref().unwrap_or(""));
                }
            }
        }
        out
    }
}

fn lambda_label(support: &[(String, String)]) -> String {
    support.iter().map(|(g, c)| if c == "1" { g.clone() } else { format!("({c})*{g}") }).collect::<Vec<_>>().join(" + ")
}
