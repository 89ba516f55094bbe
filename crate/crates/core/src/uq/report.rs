use super::checks::{classical_limit, qlier_identities, qtrace_inner_check};
use super::tangent::{
    braiding_rmatrix, bracket_adjoint, bracket_rmatrix, lc_tangent_sl2, q_images, tensor_mismatch, verify_su2_consistency,
    PbwBasis, QTangent4,
};
use super::pbw::PbwElement;
use super::{UqError, Witness};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QCheck {
    Consistency,
    DualRoute,
    Qlier,
    Lc,
    Qtrace,
    ClassicalLimit,
}

impl QCheck {
    pub const ALL: [QCheck; 6] =
        [QCheck::Consistency, QCheck::DualRoute, QCheck::Qlier, QCheck::Lc, QCheck::Qtrace, QCheck::ClassicalLimit];

    pub fn name(self) -> &'static str {
        match self {
            QCheck::Consistency => "consistency",
            QCheck::DualRoute => "dual_route",
            QCheck::Qlier => "qlier",
            QCheck::Lc => "lc",
            QCheck::Qtrace => "qtrace",
            QCheck::ClassicalLimit => "classical_limit",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        QCheck::ALL.into_iter().find(|c| c.name() == s.trim())
    }
}

impl fmt::Display for QCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCheckRecord {
    pub check: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl QCheckRecord {
    fn new(check: QCheck, pass: bool, detail: String, witness: Option<Witness>) -> Self {
        QCheckRecord {
            check: check.name().into(),
            status: if pass { "pass" } else { "fail" }.into(),
            detail: Some(detail),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSuiteReport {
    pub max_degree: usize,
    pub checks: Vec<QCheckRecord>,
}

impl QSuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

/// Runs the selected U_q(sl2) checks in canonical order. Mathematical
/// failures are recorded; only structural breakage is returned as an error.
pub fn run_qsuite(checks: &[QCheck], max_degree: usize) -> Result<QSuiteReport, UqError> {
    let wanted = |c: QCheck| checks.contains(&c);
    let mut out = Vec::new();

    if wanted(QCheck::Consistency) {
        let r = verify_su2_consistency()?;
        let ok = r.passed();
        let detail = format!("{}/{} entries of R21 R reproduced", r.checked - r.mismatches.len(), r.checked);
        out.push(QCheckRecord::new(QCheck::Consistency, ok, detail, r.mismatches.into_iter().next()));
    }

    let needs_tangent = checks.iter().any(|c| *c != QCheck::Consistency);
    if needs_tangent {
        let q_images = q_images()?;
        let xs: Vec<PbwElement> = q_images
            .iter()
            .enumerate()
            .map(|(u, q)| if u == 0 || u == 3 { q.sub(&PbwElement::one()) } else { q.clone() })
            .collect();
        let basis = PbwBasis::new(xs)?;
        let adjoint = bracket_adjoint(&basis)?;
        let t = QTangent4 { q_images, basis, bracket: adjoint, braiding: braiding_rmatrix() };

        if wanted(QCheck::DualRoute) {
            let rm = bracket_rmatrix();
            let w = tensor_mismatch("bracket", &t.bracket, &rm, 4);
            let agree = 64 - count_mismatches(&t.bracket, &rm);
            out.push(QCheckRecord::new(QCheck::DualRoute, w.is_none(), format!("{agree}/64 structure constants agree"), w));
        }
        if wanted(QCheck::Qlier) {
            let r = qlier_identities(&t.bracket, &t.braiding);
            let detail = format!(
                "bracket identity {}, braiding identity {}, braid relation {}",
                verdict(r.bracket_identity.is_none()),
                verdict(r.braiding_identity.is_none()),
                verdict(r.braid_relation.is_none())
            );
            out.push(QCheckRecord::new(QCheck::Qlier, r.passed(), detail, r.first_failure().cloned()));
        }
        if wanted(QCheck::Lc) {
            let r = lc_tangent_sl2(&t)?;
            let detail = format!("dim L_C = {}, equal to span x^i_j: {}", r.dimension, r.equal);
            out.push(QCheckRecord::new(QCheck::Lc, r.equal && r.unit_word_in_span, detail, None));
        }
        if wanted(QCheck::Qtrace) {
            let r = qtrace_inner_check(&t, max_degree)?;
            let detail = format!("{}: {} pairings, eps(alpha) = {}", r.label(), r.checked, r.eps_alpha);
            out.push(QCheckRecord::new(QCheck::Qtrace, r.passed(), detail, r.failures.into_iter().next()));
        }
        if wanted(QCheck::ClassicalLimit) {
            match classical_limit(&t) {
                Ok(r) => {
                    let kappa = r.kappa.as_ref().map_or("none".to_string(), |k| k.to_string());
                    let mu = r.casimir_eigenvalue.as_ref().map_or("none".to_string(), |k| k.to_string());
                    let detail = format!(
                        "zeroth order vanishes: {}, kappa = {kappa} (uniform: {}), trace central: {}, Lie bracket: {}, graded [c,xi] = {mu} xi, quadratic form: {}, invariant tensor fit: {}, graded braiding at s=1 is flip: {}",
                        r.zeroth_order_vanishes,
                        r.kappa_uniform,
                        r.trace_central,
                        r.antisymmetric && r.jacobi,
                        r.graded_matches_quadratic_form,
                        r.casimir_tensor_matches,
                        r.graded_braiding_is_flip
                    );
                    let witness = r.non_flip_witness.clone().map(|w| Witness::new("non-flip braiding at s=1", w, "flip"));
                    out.push(QCheckRecord::new(QCheck::ClassicalLimit, r.passed(), detail, witness));
                }
                Err(UqError::Pole(e)) => {
                    out.push(QCheckRecord::new(QCheck::ClassicalLimit, false, e.to_string(), None));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(QSuiteReport { max_degree, checks: out })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn count_mismatches(a: &[Vec<crate::field::RatFuncS>], b: &[Vec<crate::field::RatFuncS>]) -> usize {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).filter(|(p, q)| p != q).count()).sum()
}
