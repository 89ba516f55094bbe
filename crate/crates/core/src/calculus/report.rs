use super::{
    exterior_rank2, verify_calculus, CalculusError, Check, CheckStatus, FirstOrderCalculus, FunctionClassification,
    GroupAlgebraClassification, TangentSpace,
};
use crate::field::Field;
use crate::hopf::CalculusSide;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantiationRecord {
    /// (element in cycle notation, coefficient) pairs of lambda-hat.
    pub lambda_support: Vec<(String, String)>,
    /// "search" or "user".
    pub source: String,
    pub rank: usize,
    pub coirreducible: bool,
    pub tangent_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalculusRecord {
    pub kind: String,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_representative: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character_row: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter_space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instantiation: Option<InstantiationRecord>,
    pub exterior_rank2: usize,
    pub verification: BTreeMap<String, CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unbraided_leibniz_witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumRecord {
    pub dimension_sum: usize,
    pub expected: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: String,
    pub order: usize,
    pub side: CalculusSide,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<u32>,
    pub calculi: Vec<CalculusRecord>,
    pub direct_sum: DirectSumRecord,
}

impl ClassificationReport {
    /// False when any check failed or the decomposition does not add up.
    pub fn all_passed(&self) -> bool {
        self.direct_sum.holds && self.calculi.iter().all(|c| c.verification.values().all(|r| r.status != "fail"))
    }
}

fn analyse<F: Field>(
    t: &TangentSpace<F>,
    checks: &[Check],
) -> Result<(usize, BTreeMap<String, CheckRecord>, Option<String>), CalculusError> {
    let calc = FirstOrderCalculus::new(t.clone())?;
    let rank = exterior_rank2(&calc)?;
    let v = verify_calculus(&calc, checks)?;
    let mut map = BTreeMap::new();
    for (check, status) in &v.outcomes {
        let counterexample = match status {
            CheckStatus::Fail(w) => Some(w.clone()),
            _ => None,
        };
        map.insert(check.name().to_string(), CheckRecord { status: status.label().into(), counterexample });
    }
    Ok((rank, map, v.unbraided_leibniz_witness))
}

pub fn functions_report(c: &FunctionClassification, checks: &[Check]) -> Result<ClassificationReport, CalculusError> {
    let g = c.pair.group();
    let mut calculi = Vec::new();
    for cc in &c.calculi {
        let (rank, verification, witness) = analyse(&cc.tangent, checks)?;
        calculi.push(CalculusRecord {
            kind: "conjugacy_class".into(),
            dimension: cc.tangent.dim(),
            class_representative: Some(g.name(cc.representative)),
            character_row: None,
            parameter_space: None,
            instantiation: None,
            exterior_rank2: rank,
            verification,
            unbraided_leibniz_witness: witness,
        });
    }
    let dimension_sum = calculi.iter().map(|r| r.dimension).sum();
    Ok(ClassificationReport {
        group: g.label().to_string(),
        order: g.order(),
        side: CalculusSide::Functions,
        conductor: None,
        calculi,
        direct_sum: DirectSumRecord { dimension_sum, expected: g.order() - 1, holds: c.direct_sum },
    })
}

pub fn group_algebra_report(c: &GroupAlgebraClassification, checks: &[Check]) -> Result<ClassificationReport, CalculusError> {
    let g = c.pair.group();
    let mut calculi = Vec::new();
    for fam in &c.families {
        let inst = &fam.instantiation;
        let (rank, verification, witness) = analyse(&inst.tangent, checks)?;
        let lambda_support = inst.lambda_hat.terms().map(|(h, v)| (g.name(h), v.to_string())).collect();
        calculi.push(CalculusRecord {
            kind: "character_family".into(),
            dimension: fam.degree as usize,
            class_representative: None,
            character_row: Some(c.table.rows[fam.row].iter().map(|v| v.to_string()).collect()),
            parameter_space: Some(format!("CP^{}", fam.degree - 1)),
            instantiation: Some(InstantiationRecord {
                lambda_support,
                source: if inst.subgroup.is_some() { "search" } else { "user" }.into(),
                rank: inst.rank,
                coirreducible: inst.coirreducible,
                tangent_dimension: inst.tangent.dim(),
            }),
            exterior_rank2: rank,
            verification,
            unbraided_leibniz_witness: witness,
        });
    }
    let dimension_sum = c.block_dim_sum();
    Ok(ClassificationReport {
        group: g.label().to_string(),
        order: g.order(),
        side: CalculusSide::GroupAlgebra,
        conductor: Some(c.table.conductor),
        calculi,
        direct_sum: DirectSumRecord { dimension_sum, expected: g.order() - 1, holds: dimension_sum + 1 == g.order() },
    })
}
