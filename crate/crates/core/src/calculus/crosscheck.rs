use super::{
    central_intertwiner_check, centrally_generated, class_function, class_sum, ideal_from_tangent, inner_tangent,
    mirror_ideal, mirror_ideal_left, right_class_ideals, CalculusError, FunctionClassification, Handedness, InnerVariant,
    QuotientIdeal, TangentSpace,
};
use crate::field::Rational;
use crate::hopf::CalculusSide;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// Outcome of one identity checked over all classes of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: String,
    /// Number of instances compared.
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CrossCheck {
    fn new(name: &str, instances: usize, counterexample: Option<String>) -> Self {
        CrossCheck {
            name: name.into(),
            status: if counterexample.is_none() { "pass" } else { "fail" }.into(),
            instances,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Inner, central and mirror identities relating the class calculi on C(G):
///
/// - inner_type_I: alpha = indicator of C and e gives the class tangent;
/// - inner_type_II: alpha = indicator of C with lambda = 1 gives it too;
/// - central: the class sum regenerates it and intertwines the double action;
/// - mirror_zero / mirror_keps: mirror({0}) = ker(counit) and
///   mirror(ker(counit), c) is the ideal of L_c;
/// - mirror_double: M lies in the double mirror of M for every proper
///   class-union right ideal.
pub fn function_cross_checks(c: &FunctionClassification) -> Result<Vec<CrossCheck>, CalculusError> {
    let pair = &c.pair;
    let g = pair.group();
    let side = CalculusSide::Functions;
    let n = pair.dim();
    let e = g.identity();
    let one = Rational::one();
    let classes = &g.conjugacy_classes().classes;
    let mut out = Vec::new();

    let mut inner_i = None;
    let mut inner_ii = None;
    let mut central = None;
    for cc in &c.calculi {
        let rep = g.name(cc.representative);
        let members = &classes[cc.class];
        let alpha_i = class_function::<Rational>(members.iter().copied().chain([e]));
        let t1 = inner_tangent(pair, side, &alpha_i, InnerVariant::TypeI)?;
        if inner_i.is_none() && t1.subspace() != cc.tangent.subspace() {
            inner_i = Some(format!("class of {rep}: dim {} vs {}", t1.dim(), cc.tangent.dim()));
        }
        let alpha_ii = class_function::<Rational>(members.iter().copied());
        let t2 = inner_tangent(pair, side, &alpha_ii, InnerVariant::TypeII(one.clone()))?;
        if inner_ii.is_none() && t2.subspace() != cc.tangent.subspace() {
            inner_ii = Some(format!("class of {rep}: dim {} vs {}", t2.dim(), cc.tangent.dim()));
        }
        let sum = class_sum::<Rational>(pair, cc.class);
        let lc = centrally_generated(pair, side, &sum, true)?;
        if central.is_none() {
            if lc.subspace() != cc.tangent.subspace() {
                central = Some(format!("class sum of {rep}: dim {} vs {}", lc.dim(), cc.tangent.dim()));
            } else if let Some(w) = central_intertwiner_check(pair, side, &sum)? {
                central = Some(format!("class sum of {rep}: {w}"));
            }
        }
    }
    let k = c.calculi.len();
    out.push(CrossCheck::new("inner_type_I", k, inner_i));
    out.push(CrossCheck::new("inner_type_II", k, inner_ii));
    out.push(CrossCheck::new("central", k, central));

    let zero = QuotientIdeal::new(side, crate::field::Subspace::zero(n), Handedness::Right);
    let keps = ideal_from_tangent(&TangentSpace::<Rational>::zero(pair, side)?)?;
    let keps_r = QuotientIdeal::new(side, keps.subspace.clone(), Handedness::Right);
    let ideals = right_class_ideals::<Rational>(pair)?;
    let mut m_zero = None;
    let mut m_keps = None;
    let mut m_double = None;
    for cc in &c.calculi {
        let rep = g.name(cc.representative);
        let sum = class_sum::<Rational>(pair, cc.class);
        let mz = mirror_ideal(pair, &zero, &sum)?;
        if m_zero.is_none() && mz.subspace != keps.subspace {
            m_zero = Some(format!("c = class sum of {rep}: dim {} vs {}", mz.dim(), keps.dim()));
        }
        let lc = centrally_generated(pair, side, &sum, true)?;
        let mk = mirror_ideal(pair, &keps_r, &sum)?;
        let ideal_lc = ideal_from_tangent(&lc)?;
        if m_keps.is_none() && mk.subspace != ideal_lc.subspace {
            m_keps = Some(format!("c = class sum of {rep}: dim {} vs {}", mk.dim(), ideal_lc.dim()));
        }
        for (i, m) in ideals.iter().enumerate() {
            let once = mirror_ideal(pair, m, &sum)?;
            let twice = mirror_ideal_left(pair, &once, &sum)?;
            if m_double.is_none() && !m.subspace.is_subspace_of(&twice.subspace) {
                m_double = Some(format!("ideal #{i} (dim {}) with c = class sum of {rep}", m.dim()));
            }
        }
    }
    out.push(CrossCheck::new("mirror_zero", k, m_zero));
    out.push(CrossCheck::new("mirror_keps", k, m_keps));
    out.push(CrossCheck::new("mirror_double", k * ideals.len(), m_double));
    Ok(out)
}
