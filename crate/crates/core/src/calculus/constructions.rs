use super::tangent::counit_row;
use super::{CalculusError, FirstOrderCalculus, Handedness, Provenance, QuotientIdeal, TangentSpace};
use crate::field::{Field, Matrix, Subspace};
use crate::hopf::{CalculusSide, HopfElement, HopfPair, Side};

/// Sum of the group elements in a conjugacy class, central in CG.
pub fn class_sum<F: Field>(pair: &HopfPair, class: usize) -> HopfElement<F> {
    let cs = pair.group().conjugacy_classes();
    HopfElement::from_terms(Side::Group, cs.classes[class].iter().map(|&g| (g, F::one())))
}

/// Indicator function of a set of elements, in C(G).
pub fn class_function<F: Field>(elements: impl IntoIterator<Item = usize>) -> HopfElement<F> {
    HopfElement::from_terms(Side::Function, elements.into_iter().map(|g| (g, F::one())))
}

pub fn is_central<F: Field>(pair: &HopfPair, c: &HopfElement<F>) -> Result<bool, CalculusError> {
    for g in 0..pair.dim() {
        let e = HopfElement::basis(c.side(), g);
        if pair.product(c, &e)? != pair.product(&e, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks Ad(alpha) = alpha(1) S alpha(3) (x) alpha(2) = 1 (x) alpha.
pub fn ad_invariant<F: Field>(pair: &HopfPair, alpha: &HopfElement<F>) -> Result<(), String> {
    let s = alpha.side();
    let grp = pair.group();
    let mut coact = crate::hopf::TensorElement::zero((s, s));
    for (i, c) in alpha.terms() {
        for (u, v, w) in pair.coproduct2_basis(s, i) {
            if let Some(o) = pair.product_basis(s, u, grp.inverse(w)) {
                coact.add_term(o, v, c.clone());
            }
        }
    }
    let expected = crate::hopf::TensorElement::outer(&pair.unit(s), alpha);
    if coact == expected {
        Ok(())
    } else {
        Err(format!("Ad({}) differs from 1 (x) alpha", pair.render(alpha)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InnerVariant<F> {
    /// <x, a alpha> = <x, a> eps(alpha) for all a in A.
    TypeI,
    /// The same condition for a in ker(counit) only.
    TypeIExtended,
    /// <x, a alpha> = <x, a> (eps(alpha) + lambda) for a in ker(counit).
    TypeII(F),
}

/// Tangent space of an inner calculus generated by an Ad-invariant alpha in A.
pub fn inner_tangent<F: Field>(
    pair: &HopfPair,
    side: CalculusSide,
    alpha: &HopfElement<F>,
    variant: InnerVariant<F>,
) -> Result<TangentSpace<F>, CalculusError> {
    let s = side.a_side();
    if alpha.side() != s {
        return Err(CalculusError::SideMismatch);
    }
    ad_invariant(pair, alpha).map_err(CalculusError::NotAdInvariant)?;
    let n = pair.dim();
    let ea = pair.counit(alpha);
    let (probes, c) = match &variant {
        InnerVariant::TypeI => ((0..n).map(|u| HopfElement::basis(s, u)).collect::<Vec<_>>(), ea.clone()),
        InnerVariant::TypeIExtended => (pair.keps_basis(s), ea.clone()),
        InnerVariant::TypeII(lambda) => (pair.keps_basis(s), ea.clone() + lambda.clone()),
    };
    // Pairing with the unit of A cuts out ker(counit) in H.
    let mut rows = vec![pair.unit::<F>(s).to_dense(n)];
    for a in &probes {
        let w = pair.product(a, alpha)?.sub(&a.scale(&c));
        rows.push(w.to_dense(n));
    }
    // Rows are vectors in A; the pairing with H is the identity matrix.
    let constraints = Subspace::from_vectors(n, rows)?;
    let l = constraints.annihilator(&Matrix::identity(n))?;
    let provenance = match variant {
        InnerVariant::TypeI => Provenance::InnerI { alpha: alpha.clone() },
        InnerVariant::TypeIExtended => Provenance::InnerIExtended { alpha: alpha.clone() },
        InnerVariant::TypeII(lambda) => Provenance::InnerII { alpha: alpha.clone(), lambda },
    };
    TangentSpace::from_subspace(pair, side, &l, provenance)
}

/// x_a = <a, c(1)> c(2) - <a, c> 1.
fn central_vector<F: Field>(pair: &HopfPair, c: &HopfElement<F>, a: &HopfElement<F>) -> Result<HopfElement<F>, CalculusError> {
    let hs = c.side();
    let mut out = HopfElement::zero(hs);
    for (i, ci) in c.terms() {
        for (u, v) in pair.coproduct_basis(hs, i) {
            let au = a.coeff(u);
            if !au.is_zero() {
                out.add_term(v, au * ci.clone());
            }
        }
    }
    out.add_scaled(&pair.unit(hs), &-pair.pairing(a, c)?);
    Ok(out)
}

/// Centrally generated tangent space L_c (a over ker(counit) of A when
/// `restricted`, over all of A otherwise).
pub fn centrally_generated<F: Field>(
    pair: &HopfPair,
    side: CalculusSide,
    c: &HopfElement<F>,
    restricted: bool,
) -> Result<TangentSpace<F>, CalculusError> {
    if c.side() != side.h_side() {
        return Err(CalculusError::SideMismatch);
    }
    if !is_central(pair, c)? {
        return Err(CalculusError::NotCentral(pair.render(c)));
    }
    let s = side.a_side();
    let probes: Vec<HopfElement<F>> =
        if restricted { pair.keps_basis(s) } else { (0..pair.dim()).map(|u| HopfElement::basis(s, u)).collect() };
    let spanning = probes.iter().map(|a| central_vector(pair, c, a)).collect::<Result<Vec<_>, _>>()?;
    let t = TangentSpace::from_spanning(pair, side, spanning, Provenance::Central { c: c.clone(), restricted })?;
    if t.dim() == 0 {
        return Err(CalculusError::EmptyTangent(format!("c = {} generates nothing", pair.render(c))));
    }
    Ok(t)
}

/// Checks Ad_h(x_a) = x_{a(2)} <h, (S a(1)) a(3)> on full bases; returns the
/// first failure.
pub fn central_intertwiner_check<F: Field>(
    pair: &HopfPair,
    side: CalculusSide,
    c: &HopfElement<F>,
) -> Result<Option<String>, CalculusError> {
    let (s, hs) = (side.a_side(), side.h_side());
    let grp = pair.group();
    let n = pair.dim();
    let xs = (0..n).map(|u| central_vector(pair, c, &HopfElement::basis(s, u))).collect::<Result<Vec<_>, _>>()?;
    for u in 0..n {
        let d2 = pair.coproduct2_basis(s, u);
        for h in 0..n {
            let lhs = pair.double_act_h(side, &HopfElement::basis(hs, h), &xs[u])?;
            let mut rhs = HopfElement::zero(hs);
            for &(p, q, r) in &d2 {
                if pair.product_basis(s, grp.inverse(p), r) == Some(h) {
                    rhs.add_scaled(&xs[q], &F::one());
                }
            }
            if lhs != rhs {
                return Ok(Some(format!(
                    "Ad_{}(x_a) for a={}: {} vs {}",
                    pair.basis_name(hs, h),
                    pair.basis_name(s, u),
                    pair.render(&lhs),
                    pair.render(&rhs)
                )));
            }
        }
    }
    Ok(None)
}

fn mirror_rows<F: Field>(
    pair: &HopfPair,
    m: &QuotientIdeal<F>,
    c: &HopfElement<F>,
    m_first: bool,
) -> Result<Subspace<F>, CalculusError> {
    let s = m.side.a_side();
    if c.side() != m.side.h_side() {
        return Err(CalculusError::SideMismatch);
    }
    if !is_central(pair, c)? {
        return Err(CalculusError::NotCentral(pair.render(c)));
    }
    let n = pair.dim();
    let mut rows = vec![counit_row::<F>(pair, s)];
    for mv in m.subspace.basis().row_vecs() {
        let me = HopfElement::from_dense(s, &mv);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let ej = HopfElement::basis(s, j);
            let p = if m_first { pair.product(&me, &ej)? } else { pair.product(&ej, &me)? };
            row.push(pair.pairing(&p, c)?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(n, rows).kernel()?)
}

/// Mirror of a right-handed ideal: {a in ker(counit) : <m a, c> = 0 for m in M_R}.
pub fn mirror_ideal<F: Field>(pair: &HopfPair, m_r: &QuotientIdeal<F>, c: &HopfElement<F>) -> Result<QuotientIdeal<F>, CalculusError> {
    if m_r.handedness != Handedness::Right {
        return Err(CalculusError::NotAnIdeal("expected a right-handed ideal".into()));
    }
    m_r.check_stable(pair)?;
    Ok(QuotientIdeal::new(m_r.side, mirror_rows(pair, m_r, c, true)?, Handedness::Left))
}

/// Mirror of a left-handed ideal: {a in ker(counit) : <a m, c> = 0 for m in M}.
pub fn mirror_ideal_left<F: Field>(pair: &HopfPair, m_l: &QuotientIdeal<F>, c: &HopfElement<F>) -> Result<QuotientIdeal<F>, CalculusError> {
    if m_l.handedness != Handedness::Left {
        return Err(CalculusError::NotAnIdeal("expected a left-handed ideal".into()));
    }
    m_l.check_stable(pair)?;
    Ok(QuotientIdeal::new(m_l.side, mirror_rows(pair, m_l, c, false)?, Handedness::Right))
}

/// Proper Ad_R-stable right ideals of ker(counit) in C(G): spans of delta_g
/// over unions of nontrivial classes, excluding the union of all of them.
pub fn right_class_ideals<F: Field>(pair: &HopfPair) -> Result<Vec<QuotientIdeal<F>>, CalculusError> {
    let cs = pair.group().conjugacy_classes();
    let nontrivial: Vec<usize> = (1..cs.len()).collect();
    let r = nontrivial.len();
    let n = pair.dim();
    let mut out = Vec::new();
    if r == 0 {
        return Ok(out);
    }
    for mask in 0u64..(1u64 << r) - 1 {
        let mut rows = Vec::new();
        for (bit, &cl) in nontrivial.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                for &g in &cs.classes[cl] {
                    rows.push(HopfElement::<F>::basis(Side::Function, g).to_dense(n));
                }
            }
        }
        let sub = Subspace::from_vectors(n, rows)?;
        out.push(QuotientIdeal::new(CalculusSide::Functions, sub, Handedness::Right));
    }
    Ok(out)
}

fn same_setting<F: Field>(a: &FirstOrderCalculus<F>, b: &FirstOrderCalculus<F>) -> Result<(), CalculusError> {
    if a.tangent().side() != b.tangent().side() || a.pair().dim() != b.pair().dim() {
        return Err(CalculusError::SideMismatch);
    }
    Ok(())
}

/// Calculus with tangent space L1 meet L2.
pub fn calculus_meet<F: Field>(a: &FirstOrderCalculus<F>, b: &FirstOrderCalculus<F>) -> Result<FirstOrderCalculus<F>, CalculusError> {
    same_setting(a, b)?;
    let sub = a.tangent().subspace().meet(b.tangent().subspace())?;
    FirstOrderCalculus::new(TangentSpace::from_subspace(a.pair(), a.tangent().side(), &sub, Provenance::Meet)?)
}

/// Calculus with tangent space L1 + L2; keeps the chosen bases in order.
pub fn calculus_join<F: Field>(a: &FirstOrderCalculus<F>, b: &FirstOrderCalculus<F>) -> Result<FirstOrderCalculus<F>, CalculusError> {
    same_setting(a, b)?;
    let spanning = a.tangent().basis().iter().chain(b.tangent().basis()).cloned().collect();
    FirstOrderCalculus::new(TangentSpace::from_spanning(a.pair(), a.tangent().side(), spanning, Provenance::Join)?)
}

/// rank(id - Psi) on L (x) L.
pub fn exterior_rank2<F: Field>(c: &FirstOrderCalculus<F>) -> Result<usize, CalculusError> {
    let k = c.dim();
    if k == 0 {
        return Ok(0);
    }
    let mut m: Matrix<F> = Matrix::identity(k * k);
    for i in 0..k {
        for j in 0..k {
            for (&(p, q), v) in c.braid_coords(i, j) {
                let idx = (i * k + j, p * k + q);
                m[idx] = m[idx].clone() - v.clone();
            }
        }
    }
    Ok(m.rank()?)
}
