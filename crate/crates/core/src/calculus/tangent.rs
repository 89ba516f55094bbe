use super::CalculusError;
use crate::field::{Field, Matrix, SpanBuilder, Subspace};
use crate::hopf::{CalculusSide, HopfElement, HopfPair, Side};

/// Where a tangent space came from. Inner constructions keep their alpha so
/// the inner identities can be checked later.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance<F> {
    ConjugacyClass { class: usize, representative: String },
    CharacterFamily { row: usize, lambda_hat: HopfElement<F> },
    InnerI { alpha: HopfElement<F> },
    InnerIExtended { alpha: HopfElement<F> },
    InnerII { alpha: HopfElement<F>, lambda: F },
    Central { c: HopfElement<F>, restricted: bool },
    Meet,
    Join,
    IdealDual,
    Universal,
    User,
}

impl<F> Provenance<F> {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::ConjugacyClass { .. } => "conjugacy_class",
            Provenance::CharacterFamily { .. } => "character_family",
            Provenance::InnerI { .. } => "inner_I",
            Provenance::InnerIExtended { .. } => "inner_I_extended",
            Provenance::InnerII { .. } => "inner_II",
            Provenance::Central { .. } => "central",
            Provenance::Meet => "meet",
            Provenance::Join => "join",
            Provenance::IdealDual => "ideal_dual",
            Provenance::Universal => "universal",
            Provenance::User => "user",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityCertificate {
    Stable,
    /// First failure in basis order.
    Unstable(String),
}

/// A subspace L of ker(counit) in H together with a chosen basis.
#[derive(Debug, Clone)]
pub struct TangentSpace<F> {
    pair: HopfPair,
    side: CalculusSide,
    subspace: Subspace<F>,
    basis: Vec<HopfElement<F>>,
    /// Inverse of the change of basis from chosen to canonical rows.
    to_chosen: Matrix<F>,
    provenance: Provenance<F>,
    certificate: StabilityCertificate,
}

impl<F: Field> TangentSpace<F> {
    /// Keeps the independent vectors of `spanning` in order as the basis and
    /// records whether the span is stable under the double action.
    pub fn from_spanning(
        pair: &HopfPair,
        side: CalculusSide,
        spanning: Vec<HopfElement<F>>,
        provenance: Provenance<F>,
    ) -> Result<Self, CalculusError> {
        let n = pair.dim();
        let hs = side.h_side();
        let mut basis = Vec::new();
        let mut rows: Vec<Vec<F>> = Vec::new();
        let mut span = SpanBuilder::new();
        for v in spanning {
            if v.side() != hs {
                return Err(CalculusError::SideMismatch);
            }
            if !pair.counit(&v).is_zero() {
                return Err(CalculusError::NotInKerEps(pair.render(&v)));
            }
            if span.insert(v.terms().map(|(i, c)| (i, c.clone())).collect()) {
                rows.push(v.to_dense(n));
                basis.push(v);
            }
        }
        let subspace = Subspace::from_vectors(n, rows)?;
        let to_chosen = change_of_basis(&subspace, &basis, n)?;
        let mut t = TangentSpace {
            pair: pair.clone(),
            side,
            subspace,
            basis,
            to_chosen,
            provenance,
            certificate: StabilityCertificate::Stable,
        };
        t.certificate = t.compute_certificate()?;
        Ok(t)
    }

    /// Uses the canonical basis of a subspace.
    pub fn from_subspace(pair: &HopfPair, side: CalculusSide, subspace: &Subspace<F>, provenance: Provenance<F>) -> Result<Self, CalculusError> {
        let hs = side.h_side();
        let vecs = subspace.basis().row_vecs().into_iter().map(|r| HopfElement::from_dense(hs, &r)).collect();
        TangentSpace::from_spanning(pair, side, vecs, provenance)
    }

    pub fn universal(pair: &HopfPair, side: CalculusSide) -> Result<Self, CalculusError> {
        TangentSpace::from_spanning(pair, side, pair.keps_basis(side.h_side()), Provenance::Universal)
    }

    pub fn zero(pair: &HopfPair, side: CalculusSide) -> Result<Self, CalculusError> {
        TangentSpace::from_spanning(pair, side, Vec::new(), Provenance::User)
    }

    fn compute_certificate(&self) -> Result<StabilityCertificate, CalculusError> {
        let n = self.pair.dim();
        let (hs, as_) = (self.side.h_side(), self.side.a_side());
        for h in 0..n {
            let he = HopfElement::basis(hs, h);
            for (i, x) in self.basis.iter().enumerate() {
                let y = self.pair.double_act_h(self.side, &he, x)?;
                if !self.subspace.contains(&y.to_dense(n)) {
                    return Ok(StabilityCertificate::Unstable(format!(
                        "{} |> x{i} = {} is not in L",
                        self.pair.basis_name(hs, h),
                        self.pair.render(&y)
                    )));
                }
            }
        }
        for a in 0..n {
            let ae = HopfElement::basis(as_, a);
            for (i, x) in self.basis.iter().enumerate() {
                let y = self.pair.double_act_a(self.side, &ae, x)?;
                if !self.subspace.contains(&y.to_dense(n)) {
                    return Ok(StabilityCertificate::Unstable(format!(
                        "{} |> x{i} = {} is not in L",
                        self.pair.basis_name(as_, a),
                        self.pair.render(&y)
                    )));
                }
            }
        }
        Ok(StabilityCertificate::Stable)
    }

    pub fn pair(&self) -> &HopfPair {
        &self.pair
    }

    pub fn side(&self) -> CalculusSide {
        self.side
    }

    pub fn h_side(&self) -> Side {
        self.side.h_side()
    }

    pub fn a_side(&self) -> Side {
        self.side.a_side()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn subspace(&self) -> &Subspace<F> {
        &self.subspace
    }

    pub fn basis(&self) -> &[HopfElement<F>] {
        &self.basis
    }

    pub fn provenance(&self) -> &Provenance<F> {
        &self.provenance
    }

    pub fn certificate(&self) -> &StabilityCertificate {
        &self.certificate
    }

    pub fn is_stable(&self) -> bool {
        self.certificate == StabilityCertificate::Stable
    }

    pub fn require_stable(&self) -> Result<(), CalculusError> {
        match &self.certificate {
            StabilityCertificate::Stable => Ok(()),
            StabilityCertificate::Unstable(why) => Err(CalculusError::NotStable(why.clone())),
        }
    }

    pub fn with_provenance(mut self, provenance: Provenance<F>) -> Self {
        self.provenance = provenance;
        self
    }

    /// Coordinates in the chosen basis, `None` when outside L.
    pub fn coords(&self, x: &HopfElement<F>) -> Option<Vec<F>> {
        if x.side() != self.h_side() {
            return None;
        }
        let canon = self.subspace.coordinates(&x.to_dense(self.pair.dim()))?;
        Some(self.to_chosen.vec_mul(&canon))
    }

    /// The element with the given coordinates.
    pub fn element(&self, coords: &[F]) -> HopfElement<F> {
        let mut out = HopfElement::zero(self.h_side());
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(b, c);
        }
        out
    }
}

/// Matrix C with canonical coordinates times C = chosen coordinates.
fn change_of_basis<F: Field>(sub: &Subspace<F>, basis: &[HopfElement<F>], n: usize) -> Result<Matrix<F>, CalculusError> {
    let k = basis.len();
    let rows: Vec<Vec<F>> = basis.iter().map(|b| sub.coordinates(&b.to_dense(n)).expect("basis vector in its own span")).collect();
    let t = Matrix::from_rows(k, rows);
    Ok(t.inverse()?.expect("chosen basis is independent"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
}

/// A subspace M of ker(counit) in A defining a calculus by quotient.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientIdeal<F> {
    pub side: CalculusSide,
    pub subspace: Subspace<F>,
    pub handedness: Handedness,
}

impl<F: Field> QuotientIdeal<F> {
    pub fn new(side: CalculusSide, subspace: Subspace<F>, handedness: Handedness) -> Self {
        QuotientIdeal { side, subspace, handedness }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Checks the ideal property and stability under Ad (left) or Ad_R
    /// (right), returning the first failure.
    pub fn check_stable(&self, pair: &HopfPair) -> Result<(), CalculusError> {
        let n = pair.dim();
        let s = self.side.a_side();
        let grp = pair.group();
        let basis: Vec<HopfElement<F>> = self.subspace.basis().row_vecs().iter().map(|r| HopfElement::from_dense(s, r)).collect();
        for (mi, m) in basis.iter().enumerate() {
            if !pair.counit(m).is_zero() {
                return Err(CalculusError::NotAnIdeal(format!("basis vector {mi} has nonzero counit")));
            }
            for b in 0..n {
                let be = HopfElement::basis(s, b);
                let prod = match self.handedness {
                    Handedness::Left => pair.product(&be, m)?,
                    Handedness::Right => pair.product(m, &be)?,
                };
                if !self.subspace.contains(&prod.to_dense(n)) {
                    return Err(CalculusError::NotAnIdeal(format!("{} times m{mi} leaves M", pair.basis_name(s, b))));
                }
            }
            // Left: Ad(m) = m(1) S m(3) (x) m(2), second leg must lie in M.
            // Right: Ad_R(m) = m(2) (x) (S m(1)) m(3), first leg must lie in M.
            let mut legs: std::collections::BTreeMap<usize, HopfElement<F>> = std::collections::BTreeMap::new();
            for (i, c) in m.terms() {
                for (u, v, w) in pair.coproduct2_basis(s, i) {
                    let (outer, inner) = match self.handedness {
                        Handedness::Left => (pair.product_basis(s, u, grp.inverse(w)), v),
                        Handedness::Right => (pair.product_basis(s, grp.inverse(u), w), v),
                    };
                    if let Some(o) = outer {
                        legs.entry(o).or_insert_with(|| HopfElement::zero(s)).add_term(inner, c.clone());
                    }
                }
            }
            for (o, leg) in legs {
                if !self.subspace.contains(&leg.to_dense(n)) {
                    return Err(CalculusError::NotAnIdeal(format!(
                        "adjoint coaction of m{mi} has leg {} outside M (paired with {})",
                        pair.render(&leg),
                        pair.basis_name(s, o)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Counit functional on a side as a row vector.
pub(crate) fn counit_row<F: Field>(pair: &HopfPair, side: Side) -> Vec<F> {
    (0..pair.dim()).map(|i| if pair.counit_basis(side, i) { F::one() } else { F::zero() }).collect()
}

/// M = {a in ker(counit) of A : <x, a> = 0 for x in L}.
pub fn ideal_from_tangent<F: Field>(t: &TangentSpace<F>) -> Result<QuotientIdeal<F>, CalculusError> {
    t.require_stable()?;
    let pair = t.pair();
    let n = pair.dim();
    let unit = pair.unit::<F>(t.h_side()).to_dense(n);
    let with_unit = t.subspace().join(&Subspace::from_vectors(n, vec![unit])?)?;
    let m = with_unit.annihilator(&Matrix::identity(n))?;
    Ok(QuotientIdeal::new(t.side(), m, Handedness::Left))
}

/// L = {x in ker(counit) of H : <x, a> = 0 for a in M}.
pub fn tangent_from_ideal<F: Field>(pair: &HopfPair, m: &QuotientIdeal<F>) -> Result<TangentSpace<F>, CalculusError> {
    m.check_stable(pair)?;
    let n = pair.dim();
    let unit = pair.unit::<F>(m.side.a_side()).to_dense(n);
    let with_unit = m.subspace.join(&Subspace::from_vectors(n, vec![unit])?)?;
    let l = with_unit.annihilator(&Matrix::identity(n))?;
    let t = TangentSpace::from_subspace(pair, m.side, &l, Provenance::IdealDual)?;
    t.require_stable()?;
    Ok(t)
}
