//! The dually paired Hopf algebras C(G) and CG, and the quantum double
//! acting on ker(counit).

mod double;
mod element;

pub use double::{DoubleElement, ModuleLawFailure};
pub use element::{CalculusSide, HopfElement, Side, TensorElement};

use crate::field::Field;
use crate::group::FiniteGroup;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("side mismatch: expected {expected:?}, got {got:?}")]
    SideMismatch { expected: Side, got: Side },
    #[error("element is not in the kernel of the counit")]
    NotInKerEps,
}

pub(crate) fn expect_side<F: Field>(x: &HopfElement<F>, side: Side) -> Result<(), HopfError> {
    if x.side() == side {
        Ok(())
    } else {
        Err(HopfError::SideMismatch { expected: side, got: x.side() })
    }
}

/// C(G) and CG with the pairing <g, delta_h> = [g = h].
#[derive(Debug, Clone)]
pub struct HopfPair {
    group: Arc<FiniteGroup>,
}

impl HopfPair {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        HopfPair { group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// Human-readable basis label: cycle notation on the group side,
    /// `delta(...)` on the function side.
    pub fn basis_name(&self, side: Side, i: usize) -> String {
        match side {
            Side::Group => self.group.name(i),
            Side::Function => format!("delta{}", self.group.name(i)),
        }
    }

    /// Short rendering of a sparse element.
    pub fn render<F: Field>(&self, x: &HopfElement<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x.terms().map(|(i, c)| format!("{}*{}", c, self.basis_name(x.side(), i))).collect();
        parts.join(" + ")
    }

    pub fn unit<F: Field>(&self, side: Side) -> HopfElement<F> {
        match side {
            Side::Group => HopfElement::basis(side, self.group.identity()),
            Side::Function => HopfElement::from_terms(side, (0..self.dim()).map(|i| (i, F::one()))),
        }
    }

    /// Terms of the coproduct of a basis element; all coefficients are 1.
    pub fn coproduct_basis(&self, side: Side, i: usize) -> Vec<(usize, usize)> {
        match side {
            Side::Group => vec![(i, i)],
            Side::Function => (0..self.dim()).map(|u| (u, self.group.mul(self.group.inverse(u), i))).collect(),
        }
    }

    /// Terms of the double coproduct of a basis element.
    pub fn coproduct2_basis(&self, side: Side, i: usize) -> Vec<(usize, usize, usize)> {
        let g = &self.group;
        match side {
            Side::Group => vec![(i, i, i)],
            Side::Function => {
                let n = self.dim();
                let mut out = Vec::with_capacity(n * n);
                for u in 0..n {
                    for v in 0..n {
                        let uv = g.mul(u, v);
                        out.push((u, v, g.mul(g.inverse(uv), i)));
                    }
                }
                out
            }
        }
    }

    /// Product of two basis elements, `None` when it vanishes.
    pub fn product_basis(&self, side: Side, i: usize, j: usize) -> Option<usize> {
        match side {
            Side::Group => Some(self.group.mul(i, j)),
            Side::Function => (i == j).then_some(i),
        }
    }

    pub fn counit_basis(&self, side: Side, i: usize) -> bool {
        match side {
            Side::Group => true,
            Side::Function => i == self.group.identity(),
        }
    }

    pub fn coproduct<F: Field>(&self, x: &HopfElement<F>) -> TensorElement<F> {
        let mut t = TensorElement::zero((x.side(), x.side()));
        for (i, c) in x.terms() {
            for (u, v) in self.coproduct_basis(x.side(), i) {
                t.add_term(u, v, c.clone());
            }
        }
        t
    }

    pub fn antipode<F: Field>(&self, x: &HopfElement<F>) -> HopfElement<F> {
        HopfElement::from_terms(x.side(), x.terms().map(|(i, c)| (self.group.inverse(i), c.clone())))
    }

    /// S^-1; equal to S for finite groups but kept separate so formulas read
    /// as written.
    pub fn inverse_antipode<F: Field>(&self, x: &HopfElement<F>) -> HopfElement<F> {
        self.antipode(x)
    }

    pub fn counit<F: Field>(&self, x: &HopfElement<F>) -> F {
        x.terms().filter(|&(i, _)| self.counit_basis(x.side(), i)).fold(F::zero(), |acc, (_, c)| acc + c.clone())
    }

    pub fn product<F: Field>(&self, x: &HopfElement<F>, y: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        expect_side(y, x.side())?;
        let mut out = HopfElement::zero(x.side());
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                if let Some(k) = self.product_basis(x.side(), i, j) {
                    out.add_term(k, a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// Bilinear extension of <g, delta_h> = [g = h]; arguments on opposite
    /// sides in either order.
    pub fn pairing<F: Field>(&self, x: &HopfElement<F>, y: &HopfElement<F>) -> Result<F, HopfError> {
        expect_side(y, x.side().dual())?;
        Ok(x.terms().fold(F::zero(), |acc, (i, c)| {
            let d = y.coeff(i);
            if d.is_zero() {
                acc
            } else {
                acc + c.clone() * d
            }
        }))
    }

    /// Basis of ker(counit): g - e on the group side, delta_g (g != e) on
    /// the function side.
    pub fn keps_basis<F: Field>(&self, side: Side) -> Vec<HopfElement<F>> {
        let e = self.group.identity();
        (0..self.dim())
            .filter(|&g| g != e)
            .map(|g| match side {
                Side::Group => HopfElement::from_terms(side, [(g, F::one()), (e, -F::one())]),
                Side::Function => HopfElement::basis(side, g),
            })
            .collect()
    }

    fn check_keps<F: Field>(&self, x: &HopfElement<F>) -> Result<(), HopfError> {
        if self.counit(x).is_zero() {
            Ok(())
        } else {
            Err(HopfError::NotInKerEps)
        }
    }

    /// h |> x = h(1) x S h(2), for h and x in H.
    pub fn double_act_h<F: Field>(&self, side: CalculusSide, h: &HopfElement<F>, x: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        let hs = side.h_side();
        expect_side(h, hs)?;
        expect_side(x, hs)?;
        self.check_keps(x)?;
        let mut out = HopfElement::zero(hs);
        for (i, c) in h.terms() {
            for (u, v) in self.coproduct_basis(hs, i) {
                let sv = self.group.inverse(v);
                for (k, d) in x.terms() {
                    let Some(uk) = self.product_basis(hs, u, k) else { continue };
                    if let Some(w) = self.product_basis(hs, uk, sv) {
                        out.add_term(w, c.clone() * d.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// a |> x = <a, x(1)> x(2) - <a, x> 1, for a in A and x in ker(counit) of H.
    pub fn double_act_a<F: Field>(&self, side: CalculusSide, a: &HopfElement<F>, x: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        let hs = side.h_side();
        expect_side(a, side.a_side())?;
        expect_side(x, hs)?;
        self.check_keps(x)?;
        let mut out = HopfElement::zero(hs);
        for (k, d) in x.terms() {
            for (u, v) in self.coproduct_basis(hs, k) {
                let av = a.coeff(u);
                if !av.is_zero() {
                    out.add_term(v, av * d.clone());
                }
            }
        }
        let ax = self.pairing(a, x)?;
        out.add_scaled(&self.unit(hs), &-ax);
        Ok(out)
    }

    /// Conjugate Schroedinger action of H on A: h |> a = <S h, a(1)> a(2).
    pub fn schroedinger_act_h<F: Field>(&self, side: CalculusSide, h: &HopfElement<F>, a: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        expect_side(h, side.h_side())?;
        expect_side(a, side.a_side())?;
        let sh = self.antipode(h);
        let mut out = HopfElement::zero(side.a_side());
        for (k, d) in a.terms() {
            for (u, v) in self.coproduct_basis(side.a_side(), k) {
                let c = sh.coeff(u);
                if !c.is_zero() {
                    out.add_term(v, c * d.clone());
                }
            }
        }
        Ok(out)
    }

    /// Conjugate Schroedinger action of A on itself: b |> a = (S^-1 b(2)) a b(1).
    pub fn schroedinger_act_a<F: Field>(&self, side: CalculusSide, b: &HopfElement<F>, a: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        let s = side.a_side();
        expect_side(b, s)?;
        expect_side(a, s)?;
        let mut out = HopfElement::zero(s);
        for (i, c) in b.terms() {
            for (u, v) in self.coproduct_basis(s, i) {
                let left = HopfElement::basis(s, v);
                let t = self.product(&self.product(&self.inverse_antipode(&left), a)?, &HopfElement::basis(s, u))?;
                out.add_scaled(&t, c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::group::{group_from_spec, GroupSpec, DEFAULT_CAP};

    type E = HopfElement<Rational>;

    fn pair(s: &str) -> HopfPair {
        HopfPair::new(Arc::new(group_from_spec(&GroupSpec::from_short(s).unwrap(), DEFAULT_CAP).unwrap()))
    }

    #[test]
    fn z2_delta_coproduct() {
        let p = pair("Z2");
        let t = p.coproduct(&E::basis(Side::Function, 0));
        let terms: Vec<_> = t.terms().map(|(k, _)| k).collect();
        assert_eq!(terms, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn conjugation_example() {
        let p = pair("S3");
        let g = p.group();
        let t = g.parse_element("(1,2)").unwrap();
        let c = g.parse_element("(1,2,3)").unwrap();
        let x = E::from_terms(Side::Group, [(t, Rational::from_integer(1.into())), (0, Rational::from_integer((-1).into()))]);
        let y = p.double_act_h(CalculusSide::Functions, &E::basis(Side::Group, c), &x).unwrap();
        let want = g.parse_element("(1,3)").unwrap();
        assert_eq!(y, E::from_terms(Side::Group, [(want, Rational::from_integer(1.into())), (0, Rational::from_integer((-1).into()))]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = pair("S3");
        let e = E::basis(Side::Group, 0);
        assert_eq!(p.double_act_h(CalculusSide::Functions, &e, &e), Err(HopfError::NotInKerEps));
        assert!(matches!(p.product(&e, &E::basis(Side::Function, 0)), Err(HopfError::SideMismatch { .. })));
        assert!(p.pairing(&e, &e).is_err());
    }
}

#[cfg(test)]
mod law_tests {
    use super::*;
    use crate::field::Rational;
    use crate::group::{group_from_spec, GroupSpec, DEFAULT_CAP};

    #[test]
    fn module_laws_s3_both_sides() {
        let p = HopfPair::new(Arc::new(group_from_spec(&GroupSpec::from_short("S3").unwrap(), DEFAULT_CAP).unwrap()));
        for side in [CalculusSide::Functions, CalculusSide::GroupAlgebra] {
            assert_eq!(p.check_double_module_law::<Rational>(side), Ok(()), "{side:?}");
            assert_eq!(p.check_schroedinger_module_law::<Rational>(side), Ok(()), "{side:?} schroedinger");
        }
    }
}
