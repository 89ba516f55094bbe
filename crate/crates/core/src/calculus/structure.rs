use super::{CalculusError, TangentSpace};
use crate::field::{Field, Matrix};
use crate::hopf::{HopfElement, HopfPair, Side, TensorElement};
use std::collections::BTreeMap;

/// Sparse coordinates on a tensor product of two bases.
pub type Tensor2<F> = BTreeMap<(usize, usize), F>;

/// An element of Gamma = Lin(L, A): its values on the chosen basis of L.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaElement<F> {
    pub values: Vec<HopfElement<F>>,
}

impl<F: Field> GammaElement<F> {
    pub fn zero(k: usize, a_side: Side) -> Self {
        GammaElement { values: vec![HopfElement::zero(a_side); k] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Flattened sparse form, index `slot * n + a_basis`.
    pub fn to_sparse(&self, n: usize) -> BTreeMap<usize, F> {
        let mut out = BTreeMap::new();
        for (slot, v) in self.values.iter().enumerate() {
            for (w, c) in v.terms() {
                out.insert(slot * n + w, c.clone());
            }
        }
        out
    }

    pub fn from_sparse(k: usize, n: usize, a_side: Side, v: &BTreeMap<usize, F>) -> Self {
        let mut out = GammaElement::zero(k, a_side);
        for (&i, c) in v {
            out.values[i / n].add_term(i % n, c.clone());
        }
        out
    }
}

pub(crate) fn add_into<K: Ord + Copy, F: Field>(acc: &mut BTreeMap<K, F>, key: K, c: F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(v) => {
            let s = v.clone() + c;
            if s.is_zero() {
                acc.remove(&key);
            } else {
                *v = s;
            }
        }
        None => {
            acc.insert(key, c);
        }
    }
}

/// A tangent space together with its structure maps, all tabulated on the
/// chosen basis x_0..x_{k-1} of L and the basis of A.
#[derive(Debug, Clone)]
pub struct FirstOrderCalculus<F> {
    tangent: TangentSpace<F>,
    /// `a_act[u]` row j: coordinates of e_u |> x_j for the basis e_u of A.
    a_act: Vec<Matrix<F>>,
    /// `ad[h]` row j: coordinates of Ad_{e_h}(x_j) for the basis e_h of H.
    ad: Vec<Matrix<F>>,
    psi: Vec<Tensor2<F>>,
    psi_inv: Vec<Tensor2<F>>,
    bracket: Vec<Vec<F>>,
}

impl<F: Field> FirstOrderCalculus<F> {
    pub fn new(tangent: TangentSpace<F>) -> Result<Self, CalculusError> {
        tangent.require_stable()?;
        let pair = tangent.pair().clone();
        let side = tangent.side();
        let (n, k) = (pair.dim(), tangent.dim());
        let coords = |y: &HopfElement<F>| tangent.coords(y).ok_or_else(|| CalculusError::NotStable(pair.render(y)));
        let mut a_act = Vec::with_capacity(n);
        let mut ad = Vec::with_capacity(n);
        for u in 0..n {
            let ae = HopfElement::basis(side.a_side(), u);
            let he = HopfElement::basis(side.h_side(), u);
            let mut rows_a = Vec::with_capacity(k);
            let mut rows_h = Vec::with_capacity(k);
            for x in tangent.basis() {
                rows_a.push(coords(&pair.double_act_a(side, &ae, x)?)?);
                rows_h.push(coords(&pair.double_act_h(side, &he, x)?)?);
            }
            a_act.push(Matrix::from_rows(k, rows_a));
            ad.push(Matrix::from_rows(k, rows_h));
        }
        let grp = pair.group_arc().clone();
        // Psi(x (x) y) = sum_h Ad_{e_h}(y) (x) (f^h |> x), and the inverse
        // Psi^-1(y (x) x) = sum_h (S f^h |> x) (x) Ad_{e_h}(y).
        let mut psi = vec![Tensor2::new(); k * k];
        let mut psi_inv = vec![Tensor2::new(); k * k];
        for h in 0..n {
            let sh = grp.inverse(h);
            for i in 0..k {
                for j in 0..k {
                    outer_into(&mut psi[i * k + j], ad[h].row(j), a_act[h].row(i));
                    outer_into(&mut psi_inv[i * k + j], a_act[sh].row(j), ad[h].row(i));
                }
            }
        }
        let mut bracket = Vec::with_capacity(k * k);
        for x in tangent.basis() {
            for j in 0..k {
                let mut out = vec![F::zero(); k];
                for (h, c) in x.terms() {
                    for (l, v) in ad[h].row(j).iter().enumerate() {
                        if !v.is_zero() {
                            out[l] = out[l].clone() + c.clone() * v.clone();
                        }
                    }
                }
                bracket.push(out);
            }
        }
        Ok(FirstOrderCalculus { tangent, a_act, ad, psi, psi_inv, bracket })
    }

    pub fn tangent(&self) -> &TangentSpace<F> {
        &self.tangent
    }

    pub fn pair(&self) -> &HopfPair {
        self.tangent.pair()
    }

    pub fn dim(&self) -> usize {
        self.tangent.dim()
    }

    pub(crate) fn n(&self) -> usize {
        self.pair().dim()
    }

    pub(crate) fn a_side(&self) -> Side {
        self.tangent.a_side()
    }

    pub(crate) fn h_side(&self) -> Side {
        self.tangent.h_side()
    }

    pub(crate) fn a_act_row(&self, u: usize, j: usize) -> &[F] {
        self.a_act[u].row(j)
    }

    fn expect_a(&self, a: &HopfElement<F>) -> Result<(), CalculusError> {
        if a.side() == self.a_side() {
            Ok(())
        } else {
            Err(CalculusError::SideMismatch)
        }
    }

    fn expect_h(&self, h: &HopfElement<F>) -> Result<(), CalculusError> {
        if h.side() == self.h_side() {
            Ok(())
        } else {
            Err(CalculusError::SideMismatch)
        }
    }

    /// (da)(x) = <x, a(1)> a(2) for any x in H; no membership check.
    pub(crate) fn partial_unchecked(&self, x: &HopfElement<F>, a: &HopfElement<F>) -> HopfElement<F> {
        let pair = self.pair();
        let mut out = HopfElement::zero(self.a_side());
        for (i, c) in a.terms() {
            for (u, v) in pair.coproduct_basis(self.a_side(), i) {
                let xu = x.coeff(u);
                if !xu.is_zero() {
                    out.add_term(v, xu * c.clone());
                }
            }
        }
        out
    }

    /// The braided derivation d_x(a) = (da)(x).
    pub fn partial_derivative(&self, x: &HopfElement<F>, a: &HopfElement<F>) -> Result<HopfElement<F>, CalculusError> {
        self.expect_h(x)?;
        self.expect_a(a)?;
        if self.tangent.coords(x).is_none() {
            return Err(CalculusError::NotInL);
        }
        Ok(self.partial_unchecked(x, a))
    }

    pub fn differential(&self, a: &HopfElement<F>) -> Result<GammaElement<F>, CalculusError> {
        self.expect_a(a)?;
        Ok(GammaElement { values: self.tangent.basis().iter().map(|x| self.partial_unchecked(x, a)).collect() })
    }

    /// Psi(x_i (x) x_j) in coordinates on L (x) L.
    pub fn braid_coords(&self, i: usize, j: usize) -> &Tensor2<F> {
        &self.psi[i * self.dim() + j]
    }

    pub fn braid_inv_coords(&self, i: usize, j: usize) -> &Tensor2<F> {
        &self.psi_inv[i * self.dim() + j]
    }

    /// Psi on L (x) L, expanded into H (x) H.
    pub fn braiding(&self, x: &HopfElement<F>, y: &HopfElement<F>) -> Result<TensorElement<F>, CalculusError> {
        let cx = self.tangent.coords(x).ok_or(CalculusError::NotInL)?;
        let cy = self.tangent.coords(y).ok_or(CalculusError::NotInL)?;
        let mut acc = Tensor2::new();
        for (i, a) in cx.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in cy.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (&key, c) in self.braid_coords(i, j) {
                    add_into(&mut acc, key, a.clone() * b.clone() * c.clone());
                }
            }
        }
        Ok(self.expand_ll(&acc))
    }

    pub(crate) fn expand_ll(&self, t: &Tensor2<F>) -> TensorElement<F> {
        let hs = self.h_side();
        let mut out = TensorElement::zero((hs, hs));
        let basis = self.tangent.basis();
        for (&(p, q), c) in t {
            for (u, a) in basis[p].terms() {
                for (v, b) in basis[q].terms() {
                    out.add_term(u, v, c.clone() * a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Psi(x_i (x) e_u) = e_u(2) (x) (S e_u(1) |> x_i), keyed by (A basis, L slot).
    pub fn braid_la(&self, i: usize, u: usize) -> Tensor2<F> {
        let pair = self.pair();
        let grp = pair.group();
        let mut out = Tensor2::new();
        for (p, q) in pair.coproduct_basis(self.a_side(), u) {
            for (l, c) in self.a_act[grp.inverse(p)].row(i).iter().enumerate() {
                add_into(&mut out, (q, l), c.clone());
            }
        }
        out
    }

    /// Psi^-1(e_u (x) x_i) = e_u(1) |> x_i (x) e_u(2), keyed by (L slot, A basis).
    pub fn braid_al_inv(&self, u: usize, i: usize) -> Tensor2<F> {
        let pair = self.pair();
        let mut out = Tensor2::new();
        for (p, q) in pair.coproduct_basis(self.a_side(), u) {
            for (l, c) in self.a_act[p].row(i).iter().enumerate() {
                add_into(&mut out, (l, q), c.clone());
            }
        }
        out
    }

    /// Coordinates of [x_i, x_j].
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[F] {
        &self.bracket[i * self.dim() + j]
    }

    /// [x, y] = x(1) y S x(2), which lies in L.
    pub fn bracket(&self, x: &HopfElement<F>, y: &HopfElement<F>) -> Result<HopfElement<F>, CalculusError> {
        let cx = self.tangent.coords(x).ok_or(CalculusError::NotInL)?;
        let cy = self.tangent.coords(y).ok_or(CalculusError::NotInL)?;
        Ok(self.tangent.element(&self.bracket_bilinear(&cx, &cy)))
    }

    pub(crate) fn bracket_bilinear(&self, cx: &[F], cy: &[F]) -> Vec<F> {
        let k = self.dim();
        let mut out = vec![F::zero(); k];
        for (i, a) in cx.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in cy.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (l, c) in self.bracket_coords(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[l] = out[l].clone() + a.clone() * b.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    // Basis-level pieces of the Gamma structure. A Gamma basis vector is
    // "e_w on slot l": x_j maps to [j = l] e_w.

    /// h |> a = <h, a(1)> a(2) on basis elements.
    pub(crate) fn h_left_on_a(&self, h: usize, w: usize) -> Vec<usize> {
        self.pair().coproduct_basis(self.a_side(), w).into_iter().filter(|&(p, _)| p == h).map(|(_, q)| q).collect()
    }

    /// a <| h = a(1) <a(2), h> on basis elements.
    pub(crate) fn a_right_by_h(&self, w: usize, h: usize) -> Vec<usize> {
        self.pair().coproduct_basis(self.a_side(), w).into_iter().filter(|&(_, q)| q == h).map(|(p, _)| p).collect()
    }

    /// (e_u . gamma)(x_j) = e_u(2) gamma(e_u(1) |> x_j).
    pub(crate) fn left_a_basis(&self, u: usize, l: usize, w: usize) -> BTreeMap<usize, F> {
        let pair = self.pair();
        let (n, k) = (self.n(), self.dim());
        let mut out = BTreeMap::new();
        for (p, q) in pair.coproduct_basis(self.a_side(), u) {
            let Some(r) = pair.product_basis(self.a_side(), q, w) else { continue };
            for j in 0..k {
                add_into(&mut out, j * n + r, self.a_act[p][(j, l)].clone());
            }
        }
        out
    }

    /// (gamma . e_u)(x) = gamma(x) e_u.
    pub(crate) fn right_a_basis(&self, l: usize, w: usize, u: usize) -> BTreeMap<usize, F> {
        let mut out = BTreeMap::new();
        if let Some(r) = self.pair().product_basis(self.a_side(), w, u) {
            out.insert(l * self.n() + r, F::one());
        }
        out
    }

    /// (e_h . gamma)(x_j) = <h(2), gamma(h(1) |> x_j)(1)> gamma(h(1) |> x_j)(2).
    pub(crate) fn left_h_basis(&self, h: usize, l: usize, w: usize) -> BTreeMap<usize, F> {
        let pair = self.pair();
        let (n, k) = (self.n(), self.dim());
        let mut out = BTreeMap::new();
        for (u, v) in pair.coproduct_basis(self.h_side(), h) {
            let targets = self.h_left_on_a(v, w);
            if targets.is_empty() {
                continue;
            }
            for j in 0..k {
                let c = &self.ad[u][(j, l)];
                if c.is_zero() {
                    continue;
                }
                for &r in &targets {
                    add_into(&mut out, j * n + r, c.clone());
                }
            }
        }
        out
    }

    /// (gamma . e_h)(x) = gamma(x)(1) <gamma(x)(2), h>.
    pub(crate) fn right_h_basis(&self, l: usize, w: usize, h: usize) -> BTreeMap<usize, F> {
        let mut out = BTreeMap::new();
        for r in self.a_right_by_h(w, h) {
            add_into(&mut out, l * self.n() + r, F::one());
        }
        out
    }

    fn gamma_op(&self, g: &GammaElement<F>, f: impl Fn(usize, usize) -> BTreeMap<usize, F>) -> GammaElement<F> {
        let (n, k) = (self.n(), self.dim());
        let mut acc = BTreeMap::new();
        for (l, v) in g.values.iter().enumerate() {
            for (w, c) in v.terms() {
                for (key, d) in f(l, w) {
                    add_into(&mut acc, key, c.clone() * d);
                }
            }
        }
        GammaElement::from_sparse(k, n, self.a_side(), &acc)
    }

    fn check_gamma(&self, g: &GammaElement<F>) -> Result<(), CalculusError> {
        if g.values.len() != self.dim() || g.values.iter().any(|v| v.side() != self.a_side()) {
            return Err(CalculusError::SideMismatch);
        }
        Ok(())
    }

    /// Left action of A on Gamma.
    pub fn act_a_left(&self, a: &HopfElement<F>, g: &GammaElement<F>) -> Result<GammaElement<F>, CalculusError> {
        self.expect_a(a)?;
        self.check_gamma(g)?;
        Ok(self.gamma_op(g, |l, w| combine(a, |u| self.left_a_basis(u, l, w))))
    }

    pub fn act_a_right(&self, g: &GammaElement<F>, a: &HopfElement<F>) -> Result<GammaElement<F>, CalculusError> {
        self.expect_a(a)?;
        self.check_gamma(g)?;
        Ok(self.gamma_op(g, |l, w| combine(a, |u| self.right_a_basis(l, w, u))))
    }

    /// Action of H dual to the left coaction of A on Gamma.
    pub fn act_h_left(&self, h: &HopfElement<F>, g: &GammaElement<F>) -> Result<GammaElement<F>, CalculusError> {
        self.expect_h(h)?;
        self.check_gamma(g)?;
        Ok(self.gamma_op(g, |l, w| combine(h, |u| self.left_h_basis(u, l, w))))
    }

    /// Action of H dual to the right coaction of A on Gamma.
    pub fn act_h_right(&self, g: &GammaElement<F>, h: &HopfElement<F>) -> Result<GammaElement<F>, CalculusError> {
        self.expect_h(h)?;
        self.check_gamma(g)?;
        Ok(self.gamma_op(g, |l, w| combine(h, |u| self.right_h_basis(l, w, u))))
    }
}

fn combine<F: Field>(x: &HopfElement<F>, f: impl Fn(usize) -> BTreeMap<usize, F>) -> BTreeMap<usize, F> {
    let mut acc = BTreeMap::new();
    for (u, c) in x.terms() {
        for (key, d) in f(u) {
            add_into(&mut acc, key, c.clone() * d);
        }
    }
    acc
}

fn outer_into<F: Field>(acc: &mut Tensor2<F>, left: &[F], right: &[F]) {
    for (p, a) in left.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (q, b) in right.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            add_into(acc, (p, q), a.clone() * b.clone());
        }
    }
}
