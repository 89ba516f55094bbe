//! The quantum double H ⋈ A^op on the basis {h (x) a} and its actions on
//! ker(counit) of H and on A.

use super::{expect_side, CalculusSide, HopfElement, HopfError, HopfPair, Side};
use crate::field::Field;
use std::collections::BTreeMap;

/// Element of H (x) A written in the product basis (h index, a index).
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleElement<F> {
    pub side: CalculusSide,
    coeffs: BTreeMap<(usize, usize), F>,
}

impl<F: Field> DoubleElement<F> {
    pub fn zero(side: CalculusSide) -> Self {
        DoubleElement { side, coeffs: BTreeMap::new() }
    }

    pub fn basis(side: CalculusSide, h: usize, a: usize) -> Self {
        DoubleElement { side, coeffs: BTreeMap::from([((h, a), F::one())]) }
    }

    pub fn add_term(&mut self, h: usize, a: usize, c: F) {
        if c.is_zero() {
            return;
        }
        let s = match self.coeffs.remove(&(h, a)) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.coeffs.insert((h, a), s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &F)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl HopfPair {
    /// Middle leg of the double coproduct of basis element `i` with the
    /// outer legs fixed, if such a term exists.
    fn coproduct2_middle(&self, side: Side, i: usize, first: usize, third: usize) -> Option<usize> {
        let g = self.group();
        match side {
            Side::Group => (first == i && third == i).then_some(i),
            Side::Function => Some(g.mul(g.mul(g.inverse(first), i), g.inverse(third))),
        }
    }

    /// (h (x) a)(g (x) b) = h g(2) (x) b a(2) <g(1), a(1)> <g(3), S a(3)> on
    /// basis elements.
    fn double_product_basis(&self, side: CalculusSide, h: usize, a: usize, g: usize, b: usize) -> Option<(usize, usize)> {
        let (hs, as_) = (side.h_side(), side.a_side());
        let grp = self.group();
        // Pairings are Kronecker deltas, so the outer legs of one coproduct
        // pin those of the other; enumerate whichever side is group-like.
        let (g1, g2, g3, a2) = match hs {
            Side::Group => {
                let (g1, g2, g3) = (g, g, g);
                let a1 = g1;
                let a3 = grp.inverse(g3);
                let a2 = self.coproduct2_middle(as_, a, a1, a3)?;
                (g1, g2, g3, a2)
            }
            Side::Function => {
                let (a1, a2, a3) = (a, a, a);
                let g1 = a1;
                let g3 = grp.inverse(a3);
                let g2 = self.coproduct2_middle(hs, g, g1, g3)?;
                (g1, g2, g3, a2)
            }
        };
        let _ = (g1, g3);
        let hg = self.product_basis(hs, h, g2)?;
        let ba = self.product_basis(as_, b, a2)?;
        Some((hg, ba))
    }

    pub fn double_product<F: Field>(&self, p: &DoubleElement<F>, q: &DoubleElement<F>) -> Result<DoubleElement<F>, HopfError> {
        if p.side != q.side {
            return Err(HopfError::SideMismatch { expected: p.side.h_side(), got: q.side.h_side() });
        }
        let mut out = DoubleElement::zero(p.side);
        for ((h, a), c) in p.terms() {
            for ((g, b), d) in q.terms() {
                if let Some((x, y)) = self.double_product_basis(p.side, h, a, g, b) {
                    out.add_term(x, y, c.clone() * d.clone());
                }
            }
        }
        Ok(out)
    }

    /// Unit of the double: 1_H (x) 1_A.
    pub fn double_unit<F: Field>(&self, side: CalculusSide) -> DoubleElement<F> {
        let mut out = DoubleElement::zero(side);
        let uh = self.unit::<F>(side.h_side());
        let ua = self.unit::<F>(side.a_side());
        for (h, c) in uh.terms() {
            for (a, d) in ua.terms() {
                out.add_term(h, a, c.clone() * d.clone());
            }
        }
        out
    }

    /// (h (x) a) |> x = h |> (a |> x).
    pub fn double_act<F: Field>(&self, p: &DoubleElement<F>, x: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        let side = p.side;
        expect_side(x, side.h_side())?;
        let mut out = HopfElement::zero(side.h_side());
        for ((h, a), c) in p.terms() {
            let y = self.double_act_a(side, &HopfElement::basis(side.a_side(), a), x)?;
            let z = self.double_act_h(side, &HopfElement::basis(side.h_side(), h), &y)?;
            out.add_scaled(&z, c);
        }
        Ok(out)
    }

    /// (h (x) b) |> a = h |> (b |> a) for the conjugate Schroedinger action.
    pub fn schroedinger_act<F: Field>(&self, p: &DoubleElement<F>, a: &HopfElement<F>) -> Result<HopfElement<F>, HopfError> {
        let side = p.side;
        expect_side(a, side.a_side())?;
        let mut out = HopfElement::zero(side.a_side());
        for ((h, b), c) in p.terms() {
            let y = self.schroedinger_act_a(side, &HopfElement::basis(side.a_side(), b), a)?;
            let z = self.schroedinger_act_h(side, &HopfElement::basis(side.h_side(), h), &y)?;
            out.add_scaled(&z, c);
        }
        Ok(out)
    }
}

/// First failure of a module law, as basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleLawFailure {
    pub p1: (usize, usize),
    pub p2: (usize, usize),
    pub vector: usize,
}

type IntCol = Vec<(usize, i64)>;

fn to_int_col<F: Field>(x: &HopfElement<F>, index: &dyn Fn(usize) -> usize) -> IntCol {
    x.terms()
        .map(|(i, c)| {
            let s = c.to_string();
            let v: i64 = s.parse().unwrap_or_else(|_| panic!("non-integral structure constant {s}"));
            (index(i), v)
        })
        .collect()
}

fn apply_col(m: &[IntCol], v: &IntCol) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    for &(j, c) in v {
        for &(i, a) in &m[j] {
            let e = out.entry(i).or_insert(0i64);
            *e = e.checked_add(a.checked_mul(c).expect("overflow")).expect("overflow");
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

impl HopfPair {
    /// Checks (p1 p2) |> v = p1 |> (p2 |> v) for all basis pairs p1, p2 of
    /// the double and all basis vectors v of the module. Action columns come
    /// from the literal action formulas; since every structure constant is an
    /// integer the comparison runs in checked i64 arithmetic.
    fn module_law_full(
        &self,
        side: CalculusSide,
        dim: usize,
        act: &dyn Fn(usize, usize, usize) -> IntCol,
    ) -> Result<(), ModuleLawFailure> {
        let n = self.dim();
        // cols[p][v] = (p |> basis v)
        let mut cols: Vec<Vec<IntCol>> = Vec::with_capacity(n * n);
        for h in 0..n {
            for a in 0..n {
                cols.push((0..dim).map(|v| act(h, a, v)).collect());
            }
        }
        for h in 0..n {
            for a in 0..n {
                let m1 = &cols[h * n + a];
                for g in 0..n {
                    for b in 0..n {
                        let prod = self.double_product_basis(side, h, a, g, b);
                        for v in 0..dim {
                            let lhs: BTreeMap<usize, i64> = match prod {
                                Some((x, y)) => cols[x * n + y][v].iter().copied().filter(|(_, c)| *c != 0).collect(),
                                None => BTreeMap::new(),
                            };
                            let inner = &cols[g * n + b][v];
                            let rhs = apply_col(m1, inner);
                            if lhs != rhs {
                                return Err(ModuleLawFailure { p1: (h, a), p2: (g, b), vector: v });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Module law of the quantum-double action on ker(counit), full bases.
    pub fn check_double_module_law<F: Field>(&self, side: CalculusSide) -> Result<(), ModuleLawFailure> {
        let hs = side.h_side();
        let keps = self.keps_basis::<F>(hs);
        // coordinates in the keps basis: group side g - e -> index g-1,
        // function side delta_g -> g-1 (identity is index 0).
        let index = |i: usize| i - 1;
        let act = |h: usize, a: usize, v: usize| -> IntCol {
            let p = DoubleElement::<F>::basis(side, h, a);
            let y = self.double_act(&p, &keps[v]).expect("action on ker eps");
            let coords = match hs {
                Side::Group => HopfElement::from_terms(hs, y.terms().filter(|&(i, _)| i != 0).map(|(i, c)| (i, c.clone()))),
                Side::Function => {
                    debug_assert!(y.coeff(0).is_zero());
                    y
                }
            };
            to_int_col(&coords, &index)
        };
        self.module_law_full(side, keps.len(), &act)
    }

    /// Module law for the conjugate Schroedinger action on A, full bases.
    pub fn check_schroedinger_module_law<F: Field>(&self, side: CalculusSide) -> Result<(), ModuleLawFailure> {
        let as_ = side.a_side();
        let act = |h: usize, b: usize, v: usize| -> IntCol {
            let p = DoubleElement::<F>::basis(side, h, b);
            let y = self.schroedinger_act(&p, &HopfElement::basis(as_, v)).expect("action on A");
            to_int_col(&y, &|i| i)
        };
        self.module_law_full(side, self.dim(), &act)
    }
}
