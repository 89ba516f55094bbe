use crate::field::Field;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which basis an element is written in: group elements g (CG) or delta
/// functions (C(G)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Group,
    Function,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::Group => Side::Function,
            Side::Function => Side::Group,
        }
    }
}

/// Which algebra carries the calculus. `Functions` means A = C(G), H = CG;
/// `GroupAlgebra` means A = CG, H = C(G).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CalculusSide {
    Functions,
    GroupAlgebra,
}

impl CalculusSide {
    pub fn a_side(self) -> Side {
        match self {
            CalculusSide::Functions => Side::Function,
            CalculusSide::GroupAlgebra => Side::Group,
        }
    }

    pub fn h_side(self) -> Side {
        self.a_side().dual()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CalculusSide::Functions => "functions",
            CalculusSide::GroupAlgebra => "group_algebra",
        }
    }
}

/// Sparse element of C(G) or CG, indexed by group element.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfElement<F> {
    side: Side,
    coeffs: BTreeMap<usize, F>,
}

impl<F: Field> HopfElement<F> {
    pub fn zero(side: Side) -> Self {
        HopfElement { side, coeffs: BTreeMap::new() }
    }

    pub fn basis(side: Side, i: usize) -> Self {
        HopfElement { side, coeffs: BTreeMap::from([(i, F::one())]) }
    }

    pub fn from_terms(side: Side, terms: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut x = HopfElement::zero(side);
        for (i, c) in terms {
            x.add_term(i, c);
        }
        x
    }

    pub fn from_dense(side: Side, v: &[F]) -> Self {
        HopfElement::from_terms(side, v.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, n: usize) -> Vec<F> {
        let mut v = vec![F::zero(); n];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(&i).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: F) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&i) {
            None => {
                self.coeffs.insert(i, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(i, s);
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        assert_eq!(self.side, other.side, "side mismatch in addition");
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.coeffs {
            self.add_term(i, x.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = HopfElement::zero(self.side);
        out.add_scaled(self, c);
        out
    }
}

/// Sparse element of a tensor product of two finite-group Hopf algebras.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<F> {
    sides: (Side, Side),
    coeffs: BTreeMap<(usize, usize), F>,
}

impl<F: Field> TensorElement<F> {
    pub fn zero(sides: (Side, Side)) -> Self {
        TensorElement { sides, coeffs: BTreeMap::new() }
    }

    pub fn sides(&self) -> (Side, Side) {
        self.sides
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: F) {
        if c.is_zero() {
            return;
        }
        let s = match self.coeffs.remove(&(i, j)) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.coeffs.insert((i, j), s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &F)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// x (x) y
    pub fn outer(x: &HopfElement<F>, y: &HopfElement<F>) -> Self {
        let mut t = TensorElement::zero((x.side(), y.side()));
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                t.add_term(i, j, a.clone() * b.clone());
            }
        }
        t
    }
}
