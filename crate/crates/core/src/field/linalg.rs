use super::{common_tower, Field, Tower};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("entries from different field towers ({0:?} and {1:?})")]
    MixedTower(Tower, Tower),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("pairing matrix is degenerate")]
    DegeneratePairing,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds from rows; `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a.clone() * b.clone();
                        let cell = &mut out[(i, j)];
                        *cell = std::mem::replace(cell, F::zero()) + t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![F::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, a) in self.row(i).iter().enumerate() {
                if !a.is_zero() {
                    out[j] = std::mem::replace(&mut out[j], F::zero()) + c.clone() * a.clone();
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::AmbientMismatch(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Unique reduced row echelon form, leftmost pivots.
    pub fn rref(&self) -> Result<Rref<F>, LinalgError> {
        common_tower(self.data.iter())?;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                let v = std::mem::replace(&mut m[(r, j)], F::zero());
                m[(r, j)] = v * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let t = f.clone() * m[(r, j)].clone();
                    let v = std::mem::replace(&mut m[(i, j)], F::zero());
                    m[(i, j)] = v - t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(Rref { reduced: m, rank: r, pivots })
    }

    pub fn rank(&self) -> Result<usize, LinalgError> {
        Ok(self.rref()?.rank)
    }

    /// Right null space.
    pub fn kernel(&self) -> Result<Subspace<F>, LinalgError> {
        let Rref { reduced, rank, pivots } = self.rref()?;
        let mut vecs = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for f in 0..self.cols {
            if pivot_iter.peek() == Some(&&f) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -reduced[(i, f)].clone();
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.cols, vecs)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let r = aug.rref()?;
        if r.pivots.iter().take(n).copied().ne(0..n) || r.rank < n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r.reduced[(i, n + j)].clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Subspace of F^ambient, stored as the nonzero rows of its reduced row
/// echelon basis so that equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        for v in &vecs {
            if v.len() != ambient {
                return Err(LinalgError::AmbientMismatch(ambient, v.len()));
            }
        }
        Subspace::from_matrix(&Matrix::from_rows(ambient, vecs))
    }

    pub fn from_matrix(m: &Matrix<F>) -> Result<Self, LinalgError> {
        let Rref { reduced, rank, pivots } = m.rref()?;
        let cols = m.cols();
        let data = reduced.entries()[..rank * cols].to_vec();
        Ok(Subspace { ambient: cols, basis: Matrix::new(rank, cols, data), pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates in the canonical basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.basis.vec_mul(&coords);
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn join(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Subspace::from_matrix(&self.basis.vstack(&other.basis)?)
    }

    /// Intersection: the kernel of the stacked constraint systems.
    pub fn meet(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let cu = self.constraints()?;
        let cv = other.constraints()?;
        cu.vstack(&cv)?.kernel()
    }

    /// Rows spanning the orthogonal complement under the standard dot product,
    /// i.e. linear equations cutting out this subspace.
    fn constraints(&self) -> Result<Matrix<F>, LinalgError> {
        let k = self.basis.kernel()?;
        Ok(k.basis)
    }

    /// `{y : <u, y> = 0 for all u}` where `<u, y> = u^T P y`.
    pub fn annihilator(&self, pairing: &Matrix<F>) -> Result<Self, LinalgError> {
        if pairing.rows() != self.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, pairing.rows()));
        }
        if pairing.rows() != pairing.cols() || pairing.rank()? != pairing.rows() {
            return Err(LinalgError::DegeneratePairing);
        }
        if self.dim() == 0 {
            return Ok(Subspace::full(pairing.cols()));
        }
        self.basis.mul(pairing)?.kernel()
    }
}

/// Incrementally built echelon basis with sparse rows; used for rank counts
/// over large spanning sets with early exit.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F> {
    rows: BTreeMap<usize, BTreeMap<usize, F>>,
}

impl<F: Field> Default for SpanBuilder<F> {
    fn default() -> Self {
        SpanBuilder { rows: BTreeMap::new() }
    }
}

impl<F: Field> SpanBuilder<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector; returns true when it was independent.
    pub fn insert(&mut self, mut v: BTreeMap<usize, F>) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&k, c)) = v.iter().next() else {
                return false;
            };
            match self.rows.get(&k) {
                Some(row) => {
                    let c = c.clone();
                    for (j, r) in row {
                        let e = v.remove(j).unwrap_or_else(F::zero) - c.clone() * r.clone();
                        if !e.is_zero() {
                            v.insert(*j, e);
                        }
                    }
                }
                None => {
                    let inv = c.inv().unwrap();
                    let row = v.into_iter().map(|(j, x)| (j, x * inv.clone())).collect();
                    self.rows.insert(k, row);
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn rref_small() {
        let r = M::from_i64(&[&[1, 1], &[1, 1]]).rref().unwrap();
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
        assert_eq!(M::identity(3).rank().unwrap(), 3);
        assert_eq!(M::from_i64(&[&[0, 0]]).rank().unwrap(), 0);
    }

    #[test]
    fn kernel_small() {
        let k = M::from_i64(&[&[1, 1], &[1, 1]]).kernel().unwrap();
        assert_eq!(k, Subspace::from_vectors(2, vec![vec![Rational::from_integer(1.into()), Rational::from_integer((-1).into())]]).unwrap());
        assert_eq!(M::from_i64(&[&[2, 1], &[1, 1]]).kernel().unwrap().dim(), 0);
        assert_eq!(M::zeros(2, 3).kernel().unwrap(), Subspace::full(3));
    }

    #[test]
    fn meet_join_basics() {
        let e = |i: usize| {
            let mut v = vec![Rational::from_integer(0.into()); 3];
            v[i] = Rational::from_integer(1.into());
            Subspace::from_vectors(3, vec![v]).unwrap()
        };
        assert_eq!(e(0).meet(&e(1)).unwrap().dim(), 0);
        assert_eq!(e(0).join(&e(1)).unwrap().dim(), 2);
        assert_eq!(e(2).meet(&e(2)).unwrap(), e(2));
        assert!(matches!(e(0).join(&Subspace::zero(2)), Err(LinalgError::AmbientMismatch(3, 2))));
    }

    #[test]
    fn annihilator_edges() {
        let p = M::identity(3);
        assert_eq!(Subspace::<Rational>::full(3).annihilator(&p).unwrap().dim(), 0);
        assert_eq!(Subspace::<Rational>::zero(3).annihilator(&p).unwrap(), Subspace::full(3));
        let degenerate = M::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(Subspace::<Rational>::zero(2).annihilator(&degenerate), Err(LinalgError::DegeneratePairing));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = M::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), M::identity(2));
        assert_eq!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().unwrap(), None);
    }

    #[test]
    fn span_builder_counts_rank() {
        let mut b = SpanBuilder::<Rational>::new();
        let v = |pairs: &[(usize, i64)]| pairs.iter().map(|&(k, x)| (k, Rational::from_integer(x.into()))).collect();
        assert!(b.insert(v(&[(0, 1), (2, 1)])));
        assert!(b.insert(v(&[(0, 1), (1, 1)])));
        assert!(!b.insert(v(&[(1, 2), (2, -2)])));
        assert_eq!(b.rank(), 2);
    }
}
