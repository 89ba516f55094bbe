use super::pairing::{ALetter, AWord, WordPairing};
use super::pbw::{Mono, PbwElement, PbwTensor};
use super::rmatrix::{embed, mul_all, q_matrix, r_matrix, r_mn, r_nm};
use super::{UqError, Witness};
use crate::field::{Matrix, RatFuncS};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Flattened index 2i + j of x^i_j (zero-based), matching a, b, c, d.
pub fn xi(i: usize, j: usize) -> usize {
    2 * i + j
}

pub fn x_name(u: usize) -> String {
    format!("x^{}_{}", u / 2 + 1, u % 2 + 1)
}

/// q - q^-1
fn qdiff() -> RatFuncS {
    RatFuncS::q() - RatFuncS::q_pow(-1)
}

/// C = q^-1 K^2 + q K^-2 + (q - q^-1)^2 EF, normal ordered, with its
/// centrality against E, F, K checked.
pub fn q_casimir() -> Result<PbwElement, UqError> {
    let c = PbwElement::k_pow(2)
        .scale(&RatFuncS::q_pow(-1))
        .add(&PbwElement::k_pow(-2).scale(&RatFuncS::q()))
        .add(&PbwElement::e().mul(&PbwElement::f()).scale(&qdiff().pow(2)));
    for (name, g) in [("E", PbwElement::e()), ("F", PbwElement::f()), ("K", PbwElement::k_pow(1))] {
        let comm = c.commutator(&g);
        if !comm.is_zero() {
            return Err(UqError::NotCentral(format!("[C, {name}] = {comm}")));
        }
    }
    Ok(c)
}

/// Q on the matrix coordinates a, b, c, d:
/// K^2, s^-1 (q - q^-1) K F, s^-1 (q - q^-1) E K, q^-1 C - q^-2 K^2.
pub fn q_images() -> Result<[PbwElement; 4], UqError> {
    let pre = RatFuncS::s_pow(-1) * qdiff();
    let k2 = PbwElement::k_pow(2);
    let k = PbwElement::k_pow(1);
    let c = q_casimir()?;
    Ok([
        k2.clone(),
        k.mul(&PbwElement::f()).scale(&pre),
        PbwElement::e().mul(&k).scale(&pre),
        c.scale(&RatFuncS::q_pow(-1)).sub(&k2.scale(&RatFuncS::q_pow(-2))),
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub checked: usize,
    pub mismatches: Vec<Witness>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares <Q(rho^i_j), rho^k_l> from the PBW forms with the ((i,k),(j,l))
/// entry of R21 R for the R-matrix with or without its s^-1 prefactor.
pub fn verify_su2_consistency_with(normalised: bool) -> Result<ConsistencyReport, UqError> {
    let qs = q_images()?;
    let qm = q_matrix(&r_matrix(normalised));
    let mut mismatches = Vec::new();
    for (u, x) in qs.iter().enumerate() {
        let (i, j) = (u / 2, u % 2);
        let mut p = WordPairing::new(x);
        for l in ALetter::ALL {
            let (k, ll) = l.index();
            let lhs = p.pair_letters(&[l])?;
            let rhs = qm[(2 * i + k, 2 * j + ll)].clone();
            if lhs != rhs {
                mismatches.push(Witness::new(
                    format!("<Q({}), {}>", ALetter::ALL[u].as_char(), l.as_char()),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
            }
        }
    }
    Ok(ConsistencyReport { checked: 16, mismatches })
}

pub fn verify_su2_consistency() -> Result<ConsistencyReport, UqError> {
    verify_su2_consistency_with(true)
}

/// Coordinates of PBW elements against a fixed independent family.
#[derive(Clone, Debug)]
pub struct PbwBasis {
    elements: Vec<PbwElement>,
    monos: Vec<Mono>,
    pivots: Vec<usize>,
    pivot_inverse: Matrix<RatFuncS>,
}

impl PbwBasis {
    pub fn new(elements: Vec<PbwElement>) -> Result<Self, UqError> {
        let mut set = std::collections::BTreeSet::new();
        for x in &elements {
            set.extend(x.terms().map(|(m, _)| *m));
        }
        let monos: Vec<Mono> = set.into_iter().collect();
        let rows: Vec<Vec<RatFuncS>> = elements.iter().map(|x| monos.iter().map(|m| x.coeff(m)).collect()).collect();
        let mat = Matrix::from_rows(monos.len(), rows);
        let rref = mat.rref()?;
        if rref.rank != elements.len() {
            return Err(UqError::Dependent(rref.rank, elements.len()));
        }
        let n = elements.len();
        let mut sub = Matrix::zeros(n, n);
        for r in 0..n {
            for (c, &p) in rref.pivots.iter().enumerate() {
                sub[(r, c)] = mat[(r, p)].clone();
            }
        }
        let pivot_inverse = sub.inverse()?.ok_or(UqError::Dependent(n - 1, n))?;
        Ok(PbwBasis { elements, monos, pivots: rref.pivots, pivot_inverse })
    }

    pub fn elements(&self) -> &[PbwElement] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coefficients c with y = sum c_u x_u, or `None` when y is outside the span.
    pub fn coords(&self, y: &PbwElement) -> Option<Vec<RatFuncS>> {
        if y.terms().any(|(m, _)| self.monos.binary_search(m).is_err()) {
            return None;
        }
        let v: Vec<RatFuncS> = self.pivots.iter().map(|&p| y.coeff(&self.monos[p])).collect();
        let c = self.pivot_inverse.vec_mul(&v);
        let back = self.combine(&c);
        (back == *y).then_some(c)
    }

    pub fn combine(&self, c: &[RatFuncS]) -> PbwElement {
        self.elements.iter().zip(c).fold(PbwElement::zero(), |acc, (x, v)| acc.add(&x.scale(v)))
    }
}

/// Structure tensors on the basis x^i_j. `bracket[4u + v][w]` is the
/// coefficient of x_w in [x_u, x_v]; `braiding[4u + v][4m + n]` the
/// coefficient of x_m (x) x_n in Psi(x_u (x) x_v).
pub type Bracket4 = Vec<Vec<RatFuncS>>;
pub type Braiding4 = Vec<Vec<RatFuncS>>;

/// The 4-dimensional spin-1/2 tangent space x^i_j = Q(rho^i_j - delta^i_j).
#[derive(Clone, Debug)]
pub struct QTangent4 {
    pub q_images: [PbwElement; 4],
    pub basis: PbwBasis,
    pub bracket: Bracket4,
    pub braiding: Braiding4,
}

impl QTangent4 {
    pub fn x(&self, u: usize) -> &PbwElement {
        &self.basis.elements()[u]
    }
}

/// Builds the tangent space, refusing to proceed if the PBW transcription of
/// Q disagrees with R21 R, and computes both structure tensors.
pub fn su2_q_generators() -> Result<QTangent4, UqError> {
    let consistency = verify_su2_consistency()?;
    if let Some(w) = consistency.mismatches.first() {
        return Err(UqError::Convention(w.to_string()));
    }
    let q_images = q_images()?;
    let xs: Vec<PbwElement> = q_images
        .iter()
        .enumerate()
        .map(|(u, q)| if u == 0 || u == 3 { q.sub(&PbwElement::one()) } else { q.clone() })
        .collect();
    let basis = PbwBasis::new(xs)?;
    let (bracket, braiding) = structure_constants_4d(&basis)?;
    Ok(QTangent4 { q_images, basis, bracket, braiding })
}

/// [x_u, x_v] = Ad_{x_u}(x_v) in PBW form, re-expanded on the basis.
pub fn bracket_adjoint(basis: &PbwBasis) -> Result<Bracket4, UqError> {
    let n = basis.dim();
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let y = basis.elements()[u].adjoint(&basis.elements()[v]);
            let c = basis.coords(&y).ok_or_else(|| UqError::NotInTangent(format!("[{}, {}]", x_name(u), x_name(v))))?;
            out.push(c);
        }
    }
    Ok(out)
}

/// Z = R21 R31 R13 R12 on legs (rho, N, rho), i.e. the Killing functional
/// evaluated on rho^i_j (x) (S rho^k_a) rho^b_l at entry ((i,a,b),(j,k,l)).
fn killing_three_legs() -> Matrix<RatFuncS> {
    let r = r_matrix(true);
    mul_all(&[embed(&r_nm(&r), 1, 0, 3), embed(&r, 2, 0, 3), embed(&r, 0, 2, 3), embed(&r_mn(&r), 0, 1, 3)])
}

fn tri(a: usize, b: usize, c: usize) -> usize {
    4 * a + 2 * b + c
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// [x^i_j, x^k_l] = x^a_b Q(rho^i_j (x) (S rho^k_a) rho^b_l) - x^k_l delta^i_j,
/// with the functional expanded in R-matrices.
pub fn bracket_rmatrix() -> Bracket4 {
    let z = killing_three_legs();
    let mut out = Vec::with_capacity(16);
    for u in 0..4 {
        let (i, j) = (u / 2, u % 2);
        for v in 0..4 {
            let (k, l) = (v / 2, v % 2);
            let mut coeffs = Vec::with_capacity(4);
            for w in 0..4 {
                let (a, b) = (w / 2, w % 2);
                let mut c = z[(tri(i, a, b), tri(j, k, l))].clone();
                if delta(i, j) && delta(a, k) && delta(b, l) {
                    c = c - RatFuncS::one();
                }
                coeffs.push(c);
            }
            out.push(coeffs);
        }
    }
    out
}

/// Psi(x^i_j (x) x^k_l) = x^m_n (x) x^a_b R((S rho^c_m) rho^n_d (x) rho^i_a) R(rho^b_j (x) (S rho^k_c) rho^d_l).
pub fn braiding_rmatrix() -> Braiding4 {
    let r = r_matrix(true);
    // legs (N, rho, rho) and (rho, N, rho)
    let y1 = embed(&r_nm(&r), 0, 2, 3).mul(&embed(&r, 1, 2, 3)).expect("8x8");
    let y2 = embed(&r, 0, 2, 3).mul(&embed(&r_mn(&r), 0, 1, 3)).expect("8x8");
    let mut out = Vec::with_capacity(16);
    for u in 0..4 {
        let (i, j) = (u / 2, u % 2);
        for v in 0..4 {
            let (k, l) = (v / 2, v % 2);
            let mut coeffs = vec![RatFuncS::zero(); 16];
            for mn in 0..4 {
                let (m, n) = (mn / 2, mn % 2);
                for ab in 0..4 {
                    let (a, b) = (ab / 2, ab % 2);
                    let mut acc = RatFuncS::zero();
                    for c in 0..2 {
                        for d in 0..2 {
                            let f1 = &y1[(tri(m, n, i), tri(c, d, a))];
                            let f2 = &y2[(tri(b, c, d), tri(j, k, l))];
                            if !f1.is_zero() && !f2.is_zero() {
                                acc = acc + f1.clone() * f2.clone();
                            }
                        }
                    }
                    coeffs[4 * mn + ab] = acc;
                }
            }
            out.push(coeffs);
        }
    }
    out
}

/// Psi(x (x) y) = [x_(1), y] (x) x_(2) - [x, y] (x) 1, evaluated in PBW form.
pub fn braiding_coproduct(basis: &PbwBasis) -> Result<Braiding4, UqError> {
    let n = basis.dim();
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        let cop = basis.elements()[u].coproduct();
        for v in 0..n {
            let y = &basis.elements()[v];
            // second-leg monomial -> first-leg PBW element
            let mut by_right: BTreeMap<Mono, PbwElement> = BTreeMap::new();
            for ((m1, m2), c) in cop.terms() {
                let ad = PbwElement::mono(*m1).adjoint(y).scale(c);
                let slot = by_right.entry(*m2).or_default();
                *slot = slot.add(&ad);
            }
            let br = basis.elements()[u].adjoint(y);
            let one = by_right.entry(Mono::ONE).or_default();
            *one = one.sub(&br);
            let mut t = PbwTensor::zero();
            for (m2, left) in &by_right {
                t = t.add(&PbwTensor::outer(left, &PbwElement::mono(*m2)));
            }
            out.push(expand_tensor(basis, &t).ok_or_else(|| {
                UqError::NotInTangent(format!("Psi({} (x) {})", x_name(u), x_name(v)))
            })?);
        }
    }
    Ok(out)
}

/// Coordinates of a PBW tensor in basis (x) basis.
fn expand_tensor(basis: &PbwBasis, t: &PbwTensor) -> Option<Vec<RatFuncS>> {
    let n = basis.dim();
    // Group by left monomial, expand right legs, then expand the left legs
    // column by column.
    let mut rights: BTreeMap<Mono, PbwElement> = BTreeMap::new();
    for ((m1, m2), c) in t.terms() {
        let slot = rights.entry(*m1).or_default();
        *slot = slot.add(&PbwElement::mono(*m2).scale(c));
    }
    let mut cols: Vec<BTreeMap<Mono, RatFuncS>> = vec![BTreeMap::new(); n];
    for (m1, right) in &rights {
        let rc = basis.coords(right)?;
        for (b, v) in rc.into_iter().enumerate() {
            if !v.is_zero() {
                cols[b].insert(*m1, v);
            }
        }
    }
    let mut out = vec![RatFuncS::zero(); n * n];
    for (b, col) in cols.iter().enumerate() {
        let left = PbwElement::from_terms(col.iter().map(|(m, v)| (*m, v.clone())));
        let lc = basis.coords(&left)?;
        for (a, v) in lc.into_iter().enumerate() {
            out[n * a + b] = v;
        }
    }
    Some(out)
}

/// First entry where two tensors differ.
pub fn tensor_mismatch(name: &str, lhs: &[Vec<RatFuncS>], rhs: &[Vec<RatFuncS>], width: usize) -> Option<Witness> {
    for (p, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        for (w, (a, b)) in l.iter().zip(r).enumerate() {
            if a != b {
                let idx = if width == 4 {
                    format!("{name}[{}, {}] coefficient of {}", x_name(p / 4), x_name(p % 4), x_name(w))
                } else {
                    format!(
                        "{name}[{}, {}] coefficient of {} (x) {}",
                        x_name(p / 4),
                        x_name(p % 4),
                        x_name(w / 4),
                        x_name(w % 4)
                    )
                };
                return Some(Witness::new(idx, a.to_string(), b.to_string()));
            }
        }
    }
    None
}

/// Bracket and braiding tensors. The bracket is computed by the adjoint
/// action and by the R-matrix formula; any disagreement is an error.
pub fn structure_constants_4d(basis: &PbwBasis) -> Result<(Bracket4, Braiding4), UqError> {
    let adj = bracket_adjoint(basis)?;
    let rm = bracket_rmatrix();
    if let Some(w) = tensor_mismatch("bracket", &adj, &rm, 4) {
        return Err(UqError::RouteMismatch(w.to_string()));
    }
    Ok((adj, braiding_rmatrix()))
}

/// x_w = <w, C_(1)> C_(2) - <w, C> 1 for w in {a - 1, b, c, d - 1}, together
/// with x_1 = C - eps(C).
pub fn lc_elements() -> Result<Vec<PbwElement>, UqError> {
    let c = q_casimir()?;
    let cop = c.coproduct();
    let mut out = Vec::new();
    let words: Vec<AWord> = ALetter::ALL
        .iter()
        .map(|&l| {
            let w = AWord::letter(l);
            let e = w.counit();
            w.sub(&AWord::one().scale(&e))
        })
        .collect();
    for w in &words {
        let mut acc = PbwElement::zero();
        for ((m1, m2), coeff) in cop.terms() {
            let p = WordPairing::new(&PbwElement::mono(*m1)).pair(w)?;
            if !p.is_zero() {
                acc = acc.add(&PbwElement::mono(*m2).scale(&(p * coeff.clone())));
            }
        }
        let cw = WordPairing::new(&c).pair(w)?;
        out.push(acc.sub(&PbwElement::scalar(cw)));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LcReport {
    pub elements: Vec<PbwElement>,
    pub dimension: usize,
    pub equal: bool,
    pub unit_word_in_span: bool,
}

/// Compares L_C for the q-Casimir with the span of the x^i_j.
pub fn lc_tangent_sl2(t: &QTangent4) -> Result<LcReport, UqError> {
    let elements = lc_elements()?;
    let lc = PbwBasis::new(elements.clone());
    let dimension = match &lc {
        Ok(b) => b.dim(),
        Err(UqError::Dependent(r, _)) => *r,
        Err(e) => return Err(e.clone()),
    };
    let inside = elements.iter().all(|x| t.basis.coords(x).is_some());
    let c = q_casimir()?;
    let x1 = c.sub(&PbwElement::scalar(c.counit()));
    Ok(LcReport {
        dimension,
        equal: dimension == 4 && inside,
        unit_word_in_span: t.basis.coords(&x1).is_some(),
        elements,
    })
}
