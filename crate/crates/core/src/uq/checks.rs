use super::pairing::{ALetter, AWord, WordPairing};
use super::rmatrix::{kron, q_matrix, r21, r_matrix};
use super::tangent::{x_name, Bracket4, Braiding4, QTangent4};
use super::{UqError, Witness};
use crate::field::{Field, Matrix, RatFuncS, Rational};
use num_traits::{One, Zero};

/// 4x4 matrix (pair indices (i,k),(j,l)) whose entries are vectors of
/// coefficients on a basis of L or L (x) L.
type VMat = Vec<Vec<RatFuncS>>;

fn vzero(w: usize) -> Vec<RatFuncS> {
    vec![RatFuncS::zero(); w]
}

fn axpy(acc: &mut [RatFuncS], c: &RatFuncS, v: &[RatFuncS]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = std::mem::replace(a, RatFuncS::zero()) + c.clone() * x.clone();
        }
    }
}

/// x_1 = x (x) id: entry ((i,k),(j,l)) = x^i_j delta_kl.
fn x_leg1() -> VMat {
    let mut out = vec![vzero(4); 16];
    for big_i in 0..4 {
        for big_j in 0..4 {
            let (i, k, j, l) = (big_i / 2, big_i % 2, big_j / 2, big_j % 2);
            if k == l {
                out[4 * big_i + big_j][2 * i + j] = RatFuncS::one();
            }
        }
    }
    out
}

/// x_2 = id (x) x: entry ((i,k),(j,l)) = delta_ij x^k_l.
fn x_leg2() -> VMat {
    let mut out = vec![vzero(4); 16];
    for big_i in 0..4 {
        for big_j in 0..4 {
            let (i, k, j, l) = (big_i / 2, big_i % 2, big_j / 2, big_j % 2);
            if i == j {
                out[4 * big_i + big_j][2 * k + l] = RatFuncS::one();
            }
        }
    }
    out
}

fn num_times(m: &Matrix<RatFuncS>, v: &VMat) -> VMat {
    let w = v[0].len();
    let mut out = vec![vzero(w); 16];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                axpy(&mut out[4 * i + j], &m[(i, k)], &v[4 * k + j]);
            }
        }
    }
    out
}

fn times_num(v: &VMat, m: &Matrix<RatFuncS>) -> VMat {
    let w = v[0].len();
    let mut out = vec![vzero(w); 16];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                axpy(&mut out[4 * i + j], &m[(k, j)], &v[4 * i + k]);
            }
        }
    }
    out
}

/// Matrix product of L-valued matrices where entries combine through a
/// bilinear map given by its table `op[4u + v]`.
fn bilinear_product(a: &VMat, b: &VMat, op: &[Vec<RatFuncS>]) -> VMat {
    let w = op[0].len();
    let mut out = vec![vzero(w); 16];
    for i in 0..4 {
        for j in 0..4 {
            let cell = &mut out[4 * i + j];
            for m in 0..4 {
                for (u, cu) in a[4 * i + m].iter().enumerate() {
                    if cu.is_zero() {
                        continue;
                    }
                    for (v, cv) in b[4 * m + j].iter().enumerate() {
                        if !cv.is_zero() {
                            axpy(cell, &(cu.clone() * cv.clone()), &op[4 * u + v]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Entrywise tensor product followed by a matrix product: (A (x) B)_IJ = sum_M A_IM (x) B_MJ.
fn tensor_product(a: &VMat, b: &VMat) -> VMat {
    let mut out = vec![vzero(16); 16];
    for i in 0..4 {
        for j in 0..4 {
            for m in 0..4 {
                for (u, cu) in a[4 * i + m].iter().enumerate() {
                    for (v, cv) in b[4 * m + j].iter().enumerate() {
                        if !cu.is_zero() && !cv.is_zero() {
                            let cell = &mut out[4 * i + j][4 * u + v];
                            *cell = std::mem::replace(cell, RatFuncS::zero()) + cu.clone() * cv.clone();
                        }
                    }
                }
            }
        }
    }
    out
}

fn vmat_mismatch(name: &str, lhs: &VMat, rhs: &VMat) -> Option<Witness> {
    for (p, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        for (w, (a, b)) in l.iter().zip(r).enumerate() {
            if a != b {
                let basis = if l.len() == 4 { x_name(w) } else { format!("{} (x) {}", x_name(w / 4), x_name(w % 4)) };
                let idx = format!("{name} entry ({}{}),({}{}) coefficient of {basis}", p / 8 + 1, (p / 4) % 2 + 1, (p % 4) / 2 + 1, p % 2 + 1);
                return Some(Witness::new(idx, a.to_string(), b.to_string()));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct QlierReport {
    /// R21 [x1, R x2] = x2 Q - Q x2
    pub bracket_identity: Option<Witness>,
    /// R21 Psi(x1 (x) R x2) = x2 R21 (x) x1 R
    pub braiding_identity: Option<Witness>,
    /// Psi12 Psi23 Psi12 = Psi23 Psi12 Psi23 on the 64-dimensional cube
    pub braid_relation: Option<Witness>,
}

impl QlierReport {
    pub fn passed(&self) -> bool {
        self.bracket_identity.is_none() && self.braiding_identity.is_none() && self.braid_relation.is_none()
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.bracket_identity.as_ref().or(self.braiding_identity.as_ref()).or(self.braid_relation.as_ref())
    }
}

pub fn qlier_identities(bracket: &Bracket4, braiding: &Braiding4) -> QlierReport {
    let r = r_matrix(true);
    let r21m = r21(&r);
    let q = q_matrix(&r);
    let (x1, x2) = (x_leg1(), x_leg2());

    let lhs = num_times(&r21m, &bilinear_product(&x1, &num_times(&r, &x2), bracket));
    let rhs = {
        let a = times_num(&x2, &q);
        let b = num_times(&q, &x2);
        a.iter()
            .zip(&b)
            .map(|(u, v)| u.iter().zip(v).map(|(p, s)| p.clone() - s.clone()).collect())
            .collect::<VMat>()
    };
    let bracket_identity = vmat_mismatch("R21[x1,Rx2]", &lhs, &rhs);

    let lhs = num_times(&r21m, &bilinear_product(&x1, &num_times(&r, &x2), braiding));
    let rhs = tensor_product(&times_num(&x2, &r21m), &times_num(&x1, &r));
    let braiding_identity = vmat_mismatch("R21 Psi(x1,Rx2)", &lhs, &rhs);

    QlierReport { bracket_identity, braiding_identity, braid_relation: braid_relation(braiding) }
}

/// Braiding as a 16x16 operator: column (u,v) holds Psi(x_u (x) x_v).
pub fn braiding_operator(braiding: &Braiding4) -> Matrix<RatFuncS> {
    let mut m = Matrix::zeros(16, 16);
    for (col, image) in braiding.iter().enumerate() {
        for (row, c) in image.iter().enumerate() {
            m[(row, col)] = c.clone();
        }
    }
    m
}

pub fn braid_relation(braiding: &Braiding4) -> Option<Witness> {
    let b = braiding_operator(braiding);
    let id = Matrix::identity(4);
    let b12 = kron(&b, &id);
    let b23 = kron(&id, &b);
    let lhs = b12.mul(&b23).and_then(|m| m.mul(&b12)).expect("64x64");
    let rhs = b23.mul(&b12).and_then(|m| m.mul(&b23)).expect("64x64");
    for r in 0..64 {
        for c in 0..64 {
            if lhs[(r, c)] != rhs[(r, c)] {
                return Some(Witness::new(format!("braid relation entry ({r},{c})"), lhs[(r, c)].to_string(), rhs[(r, c)].to_string()));
            }
        }
    }
    None
}

pub fn verify_qlier(t: &QTangent4) -> bool {
    qlier_identities(&t.bracket, &t.braiding).passed()
}

/// Normalisation of the q-trace alpha = (q a + q^-1 d) / n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceNormalisation {
    /// n = q^-2 (q^3 - 1)(q - 1)
    Normalised,
    /// n = 1
    Unit,
}

pub fn q_trace(norm: TraceNormalisation) -> AWord {
    let q = RatFuncS::q();
    let n = match norm {
        TraceNormalisation::Normalised => {
            RatFuncS::q_pow(-2) * (q.pow(3) - RatFuncS::one()) * (q.clone() - RatFuncS::one())
        }
        TraceNormalisation::Unit => RatFuncS::one(),
    };
    let ninv = n.inv().expect("nonzero normalisation");
    AWord::letter(ALetter::A)
        .scale(&(q * ninv.clone()))
        .add(&AWord::letter(ALetter::D).scale(&(RatFuncS::q_pow(-1) * ninv)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct QtraceReport {
    pub max_degree: usize,
    pub checked: usize,
    pub eps_alpha: RatFuncS,
    pub failures: Vec<Witness>,
}

impl QtraceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn label(&self) -> String {
        format!("partial (degree <= {})", self.max_degree)
    }
}

fn words_of_len(n: usize) -> Vec<Vec<ALetter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                ALetter::ALL.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// <x, (w - eps(w)) alpha> = <x, w - eps(w)> (eps(alpha) + 1) for every x in
/// the tangent space and every word of length 1..=max_degree.
pub fn qtrace_inner_check_with(t: &QTangent4, max_degree: usize, norm: TraceNormalisation) -> Result<QtraceReport, UqError> {
    let alpha = q_trace(norm);
    let eps_alpha = alpha.counit();
    let factor = eps_alpha.clone() + RatFuncS::one();
    let mut checked = 0;
    let mut failures = Vec::new();
    for u in 0..4 {
        let mut p = WordPairing::new(t.x(u));
        for len in 1..=max_degree {
            for letters in words_of_len(len) {
                let w = AWord::word(&letters);
                let a = w.sub(&AWord::one().scale(&w.counit()));
                let lhs = p.pair(&a.mul(&alpha))?;
                let rhs = p.pair(&a)? * factor.clone();
                checked += 1;
                if lhs != rhs {
                    let name: String = letters.iter().map(|l| l.as_char()).collect();
                    failures.push(Witness::new(format!("x = {}, w = {name}", x_name(u)), lhs.to_string(), rhs.to_string()));
                }
            }
        }
    }
    Ok(QtraceReport { max_degree, checked, eps_alpha, failures })
}

pub fn qtrace_inner_check(t: &QTangent4, max_degree: usize) -> Result<QtraceReport, UqError> {
    qtrace_inner_check_with(t, max_degree, TraceNormalisation::Normalised)
}

/// Change of basis to e = x^1_2, f = x^2_1, h = x^1_1 - x^2_2, t = x^1_1 + x^2_2.
fn sl2_basis() -> Matrix<Rational> {
    Matrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, -1], &[1, 0, 0, 1]])
}

/// Commutator constants of the 2x2 matrices E12, E21, E11 - E22 in that basis.
fn gl2_constants(u: usize, v: usize) -> [i64; 3] {
    match (u, v) {
        (0, 1) => [0, 0, 1],
        (1, 0) => [0, 0, -1],
        (2, 0) => [2, 0, 0],
        (0, 2) => [-2, 0, 0],
        (2, 1) => [0, -2, 0],
        (1, 2) => [0, 2, 0],
        _ => [0, 0, 0],
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalLimitReport {
    pub zeroth_order_vanishes: bool,
    /// d/ds at s = 1 of the bracket tensor in the basis (e, f, h, t):
    /// `first_order[4u + v][w]`.
    pub first_order: Vec<Vec<Rational>>,
    pub kappa: Option<Rational>,
    pub kappa_uniform: bool,
    pub trace_central: bool,
    pub antisymmetric: bool,
    pub jacobi: bool,
    /// Braiding of the unrescaled x^i_j at s = 1.
    pub uniform_braiding_is_flip: bool,
    /// Graded basis e/(s-1), f/(s-1), h/(s-1), c = (q^-1 x^1_1 + q x^2_2)/(s-1)^2 at s = 1:
    /// bracket `graded_bracket[4u + v][w]`, braiding `graded_braiding[4u + v][4m + n]`.
    pub graded_bracket: Vec<Vec<Rational>>,
    pub graded_braiding: Vec<Vec<Rational>>,
    /// [c, xi] = mu xi on the traceless part.
    pub casimir_eigenvalue: Option<Rational>,
    /// [xi, c] = [c, c] = 0, Psi flips everything except c (x) xi, and
    /// Psi(c (x) xi) - xi (x) c is a nonzero antisymmetric traceless tensor.
    pub graded_matches_quadratic_form: bool,
    /// t = lambda K^-1 (inverse Killing form) fitted from Psi(c (x) xi);
    /// `casimir_tensor_matches` says both Psi(c (x) xi) and [c, xi] = [t_i, [t^i, xi]]
    /// agree with that single lambda.
    pub casimir_scale: Option<Rational>,
    pub casimir_tensor_matches: bool,
    pub graded_braiding_is_flip: bool,
    pub non_flip_witness: Option<String>,
}

impl ClassicalLimitReport {
    pub fn passed(&self) -> bool {
        self.zeroth_order_vanishes
            && self.kappa.is_some()
            && self.kappa_uniform
            && self.trace_central
            && self.antisymmetric
            && self.jacobi
            && self.casimir_eigenvalue.is_some()
            && self.graded_matches_quadratic_form
            && self.casimir_tensor_matches
            && !self.graded_braiding_is_flip
    }
}

const SL2_NAMES: [&str; 4] = ["e", "f", "h", "c"];

fn unit_rat(i: usize, n: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

/// Rewrites the structure tensors in the basis n = G x, G = D P, and
/// evaluates at s = 1. A pole is an error.
fn graded_tensors(t: &QTangent4) -> Result<(Vec<Vec<Rational>>, Vec<Vec<Rational>>), UqError> {
    let tt = RatFuncS::s() - RatFuncS::one();
    let scale = [tt.clone(), tt.clone(), tt.clone(), tt.clone() * tt.clone()];
    let p = sl2_basis();
    let mut g = Matrix::<RatFuncS>::zeros(4, 4);
    for u in 0..4 {
        let inv = scale[u].inv().expect("nonzero");
        for a in 0..4 {
            g[(u, a)] = RatFuncS::from_rational(&p[(u, a)]) * inv.clone();
        }
    }
    // c: q^-1 x^1_1 + q x^2_2 = q^-1 (C - eps(C)), exactly central
    g[(3, 0)] = RatFuncS::q_pow(-1) * scale[3].inv().expect("nonzero");
    g[(3, 3)] = RatFuncS::q() * scale[3].inv().expect("nonzero");
    let ginv = g.inverse()?.expect("invertible grading");
    let mut bracket = Vec::with_capacity(16);
    let mut braiding = Vec::with_capacity(16);
    for u in 0..4 {
        for v in 0..4 {
            let mut xs = vec![RatFuncS::zero(); 4];
            let mut xx = vec![RatFuncS::zero(); 16];
            for a in 0..4 {
                for b in 0..4 {
                    let coef = g[(u, a)].clone() * g[(v, b)].clone();
                    if coef.is_zero() {
                        continue;
                    }
                    axpy(&mut xs, &coef, &t.bracket[4 * a + b]);
                    axpy(&mut xx, &coef, &t.braiding[4 * a + b]);
                }
            }
            let ns = ginv.vec_mul(&xs);
            bracket.push(ns.iter().map(|c| c.specialize_s1()).collect::<Result<Vec<_>, _>>()?);
            // x_m (x) x_n = Ginv_{m m'} Ginv_{n n'} n_m' (x) n_n'
            let mut nn = vec![RatFuncS::zero(); 16];
            for m in 0..4 {
                for n in 0..4 {
                    let c = &xx[4 * m + n];
                    if c.is_zero() {
                        continue;
                    }
                    for m2 in 0..4 {
                        for n2 in 0..4 {
                            let f = ginv[(m, m2)].clone() * ginv[(n, n2)].clone();
                            if !f.is_zero() {
                                nn[4 * m2 + n2] = std::mem::replace(&mut nn[4 * m2 + n2], RatFuncS::zero()) + c.clone() * f;
                            }
                        }
                    }
                }
            }
            braiding.push(nn.iter().map(|c| c.specialize_s1()).collect::<Result<Vec<_>, _>>()?);
        }
    }
    Ok((bracket, braiding))
}

/// Extracts the q -> 1 structure: the first-order bracket by differentiating
/// at s = 1, and the graded limit where the trace part is rescaled twice.
pub fn classical_limit(t: &QTangent4) -> Result<ClassicalLimitReport, UqError> {
    let mut zeroth_order_vanishes = true;
    let mut d1 = Vec::with_capacity(16);
    for row in &t.bracket {
        let mut drow = Vec::with_capacity(4);
        for c in row {
            if !c.specialize_s1()?.is_zero() {
                zeroth_order_vanishes = false;
            }
            drow.push(c.derivative_at_s1()?);
        }
        d1.push(drow);
    }

    // [n_u, n_v] = P_ua P_vb c_ab^w x_w and x_w = (P^-1)_w^z n_z.
    let p = sl2_basis();
    let pinv = p.inverse()?.expect("invertible change of basis");
    let mut first_order = vec![vec![Rational::zero(); 4]; 16];
    for u in 0..4 {
        for v in 0..4 {
            let mut xs = vec![Rational::zero(); 4];
            for a in 0..4 {
                for b in 0..4 {
                    let coef = p[(u, a)].clone() * p[(v, b)].clone();
                    if coef.is_zero() {
                        continue;
                    }
                    for w in 0..4 {
                        xs[w] = xs[w].clone() + coef.clone() * d1[4 * a + b][w].clone();
                    }
                }
            }
            first_order[4 * u + v] = pinv.vec_mul(&xs);
        }
    }

    let mut kappa: Option<Rational> = None;
    let mut kappa_uniform = true;
    for u in 0..3 {
        for v in 0..3 {
            let got = &first_order[4 * u + v];
            if !got[3].is_zero() {
                kappa_uniform = false;
            }
            let target = gl2_constants(u, v);
            for w in 0..3 {
                let tw = Rational::from_i64(target[w]);
                match (&kappa, tw.is_zero()) {
                    (_, true) => {
                        if !got[w].is_zero() {
                            kappa_uniform = false;
                        }
                    }
                    (None, false) => kappa = Some(got[w].clone() / tw),
                    (Some(k), false) => {
                        if got[w] != k.clone() * tw {
                            kappa_uniform = false;
                        }
                    }
                }
            }
        }
    }
    if kappa.as_ref().is_some_and(|k| k.is_zero()) {
        kappa = None;
    }
    let trace_central = (0..4).all(|v| first_order[4 * 3 + v].iter().chain(&first_order[4 * v + 3]).all(|c| c.is_zero()));
    let antisymmetric =
        (0..4).all(|u| (0..4).all(|v| (0..4).all(|w| first_order[4 * u + v][w] == -first_order[4 * v + u][w].clone())));
    let jacobi = jacobi_holds(&first_order);

    let mut uniform_braiding_is_flip = true;
    for (col, image) in t.braiding.iter().enumerate() {
        let (u, v) = (col / 4, col % 4);
        for (row, c) in image.iter().enumerate() {
            let expect = if row == 4 * v + u { Rational::one() } else { Rational::zero() };
            if c.specialize_s1()? != expect {
                uniform_braiding_is_flip = false;
            }
        }
    }

    let (graded_bracket, graded_braiding) = graded_tensors(t)?;
    let c = 3;
    let mut casimir_eigenvalue: Option<Rational> = None;
    let mut quadratic = true;
    for xi in 0..3 {
        quadratic &= graded_bracket[4 * xi + c].iter().all(|v| v.is_zero());
        let row = &graded_bracket[4 * c + xi];
        let mu = row[xi].clone();
        quadratic &= (0..4).all(|w| w == xi || row[w].is_zero());
        match &casimir_eigenvalue {
            None => casimir_eigenvalue = Some(mu),
            Some(m) => quadratic &= *m == mu,
        }
        for eta in 0..3 {
            quadratic &= graded_bracket[4 * xi + eta][c].is_zero();
        }
    }
    quadratic &= graded_bracket[4 * c + c].iter().all(|v| v.is_zero());
    if casimir_eigenvalue.as_ref().is_some_and(|m| m.is_zero()) {
        casimir_eigenvalue = None;
    }

    let mut graded_braiding_is_flip = true;
    let mut non_flip_witness = None;
    for u in 0..4 {
        for v in 0..4 {
            let image = &graded_braiding[4 * u + v];
            let flip = unit_rat(4 * v + u, 16);
            if *image == flip {
                continue;
            }
            graded_braiding_is_flip = false;
            if non_flip_witness.is_none() {
                let row = (0..16).find(|&r| image[r] != flip[r]).expect("differs");
                non_flip_witness = Some(format!(
                    "Psi({} (x) {}) at s=1 has coefficient {} on {} (x) {}",
                    SL2_NAMES[u],
                    SL2_NAMES[v],
                    image[row],
                    SL2_NAMES[row / 4],
                    SL2_NAMES[row % 4]
                ));
            }
            if u == c && v < 3 {
                // Psi(c (x) xi) - xi (x) c: traceless (x) traceless, antisymmetric
                let diff: Vec<Rational> = image.iter().zip(&flip).map(|(a, b)| a.clone() - b.clone()).collect();
                let traceless = (0..16).all(|r| (r / 4 != c && r % 4 != c) || diff[r].is_zero());
                let antisym = (0..4).all(|m| (0..4).all(|n| diff[4 * m + n] == -diff[4 * n + m].clone()));
                quadratic &= traceless && antisym;
            } else {
                quadratic = false;
            }
        }
    }

    let (casimir_scale, casimir_tensor_matches) = casimir_tensor_check(&graded_bracket, &graded_braiding);

    Ok(ClassicalLimitReport {
        zeroth_order_vanishes,
        first_order,
        kappa,
        kappa_uniform,
        trace_central,
        antisymmetric,
        jacobi,
        uniform_braiding_is_flip,
        graded_bracket,
        graded_braiding,
        casimir_eigenvalue,
        graded_matches_quadratic_form: quadratic,
        casimir_scale,
        casimir_tensor_matches,
        graded_braiding_is_flip,
        non_flip_witness,
    })
}

/// Oracle for the c-row of the graded limit: the invariant tensor of the
/// traceless part is a multiple of the inverse Killing form.
fn casimir_tensor_check(bracket: &[Vec<Rational>], braiding: &[Vec<Rational>]) -> (Option<Rational>, bool) {
    let br = |u: usize, v: usize| -> &[Rational] { &bracket[4 * u + v][..3] };
    let mut killing = Matrix::<Rational>::zeros(3, 3);
    for u in 0..3 {
        for v in 0..3 {
            // tr(ad_u ad_v) = sum_{a,w} [u,[v,a]]_a
            let mut acc = Rational::zero();
            for a in 0..3 {
                for w in 0..3 {
                    acc += br(v, a)[w].clone() * br(u, w)[a].clone();
                }
            }
            killing[(u, v)] = acc;
        }
    }
    let Ok(Some(kinv)) = killing.inverse() else {
        return (None, false);
    };
    let c = 3;
    let mut lambda: Option<Rational> = None;
    let mut ok = true;
    for xi in 0..3 {
        let mut pred = vec![Rational::zero(); 16];
        let mut cx = vec![Rational::zero(); 3];
        for u in 0..3 {
            for v in 0..3 {
                let t = &kinv[(u, v)];
                if t.is_zero() {
                    continue;
                }
                for m in 0..3 {
                    let b = t.clone() * br(u, xi)[m].clone();
                    pred[4 * m + v] = pred[4 * m + v].clone() + b.clone();
                    pred[4 * v + m] = pred[4 * v + m].clone() - b;
                }
                for (w, cw) in cx.iter_mut().enumerate() {
                    let nested: Rational = (0..3).map(|a| br(v, xi)[a].clone() * br(u, a)[w].clone()).sum();
                    *cw = cw.clone() + t.clone() * nested;
                }
            }
        }
        let image = &braiding[4 * c + xi];
        let flip = unit_rat(4 * xi + c, 16);
        for r in 0..16 {
            let actual = image[r].clone() - flip[r].clone();
            match (&lambda, pred[r].is_zero()) {
                (_, true) => ok &= actual.is_zero(),
                (None, false) => lambda = Some(actual / pred[r].clone()),
                (Some(l), false) => ok &= actual == l.clone() * pred[r].clone(),
            }
        }
        let l = lambda.clone().unwrap_or_else(Rational::zero);
        ok &= (0..3).all(|w| bracket[4 * c + xi][w] == l.clone() * cx[w].clone()) && bracket[4 * c + xi][c].is_zero();
    }
    let lambda = lambda.filter(|l| !l.is_zero());
    (lambda.clone(), ok && lambda.is_some())
}

fn jacobi_holds(c: &[Vec<Rational>]) -> bool {
    let br = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); 4];
        for (u, xu) in x.iter().enumerate() {
            for (v, yv) in y.iter().enumerate() {
                if xu.is_zero() || yv.is_zero() {
                    continue;
                }
                for w in 0..4 {
                    out[w] = out[w].clone() + xu.clone() * yv.clone() * c[4 * u + v][w].clone();
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vec<Rational> { (0..4).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect() };
    for a in 0..4 {
        for b in 0..4 {
            for d in 0..4 {
                let (x, y, z) = (unit(a), unit(b), unit(d));
                let t1 = br(&x, &br(&y, &z));
                let t2 = br(&y, &br(&z, &x));
                let t3 = br(&z, &br(&x, &y));
                if (0..4).any(|w| !(t1[w].clone() + t2[w].clone() + t3[w].clone()).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}
