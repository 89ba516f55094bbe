//! Spin-1/2 R-matrix algebra on 2^n-dimensional tensor powers. Pair indices
//! (i, k) are flattened as 2i + k; leg 0 is the most significant bit.

use crate::field::{Matrix, RatFuncS};
use num_traits::{One, Zero};

/// s^-1 [[q,0,0,0],[0,1,q-q^-1,0],[0,0,1,0],[0,0,0,q]], or the same without
/// the s^-1 prefactor when `normalised` is false.
pub fn r_matrix(normalised: bool) -> Matrix<RatFuncS> {
    let q = RatFuncS::q();
    let one = RatFuncS::one();
    let z = RatFuncS::zero();
    let off = q.clone() - RatFuncS::q_pow(-1);
    let m = Matrix::new(
        4,
        4,
        vec![
            q.clone(), z.clone(), z.clone(), z.clone(),
            z.clone(), one.clone(), off, z.clone(),
            z.clone(), z.clone(), one, z.clone(),
            z.clone(), z.clone(), z, q,
        ],
    );
    if normalised {
        m.map(|v| v.clone() * RatFuncS::s_pow(-1))
    } else {
        m
    }
}

pub fn flip() -> Matrix<RatFuncS> {
    let mut p = Matrix::zeros(4, 4);
    for i in 0..2 {
        for k in 0..2 {
            p[(2 * i + k, 2 * k + i)] = RatFuncS::one();
        }
    }
    p
}

pub fn r21(r: &Matrix<RatFuncS>) -> Matrix<RatFuncS> {
    let p = flip();
    p.mul(r).and_then(|m| m.mul(&p)).expect("4x4")
}

/// Q = R21 R.
pub fn q_matrix(r: &Matrix<RatFuncS>) -> Matrix<RatFuncS> {
    r21(r).mul(r).expect("4x4")
}

pub fn kron(a: &Matrix<RatFuncS>, b: &Matrix<RatFuncS>) -> Matrix<RatFuncS> {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * br + k, j * bc + l)] = x.clone() * y.clone();
                    }
                }
            }
        }
    }
    out
}

fn bit(state: usize, n: usize, leg: usize) -> usize {
    (state >> (n - 1 - leg)) & 1
}

/// Places a 4x4 operator on legs (i, j) of n legs; its first index runs over
/// leg i.
pub fn embed(m: &Matrix<RatFuncS>, i: usize, j: usize, n: usize) -> Matrix<RatFuncS> {
    let dim = 1usize << n;
    let mut out = Matrix::zeros(dim, dim);
    let mask = !((1usize << (n - 1 - i)) | (1usize << (n - 1 - j)));
    for r in 0..dim {
        for c in 0..dim {
            if r & mask != c & mask {
                continue;
            }
            let v = &m[(2 * bit(r, n, i) + bit(r, n, j), 2 * bit(c, n, i) + bit(c, n, j))];
            if !v.is_zero() {
                out[(r, c)] = v.clone();
            }
        }
    }
    out
}

/// Transposes the indices of one leg (0 or 1) of a 4x4 operator.
pub fn partial_transpose(m: &Matrix<RatFuncS>, leg: usize) -> Matrix<RatFuncS> {
    let mut out = Matrix::zeros(4, 4);
    for r in 0..4 {
        for c in 0..4 {
            let (r1, r2, c1, c2) = (r / 2, r % 2, c / 2, c % 2);
            let (nr, nc) = if leg == 0 { (2 * c1 + r2, 2 * r1 + c2) } else { (2 * r1 + c2, 2 * c1 + r2) };
            out[(nr, nc)] = m[(r, c)].clone();
        }
    }
    out
}

/// The universal R evaluated with the second leg in the antipode-twisted
/// representation N(x) = rho(Sx)^T: entry ((i,a),(j,k)) = R(rho^i_j (x) S rho^k_a).
/// Uses (id (x) S)R = (id (x) S^2) R^-1 with S^2 = Ad(K^2).
pub fn r_mn(r: &Matrix<RatFuncS>) -> Matrix<RatFuncS> {
    let rinv = r.inverse().expect("4x4").expect("R is invertible");
    let d = Matrix::new(2, 2, vec![RatFuncS::q(), RatFuncS::zero(), RatFuncS::zero(), RatFuncS::q_pow(-1)]);
    let dinv = Matrix::new(2, 2, vec![RatFuncS::q_pow(-1), RatFuncS::zero(), RatFuncS::zero(), RatFuncS::q()]);
    let id = Matrix::identity(2);
    let tilde = kron(&id, &d).mul(&rinv).and_then(|m| m.mul(&kron(&id, &dinv))).expect("4x4");
    partial_transpose(&tilde, 1)
}

/// First leg in N, second in rho: (S (x) id)R = R^-1, transposed on leg 0.
pub fn r_nm(r: &Matrix<RatFuncS>) -> Matrix<RatFuncS> {
    partial_transpose(&r.inverse().expect("4x4").expect("R is invertible"), 0)
}

pub fn mul_all(ms: &[Matrix<RatFuncS>]) -> Matrix<RatFuncS> {
    let mut it = ms.iter();
    let first = it.next().expect("nonempty product").clone();
    it.fold(first, |acc, m| acc.mul(m).expect("square product"))
}
