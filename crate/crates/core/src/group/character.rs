//! Dixon's method: simultaneous eigenvectors of the class-sum matrices over
//! a prime field, lifted back to cyclotomic values through eigenvalue
//! multiplicities.

use super::modp::{dixon_prime, inv_mod, kernel_mod, pow_mod, primitive_root};
use super::FiniteGroup;
use crate::field::{Cyclotomic, CyclotomicField, Field, Rational};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("class-sum eigenspaces did not split into lines (class {0})")]
    NoSplit(usize),
    #[error("no character degree fits the prime-field data for row {0}")]
    Degree(usize),
    #[error("eigenvalue multiplicity out of range at class {0}")]
    Lift(usize),
    #[error("orthogonality violated: {0}")]
    Orthogonality(String),
}

/// Irreducible characters of G, one row per irreducible, one column per
/// conjugacy class (in class order). Values live in Q(zeta_m), m = exponent.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub rows: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u32>,
    pub conductor: u32,
    pub prime: u64,
    field: CyclotomicField,
}

impl CharacterTable {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// chi_row evaluated on an element index.
    pub fn value(&self, g: &FiniteGroup, row: usize, element: usize) -> Cyclotomic {
        self.rows[row][g.conjugacy_classes().class_of[element]].clone()
    }
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable, CharacterError> {
    let n = g.order();
    let cs = g.conjugacy_classes();
    let r = cs.len();
    let sizes = cs.sizes();
    let e = g.exponent();
    let p = dixon_prime(e, n as u64);

    // c[i][j][k] = #{x in C_i : x^-1 g_k in C_j}
    let mut coeff = vec![vec![vec![0u64; r]; r]; r];
    for (k, &gk) in cs.representatives.iter().enumerate() {
        for x in 0..n {
            let i = cs.class_of[x];
            let j = cs.class_of[g.mul(g.inverse(x), gk)];
            coeff[i][j][k] += 1;
        }
    }

    // Split F_p^r into common eigenlines of M_i, (M_i)_{jk} = c_ijk.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect()];
    for i in 1..r {
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let images: Vec<Vec<u64>> =
                basis.iter().map(|b| (0..r).map(|j| (0..r).map(|k| coeff[i][j][k] * b[k]).sum::<u64>() % p).collect()).collect();
            let mut found = 0;
            for t in 0..p {
                // rows j, columns l: (M_i b_l - t b_l)_j
                let sys: Vec<Vec<u64>> =
                    (0..r).map(|j| (0..d).map(|l| (images[l][j] + p - t * basis[l][j] % p) % p).collect()).collect();
                let ker = kernel_mod(&sys, d, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|a| (0..r).map(|j| (0..d).map(|l| a[l] * basis[l][j] % p).sum::<u64>() % p).collect())
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(CharacterError::NoSplit(i));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(CharacterError::NoSplit(r));
    }

    let gen = primitive_root(p);
    let z = pow_mod(gen, (p - 1) / e, p);
    let field = CyclotomicField::new(e as u32);
    let isqrt = (1..=n as u64).take_while(|d| d * d <= n as u64).last().unwrap_or(1);

    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for (row_idx, sp) in spaces.iter().enumerate() {
        let v = &sp[0];
        let v0 = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * v0 % p).collect();
        let s = (0..r).map(|k| omega[k] * omega[cs.inverse_class[k]] % p * inv_mod(sizes[k] as u64 % p, p) % p).sum::<u64>() % p;
        let d2 = (n as u64 % p) * inv_mod(s, p) % p;
        let d = (1..=isqrt).find(|d| d * d % p == d2).ok_or(CharacterError::Degree(row_idx))?;
        let chi_p: Vec<u64> = (0..r).map(|k| d * omega[k] % p * inv_mod(sizes[k] as u64 % p, p) % p).collect();

        let mut row = Vec::with_capacity(r);
        for (k, &rep) in cs.representatives.iter().enumerate() {
            let o = g.element_order(rep);
            let step = e / o;
            let mut power_classes = Vec::with_capacity(o as usize);
            let mut x = g.identity();
            for _ in 0..o {
                power_classes.push(cs.class_of[x]);
                x = g.mul(x, rep);
            }
            let o_inv = inv_mod(o % p, p);
            let mut value = Cyclotomic::zero();
            for j in 0..o {
                let mut acc = 0u64;
                for (l, &cl) in power_classes.iter().enumerate() {
                    let expo = (e - (step * j * l as u64) % e) % e;
                    acc = (acc + chi_p[cl] * pow_mod(z, expo, p)) % p;
                }
                let m = acc * o_inv % p;
                if m > d {
                    return Err(CharacterError::Lift(k));
                }
                if m > 0 {
                    value = value + field.zeta((step * j) as i64) * Cyclotomic::from_i64(m as i64);
                }
            }
            row.push(value);
        }
        rows.push(row);
        degrees.push(d as u32);
    }

    let mut order: Vec<usize> = (0..r).collect();
    let is_trivial = |row: &Vec<Cyclotomic>| row.iter().all(|v| v.is_one());
    order.sort_by(|&a, &b| {
        let ta = is_trivial(&rows[a]);
        let tb = is_trivial(&rows[b]);
        tb.cmp(&ta).then(degrees[a].cmp(&degrees[b])).then_with(|| {
            rows[a].iter().zip(&rows[b]).map(|(x, y)| x.lex_cmp(y)).find(|o| *o != Ordering::Equal).unwrap_or(Ordering::Equal)
        })
    });
    let table = CharacterTable {
        rows: order.iter().map(|&i| rows[i].clone()).collect(),
        degrees: order.iter().map(|&i| degrees[i]).collect(),
        conductor: e as u32,
        prime: p,
        field,
    };
    verify_orthogonality(g, &table)?;
    Ok(table)
}

/// Row and column orthogonality, exactly.
pub fn verify_orthogonality(g: &FiniteGroup, t: &CharacterTable) -> Result<(), CharacterError> {
    let cs = g.conjugacy_classes();
    let r = cs.len();
    let n = Cyclotomic::from_i64(g.order() as i64);
    if t.rows.len() != r {
        return Err(CharacterError::Orthogonality(format!("{} rows for {r} classes", t.rows.len())));
    }
    for a in 0..r {
        for b in 0..r {
            let s = (0..r).fold(Cyclotomic::zero(), |acc, k| {
                acc + Cyclotomic::from_i64(cs.classes[k].len() as i64) * t.rows[a][k].clone() * t.rows[b][cs.inverse_class[k]].clone()
            });
            let want = if a == b { n.clone() } else { Cyclotomic::zero() };
            if s != want {
                return Err(CharacterError::Orthogonality(format!("rows {a},{b}: {s}")));
            }
        }
    }
    for j in 0..r {
        for k in 0..r {
            let s = (0..r).fold(Cyclotomic::zero(), |acc, a| acc + t.rows[a][j].clone() * t.rows[a][cs.inverse_class[k]].clone());
            let want = if j == k {
                Cyclotomic::rational(Rational::new((g.order() as i64).into(), (cs.classes[k].len() as i64).into()))
            } else {
                Cyclotomic::zero()
            };
            if s != want {
                return Err(CharacterError::Orthogonality(format!("columns {j},{k}: {s}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_from_spec, GroupSpec, DEFAULT_CAP};

    fn table(s: &str) -> (FiniteGroup, CharacterTable) {
        let g = group_from_spec(&GroupSpec::from_short(s).unwrap(), DEFAULT_CAP).unwrap();
        let t = character_table(&g).unwrap();
        (g, t)
    }

    fn strings(row: &[Cyclotomic]) -> Vec<String> {
        row.iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn z2_and_s3() {
        let (_, t) = table("Z2");
        assert_eq!(strings(&t.rows[0]), ["1", "1"]);
        assert_eq!(strings(&t.rows[1]), ["1", "-1"]);
        let (_, t) = table("S3");
        assert_eq!(t.degrees, vec![1, 1, 2]);
        // classes: e, transpositions, 3-cycles
        assert_eq!(strings(&t.rows[2]), ["2", "0", "-1"]);
        assert_eq!(strings(&t.rows[1]), ["1", "-1", "1"]);
    }

    #[test]
    fn z3_has_complex_values() {
        let (_, t) = table("Z3");
        assert_eq!(t.conductor, 3);
        assert!(t.rows[1].iter().any(|v| !v.is_rational()));
        assert_eq!(t.rows[1][1].conj(), t.rows[2][1]);
    }
}
