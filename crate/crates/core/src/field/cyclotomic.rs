use super::{Field, Poly, Rational, Tower};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// The n-th cyclotomic polynomial over Q, computed as (x^n - 1) divided by
/// every Phi_d with d a proper divisor of n.
pub fn cyclotomic_poly(n: u32) -> Poly<Rational> {
    assert!(n >= 1, "conductor must be positive");
    let one = Rational::one();
    let mut p = Poly::monomial(one.clone(), n as usize).sub(&Poly::constant(one));
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = p.divrem(&cyclotomic_poly(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

#[derive(Debug)]
struct Ctx {
    n: u32,
    phi: Poly<Rational>,
    /// `x^k mod phi` for k in 0..=2*deg-2.
    powers: Vec<Vec<Rational>>,
}

impl Ctx {
    fn new(n: u32) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.degree().unwrap();
        let top = (2 * d).saturating_sub(1).max(1);
        let powers = (0..top)
            .map(|k| {
                let mut v = Poly::monomial(Rational::one(), k).rem(&phi).into_coeffs();
                v.resize(d, Rational::zero());
                v
            })
            .collect();
        Ctx { n, phi, powers }
    }

    fn degree(&self) -> usize {
        self.phi.degree().unwrap()
    }

    /// Reduces an arbitrary coefficient vector modulo phi.
    fn reduce(&self, raw: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        if raw.len() <= d {
            return raw;
        }
        if raw.len() > self.powers.len() {
            return Poly::new(raw).rem(&self.phi).into_coeffs();
        }
        let mut out: Vec<Rational> = raw[..d].to_vec();
        for (k, c) in raw.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (j, p) in self.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * p;
                }
            }
        }
        out
    }
}

/// Element of Q(zeta_n) reduced modulo Phi_n, value = sum c_i zeta^i.
///
/// Rational values carry no conductor so they combine with any field; any
/// element with an irrational part remembers its conductor and refuses to
/// combine with a different one.
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Option<Arc<Ctx>>,
    coeffs: Vec<Rational>,
}

/// Handle on a fixed Q(zeta_n), used to mint roots of unity.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    ctx: Arc<Ctx>,
}

impl CyclotomicField {
    pub fn new(n: u32) -> Self {
        CyclotomicField { ctx: Arc::new(Ctx::new(n)) }
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.n
    }

    pub fn degree(&self) -> usize {
        self.ctx.degree()
    }

    /// zeta_n^k for any integer k.
    pub fn zeta(&self, k: i64) -> Cyclotomic {
        let n = self.ctx.n as i64;
        let k = k.rem_euclid(n) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Cyclotomic::from_raw(Some(self.ctx.clone()), raw)
    }

    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Cyclotomic {
        Cyclotomic::from_raw(Some(self.ctx.clone()), coeffs)
    }
}

impl Cyclotomic {
    fn from_raw(ctx: Option<Arc<Ctx>>, raw: Vec<Rational>) -> Self {
        let mut coeffs = match &ctx {
            Some(c) => c.reduce(raw),
            None => raw,
        };
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let ctx = if coeffs.len() > 1 { ctx } else { None };
        Cyclotomic { ctx, coeffs }
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic::from_raw(None, vec![r])
    }

    /// Conductor of the field the value is pinned to; 1 for rationals.
    pub fn conductor(&self) -> u32 {
        self.ctx.as_ref().map_or(1, |c| c.n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.ctx.is_none()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.is_rational(), self.coeffs.first()) {
            (true, Some(c)) => Some(c.clone()),
            (true, None) => Some(Rational::zero()),
            _ => None,
        }
    }

    fn join_ctx(&self, other: &Self) -> Option<Arc<Ctx>> {
        match (&self.ctx, &other.ctx) {
            (Some(a), Some(b)) => {
                assert_eq!(a.n, b.n, "mixed cyclotomic conductors");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        Cyclotomic::from_raw(self.ctx.clone(), self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let Some(ctx) = &self.ctx else {
            return self.clone();
        };
        let field = CyclotomicField { ctx: ctx.clone() };
        let mut acc = Cyclotomic::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + field.zeta(i as i64 * k).scale(c);
            }
        }
        acc
    }

    /// Complex conjugate (zeta -> zeta^-1).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Total order used for deterministic sorting: conductor, then
    /// coefficient vectors lexicographically.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let d = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        for k in 0..d {
            let a = self.coeffs.get(k).unwrap_or(&z);
            let b = other.coeffs.get(k).unwrap_or(&z);
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; n={})", self, self.conductor())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if k == 0 { c.to_string() } else { format!("{c}*z^{k}") };
            if !first && !body.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { ctx: None, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::rational(Rational::one())
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { ctx: self.ctx, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let ctx = self.join_ctx(&other);
        let (mut long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self.coeffs, other.coeffs) } else { (other.coeffs, self.coeffs) };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Cyclotomic::from_raw(ctx, long)
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        let ctx = self.join_ctx(&other);
        let mut raw = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_raw(ctx, raw)
    }
}

impl Div for Cyclotomic {
    type Output = Self;
    fn div(self, other: Self) -> Self {
        self * other.inv().expect("division by zero cyclotomic")
    }
}

impl Field for Cyclotomic {
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::rational(r.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Cyclotomic::rational(r.recip()));
        }
        let ctx = self.ctx.clone().unwrap();
        let (g, u, _) = Poly::new(self.coeffs.clone()).ext_gcd(&ctx.phi);
        // Phi_n is irreducible, so any nonzero reduced element is coprime to it.
        debug_assert_eq!(g.degree(), Some(0));
        Some(Cyclotomic::from_raw(Some(ctx), u.into_coeffs()))
    }

    fn tower(&self) -> Option<Tower> {
        self.ctx.as_ref().map(|c| Tower::Cyclotomic(c.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn phi_small() {
        let c = |v: &[i64]| Poly::new(v.iter().map(|&x| q(x)).collect());
        assert_eq!(cyclotomic_poly(1), c(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), c(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), c(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), c(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_identities() {
        for n in [2u32, 3, 5, 7, 11] {
            let f = CyclotomicField::new(n);
            assert_eq!(f.zeta(n as i64), Cyclotomic::one());
            let sum = (0..n as i64).fold(Cyclotomic::zero(), |acc, k| acc + f.zeta(k));
            assert!(sum.is_zero(), "n={n}");
        }
    }

    #[test]
    fn inverse_and_galois() {
        let f = CyclotomicField::new(12);
        let x = f.zeta(1) + f.zeta(5) * Cyclotomic::rational(q(3)) + Cyclotomic::one();
        assert_eq!(x.clone() * x.inv().unwrap(), Cyclotomic::one());
        assert_eq!(f.zeta(2).conj(), f.zeta(-2));
        // galois is multiplicative
        let y = f.zeta(7) - Cyclotomic::rational(q(2));
        assert_eq!((x.clone() * y.clone()).galois(5), x.galois(5) * y.galois(5));
    }

    #[test]
    fn rational_values_shed_conductor() {
        let f = CyclotomicField::new(3);
        let s = f.zeta(1) + f.zeta(2);
        assert!(s.is_rational());
        assert_eq!(s, Cyclotomic::rational(q(-1)));
        assert_eq!(s.to_string(), "-1");
        assert_eq!((f.zeta(1) * Cyclotomic::rational(q(-2))).to_string(), "-2*z^1");
    }

    #[test]
    #[should_panic(expected = "mixed cyclotomic conductors")]
    fn conductors_do_not_mix() {
        let _ = CyclotomicField::new(3).zeta(1) + CyclotomicField::new(4).zeta(1);
    }
}
