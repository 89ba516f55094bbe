use super::{Field, Poly, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("pole at s = 1 in {0}")]
    PoleAtOne(String),
}

/// Rational function in s = q^(1/2) over Q, kept in lowest terms with a
/// monic denominator.
#[derive(Clone, PartialEq)]
pub struct RatFuncS {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFuncS {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFuncS::zero();
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.divrem(&g);
        let (mut d, _) = den.divrem(&g);
        let l = d.lead().unwrap().clone();
        if !l.is_one() {
            let li = l.recip();
            n = n.scale(&li);
            d = d.scale(&li);
        }
        RatFuncS { num: n, den: d }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFuncS { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFuncS::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        RatFuncS::constant(Rational::from_integer(n.into()))
    }

    /// s^k for any integer k.
    pub fn s_pow(k: i64) -> Self {
        let one = Rational::one();
        if k >= 0 {
            RatFuncS::from_poly(Poly::monomial(one, k as usize))
        } else {
            RatFuncS { num: Poly::one(), den: Poly::monomial(one, (-k) as usize) }
        }
    }

    pub fn s() -> Self {
        RatFuncS::s_pow(1)
    }

    /// q^k = s^(2k).
    pub fn q_pow(k: i64) -> Self {
        RatFuncS::s_pow(2 * k)
    }

    pub fn q() -> Self {
        RatFuncS::q_pow(1)
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("zero to a negative power") } else { self.clone() };
        let mut acc = RatFuncS::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    /// Value at s = 1.
    pub fn specialize_s1(&self) -> Result<Rational, RatFuncError> {
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(RatFuncError::PoleAtOne(self.to_string()));
        }
        Ok(self.num.eval(&one) / d)
    }

    /// d/ds at s = 1.
    pub fn derivative_at_s1(&self) -> Result<Rational, RatFuncError> {
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(RatFuncError::PoleAtOne(self.to_string()));
        }
        let n = self.num.eval(&one);
        let dn = self.num.derivative().eval(&one);
        let dd = self.den.derivative().eval(&one);
        Ok((dn * d.clone() - n * dd) / (d.clone() * d))
    }
}

impl fmt::Debug for RatFuncS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncS({self})")
    }
}

impl fmt::Display for RatFuncS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.render("s");
        if self.den.degree() == Some(0) {
            return f.write_str(&n);
        }
        let d = self.den.render("s");
        let wrap = |t: String, simple: bool| if simple { t } else { format!("({t})") };
        let n_simple = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let d_simple = self.den.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        write!(f, "{}/{}", wrap(n, n_simple), wrap(d, d_simple))
    }
}

impl Zero for RatFuncS {
    fn zero() -> Self {
        RatFuncS { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFuncS {
    fn one() -> Self {
        RatFuncS::from_poly(Poly::one())
    }
}

impl Neg for RatFuncS {
    type Output = Self;
    fn neg(self) -> Self {
        RatFuncS { num: self.num.neg(), den: self.den }
    }
}

impl Add for RatFuncS {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        if self.den == o.den {
            return RatFuncS::new(self.num.add(&o.num), self.den);
        }
        RatFuncS::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
}

impl Sub for RatFuncS {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for RatFuncS {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFuncS::zero();
        }
        RatFuncS::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Div for RatFuncS {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero rational function")
    }
}

impl Field for RatFuncS {
    fn from_rational(r: &Rational) -> Self {
        RatFuncS::constant(r.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFuncS::new(self.den.clone(), self.num.clone()))
        }
    }

    fn tower(&self) -> Option<super::Tower> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_at_one() {
        let q = RatFuncS::q();
        let f = (q.clone() * q.clone() - RatFuncS::one()) / (q.clone() - RatFuncS::one());
        assert_eq!(f, q.clone() + RatFuncS::one());
        assert_eq!(f.specialize_s1().unwrap(), Rational::from_integer(2.into()));
        let pole = (q.clone() - RatFuncS::one()).inv().unwrap();
        assert!(matches!(pole.specialize_s1(), Err(RatFuncError::PoleAtOne(_))));
        assert_eq!(q.derivative_at_s1().unwrap(), Rational::from_integer(2.into()));
    }

    #[test]
    fn monic_denominator() {
        let f = RatFuncS::new(Poly::constant(Rational::from_integer(3.into())), Poly::constant(Rational::from_integer(6.into())));
        assert_eq!(f, RatFuncS::constant(Rational::new(1.into(), 2.into())));
        let g = RatFuncS::s_pow(-2) * RatFuncS::int(-4);
        assert_eq!(g.to_string(), "-4/s^2");
    }
}
