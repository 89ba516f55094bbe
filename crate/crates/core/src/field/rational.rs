use super::{Field, Tower};
use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn tower(&self) -> Option<Tower> {
        None
    }
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-6/4"), Some(Rational::new((-3).into(), 2.into())));
        assert_eq!(parse_rational(" 7 "), Some(Rational::from_integer(7.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn lowest_terms_and_inverse() {
        let r = Rational::new(10.into(), (-4).into());
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.inv().unwrap(), Rational::new((-2).into(), 5.into()));
        assert!(Rational::zero().inv().is_none());
    }
}
