//! Exact scalar towers and the dense linear algebra built on them.

mod cyclotomic;
mod linalg;
mod poly;
mod ratfunc;
mod rational;

pub use cyclotomic::{cyclotomic_poly, Cyclotomic, CyclotomicField};
pub use linalg::{LinalgError, Matrix, Rref, SpanBuilder, Subspace};
pub use poly::Poly;
pub use ratfunc::{RatFuncError, RatFuncS};
pub use rational::{parse_rational, Rational};

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Which tower a scalar lives in. Values from different towers never meet in
/// one matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tower {
    Rational,
    /// Q(zeta_n) for the given conductor n > 1.
    Cyclotomic(u32),
    RationalFunction,
}

/// An exact field. All arithmetic is by value; clone when a value is reused.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The tower this particular value is pinned to. Rational values of the
    /// cyclotomic tower report `None` since they coerce into any conductor.
    fn tower(&self) -> Option<Tower>;

    /// Serialized exact value.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

/// Checks that all values can coexist in one computation.
pub fn common_tower<'a, F: Field>(values: impl IntoIterator<Item = &'a F>) -> Result<Option<Tower>, LinalgError> {
    let mut seen: Option<Tower> = None;
    for v in values {
        if let Some(t) = v.tower() {
            match seen {
                None => seen = Some(t),
                Some(s) if s == t => {}
                Some(s) => return Err(LinalgError::MixedTower(s, t)),
            }
        }
    }
    Ok(seen)
}
