//! Exact construction, classification and verification of bicovariant
//! first-order differential calculi on C(G) and CG for finite groups G, and
//! the spin-1/2 tangent space of U_q(sl2).

pub mod field;

pub use field::{Cyclotomic, CyclotomicField, Field, Matrix, Poly, RatFuncS, Rational, Subspace};

pub type RationalMatrix = Matrix<Rational>;
pub type CyclotomicMatrix = Matrix<Cyclotomic>;
pub type RatFuncMatrix = Matrix<RatFuncS>;
pub mod group;
pub mod hopf;
pub mod calculus;
pub mod uq;
