//! U_q(sl2) in PBW form, its pairing with the free algebra on the SU_q(2)
//! matrix coordinates, and the 4-dimensional spin-1/2 tangent space.
//!
//! Conventions: KE = qEK, KF = q^-1 FK, [E,F] = (K^2 - K^-2)/(q - q^-1),
//! Delta E = E (x) K + K^-1 (x) E (same for F), rho(E) = e_12, rho(F) = e_21,
//! rho(K) = diag(s, s^-1), <x, rho^i_j> = rho(x)_ij, q = s^2.

mod checks;
mod pairing;
mod pbw;
mod report;
mod rmatrix;
mod tangent;

#[cfg(test)]
mod tests;

pub use checks::{
    braid_relation, braiding_operator, classical_limit, q_trace, qlier_identities, qtrace_inner_check,
    qtrace_inner_check_with, verify_qlier, ClassicalLimitReport, QlierReport, QtraceReport, TraceNormalisation,
};
pub use pairing::{pair_word, tensor_rep, word_position, ALetter, AWord, WordPairing};
pub use pbw::{Gen, Mono, PbwElement, PbwTensor};
pub use report::{run_qsuite, QCheck, QCheckRecord, QSuiteReport};
pub use rmatrix::{embed, flip, kron, mul_all, partial_transpose, q_matrix, r21, r_matrix, r_mn, r_nm};
pub use tangent::{
    braiding_coproduct, braiding_rmatrix, bracket_adjoint, bracket_rmatrix, lc_elements, lc_tangent_sl2, q_casimir,
    q_images, structure_constants_4d, su2_q_generators, tensor_mismatch, verify_su2_consistency,
    verify_su2_consistency_with, x_name, xi, Bracket4, Braiding4, ConsistencyReport, LcReport, PbwBasis, QTangent4,
};

use crate::field::{LinalgError, RatFuncError};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UqError {
    #[error("half-integer K power {0} has no spin-1/2 value over Q(s)")]
    HalfIntegerPairing(String),
    #[error("PBW forms of Q disagree with R21 R: {0}")]
    Convention(String),
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("bracket routes disagree: {0}")]
    RouteMismatch(String),
    #[error("{0} leaves the tangent space")]
    NotInTangent(String),
    #[error("family has rank {0}, expected {1}")]
    Dependent(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Pole(#[from] RatFuncError),
}

/// Location and the two sides of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(indices: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Witness { indices: indices.into(), lhs: lhs.into(), rhs: rhs.into() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.indices, self.lhs, self.rhs)
    }
}
