//! Quantum tangent spaces and bicovariant first-order calculi on C(G) and CG:
//! classification, structure maps, general constructions and verification.

mod classify;
mod constructions;
mod crosscheck;
mod report;
mod structure;
mod tangent;
mod verify;

pub use classify::{
    classify_functions, classify_group_algebra, classify_group_algebra_with, instantiate_lambda, tangent_from_lambda, ClassCalculus, CharacterFamily,
    FunctionClassification, GroupAlgebraClassification, LambdaInstantiation,
};
pub use constructions::{
    ad_invariant, calculus_join, calculus_meet, central_intertwiner_check, centrally_generated, class_function, class_sum,
    exterior_rank2, inner_tangent, is_central, mirror_ideal, mirror_ideal_left, right_class_ideals, InnerVariant,
};
pub use crosscheck::{function_cross_checks, CrossCheck};
pub use report::{
    functions_report, group_algebra_report, CalculusRecord, CheckRecord, ClassificationReport, DirectSumRecord,
    InstantiationRecord,
};
pub use structure::{FirstOrderCalculus, GammaElement};
pub use tangent::{
    ideal_from_tangent, tangent_from_ideal, Handedness, Provenance, QuotientIdeal, StabilityCertificate, TangentSpace,
};
pub use verify::{verify_calculus, verify_tangent, Check, CheckStatus, VerificationReport};

use crate::field::LinalgError;
use crate::group::CharacterError;
use crate::hopf::HopfError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CalculusError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error("tangent space is not stable under the quantum double: {0}")]
    NotStable(String),
    #[error("empty tangent space: {0}")]
    EmptyTangent(String),
    #[error("element is not in the tangent space")]
    NotInL,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("element is not invariant under the adjoint coaction: {0}")]
    NotAdInvariant(String),
    #[error("element is not in the kernel of the counit: {0}")]
    NotInKerEps(String),
    #[error("side mismatch between calculus and argument")]
    SideMismatch,
    #[error("not a stable ideal: {0}")]
    NotAnIdeal(String),
    #[error("character row {0} is trivial or out of range")]
    BadCharacter(usize),
}

#[cfg(test)]
mod tests;
