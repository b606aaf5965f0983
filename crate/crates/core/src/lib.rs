//! Exact computation of virtual cusp and node counts of plane projective
//! curves, the Plücker formulas they satisfy, and the numerical constraints
//! they impose on hypothetical curves.

pub mod algebra;
pub mod analysis;
pub mod census;
pub mod curve;
pub mod fixtures;
pub mod local;
pub mod oracle;
pub mod plucker;
pub mod report;
pub mod singular;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("polynomial is not homogeneous: `{first}` and `{second}` have different degrees")]
    NonHomogeneous { first: String, second: String },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("degree {0} is outside the supported range")]
    DegenerateDegree(usize),
    #[error("curve has a repeated component: {witness}")]
    NotSquareFree { witness: String },
    #[error("algebraic degree exceeds the extension bound: {certificate}")]
    ExtensionOverflow { certificate: String },
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error("curves share a component")]
    SharedComponent,
    #[error("singular locus has unresolved orbits: {0}")]
    UnresolvedOrbits(String),
    #[error("invariants give negative genus {0}")]
    NegativeGenus(String),
    #[error("irreducibility could not be established")]
    IrreducibilityUnknown,
    #[error("Hessian vanishes identically")]
    DegenerateHessian,
    #[error("dual curve computation failed: {0}")]
    DualFailure(String),
    #[error("root isolation did not converge")]
    Precision,
    #[error("root selection is ambiguous at the current precision")]
    Ambiguous,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
