//! Exact computations with totally decomposable algebras with orthogonal
//! involution over rational function fields of characteristic 2.
//!
//! Scalars are reduced rational functions over GF(2) ([`field::RatFunc`]),
//! algebras are given by multiplication tables ([`algebra::StructAlgebra`]),
//! and involutions are verified linear maps ([`involution::Involution`]).
//! The [`structure`] module builds inseparable subalgebras, isotropy
//! witnesses, representation witnesses and quaternion subalgebras on top of
//! these, and every construction re-verifies its result exactly.

pub mod algebra;
pub mod field;
pub mod forms;
pub mod json;
pub mod involution;
pub mod linalg;
pub mod scenario;
pub mod structure;
pub mod suite;

pub use algebra::{AlgElement, QuaternionDesc, StructAlgebra, Subalgebra};
pub use field::{FieldCtx, FrobCoords, RatFunc};
pub use forms::{DiagonalForm, PfisterForm};
pub use involution::{Involution, InvolutionKind};
pub use linalg::Matrix;
pub use structure::{DecomposedAlgebra, SubalgebraDesc};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds budget {budget}")]
    DegreeOverflow { degree: u32, budget: u32 },
    #[error("operands live in different fields")]
    ContextMismatch,
    #[error("invalid field context: {0}")]
    InvalidContext(String),
    #[error("element is already a square")]
    AlreadySquare,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quaternion symbol needs a nonzero second slot")]
    ZeroBeta,
    #[error("algebra is not a matrix algebra")]
    NotMatrixAlgebra,
    #[error("diagonal entry is zero")]
    ZeroEntry,
    #[error("hermitian entry is not symmetric under the canonical involution")]
    NonSymmetricEntry,
    #[error("hermitian entry is not a unit")]
    NonUnitEntry,
    #[error("alternating space is not a line spanned by a unit")]
    AltNotLine,
    #[error("factor {0} carries a symplectic involution")]
    SymplecticFactor(usize),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("bad generator choice: {0}")]
    BadChoice(String),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("iteration cap {0} exceeded")]
    IterationCapExceeded(usize),
    #[error("involution is anisotropic")]
    NotIsotropic,
    #[error("square of the element lies in F^2")]
    SquareInput,
    #[error("search exhausted after {0} candidates")]
    SearchExhausted(usize),
    #[error("contract violated: {0}")]
    ContractViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
