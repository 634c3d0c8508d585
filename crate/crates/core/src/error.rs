use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is infeasible")]
    Infeasible,
    #[error("bilinear form is degenerate on the given subspace")]
    DegenerateRestriction,
    #[error("Killing form is degenerate")]
    DegenerateForm,
    #[error("subspace is not closed under the bracket: [{left}, {right}] leaves it")]
    NotClosed { left: usize, right: usize },
    #[error("Cartan subspace does not act semisimply with rational eigenvalues")]
    NotSimultaneouslyDiagonalizable,
    #[error("Cartan subspace is not abelian")]
    NotAbelian,
    #[error("root system check failed: {0}")]
    RootSystem(String),
    #[error("isotropic root {0}")]
    IsotropicRoot(String),
    #[error("{0} is not a simple root index")]
    NotSimple(usize),
    #[error("grading element has non-integral eigenvalue on basis vector {0}")]
    NonIntegralGrading(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("antisymmetry violated for c[{i}][{j}] on line {line}")]
    Antisymmetry { i: usize, j: usize, line: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("seed data invalid: {0}")]
    InvalidSeed(String),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("no valid choice found: {0}")]
    NotFound(String),
    #[error("unknown algebra descriptor {0:?}")]
    UnknownAlgebra(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
