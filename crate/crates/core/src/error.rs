//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operator is not Hermitian")]
    NonHermitian,
    #[error("input rows do not pairwise commute")]
    NonAbelian,
    #[error("generators are not independent")]
    DependentGenerators,
    #[error("state must have at least one qubit")]
    EmptyRegister,
    #[error("postselection has probability below {0:e}")]
    ZeroProbability(f64),
    #[error("branch budget exceeded: {needed} branches, budget {budget}")]
    BranchBudget { needed: usize, budget: usize },
    #[error(
        "class enumeration budget exceeded: needs 2^{needed_log2} representatives, \
         budget 2^{budget_log2}; for n <= 10 use the dense oracle fallback"
    )]
    ClassBudget { needed_log2: u32, budget_log2: u32 },
    #[error("phase angle {0} is a Clifford angle; apply it as a Clifford gate")]
    CliffordAngle(f64),
    #[error("no error operator satisfies the symplectic constraints (internal bug)")]
    InfeasibleErrorOperator,
    #[error("superposition has no branches left")]
    EmptyState,
    #[error("system too large: {n} qubits exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("region too large: {size} qubits exceeds limit {limit}")]
    RegionTooLarge { size: usize, limit: usize },
    #[error("algebra needs {m} representation qubits, exceeding the {limit}-qubit cap")]
    AlgebraTooLarge { m: usize, limit: usize },
    #[error("density matrix has eigenvalue {0} below tolerance")]
    NegativeEigenvalue(f64),
    #[error("negative Renyi index {0}")]
    NegativeRenyiIndex(f64),
    #[error("area term {0} is not an integer number of bits (internal inconsistency)")]
    NonIntegerArea(f64),
    #[error("state failed to normalize: squared norm {0}")]
    Normalization(f64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no samples to recover a group from")]
    NoSamples,
}

pub type Result<T> = std::result::Result<T, Error>;
