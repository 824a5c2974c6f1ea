use thiserror::Error;

/// Errors from building, parsing, or looking up states.
#[derive(Debug, Error)]
pub enum StateError {
    #[error("the zero ket is not a valid state")]
    ZeroKet,

    #[error("qubit count must be at least 1")]
    InvalidQubitCount,

    #[error("amplitude vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },

    #[error("basis label {label:?} is not a binary string of length {n}")]
    BadIndex { label: String, n: u32 },

    #[error("malformed rational {text:?}")]
    BadRational { text: String },

    #[error("duplicate basis label {label:?}")]
    DuplicateIndex { label: String },

    #[error("unknown state name {name:?}")]
    UnknownName { name: String },

    #[error("invalid state file: {0}")]
    Json(#[from] serde_json::Error),
}

/// Errors from Lie-algebra generator application.
#[derive(Debug, Error)]
pub enum LieError {
    #[error("qubit {qubit} out of range for a {n}-qubit ket")]
    QubitOutOfRange { qubit: u32, n: u32 },
}

/// Errors from the floating-point rank path.
#[derive(Debug, Error)]
pub enum RankError {
    #[error("ambiguous numerical rank: spectral gap {gap_ratio:.3e} below required {min_gap:.3e}")]
    AmbiguousRank { gap_ratio: f64, min_gap: f64 },

    #[error("singular value decomposition did not converge")]
    SvdFailed,
}

/// Errors from orbit-dimension sampling.
#[derive(Debug, Error)]
pub enum OrbitError {
    #[error("could not sample an invertible local factor after {attempts} attempts")]
    IloSampling { attempts: u32 },

    #[error("could not sample a nonzero ket after {attempts} attempts")]
    KetSampling { attempts: u32 },

    #[error("local factor {index} has zero determinant")]
    SingularFactor { index: usize },

    #[error("operator acts on {op} qubits but the ket has {ket}")]
    QubitCountMismatch { op: u32, ket: u32 },
}
