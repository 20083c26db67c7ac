use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator b{index} out of range for {anyons} anyons")]
    GeneratorOutOfRange { index: usize, anyons: usize },

    #[error("anyon count mismatch: expected {expected}, found {found}")]
    AnyonCountMismatch { expected: usize, found: usize },

    #[error("state of {m} anyons cannot be teleported with N = {n} (need M <= 2N+1)")]
    StateTooLarge { m: usize, n: usize },

    #[error("sector {sector} is incompatible with {anyons} anyons")]
    IncompatibleSector { anyons: usize, sector: String },

    #[error("state support violates superselection: {0}")]
    Superselection(String),

    #[error("expected {expected} amplitudes, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("qubit {qubit} out of range for {qubits} qubits")]
    QubitOutOfRange { qubit: usize, qubits: usize },

    #[error("invalid basis labels: {0}")]
    InvalidLabels(String),

    #[error("value has no exact representation: {0}")]
    NotExact(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("state file: {0}")]
    StateFile(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
