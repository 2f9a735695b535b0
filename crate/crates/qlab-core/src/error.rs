use thiserror::Error;

/// Errors shared across the library.
///
/// Numerical preconditions (hermiticity, unitarity, representability) are
/// checked against explicit tolerances at the call sites that require them;
/// the offending quantity is reported so failures are diagnosable.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (asymmetry {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {dim} exceeds the dense-storage cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndexOutOfRange { index: usize, n: usize },
    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("post-selected branch has probability {probability:.3e}")]
    ZeroProbabilityBranch { probability: f64 },
    #[error("keep set must be nonempty")]
    EmptyKeepSet,
    #[error("flag register structure violated: {reason}")]
    BadFlagStructure { reason: String },
    #[error("state is not an eigenvector (residual {residual:.3e})")]
    NotEigenvector { residual: f64 },
    #[error("spectrum out of the required range: {reason}")]
    SpectrumOutOfRange { reason: String },
    #[error("initial state has zero overlap with the ground state")]
    ZeroGroundOverlap,
    #[error("eigenvalue {value} is not exactly representable with {bits} bits")]
    EigenvalueNotRepresentable { value: f64, bits: usize },
    #[error("rotation constant C = {c} exceeds the smallest eigenvalue {lambda_min}")]
    CTooLarge { c: f64, lambda_min: f64 },
    #[error("stability precondition violated: {reason}")]
    PreconditionViolated { reason: String },
    #[error("Hamiltonian has no splitting into two parts")]
    NoSplit,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("operator norm {norm} exceeds one")]
    NormExceedsOne { norm: f64 },
    #[error("max-norm {norm} exceeds one")]
    MaxNormExceeded { norm: f64 },
    #[error("matrix is not banded: nonzero pattern does not fit a cyclic band")]
    NotBanded,
    #[error("block-encoding list is inhomogeneous: {reason}")]
    InhomogeneousBlocks { reason: String },
    #[error("block encoding has subnormalization {alpha}, expected 1")]
    SubnormalizedInput { alpha: f64 },
    #[error("phase list length {got} does not match degree {degree}")]
    PhaseLengthMismatch { got: usize, degree: usize },
    #[error("x = {x} outside [-1, 1]")]
    XOutOfRange { x: f64 },
    #[error("target max-norm {norm} violates the bound < 1")]
    MaxNormViolated { norm: f64 },
    #[error("target parity does not match its degree")]
    ParityMismatch,
    #[error("phase optimization did not converge: residual {residual:.3e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },
    #[error("degree {degree} too low: achieved error {achieved:.3e}")]
    DegreeTooLow { degree: usize, achieved: f64 },
    #[error("phase solve failed: {source}")]
    PhaseSolveFailed { #[source] source: Box<Error> },
    #[error("spectral gap violated: eigenvalue {value} inside the forbidden band")]
    GapViolated { value: f64 },
    #[error("condition number underestimated: sigma_min {sigma_min} < 1/kappa = {inv_kappa}")]
    ConditionNumberUnderestimated { sigma_min: f64, inv_kappa: f64 },
    #[error("matrix is not row-stochastic: {reason}")]
    NotStochastic { reason: String },
    #[error("overlap {overlap} below the promised lower bound {delta}")]
    OverlapBelowDelta { overlap: f64, delta: f64 },
    #[error("unknown experiment `{name}`")]
    UnknownExperiment { name: String },
    #[error("parameter out of range: {reason}")]
    ParameterOutOfRange { reason: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
