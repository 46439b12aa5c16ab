use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket [g{}, g{}] given more than once", .0 + 1, .1 + 1)]
    DuplicateBracket(usize, usize),

    #[error("bracket pair ({}, {}) must have distinct indices", .0 + 1, .1 + 1)]
    DegenerateBracket(usize, usize),

    #[error("Jacobi identity fails on (g{}, g{}, g{})", .0[0] + 1, .0[1] + 1, .0[2] + 1)]
    JacobiViolation([usize; 3]),

    #[error("form coframe does not match the differential's coframe")]
    CoframeMismatch,

    #[error("dimension {0} is not a multiple of 4")]
    DimensionNotQuaternionic(usize),

    #[error("dimension {0} is odd; a complex structure needs even dimension")]
    OddDimension(usize),

    #[error("operator does not square to -id")]
    NotAlmostComplex,

    #[error("quaternion relation {0} fails")]
    QuaternionRelation(&'static str),

    #[error("endomorphism is not H-linear: fails to commute with {0}")]
    NotQuaternionLinear(&'static str),

    #[error("form has wrong bidegree: expected ({expected_p},{expected_q})")]
    WrongBidegree { expected_p: usize, expected_q: usize },

    #[error("metric is not quaternionic Hermitian: {0}")]
    NotQuaternionicHermitian(String),

    #[error("not positive definite: leading minor {minor} is not positive")]
    NotPositive { minor: usize },

    #[error("form is not J-real")]
    NotJReal,

    #[error("degenerate form: {0}")]
    DegenerateForm(&'static str),

    #[error("complex structure is not integrable: N(g{}, g{}) != 0", .0 + 1, .1 + 1)]
    NotIntegrable(usize, usize),

    #[error("d {generator} has a ({p},{q})-component: the Dolbeault splitting needs an integrable I")]
    MixedType { generator: String, p: usize, q: usize },

    #[error("Omega does not come from the pairing's metric")]
    PairingMismatch,

    #[error("Obata system is inconsistent: not hypercomplex or data error")]
    ObataInconsistent,

    #[error("Obata system has a {0}-dimensional solution family; uniqueness fails")]
    ObataNotUnique(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("dimension {dim} exceeds HC_MAX_DIM = {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("{field}: {message}")]
    Parse { field: String, message: String },

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("I/O: {0}")]
    Io(#[from] std::io::Error),
}
