use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Variants are grouped by how a caller is expected to react: bad input,
/// a presentation/class for which the invariant is not defined, or an
/// internal consistency failure that indicates a bug or an inconsistent
/// diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // -- invalid input -------------------------------------------------
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("crossing signs between components {0} and {1} sum to an odd number")]
    OddCrossingParity(usize, usize),
    #[error("unsupported weight {0}; only 0 and 1 are supported")]
    UnsupportedWeight(i64),
    #[error("invalid lens space parameters p={p}, q={q}")]
    InvalidLensSpec { p: i64, q: i64 },
    #[error("bad index set: {0}")]
    BadIndexSet(String),
    #[error("invalid cohomology class: {0}")]
    InvalidOmega(String),
    #[error("mixed symbolic/cyclotomic evaluation is not supported")]
    MixedMode,
    #[error("H_1 has a free part; supply meridian images explicitly")]
    InfiniteH1,

    // -- invariant undefined -------------------------------------------
    #[error("presentation is not computable: meridian {0} maps to the identity")]
    NotComputable(usize),
    #[error("denominator vanishes under the substitution")]
    DenominatorVanishes,

    // -- internal consistency ------------------------------------------
    #[error("Conway sign undetermined: every Torres substitution vanishes")]
    SignUndetermined,
    #[error("no symmetrizing monomial exists for the Alexander polynomial")]
    AsymmetricInput,
    #[error("exact division failed: {0}")]
    InternalExactnessFailure(String),
    #[error("c-sequence endpoint mismatch: c1={c1}, expected {expected}")]
    C1Mismatch { c1: i64, expected: i64 },
    #[error("surgery value differs from closed formula at p={p}, q={q}, k={k}")]
    SurgeryClosedMismatch { p: i64, q: i64, k: i64 },
}

/// Coarse classification used for process exit codes and report status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    NotComputable,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NotComputable(_) | DenominatorVanishes => ErrorKind::NotComputable,
            SignUndetermined
            | AsymmetricInput
            | InternalExactnessFailure(_)
            | C1Mismatch { .. }
            | SurgeryClosedMismatch { .. } => ErrorKind::Internal,
            _ => ErrorKind::InvalidInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
