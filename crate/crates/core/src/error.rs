use thiserror::Error;

/// Errors shared across the crate.
///
/// Domain conditions that the caller is expected to handle (non-finite value
/// sets, non-isolated critical loci, undetected periodicity) are *not* errors;
/// they are encoded in the result types of the operations that produce them.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("malformed rational at byte {pos}: {msg}")]
    MalformedRational { pos: usize, msg: String },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected a point of length {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable `{name}` is not in the ring")]
    NoSuchVariable { name: String },
    #[error("cannot take weights of the zero polynomial")]
    ZeroPolynomial,
    #[error("generated variable `{name}` collides with an ambient variable")]
    NameCollision { name: String },
    #[error("computation budget exceeded after {spent} S-pairs")]
    BudgetExceeded { spent: u64 },
    #[error("point does not lie on the zero locus of the relations")]
    PointNotOnLocus,
    #[error("relations do not form a regular sequence: {0}")]
    NotRegularSequence(String),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("potentials do not match")]
    PotentialMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
}
