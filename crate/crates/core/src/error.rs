use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("lattice basis does not span a direct summand")]
    NotASummand,

    #[error("zero vector has no unimodularity")]
    ZeroVector,

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },

    #[error("no decomposition into at most {max_parts} unimodular parts within radius {radius}")]
    DecompositionNotFound { max_parts: usize, radius: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRank { index: usize, rank: usize },

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("automorphism is not IA")]
    NotIA,

    #[error("automorphism is not inner")]
    NotInner,

    #[error("not an involution")]
    NotInvolution,

    #[error("involution is not diagonalizable over the integers")]
    NotDiagonalizable,

    #[error("negated sublattice has odd rank {0}")]
    OddNegativeRank(usize),

    #[error("canonical form failed validation: {0}")]
    CanonicalizationPostconditionFailed(String),

    #[error("element is not primitive")]
    NotPrimitive,

    #[error("automorphism does not fix generator x{0}")]
    DoesNotFixGenerator(usize),

    #[error("automorphism is not a symmetry modulo IA")]
    NotSymmetryModIA,

    #[error("conjugations do not form a basis set")]
    NotABasisSet,

    #[error("conjugation is not a member of the basis set")]
    NotInBasisSet,

    #[error("no element of the coset is inverted (odd commutator exponent)")]
    NoInvertedRepresentative,

    #[error("symmetry is not attached to the basis set")]
    NotAttached,

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
