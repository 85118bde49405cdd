use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("shape {0:?} is neither a single row nor a single column")]
    NotRowOrColumn(Vec<u32>),

    #[error("dihedral group I2(n) requires n >= 2, got n = {0}")]
    DihedralOrder(u32),

    #[error("cyclic group Z_n requires n >= 1, got n = {0}")]
    CyclicOrder(u32),

    #[error("character label {label} is not defined for n = {n}")]
    InvalidLabel { label: String, n: u32 },

    #[error("inner product is not rational: {0}")]
    NotRational(String),

    #[error("ring layouts differ: {left} vs {right}")]
    LayoutMismatch { left: String, right: String },

    #[error("polarization operator E_{index} does not exist for (k, j) = ({k}, {j})")]
    InvalidOperator { index: usize, k: usize, j: usize },

    #[error("too many fermionic generators ({0}); at most 64 are supported")]
    TooManyFermions(usize),

    #[error("degree cap {cap} is below n + 1 = {min}")]
    DegreeCapTooSmall { cap: u32, min: u32 },

    #[error("q,t specialization needs k >= 2, got k = {0}")]
    SpecializationNeedsTwo(usize),

    #[error("cannot parse monomial `{0}`")]
    ParseMonomial(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
