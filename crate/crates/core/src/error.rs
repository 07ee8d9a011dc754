use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not nondecreasing at position {position}")]
    NotNondecreasing { position: usize },

    #[error("sequence entries must be positive integers")]
    NonPositiveEntry,

    #[error("invalid sequence literal {0:?}")]
    Parse(String),

    #[error("invalid bound family (m={m}, k={k}, r={r}): need m >= 1, k >= 1, 0 <= r < m")]
    InvalidFamily { m: u32, k: u32, r: u32 },

    #[error("invalid caterpillar parameters (m={m}, n={n}): need m >= 1 and n >= 1")]
    InvalidTree { m: u32, n: u32 },

    #[error("{seq} is not a u-parking distribution for m={m}")]
    NotUParking { seq: String, m: u32 },

    #[error("{seq} is not a parking distribution on Cat_{m}({n})")]
    NotTreeParking { seq: String, m: u32, n: u32 },

    #[error("expected a sequence of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("label {label} does not exist in a tree with {node_count} nodes")]
    LabelOutOfRange { label: u32, node_count: usize },

    #[error("fixed-point type {ell} out of range 1..={m}")]
    InvalidFixedPointType { ell: u32, m: u32 },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("components do not form a first-return decomposition: {0}")]
    InvalidComposition(String),

    #[error("{seq} has no preimage under eta for m={m}")]
    NotInImage { seq: String, m: u32 },

    #[error("enumeration would produce {projected} objects, above the cap of {cap}")]
    CapExceeded { projected: String, cap: u64 },

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("expected {expected} values for evaluation, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("reciprocal needs constant term 1")]
    NonUnitConstant,

    #[error("argument scaling needs a single monomial")]
    NotMonomial,

    #[error("polynomial is not divisible by the product of its variables")]
    NotDivisible,

    #[error(
        "polynomial is not a combination of complete homogeneous polynomials (residual {residual})"
    )]
    NotHomogeneousCombination { residual: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
