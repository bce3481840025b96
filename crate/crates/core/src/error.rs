use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no normalizable Haar functional exists")]
    NoHaar,
    #[error("Haar functional is not unique (solution space has dimension {0})")]
    NonUniqueHaar(usize),
    #[error("Haar functional fails positivity: {0}")]
    Positivity(String),
    #[error("not unitary: {0}")]
    NotUnitary(String),
    #[error("corepresentation axioms fail: {0}")]
    NotCorep(String),
    #[error("representatives are equivalent but not identical: {0}")]
    EquivalentRepresentatives(String),
    #[error("no intertwiner between the corepresentation and its doubly contragredient")]
    NoF,
    #[error("F matrix has vanishing trace")]
    TraceZero,
    #[error("decomposition made no progress after {0} random attempts")]
    DecompositionStall(usize),
    #[error("multiplicity {0} is not close to an integer")]
    NonIntegerMultiplicity(f64),
    #[error("Clebsch-Gordan dimensions do not add up: {0}")]
    MultiplicityMismatch(String),
    #[error("basis functions do not match the side: {0}")]
    SideMismatch(String),
    #[error("subspace is not a coideal subalgebra of the required side: {0}")]
    CoidealMismatch(String),
    #[error("restricted inner product needs S^2-invariance: {0}")]
    NotS2Invariant(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid group table: {0}")]
    GroupTable(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("file format: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
