use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant maps to a stable string through [`Error::code`]; the CLI
/// prints that code in its JSON error document.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distance table is not square: {rows} rows, row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },
    #[error("{labels} labels but distance table has {rows} rows")]
    LabelMismatch { labels: usize, rows: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("space must contain at least one point")]
    EmptySpace,
    #[error("non-finite distance at ({0}, {1})")]
    NonFiniteAt(usize, usize),
    #[error("non-zero diagonal entry at {0}")]
    NonZeroDiagonal(usize),
    #[error("distance table is asymmetric at ({0}, {1})")]
    AsymmetricAt(usize, usize),
    #[error("negative distance at ({0}, {1})")]
    NegativeAt(usize, usize),
    #[error("zero distance between distinct points ({0}, {1})")]
    ZeroOffDiagonal(usize, usize),
    #[error("triangle inequality violated: d({0},{2}) > d({0},{1}) + d({1},{2})")]
    TriangleViolation(usize, usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation needs at least two points")]
    SingletonSpace,
    #[error("{what}: size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index {index} out of range for space of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("subset must be non-empty")]
    EmptySet,
    #[error("position s = {s} outside [0, {r}]")]
    SOutOfRange { s: f64, r: f64 },
    #[error("candidate set C must be non-empty")]
    EmptyC,
    #[error("invalid correspondence: {0}")]
    InvalidCorrespondence(String),
    #[error("expected a {expected}-point space, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("interpolation parameter t = {0} outside [0, 1]")]
    TOutOfRange(f64),
    #[error("lambda = {lambda} is below 2*diam = {bound}")]
    LambdaTooSmall { lambda: f64, bound: f64 },
    #[error("boundary count {0} outside 2..=7")]
    NOutOfRange(usize),
    #[error("space has zero diameter")]
    DegenerateDiameter,
    #[error("graph distances need a < b <= 2a, got a = {a}, b = {b}")]
    InvalidAB { a: f64, b: f64 },
    #[error("cycle length {0} outside the supported range")]
    MOutOfRange(usize),
    #[error("bipartite graph has no edge cover")]
    NoEdgeCover,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{what}: independent routes disagree ({left} vs {right})")]
    OracleMismatch {
        what: &'static str,
        left: String,
        right: String,
    },
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "NonSquare",
            Error::LabelMismatch { .. } => "LabelMismatch",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::EmptySpace => "EmptySpace",
            Error::NonFiniteAt(..) => "NonFiniteAt",
            Error::NonZeroDiagonal(_) => "NonZeroDiagonal",
            Error::AsymmetricAt(..) => "AsymmetricAt",
            Error::NegativeAt(..) => "NegativeAt",
            Error::ZeroOffDiagonal(..) => "ZeroOffDiagonal",
            Error::TriangleViolation(..) => "TriangleViolation",
            Error::InvalidParams(_) => "InvalidParams",
            Error::SingletonSpace => "SingletonSpace",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::EmptySet => "EmptySet",
            Error::SOutOfRange { .. } => "SOutOfRange",
            Error::EmptyC => "EmptyC",
            Error::InvalidCorrespondence(_) => "InvalidCorrespondence",
            Error::WrongCardinality { .. } => "WrongCardinality",
            Error::TOutOfRange(_) => "TOutOfRange",
            Error::LambdaTooSmall { .. } => "LambdaTooSmall",
            Error::NOutOfRange(_) => "NOutOfRange",
            Error::DegenerateDiameter => "DegenerateDiameter",
            Error::InvalidAB { .. } => "InvalidAB",
            Error::MOutOfRange(_) => "MOutOfRange",
            Error::NoEdgeCover => "NoEdgeCover",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::OracleMismatch { .. } => "OracleMismatch",
            Error::FileNotFound(_) => "FileNotFound",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
