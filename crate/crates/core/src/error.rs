use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("edge {edge}: {message}")]
    DanglingDart { edge: usize, message: String },
    #[error("graph is not connected ({components} components)")]
    Disconnected { components: usize },
    #[error("rotation system traces {faces} faces; a sphere embedding with n={n}, m={m} needs {expected}")]
    NonPlanarEmbedding {
        n: usize,
        m: usize,
        faces: usize,
        expected: i64,
    },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("at least two faces are required, got {faces}")]
    TooFewFaces { faces: usize },
    #[error("face length {length} is below 2")]
    InvalidFaceLength { length: u32 },
    #[error("Grinberg number {0} is odd")]
    OddGrinbergNumber(u64),
    #[error("walk step {index} ({from} -> {to}) does not follow an edge")]
    NonAdjacentStep { index: usize, from: usize, to: usize },
    #[error("walk misses vertices {missing:?}")]
    NotSpanning { missing: Vec<usize> },
    #[error("vertex {vertex} does not exist (n = {n})")]
    UnknownVertex { vertex: usize, n: usize },
    #[error("walk is empty")]
    EmptyWalk,
    #[error("n = {n} exceeds the solver limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("host graph has parallel edges {first} and {second}")]
    NotSimpleHost { first: usize, second: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(Box<Error>),
    #[error("face two-colouring failed across edge {edge}")]
    OddDualCycle { edge: usize },
    #[error("bounds are inconsistent: {0}")]
    InconsistentBounds(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("bad fixture parameters: {0}")]
    BadParams(String),
    #[error("face {face} does not exist ({faces} faces)")]
    UnknownFace { face: usize, faces: usize },
    #[error("theorem check failed: {0}")]
    TheoremViolated(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Stable variant name, printed on stderr by the CLI and mirrored by the C status codes.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SyntaxError { .. } => "SyntaxError",
            Error::DanglingDart { .. } => "DanglingDart",
            Error::Disconnected { .. } => "Disconnected",
            Error::NonPlanarEmbedding { .. } => "NonPlanarEmbedding",
            Error::LoopEdge { .. } => "LoopEdge",
            Error::TooFewFaces { .. } => "TooFewFaces",
            Error::InvalidFaceLength { .. } => "InvalidFaceLength",
            Error::OddGrinbergNumber(_) => "OddGrinbergNumber",
            Error::NonAdjacentStep { .. } => "NonAdjacentStep",
            Error::NotSpanning { .. } => "NotSpanning",
            Error::UnknownVertex { .. } => "UnknownVertex",
            Error::EmptyWalk => "EmptyWalk",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotSimpleHost { .. } => "NotSimpleHost",
            Error::InvalidWalk(_) => "InvalidWalk",
            Error::OddDualCycle { .. } => "OddDualCycle",
            Error::InconsistentBounds(_) => "InconsistentBounds",
            Error::UnknownFixture(_) => "UnknownFixture",
            Error::BadParams(_) => "BadParams",
            Error::UnknownFace { .. } => "UnknownFace",
            Error::TheoremViolated(_) => "TheoremViolated",
            Error::Io { .. } => "Io",
        }
    }

    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::SyntaxError {
            line,
            message: message.into(),
        }
    }
}
