use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant has a stable name (see [`Error::name`]) which the command
/// line front-end prints verbatim on the diagnostic stream.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {partition:?} does not fit in the {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: Vec<usize>,
        rows: usize,
        cols: usize,
    },
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("a matroid needs at least one basis")]
    EmptyBases,
    #[error("basis exchange fails for {first:?} and {second:?} at element {element}")]
    ExchangeAxiomViolated {
        first: Vec<usize>,
        second: Vec<usize>,
        element: usize,
    },
    #[error("element {element} is outside the ground set [{n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("basis {basis:?} does not have {rank} elements")]
    WrongBasisSize { basis: Vec<usize>, rank: usize },
    #[error("ground set of size {0} is too large")]
    GroundSetTooLarge(usize),
    #[error("bad lattice step string: {0}")]
    BadStepString(String),
    #[error("lattice path P goes below Q at step {0}")]
    PathsCross(usize),
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("bad matrix entry: {0}")]
    BadMatrixEntry(String),
    #[error("deleted and contracted sets overlap")]
    OverlappingSets,
    #[error("contracted set {0:?} is dependent")]
    DependentContraction(Vec<usize>),
    #[error("matroid is not sparse paving")]
    NotSparsePaving,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("no formula for the connected component on {elements:?} (rank {rank}, {bases} bases): neither sparse paving nor minimal")]
    UnsupportedMatroid {
        elements: Vec<usize>,
        rank: usize,
        bases: usize,
    },
    #[error("ground set size {n} exceeds the polytope limit {limit}")]
    DeskScaleExceeded { n: usize, limit: usize },
    #[error("normalized volume {0} is not a positive integer")]
    NonIntegralVolume(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
}

impl Error {
    /// The variant name, used as the structured error name by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DoesNotFit { .. } => "DoesNotFit",
            Error::InvalidDimensions(_) => "InvalidDimensions",
            Error::AmbientMismatch(_) => "AmbientMismatch",
            Error::EmptyBases => "EmptyBases",
            Error::ExchangeAxiomViolated { .. } => "ExchangeAxiomViolated",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::WrongBasisSize { .. } => "WrongBasisSize",
            Error::GroundSetTooLarge(_) => "GroundSetTooLarge",
            Error::BadStepString(_) => "BadStepString",
            Error::PathsCross(_) => "PathsCross",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::BadMatrixEntry(_) => "BadMatrixEntry",
            Error::OverlappingSets => "OverlappingSets",
            Error::DependentContraction(_) => "DependentContraction",
            Error::NotSparsePaving => "NotSparsePaving",
            Error::NotConnected => "NotConnected",
            Error::UnsupportedMatroid { .. } => "UnsupportedMatroid",
            Error::DeskScaleExceeded { .. } => "DeskScaleExceeded",
            Error::NonIntegralVolume(_) => "NonIntegralVolume",
            Error::InternalConsistency(_) => "InternalConsistency",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::MalformedInput(_) => "MalformedInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
