use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial has no unit normalization")]
    ZeroPolynomial,
    #[error("exponent out of the signed 32-bit range")]
    ExponentOverflow,
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("matrix size must be positive")]
    EmptyMatrix,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cannot parse braid word: {0}")]
    BraidParse(String),
    #[error("generator index {index} out of range for {strands} strands")]
    BraidIndex { index: i64, strands: usize },
    #[error("reduced Burau undefined for fewer than 2 strands")]
    TooFewStrands,
    #[error("braid closure is disconnected ({0} components); the axis formula needs a knot")]
    DisconnectedClosure(usize),

    #[error("cannot parse PD code: {0}")]
    PdParse(String),
    #[error("arc {label} occurs {count} times, expected exactly 2")]
    ArcMultiplicity { label: u64, count: usize },
    #[error("inconsistent traversal: {0}")]
    InconsistentTraversal(String),
    #[error("no component with index {0}")]
    NoSuchComponent(usize),
    #[error("linking number requested for a component with itself")]
    SameComponent,

    #[error("basepoint {0} is not in the diagram")]
    BasepointNotInDiagram(String),
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("x-degree is {found}, expected {expected}")]
    AxisDegree { expected: i64, found: i64 },
    #[error("x^0 coefficient {0} is not a monomial")]
    AxisConstantNotMonomial(String),
    #[error("leading x coefficient {0} is not a monomial")]
    AxisLeadingNotMonomial(String),

    #[error("Batson-Seed check needs at least 2 components, diagram has {0}")]
    TooFewComponents(usize),
    #[error("dataset error: {0}")]
    Dataset(String),
    #[error("unknown link name {0:?}")]
    UnknownName(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
