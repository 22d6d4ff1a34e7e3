use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no well-defined root data")]
    ZeroPolynomial,

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("square root of a negative value")]
    NegativeRadicand,

    #[error("radicand {0} exceeds the squarefree factorization policy limit")]
    RadicandTooLarge(String),

    #[error("mixed quadratic radicands {0} and {1}; values live in different fields")]
    MixedRadicands(u64, u64),

    #[error("arithmetic on general algebraic reals is not supported; compare them instead")]
    AlgebraicArithmetic,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}")]
    Domain(String),

    #[error("no positive c: λ must lie strictly between the largest zero of G_{{t-2}} and the largest zero of F_{{t-1}}")]
    NoPositiveC,

    #[error("no finite bound: λ is at or above the Ramanujan threshold 2√(k-1)")]
    RamanujanRegime,

    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {0} exceeds the supported cap of {1}")]
    OrderCap(usize, usize),

    #[error("this operation requires a connected graph; run per component")]
    Disconnected,

    #[error("field of order {0} is not in the supported set {{2,3,4,5,7,8,9}}")]
    UnsupportedField(u64),

    #[error("unknown catalog graph {0:?}")]
    UnknownGraph(String),

    #[error("catalog data failed verification for {name}: {reason}")]
    CatalogVerify { name: String, reason: String },

    #[error("search bound {0} exceeds the n ≤ {1} search policy")]
    SearchBoundTooLarge(u64, u64),

    #[error("empty partition part")]
    EmptyPart,
}
