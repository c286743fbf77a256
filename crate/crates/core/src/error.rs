use thiserror::Error;

use crate::orbifold::AlphaInterval;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplicity must be at least 2, got {0}")]
    Multiplicity(u64),

    #[error("component group must have degree >= 1 and count >= 1 (degree {degree}, count {count})")]
    ComponentGroup { degree: u64, count: u64 },

    #[error("arrangement has no components")]
    NoComponents,

    #[error("total degree overflows u64")]
    DegreeOverflow,

    #[error("not a consistent transversal arrangement: identity violated: {incidences} \u{2260} {pairs}")]
    IdentityViolated { incidences: String, pairs: String },

    #[error("unknown catalog arrangement {0:?}")]
    UnknownCatalog(String),

    #[error("catalog arrangement {name} {reason}")]
    CatalogParams { name: &'static str, reason: String },

    #[error("weight vector is empty")]
    EmptyWeights,

    #[error("weight {0} outside [0, 1]")]
    WeightOutOfRange(Rational),

    #[error("empty alpha interval [{}, {}]", .0.lo, .0.hi)]
    EmptyAlphaInterval(Box<AlphaInterval>),

    #[error("alpha {alpha} outside [{}, {}]", .interval.lo, .interval.hi)]
    AlphaOutOfRange { alpha: Rational, interval: Box<AlphaInterval> },

    #[error("projective triple is zero")]
    ZeroTriple,

    #[error("identical lines {0} have no unique intersection")]
    IdenticalLines(String),

    #[error("need at least 2 lines, got {0}")]
    TooFewLines(usize),

    #[error("duplicate line {line} at positions {first} and {second}")]
    DuplicateLine { line: String, first: usize, second: usize },

    #[error("multiplicity cap must be at least 2, got {0}")]
    RCap(u64),

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    ParseRational(#[from] ParseRationalError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
