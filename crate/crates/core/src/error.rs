use thiserror::Error;

/// Errors raised by the algebra toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^32")]
    BadModulus(u64),
    #[error("denominator divisible by the field characteristic {0}")]
    DivisionByCharacteristic(u64),
    #[error("non-invertible series")]
    NonInvertibleSeries,
    #[error("series truncations differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("not a dimension series: {0}")]
    NotDimensionSeries(String),
    #[error("series constant term must be 1")]
    ConstantTermNotOne,
    #[error("series never vanishes (r <= n^2/4)")]
    NeverVanishes,
    #[error("not a Lie-type relation: {0}")]
    NotLieRelation(String),
    #[error("relation {0} is not quadratic")]
    NotQuadratic(usize),
    #[error("relation degree {0} is below 2")]
    LowDegree(usize),
    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("too many Lie relations: r = {r} exceeds n(n+1)/2 = {max}")]
    TooManyLieRelations { r: usize, max: usize },
    #[error("construction needs at least 2 generators, got {0}")]
    TooFewGenerators(usize),
    #[error("{0}")]
    Invalid(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown corpus entry {0:?}")]
    UnknownCorpusEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
