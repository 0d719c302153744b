use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("generator {value} exceeds the supported maximum {max}")]
    GeneratorTooLarge { value: u64, max: u64 },
    #[error("gcd of the generators is {0}, but a numerical semigroup needs gcd 1")]
    GcdNotOne(u64),
    #[error("Frobenius number {value} exceeds the supported maximum {max}")]
    FrobeniusTooLarge { value: i64, max: i64 },
    #[error("genus {requested} exceeds the configured cap {cap}")]
    GenusCapExceeded { requested: usize, cap: usize },
    #[error("ideals belong to different semigroups")]
    SemigroupMismatch,
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("iteration cap {cap} exceeded while computing {what}")]
    IterationCapExceeded { what: &'static str, cap: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("the semigroup is <1>: the ring is a DVR")]
    DvrInput,
    #[error("unknown property id `{0}`")]
    UnknownProperty(String),
    #[error("parameter {value} is out of range for family `{family}` (requires {bound})")]
    ParamOutOfRange {
        family: String,
        value: i64,
        bound: String,
    },
}
