use thiserror::Error;

/// Errors raised by semigroup, complex and pointlike computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),

    #[error("malformed table: {0}")]
    InvalidTable(String),

    #[error("{what} of size {got} exceeds the cap of {cap}")]
    SizeCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("setwise product with an empty operand")]
    EmptyOperand,

    #[error("the empty semigroup has no complexes")]
    EmptyBase,

    #[error("base semigroups differ")]
    BaseMismatch,

    #[error("morphism does not send every face into the target complex")]
    NotComplexMorphism,

    #[error("codomain of the first relational morphism is not the domain of the second")]
    CodDomMismatch,

    #[error("relational morphisms have different domains")]
    DomMismatch,

    #[error("map is not a homomorphism: ({0},{1}) breaks the product rule")]
    NotHomomorphism(usize, usize),

    #[error("pair ({0},{1}) is sent outside the target graph")]
    MorphismConditionViolated(usize, usize),

    #[error("element {0} of the domain is not related to anything")]
    NotSurjectiveOntoDomain(usize),

    #[error("graph is not product closed: ({0},{1})*({2},{3}) is missing")]
    NotProductClosed(usize, usize, usize, usize),

    #[error("index {index} out of range for a semigroup of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("the given elements do not generate the semigroup")]
    NotGenerating,

    #[error("semigroup {table:?} lies in the pseudovariety but is not a point of the modulus")]
    PointsMismatch { table: Vec<Vec<usize>> },

    #[error("modulus has no wired points pseudovariety")]
    NoWiredPoints,

    #[error("invalid expression: {0}")]
    InvalidExpression(String),

    #[error("lower bound is not contained in the upper bound")]
    BoundsCrossed,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
