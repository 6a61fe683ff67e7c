use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("map is not total: no image for `{0}`")]
    NotTotal(String),
    #[error("mismatched signature: {0}")]
    MismatchedSignature(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("coaction is not counital: {0}")]
    NotCounital(String),
    #[error("enumeration budget exceeded: {needed} items needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("time ceiling of {0} s exceeded")]
    TimeExceeded(u64),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("fiber over `{0}` is empty")]
    EmptyFiber(String),
    #[error("the empty contramodule has no base point")]
    EmptyCarrier,
    #[error("objects live over different coalgebras")]
    CoalgebraMismatch,
    #[error("incompatible hom objects: {0}")]
    IncompatibleTriple(String),
    #[error("not a coalgebra morphism: {0}")]
    NotCoalgebraMorphism(String),
    #[error("divided-power relation fails at (m, n) = ({m}, {n})")]
    RelationFailure { m: usize, n: usize },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map is not homogeneous of degree {0}")]
    NotHomogeneous(i32),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}
