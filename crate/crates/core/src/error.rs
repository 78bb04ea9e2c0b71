use thiserror::Error;

use crate::axioms::AxiomResult;
use crate::chain::Elem;
use crate::classify::Refusal;
use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a chain needs at least two elements, got {0}")]
    ChainTooSmall(usize),
    #[error("chain size {0} exceeds the supported maximum of 256")]
    ChainTooLarge(usize),
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("value {value} is not an element of a chain of size {size}")]
    ValueOutOfRange { value: usize, size: usize },
    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("chain mismatch: expected size {expected}, got {found}")]
    ChainMismatch { expected: usize, found: usize },
    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("{m}^{n} points exceed the supported table size")]
    TooLarge { m: usize, n: usize },
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("coordinate {index} out of range for arity {arity}")]
    CoordinateOutOfRange { index: usize, arity: usize },
    #[error("set function is not isotone: value at {lower:#b} exceeds value at {upper:#b}")]
    NotIsotone { lower: usize, upper: usize },
    #[error("set function is not antitone: value at {lower:#b} is below value at {upper:#b}")]
    NotAntitone { lower: usize, upper: usize },
    #[error("not a capacity: {0}")]
    NotCapacity(String),
    #[error("function is not a lattice polynomial (differs from its DNF at {witness:?})")]
    NotPolynomial { witness: Vec<Elem> },
    #[error("function is not quasi-polynomial: {0}")]
    NotQuasiPolynomial(Refusal),
    #[error("refused: {}", .0.axiom)]
    Refused(Box<AxiomResult>),
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("invalid level set: element {value} not in chain of size {size}")]
    InvalidLevelSet { value: usize, size: usize },
    #[error("exhaustive universe has {tables} tables, over the budget of {budget}")]
    BudgetExceeded { tables: String, budget: u64 },
    #[error("sample universe needs at least one sample")]
    EmptySample,
    #[error("{theorem} only applies to {requirement}")]
    NotApplicable { theorem: String, requirement: String },
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}
