use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a cycle through element {0}")]
    CycleDetected(usize),

    #[error("line {line}: element {element} is out of range for a poset of {n} elements")]
    DanglingElement { line: usize, element: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown poset builder {0:?} (expected \"chain AxB\" or \"rootA M\")")]
    UnknownBuilder(String),

    #[error("poset has more than {limit} maximal chains")]
    ChainBudgetExceeded { limit: usize },

    #[error("orbit exceeded the budget of {limit} states")]
    OrbitBudgetExceeded { limit: usize },

    #[error("expected a state of kind {expected}, found {found}")]
    KindMismatch { expected: &'static str, found: &'static str },

    #[error("rowmotion by transfer maps and by toggles disagree ({0})")]
    CompositionMismatch(String),

    #[error("labeling is outside the {0}")]
    DomainViolation(&'static str),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("poset is not graded")]
    NotGraded,

    #[error("rescaling factor for rank {0} is not central")]
    NotCentral(usize),

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("unknown backend {0:?} (expected rational, matrix:D or tropical)")]
    UnknownBackend(String),

    #[error("{theorem}: point {point} stayed degenerate after {retries} resamples")]
    GenericityFailure { theorem: String, point: usize, retries: usize },

    #[error("{0}")]
    Invalid(String),
}
