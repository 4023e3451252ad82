use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),

    #[error("{0} is not a root of this root system")]
    NotARoot(String),

    /// `beta` is removed, `alpha` is kept, and `beta` precedes `alpha` in dominance order.
    #[error("removed set is not an upper ideal: {beta} is removed but {alpha} is not, and {beta} < {alpha}")]
    NotAnIdeal { beta: String, alpha: String },

    #[error("element {element} has {count} gamma-partner covers for simple index {index}")]
    MultiplePartners {
        element: String,
        index: usize,
        count: usize,
    },

    #[error("divided difference {index} at {element}: value at {vertex} is not divisible by a{index}: {value}")]
    InexactDivision {
        element: String,
        index: usize,
        vertex: String,
        value: String,
    },

    #[error("missing prerequisite class for {0}")]
    MissingPrerequisite(String),

    #[error("candidates for {element} disagree at {vertex}: {first_value} via s{first_index}, {second_value} via s{second_index}")]
    UniquenessViolation {
        element: String,
        first_index: usize,
        second_index: usize,
        vertex: String,
        first_value: String,
        second_value: String,
    },

    #[error("class is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("fiber character does not decompose integrally: {0}")]
    NonIntegralMultiplicity(String),

    #[error("more than {cap} reduced words for {element}")]
    TooManyWords { element: String, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
}

impl Error {
    /// Errors that signal a broken computation rather than bad input.
    pub fn is_integrity_failure(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision { .. }
                | Error::UniquenessViolation { .. }
                | Error::NotInSpan(_)
                | Error::MultiplePartners { .. }
                | Error::NonIntegralMultiplicity(_)
        )
    }
}
