use thiserror::Error;

/// Errors raised by constructors, combinators and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A matroid (or list, or family) could not be built from its description.
    #[error("construction error: {0}")]
    Construction(String),

    #[error("element {element} is outside the ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    /// Ground sets are stored as 64-bit masks.
    #[error("ground set of size {size} exceeds the limit of {limit} elements")]
    GroundSetTooLarge { size: usize, limit: usize },

    /// A brute-force routine refused an input larger than its budget.
    #[error("input of size {size} exceeds the brute-force budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// A precondition on the relationship between arguments failed.
    #[error("contract violated: {0}")]
    Contract(String),

    /// The operation is only defined for loopless matroids.
    #[error("element {element} is a loop; the operation requires a loopless matroid")]
    Loop { element: usize },

    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Something that a theorem guarantees did not happen. Points at a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
