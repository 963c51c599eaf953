use thiserror::Error;

/// Errors raised by ring arithmetic, lattice presentations, and obstruction
/// evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Two classes over different surfaces or factor counts were combined.
    #[error("classes live over different surfaces or factor counts")]
    RingMismatch,

    /// A sum would mix monomials of different total degree.
    #[error("cannot combine a degree-{0} class with a degree-{1} class")]
    MixedDegree(usize, usize),

    /// `a_k` or `b_k` with `k` outside `1..=g`.
    #[error("basis index {index} outside 1..={genus}")]
    SymbolOutOfRange { index: u32, genus: u32 },

    /// The sphere has no degree-one classes.
    #[error("sphere factors carry only the unit and the top class")]
    OddSymbolOnSphere,

    #[error("factor {factor} outside 1..={factors}")]
    FactorOutOfRange { factor: usize, factors: usize },

    #[error("diagonal classes need two distinct factors")]
    EqualFactors,

    /// A precondition on the arguments of an operation failed.
    #[error("operation requires {0}")]
    Requires(&'static str),

    /// Candidate pullback data does not describe a degree-preserving map.
    #[error("pullback data malformed: {0}")]
    BadPullback(&'static str),

    #[error("relation rows must all have length {0}")]
    RelationLength(usize),

    #[error("vector length {got} does not match {expected} generators")]
    VectorLength { got: usize, expected: usize },
}
