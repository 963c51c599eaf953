use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("braid letter {letter} is out of range for {n} strands")]
    LetterOutOfRange { letter: i32, n: usize },

    #[error("strand {strand} is out of range for {n} strands")]
    StrandOutOfRange { strand: usize, n: usize },

    #[error("operands live on different strand counts ({0} and {1})")]
    StrandCountMismatch(usize, usize),

    #[error("braid is not pure: strand {strand} ends at position {ends_at}")]
    NotPure { strand: usize, ends_at: usize },

    #[error("at least {min} strands required, got {n}")]
    TooFewStrands { n: usize, min: usize },

    #[error("puncture set {0} is not usable here: {1}")]
    BadPunctureSet(String, &'static str),

    #[error("malformed braid word text: {0}")]
    Parse(String),

    #[error("coordinate vector has length {got}, expected {expected}")]
    CoordinateLength { got: usize, expected: usize },

    #[error("coordinate vector does not describe a single connected curve ({components} components)")]
    NotConnected { components: usize },

    #[error("curve has no twisting recipe: it was given by raw coordinates")]
    NoRecipe,

    #[error("curve configuration invalid: {0}")]
    BadConfiguration(&'static str),

    #[error("curves with intersection number zero do not fill; no product classification")]
    NotFilling,

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
