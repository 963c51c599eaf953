//! Braid groups of the punctured disk: words, normal curve coordinates, the
//! mapping-class action, twist words, and strand surgery (forgetting,
//! doubling, and the section maps built from them).

pub mod curve;
pub mod error;
mod intersect;
pub mod loops;
mod realize;
pub mod section;
pub mod solve;
pub mod twist;
pub mod word;

pub use error::Error;
pub use loops::LoopCoords;
pub use word::{BraidWord, LinkingMatrix, Permutation};
