//! Slow, first-principles reference engines used by the test suites of the
//! production crates. Nothing here is shared with the production code paths:
//! the point of this crate is that agreement between the two sides is a real
//! check, not a tautology.
//!
//! - [`freegroup`]: curves on the punctured disk as conjugacy classes in the
//!   free group, with the Artin action and exact normal-coordinate extraction.
//! - [`diagram`]: unary (strand-by-strand) reconstruction of the normal-form
//!   diagram of a coordinate vector, and conversion back to free-group words.
//! - [`polygon`]: exact rational polygon overlay with bigon reduction, for
//!   geometric intersection numbers at desk scale.
//! - [`detdiv`]: determinantal-divisor computation of integer matrix
//!   invariant factors by brute-force minor enumeration.

pub mod detdiv;
pub mod diagram;
pub mod freegroup;
pub mod polygon;
