//! Exact-rational cohomology for products of closed surfaces, with the
//! diagonal classes, sphere lattice computations, and obstruction evaluators
//! that decide when point-forgetting maps on configuration spaces admit no
//! section.
//!
//! Everything here is exact: classes carry rational coefficients, lattice
//! computations run over the integers, and no operation takes a tolerance.

mod error;
mod lattice;
mod obstruction;
mod ring;

pub use error::Error;
pub use lattice::{
    euler_class_vanishes_sphere, h2_pconf_sphere, EulerVanishing, IntegerLatticePresentation,
};
pub use obstruction::{
    h1_pconf_dimension, obstruction_closed_surface, s2k_section_constraints, CandidatePullback,
    LinearConstraint, NoSectionWitness, ObstructionVerdict,
};
pub use ring::{diagonal_class, GradedClass, Surface, Symbol};
