//! Exact computations for quotients of affine semigroups and lattice polytopes
//! by crystallographic reflection groups.
//!
//! The modules build on each other in order: exact arithmetic, root data,
//! Weyl groups, the character algebra, lattice geometry, and the verifiers.

pub mod exactnum;
pub mod rootsys;
pub mod weylgroup;
pub mod charring;
pub mod latgeom;
pub mod theoremcheck;
