//! Exact-arithmetic models for affine Weyl group combinatorics and the
//! degree-two equivariant topology of affine flag varieties: the group action
//! on the affine Cartan algebra, the fixed-point subspace arrangement and its
//! quadric cone, the relation variety carrying the full equivariant
//! cohomology ring as a groupoid, and the moment images of fixed points with
//! their paraboloid law. Everything is computed over the rationals and every
//! identity is checked exactly.

pub mod affweyl;
pub mod arrangement;
pub mod error;
pub mod groupoid;
pub mod linalg;
pub mod moment;
pub mod poly;
pub mod rat;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use rat::{rat, rat_from_str, rat_int, rat_to_string, Rat};
