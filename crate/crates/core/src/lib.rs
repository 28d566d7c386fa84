//! Planar diagrams, dual spanning trees and shellings.
//!
//! A [`Diagram`] is a planar combinatorial 2-complex given by a rotation
//! system, with an outer face and a base vertex `⋆` on its boundary.

pub mod complex;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod export;
pub mod metrics;
pub mod shelling;
pub mod verification;

pub use complex::{Diagram, PlanarComplex, Walk};
pub use error::{Error, Result};
