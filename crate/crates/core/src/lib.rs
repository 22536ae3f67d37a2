//! Crossed products `R*G` over finite fields and roots of unity, built from
//! 2-cocycle data: second group cohomology by brute force, Hamming-isometry
//! classification of the ambient code spaces, and enumeration of ideal codes
//! with their minimum distances.
//!
//! Everything here is exact integer arithmetic at desk scale. The closed-form
//! classifiers in [`classify`] are checked against the independent kernel/image
//! computation in [`cohomology`] by the [`verify`] harness.

pub mod classify;
pub mod cocycles;
pub mod cohomology;
pub mod crossring;
pub mod error;
pub mod ffield;
pub mod groups;
pub mod linalg;
pub mod numutil;
pub mod verify;

pub use error::{Error, Result};
