//! Constrained address codes for DNA-based data storage.
//!
//! Mutually uncorrelated (MU) and κ-weakly mutually uncorrelated (WMU)
//! codes, optionally GC-balanced, error correcting, or free of primer dimer
//! byproducts, together with exhaustive verifiers, closed-form bounds, and
//! encoders for information blocks that avoid the address set.

pub mod algebra;
pub mod blockcoding;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod io;
pub mod profile;
pub mod seq;
pub mod verify;

pub use code::{Budget, Code, Provenance};
pub use error::{Error, Result};
pub use profile::{Certifier, Claim, ConstraintProfile, Property};
pub use seq::{psi, psi_inverse, Alphabet, PrefixHeight, Seq};
