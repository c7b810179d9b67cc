//! Finite fields, polynomials, and cyclic, linear and Reed–Solomon codes.

pub mod cyclic;
pub mod field;
pub mod linear;
pub mod poly;
pub mod rs;

pub use cyclic::{cyclic_shift, CyclicCode};
pub use field::{f2, f4, gf, Field, FieldElement};
pub use linear::{LinearCode, Matrix};
pub use poly::Polynomial;
pub use rs::ReedSolomon;
