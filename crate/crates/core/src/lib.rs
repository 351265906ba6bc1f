//! Cubic scalar-extension rings, tangent groupoids and slope calculus over
//! exact and floating-point base rings.

pub mod calculus;
pub mod cubic;
pub mod error;
pub mod expr;
pub mod groupoid;
mod linalg;
pub mod primitive;
pub mod scalars;
pub mod sampling;
pub mod subset;
pub mod suites;
pub mod vector;

pub use error::{Error, Result};
pub use primitive::Primitive;
pub use scalars::{Backend, Ring, RingValue};
pub use subset::Subset;
