//! Harmonic analysis on finite-dimensional compact quantum group algebras.

pub mod algebra;
pub mod builtins;
pub mod cg;
pub mod corep;
pub mod error;
pub mod group;
pub mod haar;
pub mod homspace;
pub mod io;
pub mod linalg;
pub mod regular;
pub mod report;
pub mod tensor_ops;
pub mod wigner_eckart;

pub use algebra::{Element, HopfAlgebraSpec, Kind, LinearFunctional, Side, TensorElement};
pub use error::{Error, Result};
pub use report::{Check, Report};
