//! Unitarity of highest weight modules for the Hermitian real forms
//! `so(2, 2n-2)`, `so(2, 2n-1)`, `e6(-14)` and `e7(-25)`, in exact arithmetic.

pub mod classify;
pub mod dirac;
pub mod error;
pub mod registry;
pub mod root_system;
pub mod text;
pub mod theta;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{Family, RootSystemSpec};
pub use weight::{Rational, Weight};
