pub mod cli;
pub mod construct;
pub mod dyck;
pub mod error;
pub mod plane;
pub mod ratio;
pub mod report;
pub mod skewfield;
pub mod suite;
pub mod svg;

pub use error::{Error, Result};
pub use skewfield::{FieldSpec, Scalar};
