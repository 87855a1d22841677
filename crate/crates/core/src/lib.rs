//! Block-matrix partial trace and partial transpose toolkit with a numerical
//! verifier for Loewner, PPT, majorization and singular-value inequalities.

pub mod block;
pub mod cli;
pub mod error;
pub mod generators;
pub mod instance;
pub mod io;
pub mod linalg;
pub mod order;
pub mod rng;
pub mod theorems;

pub use block::BlockMatrix;
pub use error::{Error, Result};
pub use instance::{Instance, IntMatrix};
pub use linalg::{Matrix, Spectrum};
