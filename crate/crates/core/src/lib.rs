pub mod algebra;
pub mod circular;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod hyperbolic;
pub mod inverse;
pub mod jet;
pub mod ladder;
mod memo;
pub mod polylog;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
