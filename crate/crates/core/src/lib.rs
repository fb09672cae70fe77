pub mod cli;
pub mod divcalc;
pub mod error;
pub mod singularity;
pub mod stablered;
pub mod symkernel;
pub mod trees;

pub use error::{Error, Result};
