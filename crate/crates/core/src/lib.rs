//! Lie bialgebra structures on the Heisenberg-Weyl algebra `[A-, A+] = M` and
//! their Hopf algebra quantizations, computed with exact truncated series.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bialgebra;
mod error;
pub mod poisson;
pub mod quantization;

pub use error::{Error, Result};
