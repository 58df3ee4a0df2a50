//! Numerical reference: discretize source and receiver regions, assemble the
//! Green's matrix and take its singular values.

mod analysis;
mod domain;
mod kernel;
mod matrix;
mod polar;
mod svd;

pub use analysis::*;
pub use domain::*;
pub use kernel::*;
pub use matrix::*;
pub use polar::*;
pub use svd::*;
