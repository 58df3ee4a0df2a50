//! Channel-strength bounds for wave communication between two domains.

pub mod bounds2d;
pub mod bounds3d;
pub mod error;
pub mod geometry;
mod logscale;
pub mod metrics;
pub mod oracle;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
