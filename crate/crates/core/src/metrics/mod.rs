//! Channel spectra and the figures of merit derived from them.

mod capacity;
mod count;
mod spectrum;

pub use capacity::*;
pub use count::*;
pub use spectrum::*;
