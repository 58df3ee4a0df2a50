//! Scenario files, figure-data commands and the acceptance checks behind
//! the `wavechan` binary.

pub mod commands;
pub mod fit;
pub mod output;
pub mod scenario;
pub mod verify;
