//! Core-shell bounding configuration shared by the 2D and 3D bounds.
//!
//! The core (disk or ball) is centred on one of the two domains. The shell
//! around it, concentric with the core, covers every point of the other
//! domain: it starts at d + r_core and ends at d + r_core + 2 r_other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which domain the bounding core is centred on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Core {
    /// The domain with the smaller bounding radius (source on ties).
    #[default]
    Smaller,
    Source,
    Receiver,
}

/// Radii derived from (R_s, R_r, d) and the core choice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoreShell {
    pub r_core: f64,
    pub r_other: f64,
    pub r_inner: f64,
    pub r_outer: f64,
    /// Largest distance between any two points of the two domains.
    pub d_max: f64,
    /// 1 + d / r_core, the per-channel decay base of the asymptotes.
    pub ratio: f64,
    pub core_is_source: bool,
}

impl CoreShell {
    pub fn new(r_source: f64, r_receiver: f64, separation: f64, core: Core) -> Self {
        let core_is_source = match core {
            Core::Smaller => r_source <= r_receiver,
            Core::Source => true,
            Core::Receiver => false,
        };
        let (r_core, r_other) = if core_is_source {
            (r_source, r_receiver)
        } else {
            (r_receiver, r_source)
        };
        CoreShell {
            r_core,
            r_other,
            r_inner: separation + r_core,
            r_outer: separation + r_core + 2.0 * r_other,
            d_max: separation + 2.0 * r_source + 2.0 * r_receiver,
            ratio: 1.0 + separation / r_core,
            core_is_source,
        }
    }
}

/// Warnings for a domain measure larger than its bounding region: the core
/// domain against the core disk or ball, the other one against the shell.
pub(crate) fn fill_warnings(
    c: &CoreShell,
    source: f64,
    receiver: f64,
    noun: &str,
    measure: impl Fn(f64) -> f64,
) -> Vec<String> {
    let core_region = measure(c.r_core);
    let shell_region = measure(c.r_outer) - measure(c.r_inner);
    let (source_region, receiver_region) = if c.core_is_source {
        (core_region, shell_region)
    } else {
        (shell_region, core_region)
    };
    let mut out = Vec::new();
    for (name, value, region) in [
        ("source", source, source_region),
        ("receiver", receiver, receiver_region),
    ] {
        if value > region * (1.0 + 1e-12) {
            out.push(format!(
                "{name} {noun} {value} exceeds its bounding region {region}"
            ));
        }
    }
    out
}

pub(crate) fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

pub(crate) fn non_negative(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!(
            "{name} must be non-negative, got {v}"
        )))
    }
}
