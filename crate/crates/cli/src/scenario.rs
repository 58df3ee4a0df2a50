//! JSON scenario files. Lengths are in units of the wavelength.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};
use wavechan_core::bounds2d::BoundingGeometry2D;
use wavechan_core::bounds3d::BoundingGeometry3D;
use wavechan_core::geometry::Core;
use wavechan_core::oracle::Shape;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema: u32,
    pub name: String,
    pub dimension: u8,
    #[serde(default = "unit")]
    pub wavelength: f64,
    pub geometry: GeometrySpec,
    #[serde(default)]
    pub configurations: Vec<Configuration>,
    #[serde(default)]
    pub thresholds: Vec<f64>,
    #[serde(default)]
    pub snr_list: Vec<f64>,
    #[serde(default)]
    pub n_antenna_list: Vec<usize>,
    /// Grid spacing for the oracle.
    #[serde(default)]
    pub resolution: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    /// Largest q (2D) or n (3D) enumerated.
    #[serde(default)]
    pub max_n: Option<usize>,
    /// Source radii for the count and capacity sweeps.
    #[serde(default)]
    pub sweep: Option<Sweep>,
    /// Which normalizations the bounds command writes.
    #[serde(default = "default_normalizations")]
    pub normalizations: Vec<OutputNormalization>,
    #[serde(default)]
    pub monotonicity: Vec<MonotonicityCheck>,
    /// Also run the shell-shell versus cylinder-shell ratio-sum comparison.
    #[serde(default)]
    pub piestun: bool,
    /// Leave the n = 0 channel out of 3D enumerations.
    #[serde(default)]
    pub exclude_monopole: bool,
}

fn unit() -> f64 {
    1.0
}

fn default_normalizations() -> Vec<OutputNormalization> {
    vec![OutputNormalization::Sum]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySpec {
    pub r_source: f64,
    pub r_receiver: f64,
    pub separation: f64,
    /// Source area (2D) or volume (3D). Taken from the sweep fill when
    /// omitted.
    #[serde(default)]
    pub source_measure: Option<f64>,
    #[serde(default)]
    pub receiver_measure: Option<f64>,
    #[serde(default)]
    pub core: Core,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub radii: Vec<f64>,
    /// Fraction of each bounding region (ball and shell) occupied.
    #[serde(default = "half")]
    pub fill: f64,
}

fn half() -> f64 {
    0.5
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputNormalization {
    Sum,
    Max,
    /// Divided by the q = 0 strength (2D only).
    Zeroth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grid {
    #[default]
    Cartesian,
    /// Concentric ring grids sharing one angle count (2D disks and annuli).
    Polar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Configuration {
    pub name: String,
    pub source: Shape,
    pub receiver: Shape,
    #[serde(default)]
    pub grid: Grid,
}

/// Keeps part of a discretized domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Filter {
    /// Polar angle about the origin in [from, to), radians.
    Sector { from: f64, to: f64 },
    /// Points with every coordinate offset from `center` at most `half_width`.
    Box {
        #[serde(default)]
        center: [f64; 3],
        half_width: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonotonicityCheck {
    pub name: String,
    /// Name of the configuration holding the larger domains.
    pub configuration: String,
    #[serde(default)]
    pub source_filter: Option<Filter>,
    #[serde(default)]
    pub receiver_filter: Option<Filter>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in scenario {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s: Scenario = serde_json::from_str(text)?;
        s.validate()?;
        Ok(s)
    }

    pub fn k(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(
            self.schema == SCHEMA,
            "key `schema`: expected {SCHEMA}, found {}",
            self.schema
        );
        ensure!(
            self.dimension == 2 || self.dimension == 3,
            "key `dimension`: must be 2 or 3"
        );
        ensure!(
            self.wavelength > 0.0 && self.wavelength.is_finite(),
            "key `wavelength`: must be positive"
        );
        let g = &self.geometry;
        for (key, v) in [("r_source", g.r_source), ("r_receiver", g.r_receiver)] {
            ensure!(
                v > 0.0 && v.is_finite(),
                "key `geometry.{key}`: must be positive"
            );
        }
        ensure!(
            g.separation >= 0.0 && g.separation.is_finite(),
            "key `geometry.separation`: must be non-negative"
        );
        for (key, v) in [
            ("source_measure", g.source_measure),
            ("receiver_measure", g.receiver_measure),
        ] {
            match v {
                Some(v) => ensure!(
                    v > 0.0 && v.is_finite(),
                    "key `geometry.{key}`: must be positive"
                ),
                None => ensure!(
                    self.sweep.is_some(),
                    "key `geometry.{key}`: required without a sweep"
                ),
            }
        }
        if let Some(sw) = &self.sweep {
            ensure!(!sw.radii.is_empty(), "key `sweep.radii`: empty");
            ensure!(
                sw.radii.iter().all(|r| *r > 0.0 && r.is_finite()),
                "key `sweep.radii`: must be positive"
            );
            ensure!(
                sw.fill > 0.0 && sw.fill <= 1.0,
                "key `sweep.fill`: must be in (0, 1]"
            );
        }
        for t in &self.thresholds {
            ensure!(
                *t > 0.0 && *t <= 1.0,
                "key `thresholds`: {t} outside (0, 1]"
            );
        }
        for s in &self.snr_list {
            ensure!(
                *s > 0.0 && s.is_finite(),
                "key `snr_list`: {s} must be positive"
            );
        }
        ensure!(
            self.n_antenna_list.iter().all(|n| *n >= 1),
            "key `n_antenna_list`: entries must be at least 1"
        );
        if let Some(r) = self.resolution {
            ensure!(
                r > 0.0 && r.is_finite(),
                "key `resolution`: must be positive"
            );
        }
        let mut names = HashSet::new();
        for c in &self.configurations {
            ensure!(
                names.insert(c.name.as_str()),
                "key `configurations`: duplicate name `{}`",
                c.name
            );
            ensure!(
                c.name
                    .chars()
                    .all(|ch| ch.is_ascii_alphanumeric() || ch == '_' || ch == '-'),
                "key `configurations.name`: `{}` must be alphanumeric, `_` or `-`",
                c.name
            );
            for (side, shape) in [("source", &c.source), ("receiver", &c.receiver)] {
                ensure!(
                    shape.dimension() == self.dimension as usize,
                    "key `configurations.{}.{side}`: {}D shape in a {}D scenario",
                    c.name,
                    shape.dimension(),
                    self.dimension
                );
            }
            if c.grid == Grid::Polar {
                for shape in [&c.source, &c.receiver] {
                    if !matches!(shape, Shape::Disk2d { .. } | Shape::Annulus2d { .. }) {
                        bail!(
                            "key `configurations.{}.grid`: polar grids need disks or annuli",
                            c.name
                        );
                    }
                }
            }
        }
        if self.dimension == 3 && self.normalizations.contains(&OutputNormalization::Zeroth) {
            bail!("key `normalizations`: `zeroth` applies to 2D scenarios only");
        }
        for m in &self.monotonicity {
            ensure!(
                names.contains(m.configuration.as_str()),
                "key `monotonicity.{}.configuration`: no configuration `{}`",
                m.name,
                m.configuration
            );
        }
        Ok(())
    }

    fn measures(&self, r_source: f64) -> (f64, f64) {
        let g = &self.geometry;
        let fill = self.sweep.as_ref().map_or(1.0, |s| s.fill);
        let core =
            wavechan_core::geometry::CoreShell::new(r_source, g.r_receiver, g.separation, g.core);
        let (src, rcv) = if self.dimension == 2 {
            let disk = |r: f64| PI * r * r;
            (disk(r_source), disk(core.r_outer) - disk(core.r_inner))
        } else {
            let ball = |r: f64| 4.0 / 3.0 * PI * r.powi(3);
            (ball(r_source), ball(core.r_outer) - ball(core.r_inner))
        };
        (
            g.source_measure.unwrap_or(fill * src),
            g.receiver_measure.unwrap_or(fill * rcv),
        )
    }

    /// 2D bounding geometry, with the source radius replaced in sweeps.
    pub fn geometry_2d(&self, r_source: Option<f64>) -> Result<BoundingGeometry2D> {
        let g = &self.geometry;
        let r = r_source.unwrap_or(g.r_source);
        let (s, v) = self.measures(r);
        let geom = BoundingGeometry2D::new(self.k(), r, g.r_receiver, g.separation, s, v)?
            .with_core(g.core);
        for w in geom.fill_warnings() {
            log::warn!("{w}");
        }
        Ok(geom)
    }

    pub fn geometry_3d(&self, r_source: Option<f64>) -> Result<BoundingGeometry3D> {
        let g = &self.geometry;
        let r = r_source.unwrap_or(g.r_source);
        let (s, v) = self.measures(r);
        let geom = BoundingGeometry3D::new(self.k(), r, g.r_receiver, g.separation, s, v)?
            .with_core(g.core);
        for w in geom.fill_warnings() {
            log::warn!("{w}");
        }
        Ok(geom)
    }
}
