use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest matrix row count the grid generators will produce by default.
pub const DEFAULT_ROW_CAP: usize = 6000;

/// Region to discretize. Lengths are in the same units as 1/k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Shape {
    Disk2d {
        #[serde(default)]
        center: [f64; 2],
        radius: f64,
    },
    Annulus2d {
        #[serde(default)]
        center: [f64; 2],
        inner: f64,
        outer: f64,
    },
    Square2d {
        #[serde(default)]
        center: [f64; 2],
        side: f64,
    },
    Ball3d {
        #[serde(default)]
        center: [f64; 3],
        radius: f64,
    },
    Shell3d {
        #[serde(default)]
        center: [f64; 3],
        inner: f64,
        outer: f64,
    },
    Cube3d {
        #[serde(default)]
        center: [f64; 3],
        side: f64,
    },
}

impl Shape {
    pub fn dimension(&self) -> usize {
        match self {
            Shape::Disk2d { .. } | Shape::Annulus2d { .. } | Shape::Square2d { .. } => 2,
            _ => 3,
        }
    }

    /// Exact area or volume.
    pub fn measure(&self) -> f64 {
        match *self {
            Shape::Disk2d { radius, .. } => PI * radius * radius,
            Shape::Annulus2d { inner, outer, .. } => PI * (outer * outer - inner * inner),
            Shape::Square2d { side, .. } => side * side,
            Shape::Ball3d { radius, .. } => 4.0 / 3.0 * PI * radius.powi(3),
            Shape::Shell3d { inner, outer, .. } => 4.0 / 3.0 * PI * (outer.powi(3) - inner.powi(3)),
            Shape::Cube3d { side, .. } => side.powi(3),
        }
    }

    fn center(&self) -> [f64; 3] {
        match *self {
            Shape::Disk2d { center, .. }
            | Shape::Annulus2d { center, .. }
            | Shape::Square2d { center, .. } => [center[0], center[1], 0.0],
            Shape::Ball3d { center, .. }
            | Shape::Shell3d { center, .. }
            | Shape::Cube3d { center, .. } => center,
        }
    }

    fn validate(&self) -> Result<()> {
        let c = self.center();
        if !c.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidGeometry("non-finite center".into()));
        }
        let ok = match *self {
            Shape::Disk2d { radius, .. } | Shape::Ball3d { radius, .. } => radius > 0.0,
            Shape::Annulus2d { inner, outer, .. } | Shape::Shell3d { inner, outer, .. } => {
                inner >= 0.0 && outer > inner
            }
            Shape::Square2d { side, .. } | Shape::Cube3d { side, .. } => side > 0.0,
        };
        if ok && self.measure().is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidGeometry(format!(
                "degenerate region {self:?}"
            )))
        }
    }

    /// Whether an offset from the center lies in the region.
    fn contains(&self, rel: [f64; 3]) -> bool {
        let r = (rel[0] * rel[0] + rel[1] * rel[1] + rel[2] * rel[2]).sqrt();
        match *self {
            Shape::Disk2d { radius, .. } | Shape::Ball3d { radius, .. } => r <= radius,
            Shape::Annulus2d { inner, outer, .. } | Shape::Shell3d { inner, outer, .. } => {
                r >= inner && r <= outer
            }
            Shape::Square2d { .. } | Shape::Cube3d { .. } => true,
        }
    }

    /// Half-width of the axis-aligned box around the region.
    fn half_width(&self) -> f64 {
        match *self {
            Shape::Disk2d { radius, .. } | Shape::Ball3d { radius, .. } => radius,
            Shape::Annulus2d { outer, .. } | Shape::Shell3d { outer, .. } => outer,
            Shape::Square2d { side, .. } | Shape::Cube3d { side, .. } => side / 2.0,
        }
    }
}

/// Ring structure of a polar grid: point `ring * angular_count + m` sits at
/// radius `radii[ring]` and angle 2 pi m / angular_count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolarLayout {
    pub center: [f64; 2],
    pub radii: Vec<f64>,
    pub angular_count: usize,
}

/// Quadrature points and weights of a source or receiver region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscretizedDomain {
    pub dimension: usize,
    /// Coordinates, with z = 0 in 2D.
    pub points: Vec<[f64; 3]>,
    /// Area or volume per point.
    pub weights: Vec<f64>,
    pub label: String,
    #[serde(skip)]
    pub polar: Option<PolarLayout>,
}

impl DiscretizedDomain {
    pub fn new(
        dimension: usize,
        points: Vec<[f64; 3]>,
        weights: Vec<f64>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if dimension != 2 && dimension != 3 {
            return Err(Error::Domain(format!("dimension {dimension}")));
        }
        if points.len() != weights.len() {
            return Err(Error::Domain(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        if points.is_empty() {
            return Err(Error::Empty("domain has no points".into()));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::Domain(format!("weight {w}")));
        }
        Ok(DiscretizedDomain {
            dimension,
            points,
            weights,
            label: label.into(),
            polar: None,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Matrix rows or columns this domain contributes.
    pub fn matrix_dim(&self) -> usize {
        if self.dimension == 3 {
            3 * self.len()
        } else {
            self.len()
        }
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// The points (with their weights) that satisfy `keep`.
    pub fn retain(
        &self,
        label: impl Into<String>,
        keep: impl Fn(&[f64; 3]) -> bool,
    ) -> Result<Self> {
        let (points, weights): (Vec<_>, Vec<_>) = self
            .points
            .iter()
            .zip(&self.weights)
            .filter(|(p, _)| keep(p))
            .map(|(p, w)| (*p, *w))
            .unzip();
        DiscretizedDomain::new(self.dimension, points, weights, label)
    }

    /// Points whose polar angle about `center` lies in [from, to), in radians
    /// in (-pi, pi].
    pub fn sector(&self, center: [f64; 2], from: f64, to: f64) -> Result<Self> {
        let label = format!("{} sector [{from:.3}, {to:.3})", self.label);
        self.retain(label, |p| {
            let a = (p[1] - center[1]).atan2(p[0] - center[0]);
            a >= from && a < to
        })
    }

    pub fn translated(&self, offset: [f64; 3]) -> Self {
        let mut out = self.clone();
        for p in &mut out.points {
            for a in 0..3 {
                p[a] += offset[a];
            }
        }
        if let Some(polar) = &mut out.polar {
            polar.center[0] += offset[0];
            polar.center[1] += offset[1];
        }
        out
    }
}

fn too_large(rows: usize, cap: usize, spacing: f64, dimension: usize) -> Error {
    let factor = (rows as f64 / cap as f64).powf(1.0 / dimension as f64);
    Error::TooLarge {
        rows,
        cap,
        suggested_spacing: spacing * factor * 1.05,
    }
}

/// Uniform grid of cell centers clipped to the region, with the default row
/// cap.
pub fn make_geometry(shape: &Shape, spacing: f64) -> Result<DiscretizedDomain> {
    make_geometry_capped(shape, spacing, DEFAULT_ROW_CAP)
}

/// Uniform grid clipped to the region. Squares and cubes are split into
/// ceil(side / spacing) cells per edge so the cells tile them exactly.
/// Curved regions take the cells whose centers fall inside, and the weights
/// are rescaled so their total equals the exact area or volume.
pub fn make_geometry_capped(shape: &Shape, spacing: f64, cap: usize) -> Result<DiscretizedDomain> {
    shape.validate()?;
    if !(spacing > 0.0 && spacing.is_finite()) {
        return Err(Error::InvalidGeometry(format!("spacing {spacing}")));
    }
    let dim = shape.dimension();
    let c = shape.center();
    let half = shape.half_width();
    let (cells, h) = match shape {
        Shape::Square2d { side, .. } | Shape::Cube3d { side, .. } => {
            let n = (side / spacing).ceil().max(1.0) as usize;
            (n, side / n as f64)
        }
        _ => (2 * (half / spacing).ceil() as usize, spacing),
    };
    let estimate =
        (cells as f64).powi(dim as i32) * shape.measure() / (cells as f64 * h).powi(dim as i32);
    let per_point = if dim == 3 { 3 } else { 1 };
    if (estimate * per_point as f64) > 1.2 * cap as f64 {
        return Err(too_large(
            (estimate as usize) * per_point,
            cap,
            spacing,
            dim,
        ));
    }

    let start = -(cells as f64) * h / 2.0;
    let coord = |i: usize| start + (i as f64 + 0.5) * h;
    let mut points = Vec::new();
    let zs = if dim == 3 { cells } else { 1 };
    for iz in 0..zs {
        let z = if dim == 3 { coord(iz) } else { 0.0 };
        for iy in 0..cells {
            for ix in 0..cells {
                let rel = [coord(ix), coord(iy), z];
                if shape.contains(rel) {
                    points.push([c[0] + rel[0], c[1] + rel[1], c[2] + rel[2]]);
                }
            }
        }
    }
    if points.is_empty() {
        return Err(Error::InvalidGeometry(format!(
            "spacing {spacing} leaves no grid point inside {shape:?}"
        )));
    }
    if points.len() * per_point > cap {
        return Err(too_large(points.len() * per_point, cap, spacing, dim));
    }
    let n = points.len();
    let w = shape.measure() / n as f64;
    DiscretizedDomain::new(dim, points, vec![w; n], format!("{shape:?}"))
}

/// Number of angles that keeps the arc spacing at radius `r` at most
/// `spacing`.
pub fn polar_angular_count(r: f64, spacing: f64) -> usize {
    ((2.0 * PI * r / spacing).ceil() as usize).max(1)
}

/// Polar grid of a disk or annulus: rings at the midpoints of radial cells
/// of width at most `radial_spacing`, each with `angular_count` equally
/// spaced points starting at angle 0. Each point carries the exact area of
/// its cell.
pub fn make_polar(
    shape: &Shape,
    radial_spacing: f64,
    angular_count: usize,
) -> Result<DiscretizedDomain> {
    shape.validate()?;
    if !(radial_spacing > 0.0 && radial_spacing.is_finite()) || angular_count == 0 {
        return Err(Error::InvalidGeometry(format!(
            "radial spacing {radial_spacing}, {angular_count} angles"
        )));
    }
    let (center, inner, outer) = match *shape {
        Shape::Disk2d { center, radius } => (center, 0.0, radius),
        Shape::Annulus2d {
            center,
            inner,
            outer,
        } => (center, inner, outer),
        _ => {
            return Err(Error::InvalidGeometry(
                "polar grids need a disk or annulus".into(),
            ))
        }
    };
    let rings = ((outer - inner) / radial_spacing).ceil().max(1.0) as usize;
    let dr = (outer - inner) / rings as f64;
    let m = angular_count as f64;
    let mut radii = Vec::with_capacity(rings);
    let mut points = Vec::with_capacity(rings * angular_count);
    let mut weights = Vec::with_capacity(rings * angular_count);
    for i in 0..rings {
        let (a, b) = (inner + i as f64 * dr, inner + (i + 1) as f64 * dr);
        let r = 0.5 * (a + b);
        let w = PI * (b * b - a * a) / m;
        radii.push(r);
        for j in 0..angular_count {
            let t = 2.0 * PI * j as f64 / m;
            points.push([center[0] + r * t.cos(), center[1] + r * t.sin(), 0.0]);
            weights.push(w);
        }
    }
    let mut d = DiscretizedDomain::new(2, points, weights, format!("polar {shape:?}"))?;
    d.polar = Some(PolarLayout {
        center,
        radii,
        angular_count,
    });
    Ok(d)
}
