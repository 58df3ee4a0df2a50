use std::collections::HashMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds2d::{
    bound_spectrum_2d, cylinder_shell_strength, strength_spectrum_2d, BoundingGeometry2D,
};
use crate::error::{Error, Result};
use crate::geometry::Core;
use crate::metrics::{
    piestun_ratio_sum, ChannelEntry, ChannelLabel, ChannelSpectrum, Normalization,
};

use super::domain::{make_polar, polar_angular_count, DiscretizedDomain, Shape};
use super::matrix::{assemble, GreenMatrix};
use super::polar::{circulant_compatible, polar_singular_values, HarmonicValue};
use super::svd::singular_values_of;

/// Singular values of an assembled matrix, non-increasing.
pub fn singular_values(gm: &GreenMatrix) -> Result<Vec<f64>> {
    singular_values_of(&gm.matrix)
}

/// Singular values of the operator between two domains, through the
/// block-circulant route when both are concentric polar grids and through a
/// dense matrix otherwise.
pub fn domain_singular_values(
    src: &DiscretizedDomain,
    rcv: &DiscretizedDomain,
    k: f64,
) -> Result<Vec<f64>> {
    if circulant_compatible(src, rcv) {
        Ok(polar_singular_values(src, rcv, k)?
            .into_iter()
            .map(|h| h.sigma)
            .collect())
    } else {
        singular_values(&assemble(src, rcv, k)?)
    }
}

/// Sum- and max-normalized versions of one numerical spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelativeSpectra {
    pub sum: ChannelSpectrum,
    pub max: ChannelSpectrum,
}

pub fn relative_spectrum_from(sigma: &[f64], provenance: &str) -> Result<RelativeSpectra> {
    Ok(RelativeSpectra {
        sum: ChannelSpectrum::from_singular_values(sigma, Normalization::Sum, provenance)?,
        max: ChannelSpectrum::from_singular_values(sigma, Normalization::Max, provenance)?,
    })
}

pub fn relative_spectrum(gm: &GreenMatrix) -> Result<RelativeSpectra> {
    let prov = format!("{} -> {}", gm.source_label, gm.receiver_label);
    relative_spectrum_from(&singular_values(gm)?, &prov)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub sigma_smaller: Vec<f64>,
    pub sigma_larger: Vec<f64>,
    /// sigma_q(larger) - sigma_q(smaller) for every rank of the smaller pair.
    pub differences: Vec<f64>,
    pub epsilon: f64,
    pub passed: bool,
}

impl MonotonicityReport {
    pub fn worst(&self) -> f64 {
        self.differences
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

fn key(p: &[f64; 3]) -> [u64; 3] {
    [p[0].to_bits(), p[1].to_bits(), p[2].to_bits()]
}

fn check_subset(small: &DiscretizedDomain, large: &DiscretizedDomain) -> Result<()> {
    let index: HashMap<[u64; 3], f64> = large
        .points
        .iter()
        .map(key)
        .zip(large.weights.iter().copied())
        .collect();
    for (p, w) in small.points.iter().zip(&small.weights) {
        match index.get(&key(p)) {
            Some(lw) if lw == w => {}
            _ => {
                return Err(Error::NotSubset(format!(
                    "point {p:?} of {} is not in {}",
                    small.label, large.label
                )))
            }
        }
    }
    Ok(())
}

/// Compares the singular values of a nested pair of configurations: shrinking
/// either domain can only lower each singular value.
pub fn verify_monotonicity(
    smaller_src: &DiscretizedDomain,
    larger_src: &DiscretizedDomain,
    smaller_rcv: &DiscretizedDomain,
    larger_rcv: &DiscretizedDomain,
    k: f64,
) -> Result<MonotonicityReport> {
    check_subset(smaller_src, larger_src)?;
    check_subset(smaller_rcv, larger_rcv)?;
    let sigma_smaller = domain_singular_values(smaller_src, smaller_rcv, k)?;
    let sigma_larger = domain_singular_values(larger_src, larger_rcv, k)?;
    let epsilon = 1e-10 * sigma_larger.first().copied().unwrap_or(0.0);
    let differences: Vec<f64> = sigma_smaller
        .iter()
        .zip(&sigma_larger)
        .map(|(s, l)| l - s)
        .collect();
    let passed = differences.iter().all(|d| *d >= -epsilon);
    Ok(MonotonicityReport {
        sigma_smaller,
        sigma_larger,
        differences,
        epsilon,
        passed,
    })
}

/// |s_q|^2 / |s_0|^2 of the shell-shell pair and of its cylinder-shell
/// bounding configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiestunRatio {
    pub q: usize,
    pub numeric: f64,
    pub bound: f64,
}

/// Sum-normalized shell-shell strength at a rank against the relative bound
/// at the same rank.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiestunRank {
    pub rank: usize,
    pub numeric: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiestunReport {
    pub spacing: f64,
    pub angular_count: usize,
    pub source_points: usize,
    pub receiver_points: usize,
    /// Ratio sum of the cylinder-shell strengths.
    pub n_bound: f64,
    /// Ratio sum of the numerical shell-shell strengths.
    pub n_shell_shell: f64,
    pub per_q: Vec<PiestunRatio>,
    pub per_rank: Vec<PiestunRank>,
}

/// The pair of annuli 0.3-1 and 10-11 wavelengths against its enclosing
/// cylinder-shell configuration. Each channel count is the sum of strengths
/// over the q = 0 strength.
pub fn piestun_counterexample(k: f64, spacing: f64) -> Result<PiestunReport> {
    let lambda = 2.0 * PI / k;
    let inner = Shape::Annulus2d {
        center: [0.0; 2],
        inner: 0.3 * lambda,
        outer: lambda,
    };
    let outer = Shape::Annulus2d {
        center: [0.0; 2],
        inner: 10.0 * lambda,
        outer: 11.0 * lambda,
    };
    let m = polar_angular_count(11.0 * lambda, spacing);
    let src = make_polar(&inner, spacing, m)?;
    let rcv = make_polar(&outer, spacing, m)?;
    let harmonics = polar_singular_values(&src, &rcv, k)?;
    let numeric = harmonic_spectrum(&harmonics, Normalization::Raw)?;
    let n_shell_shell = piestun_ratio_sum(&numeric)?;

    let geom = BoundingGeometry2D::new(
        k,
        lambda,
        0.5 * lambda,
        9.0 * lambda,
        inner.measure(),
        outer.measure(),
    )?
    .with_core(Core::Source);
    let q_max = (3.0 * k * lambda).ceil() as usize + 40;
    let strengths = strength_spectrum_2d(&geom, q_max)?;
    let n_bound = piestun_ratio_sum(&strengths)?;

    // leading value of each harmonic
    let mut lead = vec![0.0f64; m / 2 + 1];
    for h in &harmonics {
        lead[h.q] = lead[h.q].max(h.sigma * h.sigma);
    }
    let s0 = cylinder_shell_strength(0, &geom)?;
    let per_q = (0..=q_max.min(m / 2))
        .map(|q| {
            Ok(PiestunRatio {
                q,
                numeric: lead[q] / lead[0],
                bound: cylinder_shell_strength(q as i64, &geom)? / s0,
            })
        })
        .collect::<Result<_>>()?;

    let total: f64 = harmonics.iter().map(|h| h.sigma * h.sigma).sum();
    let bounds = bound_spectrum_2d(&geom, q_max)?.expanded();
    let per_rank = harmonics
        .iter()
        .zip(&bounds)
        .enumerate()
        .map(|(i, (h, b))| PiestunRank {
            rank: i + 1,
            numeric: h.sigma * h.sigma / total,
            bound: *b,
        })
        .collect();
    Ok(PiestunReport {
        spacing,
        angular_count: m,
        source_points: src.len(),
        receiver_points: rcv.len(),
        n_bound,
        n_shell_shell,
        per_q,
        per_rank,
    })
}

/// A spectrum with one entry per numerical singular value labelled by its
/// angular harmonic.
pub fn harmonic_spectrum(
    values: &[HarmonicValue],
    normalization: Normalization,
) -> Result<ChannelSpectrum> {
    let total: f64 = values.iter().map(|h| h.sigma * h.sigma).sum();
    let top = values.iter().fold(0.0f64, |m, h| m.max(h.sigma * h.sigma));
    let scale = match normalization {
        Normalization::Sum => total,
        Normalization::Max => top,
        _ => 1.0,
    };
    if !(scale > 0.0) {
        return Err(Error::Empty("all singular values are zero".into()));
    }
    let entries = values
        .iter()
        .map(|h| {
            ChannelEntry::new(
                ChannelLabel::Cylindrical { q: h.q as i64 },
                h.sigma * h.sigma / scale,
                1,
            )
        })
        .collect();
    ChannelSpectrum::new(entries, normalization, "polar grid")
}
