//! Channel-strength bounds for 2D scalar waves from the cylinder-shell
//! bounding volume.
//!
//! With G = (i k^2 / 4) H_0^(1)(k|r - r'|) the cylinder-shell singular values
//! factor into radial integrals,
//!
//!   |s_q|^2 = (pi^2 k^4 / 4) int_0^{R_c} J_q^2(k rho) rho drho
//!                            int_{R_i}^{R_o} |H_q^(1)(k rho)|^2 rho drho,
//!
//! evaluated with the indefinite integrals
//! int x J_q^2 = (x^2/2)[J_q^2 - J_{q+1} J_{q-1}] and its Hankel counterpart.
//! Both factors are assembled in log space so that J_q^2 may underflow and
//! |H_q|^2 overflow without spoiling the product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{non_negative, positive, Core, CoreShell};
use crate::logscale::{outgoing_antiderivative, regular_antiderivative, Scaled};
use crate::metrics::{ChannelEntry, ChannelLabel, ChannelSpectrum, Normalization};
use crate::quadrature::integrate;
use crate::special::{bessel_j, bessel_j_sequence, bessel_jy_sequence, bessel_y, hankel1_0};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundingGeometry2D {
    pub k: f64,
    pub r_source: f64,
    pub r_receiver: f64,
    pub separation: f64,
    pub source_area: f64,
    pub receiver_area: f64,
    pub core: Core,
}

impl BoundingGeometry2D {
    pub fn new(
        k: f64,
        r_source: f64,
        r_receiver: f64,
        separation: f64,
        source_area: f64,
        receiver_area: f64,
    ) -> Result<Self> {
        positive("k", k)?;
        positive("source radius", r_source)?;
        positive("receiver radius", r_receiver)?;
        non_negative("separation", separation)?;
        positive("source area", source_area)?;
        positive("receiver area", receiver_area)?;
        let geom = BoundingGeometry2D {
            k,
            r_source,
            r_receiver,
            separation,
            source_area,
            receiver_area,
            core: Core::Smaller,
        };
        Ok(geom)
    }

    pub fn with_core(mut self, core: Core) -> Self {
        self.core = core;
        self
    }

    pub fn radii(&self) -> CoreShell {
        CoreShell::new(self.r_source, self.r_receiver, self.separation, self.core)
    }

    pub fn d_max(&self) -> f64 {
        self.radii().d_max
    }

    /// Areas that cannot fit inside their bounding disk or shell annulus.
    pub fn fill_warnings(&self) -> Vec<String> {
        crate::geometry::fill_warnings(
            &self.radii(),
            self.source_area,
            self.receiver_area,
            "area",
            |r: f64| std::f64::consts::PI * r * r,
        )
    }
}

/// Radial integrals for every |q| up to a maximum, sharing the sequences.
struct Radial2D {
    x_core: f64,
    j_core: Vec<f64>,
    y_in: f64,
    h_in: (Vec<f64>, Vec<f64>),
    y_out: f64,
    h_out: (Vec<f64>, Vec<f64>),
}

impl Radial2D {
    fn new(geom: &BoundingGeometry2D, q_max: usize) -> Result<Self> {
        let c = geom.radii();
        let k = geom.k;
        Ok(Radial2D {
            x_core: k * c.r_core,
            j_core: bessel_j_sequence(q_max + 1, k * c.r_core)?,
            y_in: k * c.r_inner,
            h_in: bessel_jy_sequence(q_max + 1, k * c.r_inner)?,
            y_out: k * c.r_outer,
            h_out: bessel_jy_sequence(q_max + 1, k * c.r_outer)?,
        })
    }

    /// f_{q-1} with the reflection f_{-1} = -f_1.
    fn lower(seq: &[f64], q: usize) -> f64 {
        if q == 0 {
            -seq[1]
        } else {
            seq[q - 1]
        }
    }

    /// ln int_0^x t J_q(t)^2 dt.
    fn log_inner(&self, q: usize) -> Result<f64> {
        let j = &self.j_core;
        regular_antiderivative(self.x_core, 2, j[q], j[q + 1], Self::lower(j, q))
            .ln()
            .ok_or_else(|| Error::Overflow(format!("J_{q}({}) out of range", self.x_core)))
    }

    fn hankel_endpoint(y: f64, h: &(Vec<f64>, Vec<f64>), q: usize) -> Result<Scaled> {
        let (j, yv) = h;
        outgoing_antiderivative(
            y,
            2,
            (j[q], yv[q]),
            (j[q + 1], yv[q + 1]),
            (Self::lower(j, q), Self::lower(yv, q)),
        )
        .ok_or_else(|| Error::Overflow(format!("Y_{}({y})", q + 1)))
    }

    /// ln int_{y_in}^{y_out} t |H_q(t)|^2 dt.
    fn log_outer(&self, q: usize) -> Result<f64> {
        let outer = Self::hankel_endpoint(self.y_out, &self.h_out, q)?;
        let inner = Self::hankel_endpoint(self.y_in, &self.h_in, q)?;
        outer
            .sub(inner)
            .ln()
            .ok_or_else(|| Error::Overflow(format!("outer integral at q = {q}")))
    }

    fn log_strength(&self, q: usize) -> Result<f64> {
        // (pi^2 k^4 / 4) (A / k^2) (B / k^2) with A, B in the scaled variable
        let pref = (std::f64::consts::PI.powi(2) / 4.0).ln();
        Ok(pref + self.log_inner(q)? + self.log_outer(q)?)
    }
}

fn finite_strength(log_s: f64, q: i64) -> Result<f64> {
    let s = log_s.exp();
    if s.is_finite() {
        Ok(s)
    } else {
        Err(Error::Overflow(format!("strength at q = {q}")))
    }
}

/// |s_q|^2 of the cylinder-shell configuration.
pub fn cylinder_shell_strength(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    let qa = q.unsigned_abs() as usize;
    let radial = Radial2D::new(geom, qa)?;
    finite_strength(radial.log_strength(qa)?, q)
}

/// k^4 S_s S_r |H_0^(1)(k d_max)|^2 / 16, a lower bound on the sum rule of
/// any enclosed configuration.
pub fn sum_rule_lower_2d(geom: &BoundingGeometry2D) -> Result<f64> {
    let d_max = geom.d_max();
    if !(d_max > 0.0) {
        return Err(Error::Divergence("d_max = 0".into()));
    }
    let h = hankel1_0(geom.k * d_max).norm_sqr();
    Ok(geom.k.powi(4) * geom.source_area * geom.receiver_area * h / 16.0)
}

/// Cylinder-shell strength over the sum-rule lower bound, without clamping.
pub fn unclamped_relative_bound_2d(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    Ok(cylinder_shell_strength(q, geom)? / sum_rule_lower_2d(geom)?)
}

/// Shape-independent bound on the sum-normalized strength of channel q,
/// clamped at 1.
pub fn relative_bound_2d(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    Ok(unclamped_relative_bound_2d(q, geom)?.min(1.0))
}

/// ln of the large-q exponential asymptote
/// R_c^4 / (q^4 S_s S_r |H_0(k d_max)|^2 (1 + d/R_c)^{2(q-1)}).
pub fn log_asymptotic_bound_2d(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    if q < 1 {
        return Err(Error::Domain(format!("asymptote needs q >= 1, got {q}")));
    }
    let c = geom.radii();
    let qf = q as f64;
    let h = hankel1_0(geom.k * c.d_max).norm_sqr();
    Ok(4.0 * c.r_core.ln()
        - 4.0 * qf.ln()
        - (geom.source_area * geom.receiver_area * h).ln()
        - 2.0 * (qf - 1.0) * c.ratio.ln())
}

pub fn asymptotic_bound_2d(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    Ok(log_asymptotic_bound_2d(q, geom)?.exp())
}

/// ceil(3 k R_c) + 40.
pub fn default_q_max(geom: &BoundingGeometry2D) -> usize {
    (3.0 * geom.k * geom.radii().r_core).ceil() as usize + 40
}

fn spectrum(geom: &BoundingGeometry2D, q_max: usize, relative: bool) -> Result<ChannelSpectrum> {
    let lower = sum_rule_lower_2d(geom)?.ln();
    let shift = if relative { lower } else { 0.0 };
    let radial = Radial2D::new(geom, q_max)?;
    let mut entries = Vec::with_capacity(q_max + 1);
    for q in 0..=q_max {
        let (log_value, asymptotic) = match radial.log_strength(q) {
            Ok(ls) => (ls - shift, false),
            Err(Error::Overflow(_)) if q >= 1 => (
                log_asymptotic_bound_2d(q as i64, geom)? + lower - shift,
                true,
            ),
            Err(e) => return Err(e),
        };
        let v = log_value.exp();
        entries.push(ChannelEntry {
            label: ChannelLabel::Cylindrical { q: q as i64 },
            strength: if relative { v.min(1.0) } else { v },
            degeneracy: if q == 0 { 1 } else { 2 },
            asymptotic,
        });
    }
    if relative {
        ChannelSpectrum::new(entries, Normalization::Bound, "cylinder-shell bound")
    } else {
        ChannelSpectrum::new(entries, Normalization::Raw, "cylinder-shell strengths")
    }
}

/// Relative bounds for q in [-q_max, q_max], one entry per |q| with
/// degeneracy 2 for q != 0. Where the closed form leaves the floating-point
/// range the asymptote is used and the entry is flagged.
pub fn bound_spectrum_2d(geom: &BoundingGeometry2D, q_max: usize) -> Result<ChannelSpectrum> {
    spectrum(geom, q_max, true)
}

/// Absolute cylinder-shell strengths for q in [-q_max, q_max].
pub fn strength_spectrum_2d(geom: &BoundingGeometry2D, q_max: usize) -> Result<ChannelSpectrum> {
    spectrum(geom, q_max, false)
}

/// Smallest q0 <= q_search such that the asymptote is at least the clamped
/// relative bound for every q in [q0, q_search]; None when the asymptote
/// stays below the exact bound at q_search.
pub fn asymptote_dominance_onset_2d(
    geom: &BoundingGeometry2D,
    q_search: usize,
) -> Result<Option<usize>> {
    let lower = sum_rule_lower_2d(geom)?.ln();
    let radial = Radial2D::new(geom, q_search)?;
    let mut onset = None;
    for q in (1..=q_search).rev() {
        let exact = match radial.log_strength(q) {
            Ok(ls) => (ls - lower).min(0.0),
            Err(Error::Overflow(_)) => continue,
            Err(e) => return Err(e),
        };
        if log_asymptotic_bound_2d(q as i64, geom)? >= exact {
            onset = Some(q);
        } else {
            break;
        }
    }
    Ok(onset)
}

/// |s_q|^2 from adaptive quadrature of the two radial integrals, using
/// pointwise Bessel values. Much slower than [`cylinder_shell_strength`];
/// meant as an independent check.
pub fn quadrature_strength_2d(q: i64, geom: &BoundingGeometry2D) -> Result<f64> {
    let c = geom.radii();
    let qf = q as f64;
    let k = geom.k;
    let inner = integrate(
        |r| bessel_j(qf, k * r).unwrap_or(f64::NAN).powi(2) * r,
        0.0,
        c.r_core,
        1e-13,
        0.0,
    )?;
    let outer = integrate(
        |r| {
            let x = k * r;
            let (j, y) = (
                bessel_j(qf, x).unwrap_or(f64::NAN),
                bessel_y(qf, x).unwrap_or(f64::NAN),
            );
            (j * j + y * y) * r
        },
        c.r_inner,
        c.r_outer,
        1e-13,
        0.0,
    )?;
    Ok(std::f64::consts::PI.powi(2) * k.powi(4) / 4.0 * inner.value * outer.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{PI, SQRT_2};

    const K: f64 = 2.0 * PI;

    /// 2R_s = 2R_r = d = lambda with squares of side lambda/sqrt(2).
    fn fig2b() -> BoundingGeometry2D {
        BoundingGeometry2D::new(K, 0.5, 0.5, 1.0, 0.5, 0.5).unwrap()
    }

    #[test]
    fn closed_form_matches_quadrature_fig2b() {
        let g = fig2b();
        for q in [0, 1, 5, 20] {
            let a = cylinder_shell_strength(q, &g).unwrap();
            let b = quadrature_strength_2d(q, &g).unwrap();
            assert!(((a - b) / b).abs() < 1e-9, "q={q}: {a} vs {b}");
        }
    }

    #[test]
    fn vanishes_with_core_radius() {
        // |s_q|^2 ~ r_core^(2q+2) as r_core -> 0
        let g = |r: f64| BoundingGeometry2D::new(K, r, 0.5, 1.0, 1e-14, 0.5).unwrap();
        for q in [0i64, 1, 3] {
            let a = cylinder_shell_strength(q, &g(2e-7)).unwrap();
            let b = cylinder_shell_strength(q, &g(1e-7)).unwrap();
            let want = 2f64.powi(2 * q as i32 + 2);
            assert!((a / b / want - 1.0).abs() < 1e-6, "q={q}: {}", a / b);
        }
    }

    #[test]
    fn symmetric_in_q() {
        let g = fig2b();
        for q in 1..15 {
            let a = cylinder_shell_strength(q, &g).unwrap();
            let b = cylinder_shell_strength(-q, &g).unwrap();
            assert_eq!(a, b);
            assert_eq!(
                relative_bound_2d(q, &g).unwrap(),
                relative_bound_2d(-q, &g).unwrap()
            );
        }
    }

    #[test]
    fn sum_rule_lower_direct_substitution() {
        let g = fig2b();
        // independent H_0 from the general-order routines
        let x = K * 3.0;
        let h2 = bessel_j(0.0, x).unwrap().powi(2) + bessel_y(0.0, x).unwrap().powi(2);
        let side = 1.0 / SQRT_2;
        let want = K.powi(4) * side.powi(4) * h2 / 16.0;
        let got = sum_rule_lower_2d(&g).unwrap();
        assert!(((got - want) / want).abs() < 1e-12);
        let g2 = BoundingGeometry2D {
            source_area: 1.0,
            ..g
        };
        assert!((sum_rule_lower_2d(&g2).unwrap() / got - 2.0).abs() < 1e-14);
        let g3 = BoundingGeometry2D {
            receiver_area: 1.0,
            ..g
        };
        assert!((sum_rule_lower_2d(&g3).unwrap() / got - 2.0).abs() < 1e-14);
    }

    #[test]
    fn relative_bound_reconstructs_strength() {
        let g = fig2b();
        let lower = sum_rule_lower_2d(&g).unwrap();
        for q in 0..30 {
            let s = cylinder_shell_strength(q, &g).unwrap();
            let rel = unclamped_relative_bound_2d(q, &g).unwrap();
            assert!(((rel * lower - s) / s).abs() < 1e-12);
            let clamped = relative_bound_2d(q, &g).unwrap();
            assert!(clamped <= 1.0);
            assert_eq!(clamped, rel.min(1.0));
        }
    }

    #[test]
    fn fig2b_threshold_counts() {
        let g = fig2b();
        let spec = bound_spectrum_2d(&g, default_q_max(&g)).unwrap();
        let indices = spec.entries().iter().filter(|e| e.strength >= 1e-4).count();
        let channels: usize = spec
            .entries()
            .iter()
            .filter(|e| e.strength >= 1e-4)
            .map(|e| e.degeneracy)
            .sum();
        assert_eq!(indices, 8);
        assert_eq!(channels, 15);
    }

    #[test]
    fn spectrum_structure() {
        let g = fig2b();
        let spec = bound_spectrum_2d(&g, 25).unwrap();
        assert_eq!(spec.len_expanded(), 51);
        let v = spec.expanded();
        assert!(v.windows(2).all(|w| w[0] >= w[1]));
        let top = spec.entries()[0].clone();
        let ChannelLabel::Cylindrical { q } = top.label else {
            panic!()
        };
        assert_eq!(top.strength, relative_bound_2d(q, &g).unwrap());
    }

    #[test]
    fn asymptote_log_ratio_and_zero_separation() {
        let g = fig2b();
        let step =
            log_asymptotic_bound_2d(201, &g).unwrap() - log_asymptotic_bound_2d(200, &g).unwrap();
        let want = -2.0 * (1.0 + 1.0 / 0.5f64).ln();
        assert!(((step - want) / want).abs() < 0.01);
        let g0 = BoundingGeometry2D::new(K, 0.5, 0.5, 0.0, 0.5, 0.5).unwrap();
        let a = asymptotic_bound_2d(3, &g0).unwrap();
        let b = asymptotic_bound_2d(6, &g0).unwrap();
        assert!((a / b - 16.0).abs() < 1e-10);
    }

    #[test]
    fn asymptote_approaches_exact_from_below() {
        // On this geometry the asymptote never overtakes the exact bound in
        // the resolvable range; the ratio climbs toward one instead.
        let g = fig2b();
        assert_eq!(asymptote_dominance_onset_2d(&g, 80).unwrap(), None);
        let ratio = |q: i64| {
            asymptotic_bound_2d(q, &g).unwrap() / unclamped_relative_bound_2d(q, &g).unwrap()
        };
        let r: Vec<f64> = [20, 30, 40, 60, 80].iter().map(|&q| ratio(q)).collect();
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        assert!(r[4] < 1.0 && r[4] > 0.5);
    }

    #[test]
    fn overflow_falls_back_to_asymptote() {
        let g = fig2b();
        let spec = bound_spectrum_2d(&g, 400).unwrap();
        assert!(spec.entries().iter().any(|e| e.asymptotic));
        assert!(matches!(
            cylinder_shell_strength(400, &g),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn invalid_geometry_rejected() {
        assert!(BoundingGeometry2D::new(K, 0.0, 0.5, 1.0, 0.1, 0.1).is_err());
        assert!(BoundingGeometry2D::new(K, 0.5, 0.5, -1.0, 0.1, 0.1).is_err());
        assert!(BoundingGeometry2D::new(-1.0, 0.5, 0.5, 1.0, 0.1, 0.1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn closed_form_matches_quadrature_random(
            rs in 0.1f64..1.5, rr in 0.1f64..1.5, d in 0.0f64..3.0, qi in 0usize..4
        ) {
            let q = [0i64, 1, 5, 20][qi];
            let g = BoundingGeometry2D::new(K, rs, rr, d, 0.1, 0.1).unwrap();
            let a = cylinder_shell_strength(q, &g).unwrap();
            let b = quadrature_strength_2d(q, &g).unwrap();
            prop_assert!(((a - b) / b).abs() < 1e-9, "q={} {} {}", q, a, b);
        }

        #[test]
        fn monotone_in_radii(
            rc in 0.1f64..1.0, inner in 1.2f64..3.0, width in 0.1f64..2.0, q in 0i64..12
        ) {
            // Direct control of (R_c, R_i, R_o) through a core on the source.
            let strength = |rc: f64, ri: f64, ro: f64| {
                let d = ri - rc;
                let rr = 0.5 * (ro - ri);
                let g = BoundingGeometry2D::new(K, rc, rr, d, 0.1, 0.1).unwrap().with_core(Core::Source);
                cylinder_shell_strength(q, &g).unwrap()
            };
            let base = strength(rc, inner, inner + width);
            prop_assert!(strength(rc * 1.05, inner, inner + width) >= base);
            prop_assert!(strength(rc, inner, inner + width * 1.1) >= base);
            prop_assert!(strength(rc, inner + 0.05 * width, inner + width) <= base);
        }
    }
}
