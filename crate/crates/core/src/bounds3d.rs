//! Channel-strength bounds for 3D electromagnetic waves from the
//! sphere-shell bounding volume.
//!
//! Singular values of the dyadic Green's operator between a ball of radius
//! R_c and a concentric shell [R_i, R_o] split into two polarizations. With
//! F(n, x) = int_0^x t^2 j_n^2 dt = (x^3/2)[j_n^2 - j_{n+1} j_{n-1}] and its
//! outgoing counterpart H(n, y) built from h_n^(1),
//!
//!   j = 1:  |s|^2 = F(n, kR_c) [H(n, kR_o) - H(n, kR_i)]
//!   j = 2:  |s|^2 = [a F(n-1) + c F(n+1)] [a dH(n-1) + c dH(n+1)]
//!
//! with a = (n+1)/(2n+1), c = n/(2n+1). Each (n, j) carries 2n+1 azimuthal
//! copies.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{non_negative, positive, Core, CoreShell};
use crate::logscale::{log_add, outgoing_antiderivative, regular_antiderivative, Scaled};
use crate::metrics::{ChannelEntry, ChannelLabel, ChannelSpectrum, Normalization};
use crate::quadrature::integrate;
use crate::special::{
    riccati_derivative, spherical_h1, spherical_j, spherical_j_sequence, spherical_y_sequence,
    RadialKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundingGeometry3D {
    pub k: f64,
    pub r_source: f64,
    pub r_receiver: f64,
    pub separation: f64,
    pub source_volume: f64,
    pub receiver_volume: f64,
    pub core: Core,
}

impl BoundingGeometry3D {
    pub fn new(
        k: f64,
        r_source: f64,
        r_receiver: f64,
        separation: f64,
        source_volume: f64,
        receiver_volume: f64,
    ) -> Result<Self> {
        positive("k", k)?;
        positive("source radius", r_source)?;
        positive("receiver radius", r_receiver)?;
        non_negative("separation", separation)?;
        positive("source volume", source_volume)?;
        positive("receiver volume", receiver_volume)?;
        let geom = BoundingGeometry3D {
            k,
            r_source,
            r_receiver,
            separation,
            source_volume,
            receiver_volume,
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

    pub fn fill_warnings(&self) -> Vec<String> {
        crate::geometry::fill_warnings(
            &self.radii(),
            self.source_volume,
            self.receiver_volume,
            "volume",
            |r: f64| 4.0 * PI / 3.0 * r.powi(3),
        )
    }
}

/// Which (n, j) channels enter an enumerated spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    /// Include the n = 0, j = 2 channel. Its closed form is finite, but the
    /// sum of all n >= 1 channels alone already reproduces the sum rule.
    pub include_monopole: bool,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            include_monopole: true,
        }
    }
}

impl Enumeration {
    pub fn transverse_only() -> Self {
        Enumeration {
            include_monopole: false,
        }
    }

    /// (n, j) pairs with n <= n_max.
    pub fn channels(&self, n_max: u32) -> Vec<(u32, u8)> {
        let mut out = Vec::with_capacity(2 * n_max as usize + 1);
        if self.include_monopole {
            out.push((0, 2));
        }
        for n in 1..=n_max {
            out.push((n, 1));
            out.push((n, 2));
        }
        out
    }
}

/// j_n and y_n for orders -2..=n_max+1 at one argument.
struct Orders {
    j: Vec<f64>,
    y: Vec<f64>,
}

impl Orders {
    fn regular(n_max: usize, x: f64) -> Result<Self> {
        let top = n_max + 1;
        let j = spherical_j_sequence(top.max(1), x)?;
        let y = if x > 0.0 {
            spherical_y_sequence(1, x)?
        } else {
            vec![f64::NAN; 2]
        };
        Ok(Orders { j, y })
    }

    fn outgoing(n_max: usize, x: f64) -> Result<Self> {
        let top = n_max + 1;
        Ok(Orders {
            j: spherical_j_sequence(top.max(1), x)?,
            y: spherical_y_sequence(top.max(1), x)?,
        })
    }

    /// j_n with j_{-1} = -y_0 and j_{-2} = y_1.
    fn j(&self, n: i64) -> f64 {
        match n {
            -1 => -self.y[0],
            -2 => self.y[1],
            _ => self.j[n as usize],
        }
    }

    /// y_n with y_{-1} = j_0 and y_{-2} = -j_1.
    fn y(&self, n: i64) -> f64 {
        match n {
            -1 => self.j[0],
            -2 => -self.j[1],
            _ => self.y[n as usize],
        }
    }

    fn h(&self, n: i64) -> (f64, f64) {
        (self.j(n), self.y(n))
    }
}

/// Shared radial data for every n up to a maximum.
struct Radial3D {
    x_core: f64,
    core: Orders,
    y_in: f64,
    inner: Orders,
    y_out: f64,
    outer: Orders,
}

impl Radial3D {
    fn new(geom: &BoundingGeometry3D, n_max: usize) -> Result<Self> {
        let c = geom.radii();
        let k = geom.k;
        Ok(Radial3D {
            x_core: k * c.r_core,
            core: Orders::regular(n_max, k * c.r_core)?,
            y_in: k * c.r_inner,
            inner: Orders::outgoing(n_max, k * c.r_inner)?,
            y_out: k * c.r_outer,
            outer: Orders::outgoing(n_max, k * c.r_outer)?,
        })
    }

    /// ln F(n, kR_c), n >= -1.
    fn log_f(&self, n: i64) -> Result<f64> {
        let o = &self.core;
        regular_antiderivative(self.x_core, 3, o.j(n), o.j(n + 1), o.j(n - 1))
            .ln()
            .ok_or_else(|| Error::Overflow(format!("j_{n}({}) out of range", self.x_core)))
    }

    fn endpoint(y: f64, o: &Orders, n: i64) -> Result<Scaled> {
        outgoing_antiderivative(y, 3, o.h(n), o.h(n + 1), o.h(n - 1))
            .ok_or_else(|| Error::Overflow(format!("y_{}({y})", n + 1)))
    }

    /// ln [H(n, kR_o) - H(n, kR_i)], n >= -1.
    fn log_dh(&self, n: i64) -> Result<f64> {
        let hi = Self::endpoint(self.y_out, &self.outer, n)?;
        let lo = Self::endpoint(self.y_in, &self.inner, n)?;
        hi.sub(lo)
            .ln()
            .ok_or_else(|| Error::Overflow(format!("shell integral at n = {n}")))
    }

    fn log_strength(&self, n: u32, j: u8) -> Result<f64> {
        let ni = n as i64;
        match j {
            1 if n >= 1 => Ok(self.log_f(ni)? + self.log_dh(ni)?),
            2 => {
                let nf = n as f64;
                let la = ((nf + 1.0) / (2.0 * nf + 1.0)).ln();
                if n == 0 {
                    return Ok(self.log_f(-1)? + self.log_dh(-1)?);
                }
                let lc = (nf / (2.0 * nf + 1.0)).ln();
                let inner = log_add(la + self.log_f(ni - 1)?, lc + self.log_f(ni + 1)?);
                let outer = log_add(la + self.log_dh(ni - 1)?, lc + self.log_dh(ni + 1)?);
                Ok(inner + outer)
            }
            _ => Err(Error::UnsupportedChannel { n: ni, j }),
        }
    }
}

fn check_channel(n: u32, j: u8) -> Result<()> {
    match (n, j) {
        (0, 1) => Err(Error::UnsupportedChannel { n: 0, j: 1 }),
        (_, 1) | (_, 2) => Ok(()),
        _ => Err(Error::UnsupportedChannel { n: n as i64, j }),
    }
}

/// |s_{nmj}|^2 of the sphere-shell configuration (independent of m).
pub fn sphere_shell_strength(n: u32, j: u8, geom: &BoundingGeometry3D) -> Result<f64> {
    check_channel(n, j)?;
    let radial = Radial3D::new(geom, n as usize + 1)?;
    let s = radial.log_strength(n, j)?.exp();
    if s.is_finite() {
        Ok(s)
    } else {
        Err(Error::Overflow(format!("strength at n = {n}, j = {j}")))
    }
}

/// ln of the large-n forms (kR_c/2n)^4 (R_c/R_i)^{2n-1} for j = 1 and
/// (1/4)(R_c/R_i)^{2n+1} for j = 2, which the exact strengths approach once
/// n is well beyond (k R_i)^2.
pub fn log_large_n_strength(n: u32, j: u8, geom: &BoundingGeometry3D) -> Result<f64> {
    check_channel(n, j)?;
    if n == 0 {
        return Err(Error::UnsupportedChannel { n: 0, j });
    }
    let c = geom.radii();
    let nf = n as f64;
    let lr = (c.r_core / c.r_inner).ln();
    Ok(match j {
        1 => 4.0 * (geom.k * c.r_core / (2.0 * nf)).ln() + (2.0 * nf - 1.0) * lr,
        _ => (0.25f64).ln() + (2.0 * nf + 1.0) * lr,
    })
}

/// (k^6 / 8 pi^2) [(kr)^-2 + (kr)^-4 + 3 (kr)^-6], the squared Frobenius norm
/// of the free-space dyadic Green's function at distance r.
pub fn frobenius_green_norm_sq(k: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("distance r = {r}")));
    }
    let u = (k * r).powi(-2);
    Ok(k.powi(6) / (8.0 * PI * PI) * (u + u * u + 3.0 * u * u * u))
}

/// Lower bound on the sum rule of any enclosed configuration. The leading
/// form keeps only the far-field (kr)^-2 term.
pub fn sum_rule_lower_3d(geom: &BoundingGeometry3D, leading_only: bool) -> Result<f64> {
    let d_max = geom.d_max();
    if !(d_max > 0.0) {
        return Err(Error::Divergence("d_max = 0".into()));
    }
    let vv = geom.source_volume * geom.receiver_volume;
    if leading_only {
        Ok(geom.k.powi(4) * vv / (8.0 * PI * PI * d_max * d_max))
    } else {
        Ok(vv * frobenius_green_norm_sq(geom.k, d_max)?)
    }
}

/// Sphere-shell strength over the leading sum-rule lower bound, unclamped.
pub fn unclamped_relative_bound_3d(n: u32, j: u8, geom: &BoundingGeometry3D) -> Result<f64> {
    Ok(sphere_shell_strength(n, j, geom)? / sum_rule_lower_3d(geom, true)?)
}

/// Shape-independent bound on the sum-normalized strength of channel
/// (n, m, j), clamped at 1.
pub fn relative_bound_3d(n: u32, j: u8, geom: &BoundingGeometry3D) -> Result<f64> {
    Ok(unclamped_relative_bound_3d(n, j, geom)?.min(1.0))
}

/// ln of 2 pi^2 d_max^2 / (k^4 V_s V_r (1 + d/R_c)^{sqrt(2q) + 1}).
pub fn log_asymptotic_bound_3d(q: u64, geom: &BoundingGeometry3D) -> Result<f64> {
    if q < 1 {
        return Err(Error::Domain("asymptote needs q >= 1".into()));
    }
    let c = geom.radii();
    let base = (2.0 * PI * PI * c.d_max * c.d_max
        / (geom.k.powi(4) * geom.source_volume * geom.receiver_volume))
        .ln();
    Ok(base - ((2.0 * q as f64).sqrt() + 1.0) * c.ratio.ln())
}

pub fn asymptotic_bound_3d(q: u64, geom: &BoundingGeometry3D) -> Result<f64> {
    Ok(log_asymptotic_bound_3d(q, geom)?.exp())
}

/// k^2 R_other R_c, the large-core far-field limit of the strongest channel.
pub fn max_channel_strength(geom: &BoundingGeometry3D) -> f64 {
    let c = geom.radii();
    geom.k * geom.k * c.r_other * c.r_core
}

/// ceil(3 k R_c) + 40.
pub fn default_n_max(geom: &BoundingGeometry3D) -> u32 {
    (3.0 * geom.k * geom.radii().r_core).ceil() as u32 + 40
}

/// Log strengths of every enumerated channel up to n_max, with the large-n
/// forms standing in where the closed form leaves the floating-point range.
fn log_strengths(
    geom: &BoundingGeometry3D,
    n_max: u32,
    enumeration: Enumeration,
) -> Result<Vec<(u32, u8, f64, bool)>> {
    let radial = Radial3D::new(geom, n_max as usize + 1)?;
    let mut out = Vec::new();
    for (n, j) in enumeration.channels(n_max) {
        match radial.log_strength(n, j) {
            Ok(ls) => out.push((n, j, ls, false)),
            Err(Error::Overflow(_)) if n >= 1 => {
                out.push((n, j, log_large_n_strength(n, j, geom)?, true))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn spectrum(
    geom: &BoundingGeometry3D,
    n_max: u32,
    enumeration: Enumeration,
    relative: bool,
) -> Result<ChannelSpectrum> {
    let lower = if relative {
        sum_rule_lower_3d(geom, true)?.ln()
    } else {
        0.0
    };
    let entries = log_strengths(geom, n_max, enumeration)?
        .into_iter()
        .map(|(n, j, ls, asymptotic)| {
            let v = (ls - lower).exp();
            ChannelEntry {
                label: ChannelLabel::Spherical { n, j },
                strength: if relative { v.min(1.0) } else { v },
                degeneracy: 2 * n as usize + 1,
                asymptotic,
            }
        })
        .collect();
    if relative {
        ChannelSpectrum::new(entries, Normalization::Bound, "sphere-shell bound")
    } else {
        ChannelSpectrum::new(entries, Normalization::Raw, "sphere-shell strengths")
    }
}

/// Relative bounds over n <= n_max with the default enumeration.
pub fn bound_spectrum_3d(geom: &BoundingGeometry3D, n_max: u32) -> Result<ChannelSpectrum> {
    bound_spectrum_3d_with(geom, n_max, Enumeration::default())
}

pub fn bound_spectrum_3d_with(
    geom: &BoundingGeometry3D,
    n_max: u32,
    enumeration: Enumeration,
) -> Result<ChannelSpectrum> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    spectrum(geom, n_max, enumeration, true)
}

/// Absolute sphere-shell strengths over n <= n_max.
pub fn strength_spectrum_3d(
    geom: &BoundingGeometry3D,
    n_max: u32,
    enumeration: Enumeration,
) -> Result<ChannelSpectrum> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    spectrum(geom, n_max, enumeration, false)
}

/// Channel index q = 2(n+1)^2 reached after all channels of order <= n.
pub fn channel_index(n: u32) -> u64 {
    2 * (n as u64 + 1).pow(2)
}

/// Smallest q0 such that the asymptote is at least the expanded staircase
/// bound at every rank q in [q0, q_search]; None if it is below at q_search.
pub fn asymptote_dominance_onset_3d(
    geom: &BoundingGeometry3D,
    q_search: u64,
) -> Result<Option<u64>> {
    let mut n_max = 1;
    while channel_index(n_max) < q_search + 2 {
        n_max += 1;
    }
    let staircase = bound_spectrum_3d(geom, n_max)?.expanded();
    let mut onset = None;
    for q in (1..=q_search.min(staircase.len() as u64)).rev() {
        let exact = staircase[q as usize - 1];
        if asymptotic_bound_3d(q, geom)? >= exact {
            onset = Some(q);
        } else {
            break;
        }
    }
    Ok(onset)
}

/// |s_{nmj}|^2 from adaptive quadrature of the radial integrals, using
/// pointwise spherical Bessel values: t^2 |f|^2 for j = 1 and
/// n(n+1)|f|^2 + |(t f)'|^2 for j = 2. Meant as an independent check of
/// [`sphere_shell_strength`].
pub fn quadrature_strength_3d(n: u32, j: u8, geom: &BoundingGeometry3D) -> Result<f64> {
    check_channel(n, j)?;
    let c = geom.radii();
    let ni = n as i32;
    let nn = (n * (n + 1)) as f64;
    let regular = |t: f64| -> f64 {
        let f = spherical_j(ni, t).unwrap_or(f64::NAN);
        if j == 1 {
            (t * f).powi(2)
        } else {
            let d = riccati_derivative(RadialKind::Regular, ni, t).map_or(f64::NAN, |z| z.re);
            nn * f * f + d * d
        }
    };
    let outgoing = |t: f64| -> f64 {
        let h = spherical_h1(ni, t).map_or(f64::NAN, |z| z.norm_sqr());
        if j == 1 {
            t * t * h
        } else {
            let d =
                riccati_derivative(RadialKind::Outgoing, ni, t).map_or(f64::NAN, |z| z.norm_sqr());
            nn * h + d
        }
    };
    let a = integrate(regular, 0.0, geom.k * c.r_core, 1e-13, 0.0)?;
    let b = integrate(outgoing, geom.k * c.r_inner, geom.k * c.r_outer, 1e-13, 0.0)?;
    Ok(a.value * b.value)
}
