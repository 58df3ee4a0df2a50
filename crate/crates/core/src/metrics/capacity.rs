use serde::Serialize;

use crate::bounds3d::{
    default_n_max, max_channel_strength, strength_spectrum_3d, BoundingGeometry3D, Enumeration,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Exact,
    LowSnr,
    HighSnr,
    AntennaLimited,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CapacityReport {
    /// Power per channel, in the order of the input strengths.
    pub allocations: Vec<f64>,
    /// Water level.
    pub mu: f64,
    /// log2(1 + P_q |s_q|^2 / P_noise) per channel.
    pub per_channel_bits: Vec<f64>,
    pub total_bits: f64,
    pub regime: Regime,
}

fn check_powers(p_total: f64, p_noise: f64) -> Result<()> {
    if !(p_total > 0.0 && p_total.is_finite()) {
        return Err(Error::Domain(format!("total power {p_total}")));
    }
    if !(p_noise > 0.0 && p_noise.is_finite()) {
        return Err(Error::Domain(format!("noise power {p_noise}")));
    }
    Ok(())
}

/// Optimal split of `p_total` over parallel Gaussian channels:
/// P_q = max(0, mu - P_noise / |s_q|^2) with the allocations summing to
/// `p_total`.
///
/// The water level comes from sorting the noise-to-strength levels and
/// taking the largest active set whose level is still below the water.
pub fn waterfill(strengths: &[f64], p_total: f64, p_noise: f64) -> Result<CapacityReport> {
    check_powers(p_total, p_noise)?;
    if let Some(s) = strengths.iter().find(|s| !(s.is_finite() && **s >= 0.0)) {
        return Err(Error::Domain(format!("channel strength {s}")));
    }
    let mut levels: Vec<f64> = strengths
        .iter()
        .filter(|&&s| s > 0.0)
        .map(|s| p_noise / s)
        .collect();
    if levels.is_empty() {
        return Err(Error::NoChannel);
    }
    levels.sort_by(f64::total_cmp);

    let mut partial = 0.0;
    let mut mu = f64::NAN;
    for (m, &level) in levels.iter().enumerate() {
        let candidate = (p_total + partial + level) / (m + 1) as f64;
        if m > 0 && candidate <= level {
            break;
        }
        partial += level;
        mu = candidate;
    }

    let mut allocations: Vec<f64> = strengths
        .iter()
        .map(|&s| {
            if s > 0.0 {
                (mu - p_noise / s).max(0.0)
            } else {
                0.0
            }
        })
        .collect();
    // mu - level cancels when the water is deep; raising the level by the
    // residual over the active set restores the power budget.
    let active = allocations.iter().filter(|&&p| p > 0.0).count().max(1) as f64;
    for _ in 0..2 {
        let shift = (p_total - allocations.iter().sum::<f64>()) / active;
        mu += shift;
        for p in allocations.iter_mut().filter(|p| **p > 0.0) {
            *p += shift;
        }
    }
    let per_channel_bits = bits(strengths, &allocations, p_noise);
    Ok(CapacityReport {
        total_bits: per_channel_bits.iter().sum(),
        allocations,
        mu,
        per_channel_bits,
        regime: Regime::Exact,
    })
}

fn bits(strengths: &[f64], allocations: &[f64], p_noise: f64) -> Vec<f64> {
    strengths
        .iter()
        .zip(allocations)
        .map(|(s, p)| (p * s / p_noise).ln_1p() / std::f64::consts::LN_2)
        .collect()
}

/// Shannon capacity sum in bits/s/Hz for given per-channel powers.
pub fn capacity(strengths: &[f64], allocations: &[f64], p_noise: f64) -> Result<f64> {
    if strengths.len() != allocations.len() {
        return Err(Error::Domain(format!(
            "{} strengths but {} allocations",
            strengths.len(),
            allocations.len()
        )));
    }
    if !(p_noise > 0.0) {
        return Err(Error::Domain(format!("noise power {p_noise}")));
    }
    if strengths
        .iter()
        .chain(allocations)
        .any(|v| !(*v >= 0.0 && v.is_finite()))
    {
        return Err(Error::Domain("negative or non-finite input".into()));
    }
    Ok(bits(strengths, allocations, p_noise).iter().sum())
}

/// Sphere-shell strengths, degeneracy expanded, in non-increasing order
/// and long enough to hold the top `n` channels.
fn expanded_strengths(geom: &BoundingGeometry3D, n: Option<usize>) -> Result<Vec<f64>> {
    let mut n_max = default_n_max(geom);
    if let Some(n) = n {
        n_max = n_max.max((n as f64 / 2.0).sqrt().ceil() as u32 + 10);
    }
    let spec = strength_spectrum_3d(geom, n_max, Enumeration::default())?;
    let mut all = spec.expanded();
    if let Some(n) = n {
        all.truncate(n);
    }
    Ok(all)
}

/// Water-filled capacity over the `n` strongest sphere-shell channels at
/// SNR = P / P_noise. Bounds the capacity of any enclosed pair of domains
/// restricted to `n` channels.
pub fn capacity_bound(geom: &BoundingGeometry3D, n: usize, snr: f64) -> Result<CapacityReport> {
    if n < 1 {
        return Err(Error::Domain("at least one channel is needed".into()));
    }
    waterfill(&expanded_strengths(geom, Some(n))?, snr, 1.0)
}

/// [`capacity_bound`] without a limit on the number of channels.
pub fn capacity_bound_all(geom: &BoundingGeometry3D, snr: f64) -> Result<CapacityReport> {
    waterfill(&expanded_strengths(geom, None)?, snr, 1.0)
}

/// SNR log2(e) k^2 R_other R_core: all power in the strongest channel.
pub fn capacity_low_snr(geom: &BoundingGeometry3D, snr: f64) -> f64 {
    snr * std::f64::consts::LOG2_E * max_channel_strength(geom)
}

/// 2 log2(SNR) k^2 R_core^2: power split evenly over the N_SH channels.
pub fn capacity_high_snr(geom: &BoundingGeometry3D, snr: f64) -> f64 {
    let r = geom.radii().r_core;
    2.0 * snr.log2() * geom.k * geom.k * r * r
}

/// N log2(SNR k^2 R_other R_core / N) for N antennas.
pub fn capacity_antenna_limited(geom: &BoundingGeometry3D, snr: f64, n_antenna: usize) -> f64 {
    let n = n_antenna as f64;
    n * (snr * max_channel_strength(geom) / n).log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Core;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Water level by bisection on the total allocated power.
    fn bisection_mu(strengths: &[f64], p_total: f64, p_noise: f64) -> f64 {
        let used = |mu: f64| -> f64 {
            strengths
                .iter()
                .filter(|&&s| s > 0.0)
                .map(|s| (mu - p_noise / s).max(0.0))
                .sum()
        };
        let (mut lo, mut hi) = (
            0.0,
            p_total
                + strengths
                    .iter()
                    .filter(|&&s| s > 0.0)
                    .map(|s| p_noise / s)
                    .fold(f64::INFINITY, f64::min),
        );
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if used(mid) < p_total {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn two_channel_breakpoint() {
        let r = waterfill(&[1.0, 0.5], 1.0, 1.0).unwrap();
        assert_eq!(r.allocations, vec![1.0, 0.0]);
        assert_eq!(r.mu, 2.0);
        assert!((r.total_bits - 1.0).abs() < 1e-15);
        assert!((bisection_mu(&[1.0, 0.5], 1.0, 1.0) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn equal_and_zero_strengths() {
        let r = waterfill(&[0.3, 0.3, 0.3], 2.0, 0.1).unwrap();
        for p in &r.allocations {
            assert!((p - 2.0 / 3.0).abs() < 1e-15);
        }
        let z = waterfill(&[1.0, 0.0, 2.0], 5.0, 1.0).unwrap();
        assert_eq!(z.allocations[1], 0.0);
        assert!(matches!(
            waterfill(&[0.0, 0.0], 1.0, 1.0),
            Err(Error::NoChannel)
        ));
        assert!(waterfill(&[1.0, -1.0], 1.0, 1.0).is_err());
    }

    #[test]
    fn capacity_basics() {
        assert_eq!(capacity(&[2.0], &[0.5], 1.0).unwrap(), 1.0);
        assert_eq!(capacity(&[2.0, 3.0], &[0.0, 0.0], 1.0).unwrap(), 0.0);
        assert!(capacity(&[1.0], &[-0.1], 1.0).is_err());
        assert!(capacity(&[1.0], &[0.1, 0.2], 1.0).is_err());
        let base = capacity(&[0.7, 0.2], &[1.0, 1.0], 0.5).unwrap();
        assert!(capacity(&[0.7, 0.2], &[1.0, 1.1], 0.5).unwrap() > base);
    }

    #[test]
    fn kkt_and_bisection_agree_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..40);
            let s: Vec<f64> = (0..n)
                .map(|_| 10f64.powf(rng.gen_range(-4.0..1.0)))
                .collect();
            let p = 10f64.powf(rng.gen_range(-2.0..3.0));
            let r = waterfill(&s, p, 1.0).unwrap();
            let total: f64 = r.allocations.iter().sum();
            assert!(((total - p) / p).abs() < 1e-12);
            let mu = bisection_mu(&s, p, 1.0);
            assert!(((r.mu - mu) / mu).abs() < 1e-10);
            for (si, pi) in s.iter().zip(&r.allocations) {
                if *pi > 0.0 {
                    assert!(((pi + 1.0 / si) - r.mu).abs() < 1e-9 * r.mu);
                } else {
                    assert!(1.0 / si >= r.mu * (1.0 - 1e-12));
                }
            }
        }
    }

    #[test]
    fn beats_random_allocations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..12);
            let s: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
            if s.iter().all(|&v| v == 0.0) {
                continue;
            }
            let p = rng.gen_range(0.1..10.0);
            let best = waterfill(&s, p, 1.0).unwrap().total_bits;
            for _ in 0..1000 {
                let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
                let sum: f64 = w.iter().sum();
                let alloc: Vec<f64> = w.iter().map(|x| x / sum * p).collect();
                assert!(capacity(&s, &alloc, 1.0).unwrap() <= best * (1.0 + 1e-12));
            }
        }
    }

    fn fig4(r: f64) -> BoundingGeometry3D {
        let lambda = 1.0;
        let k = 2.0 * std::f64::consts::PI / lambda;
        BoundingGeometry3D::new(k, r, 0.5, 10.0, 1.0, 1.0)
            .unwrap()
            .with_core(Core::Source)
    }

    #[test]
    fn single_channel_bound() {
        let g = fig4(2.0);
        let top = expanded_strengths(&g, Some(1)).unwrap()[0];
        let r = capacity_bound(&g, 1, 100.0).unwrap();
        assert!((r.total_bits - (1.0 + 100.0 * top).log2()).abs() < 1e-12);
    }

    #[test]
    fn bound_grows_with_channel_budget() {
        let g = fig4(2.0);
        let mut last = 0.0;
        for n in [1, 2, 5, 20, 100, 400] {
            let c = capacity_bound(&g, n, 1e4).unwrap().total_bits;
            assert!(c >= last);
            last = c;
        }
        assert!(capacity_bound_all(&g, 1e4).unwrap().total_bits >= last);
    }

    #[test]
    fn low_snr_matches_single_channel() {
        let g = fig4(5.0);
        let snr = 1e-3;
        let exact = capacity_bound(&g, 1, snr).unwrap().total_bits;
        let approx = capacity_low_snr(&g, snr);
        assert!((approx / exact - 1.0).abs() < 0.05, "{approx} vs {exact}");
    }

    #[test]
    fn asymptotic_forms() {
        let g = fig4(2.0);
        assert!((capacity_low_snr(&g, 2e-3) / capacity_low_snr(&g, 1e-3) - 2.0).abs() < 1e-14);
        let h = capacity_high_snr(&fig4(4.0), 1e4) / capacity_high_snr(&g, 1e4);
        assert!((h - 4.0).abs() < 1e-12);
        // N channels each of strength k^2 R_r R at SNR / N apiece
        let n = 10;
        let per = (1e4 / n as f64) * max_channel_strength(&g);
        let want = n as f64 * per.log2();
        assert!((capacity_antenna_limited(&g, 1e4, n) - want).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn rescaling_invariance(
            s in prop::collection::vec(0.001f64..10.0, 1..20),
            p in 0.01f64..100.0,
            noise in 0.01f64..10.0,
            c in prop::sample::select(vec![0.25, 0.5, 2.0, 4.0, 8.0]),
        ) {
            let a = waterfill(&s, p, noise).unwrap();
            let scaled: Vec<f64> = s.iter().map(|v| v * c).collect();
            let b = waterfill(&scaled, p, noise * c).unwrap();
            prop_assert_eq!(a.total_bits, b.total_bits);
        }
    }
}
