use crate::error::{Error, Result};

use super::{ChannelLabel, ChannelSpectrum, Normalization};

fn check_counted(spec: &ChannelSpectrum, threshold: f64) -> Result<()> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::Domain(format!(
            "threshold {threshold} outside (0, 1]"
        )));
    }
    match spec.normalization() {
        Normalization::Sum | Normalization::Bound => Ok(()),
        _ => Err(Error::NormalizationRequired),
    }
}

/// Channels, degeneracy included, whose normalized strength is at least
/// `threshold`.
pub fn count_channels(spec: &ChannelSpectrum, threshold: f64) -> Result<usize> {
    check_counted(spec, threshold)?;
    Ok(spec
        .entries()
        .iter()
        .filter(|e| e.strength >= threshold)
        .map(|e| e.degeneracy)
        .sum())
}

/// Like [`count_channels`] but counts each degenerate group once, so a 2D
/// pair +q, -q is one index.
pub fn count_indices(spec: &ChannelSpectrum, threshold: f64) -> Result<usize> {
    check_counted(spec, threshold)?;
    Ok(spec
        .entries()
        .iter()
        .filter(|e| e.strength >= threshold)
        .count())
}

/// N_SH = 2 k^2 R^2: one mode per lambda^2 / pi of sphere surface, times two
/// polarizations.
pub fn spherical_heuristic(k: f64, r: f64) -> f64 {
    2.0 * k * k * r * r
}

/// Sum of strengths, degeneracy expanded, over a reference strength: the
/// q = 0 channel when the spectrum is labelled by cylindrical index, the
/// largest entry otherwise.
pub fn piestun_ratio_sum(spec: &ChannelSpectrum) -> Result<f64> {
    let first = spec
        .entries()
        .first()
        .ok_or_else(|| Error::Empty("spectrum has no entries".into()))?;
    let reference = spec
        .entries()
        .iter()
        .find(|e| e.label == ChannelLabel::Cylindrical { q: 0 })
        .unwrap_or(first)
        .strength;
    if !(reference > 0.0) {
        return Err(Error::Empty("reference strength is zero".into()));
    }
    Ok(spec.total() / reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{ChannelEntry, ChannelLabel};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn spectrum(values: &[(f64, usize)], norm: Normalization) -> ChannelSpectrum {
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &(s, d))| ChannelEntry::new(ChannelLabel::Rank(i + 1), s, d))
            .collect();
        ChannelSpectrum::new(entries, norm, "").unwrap()
    }

    #[test]
    fn direct_counts() {
        let s = spectrum(&[(0.5, 1), (0.3, 1), (0.2, 1)], Normalization::Sum);
        assert_eq!(count_channels(&s, 0.25).unwrap(), 2);
        assert_eq!(count_channels(&s, 0.6).unwrap(), 0);
        assert!(count_channels(&s, 0.0).is_err());
        let d = spectrum(&[(0.2, 2), (0.1, 3)], Normalization::Bound);
        assert_eq!(count_channels(&d, 0.1).unwrap(), 5);
        assert_eq!(count_indices(&d, 0.1).unwrap(), 2);
    }

    #[test]
    fn raw_needs_normalization() {
        let s = spectrum(&[(5.0, 1)], Normalization::Raw);
        assert!(matches!(
            count_channels(&s, 0.5),
            Err(Error::NormalizationRequired)
        ));
    }

    #[test]
    fn heuristic() {
        assert!((spherical_heuristic(2.0 * PI, 1.0) - 8.0 * PI * PI).abs() < 1e-12);
        let k = 3.0;
        assert_eq!(
            spherical_heuristic(k, 2.0),
            4.0 * spherical_heuristic(k, 1.0)
        );
        // 2 (4 pi R^2) / (lambda^2 / pi)
        let (lambda, r) = (0.7, 1.3);
        let by_area = 2.0 * 4.0 * PI * r * r / (lambda * lambda / PI);
        assert!((spherical_heuristic(2.0 * PI / lambda, r) - by_area).abs() < 1e-10);
    }

    #[test]
    fn piestun() {
        assert_eq!(
            piestun_ratio_sum(&spectrum(&[(3.0, 1)], Normalization::Raw)).unwrap(),
            1.0
        );
        let eq = spectrum(&[(0.5, 4)], Normalization::Raw);
        assert_eq!(piestun_ratio_sum(&eq).unwrap(), 4.0);
        let cyl = ChannelSpectrum::new(
            vec![
                ChannelEntry::new(ChannelLabel::Cylindrical { q: 0 }, 0.5, 1),
                ChannelEntry::new(ChannelLabel::Cylindrical { q: 1 }, 1.0, 2),
            ],
            Normalization::Raw,
            "",
        )
        .unwrap();
        assert_eq!(piestun_ratio_sum(&cyl).unwrap(), 5.0);
        let empty = ChannelSpectrum::new(vec![], Normalization::Raw, "").unwrap();
        assert!(piestun_ratio_sum(&empty).is_err());
    }

    proptest! {
        #[test]
        fn count_monotone(
            values in prop::collection::vec(0.0f64..0.1, 1..30),
            bump in prop::collection::vec(0.0f64..0.01, 30),
            t1 in 0.001f64..0.1,
            t2 in 0.001f64..0.1,
        ) {
            let base: Vec<_> = values.iter().map(|&v| (v, 1)).collect();
            let s = spectrum(&base, Normalization::Bound);
            let (lo, hi) = (t1.min(t2), t1.max(t2));
            prop_assert!(count_channels(&s, hi).unwrap() <= count_channels(&s, lo).unwrap());
            let up: Vec<_> = values.iter().zip(&bump).map(|(&v, &b)| (v + b, 1)).collect();
            let u = spectrum(&up, Normalization::Bound);
            prop_assert!(count_channels(&u, lo).unwrap() >= count_channels(&s, lo).unwrap());
        }
    }
}
