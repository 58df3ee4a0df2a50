use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelLabel {
    /// Angular index q >= 0 of a 2D channel; degeneracy 2 covers +q and -q.
    Cylindrical { q: i64 },
    /// Multipole order n and polarization j of a 3D channel; degeneracy
    /// 2n + 1 covers the azimuthal index m.
    Spherical { n: u32, j: u8 },
    /// Position in a numerically computed spectrum.
    Rank(usize),
}

impl ChannelLabel {
    /// Text labels of the individual channels this entry stands for.
    pub fn expanded_labels(&self, degeneracy: usize) -> Vec<String> {
        match *self {
            ChannelLabel::Cylindrical { q } if degeneracy == 2 => {
                vec![q.to_string(), (-q).to_string()]
            }
            ChannelLabel::Cylindrical { q } => vec![q.to_string(); degeneracy],
            ChannelLabel::Spherical { n, j } if degeneracy == 2 * n as usize + 1 => {
                let n = n as i64;
                (-n..=n).map(|m| format!("{n}/{m}/{j}")).collect()
            }
            ChannelLabel::Spherical { n, j } => vec![format!("{n}/*/{j}"); degeneracy],
            ChannelLabel::Rank(r) => vec![r.to_string(); degeneracy],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    Raw,
    /// Divided by the total (sum rule) of the spectrum itself.
    Sum,
    /// Divided by the largest strength.
    Max,
    /// Upper bounds on sum-normalized strengths. These need not sum to one.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelEntry {
    pub label: ChannelLabel,
    pub strength: f64,
    pub degeneracy: usize,
    /// Strength taken from an asymptotic formula rather than a closed form.
    pub asymptotic: bool,
}

impl ChannelEntry {
    pub fn new(label: ChannelLabel, strength: f64, degeneracy: usize) -> Self {
        ChannelEntry {
            label,
            strength,
            degeneracy,
            asymptotic: false,
        }
    }
}

/// Channel strengths sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelSpectrum {
    entries: Vec<ChannelEntry>,
    normalization: Normalization,
    provenance: String,
}

impl ChannelSpectrum {
    pub fn new(
        mut entries: Vec<ChannelEntry>,
        normalization: Normalization,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        for e in &entries {
            if !(e.strength.is_finite() && e.strength >= 0.0) {
                return Err(Error::Domain(format!("channel strength {}", e.strength)));
            }
            if e.degeneracy == 0 {
                return Err(Error::Domain("zero degeneracy".into()));
            }
        }
        entries.sort_by(|a, b| b.strength.total_cmp(&a.strength));
        let spec = ChannelSpectrum {
            entries,
            normalization,
            provenance: provenance.into(),
        };
        if normalization == Normalization::Sum && spec.total() > 1.0 + 1e-12 {
            return Err(Error::Domain(format!(
                "sum-normalized spectrum totals {}",
                spec.total()
            )));
        }
        Ok(spec)
    }

    /// Singular values (not squared) of a numerical spectrum, one entry each.
    pub fn from_singular_values(
        sigma: &[f64],
        normalization: Normalization,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let total: f64 = sigma.iter().map(|s| s * s).sum();
        let top = sigma.iter().fold(0.0f64, |m, s| m.max(s * s));
        let scale = match normalization {
            Normalization::Raw | Normalization::Bound => 1.0,
            Normalization::Sum => total,
            Normalization::Max => top,
        };
        if scale <= 0.0 {
            return Err(Error::Empty("all singular values are zero".into()));
        }
        let entries = sigma
            .iter()
            .enumerate()
            .map(|(i, s)| ChannelEntry::new(ChannelLabel::Rank(i + 1), s * s / scale, 1))
            .collect();
        ChannelSpectrum::new(entries, normalization, provenance)
    }

    pub fn entries(&self) -> &[ChannelEntry] {
        &self.entries
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of individual channels, degeneracy included.
    pub fn len_expanded(&self) -> usize {
        self.entries.iter().map(|e| e.degeneracy).sum()
    }

    /// Sum of strengths with degeneracy.
    pub fn total(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.strength * e.degeneracy as f64)
            .sum()
    }

    /// Strengths with every degenerate entry repeated.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len_expanded());
        for e in &self.entries {
            out.extend(std::iter::repeat(e.strength).take(e.degeneracy));
        }
        out
    }

    /// (label, strength, asymptotic) for every individual channel.
    pub fn expanded_rows(&self) -> Vec<(String, f64, bool)> {
        let mut out = Vec::with_capacity(self.len_expanded());
        for e in &self.entries {
            for label in e.label.expanded_labels(e.degeneracy) {
                out.push((label, e.strength, e.asymptotic));
            }
        }
        out
    }

    /// Rescales to a new normalization. Bound spectra cannot be renormalized.
    pub fn normalized(&self, to: Normalization) -> Result<Self> {
        let scale = match to {
            Normalization::Raw => return Ok(self.clone()),
            Normalization::Sum => self.total(),
            Normalization::Max => self.entries.first().map_or(0.0, |e| e.strength),
            Normalization::Bound => return Err(Error::NormalizationRequired),
        };
        if self.normalization == Normalization::Bound {
            return Err(Error::NormalizationRequired);
        }
        if !(scale > 0.0) {
            return Err(Error::Empty("spectrum has no positive strength".into()));
        }
        let entries = self
            .entries
            .iter()
            .map(|e| ChannelEntry {
                strength: e.strength / scale,
                ..e.clone()
            })
            .collect();
        ChannelSpectrum::new(entries, to, self.provenance.clone())
    }
}
