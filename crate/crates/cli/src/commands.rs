//! The `bounds`, `count`, `capacity` and `oracle` subcommands. Each one
//! computes everything first and then commits its files together.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use wavechan_core::bounds2d::{
    asymptotic_bound_2d, bound_spectrum_2d, default_q_max, relative_bound_2d, strength_spectrum_2d,
    sum_rule_lower_2d,
};
use wavechan_core::bounds3d::{
    asymptotic_bound_3d, bound_spectrum_3d_with, default_n_max, max_channel_strength,
    relative_bound_3d, sphere_shell_strength, strength_spectrum_3d, sum_rule_lower_3d, Enumeration,
};
use wavechan_core::metrics::{
    capacity_antenna_limited, capacity_bound, capacity_bound_all, capacity_high_snr,
    capacity_low_snr, count_channels, spherical_heuristic, ChannelEntry, ChannelLabel,
    ChannelSpectrum, Normalization,
};
use wavechan_core::oracle::{
    circulant_compatible, domain_singular_values, make_geometry_capped, make_polar,
    piestun_counterexample, polar_angular_count, polar_singular_values, verify_monotonicity,
    DiscretizedDomain, Shape, DEFAULT_ROW_CAP,
};

use crate::fit::{line_fit, log_log_fit, LineFit};
use crate::output::{Cell, Outputs, Table};
use crate::scenario::{Configuration, Filter, Grid, OutputNormalization, Scenario};

pub const D_MAX_CONVENTION: &str = "d_max = d + 2 R_s + 2 R_r";

/// Command-line overrides of scenario fields.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub max_n: Option<usize>,
    pub resolution: Option<f64>,
}

impl Overrides {
    pub fn apply(&self, sc: &mut Scenario) -> Result<()> {
        if let Some(s) = self.seed {
            sc.seed = s;
        }
        if let Some(n) = self.max_n {
            sc.max_n = Some(n);
        }
        if let Some(r) = self.resolution {
            sc.resolution = Some(r);
        }
        if let Some(o) = &self.out {
            sc.output_dir = Some(o.clone());
        }
        sc.validate()
    }
}

pub fn output_dir(sc: &Scenario) -> PathBuf {
    sc.output_dir
        .clone()
        .unwrap_or_else(|| Path::new("out").join(&sc.name))
}

fn metadata(sc: &Scenario, command: &str, started: Instant, extra: Value) -> Value {
    let mut m = json!({
        "command": command,
        "scenario": sc.name,
        "schema": crate::scenario::SCHEMA,
        "version": env!("CARGO_PKG_VERSION"),
        "seed": sc.seed,
        "dimension": sc.dimension,
        "wavelength": sc.wavelength,
        "k": sc.k(),
        "core": sc.geometry.core,
        "d_max_convention": D_MAX_CONVENTION,
        "resolution": sc.resolution,
        "runtime_s": started.elapsed().as_secs_f64(),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut m, extra) {
        m.extend(e);
    }
    m
}

/// Numerical spectrum of one configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigSpectrum {
    pub name: String,
    /// Squared singular values in non-increasing order.
    #[serde(skip)]
    pub strengths: Vec<f64>,
    /// Angular harmonic of each value on the polar route.
    #[serde(skip)]
    pub harmonics: Option<Vec<usize>>,
    pub route: &'static str,
    pub spacing: f64,
    pub source_points: usize,
    pub receiver_points: usize,
    pub rows: usize,
    pub cols: usize,
    pub runtime_s: f64,
}

impl ConfigSpectrum {
    pub fn total(&self) -> f64 {
        self.strengths.iter().sum()
    }

    /// Strengths over the total, the largest value or the leading q = 0
    /// value. The last needs harmonic labels; without them it is None.
    pub fn normalized(&self, how: OutputNormalization) -> Option<Vec<f64>> {
        let scale = match how {
            OutputNormalization::Sum => self.total(),
            OutputNormalization::Max => self.strengths.first().copied().unwrap_or(1.0),
            OutputNormalization::Zeroth => {
                let h = self.harmonics.as_ref()?;
                self.strengths
                    .iter()
                    .zip(h)
                    .find(|(_, q)| **q == 0)?
                    .0
                    .to_owned()
            }
        };
        Some(self.strengths.iter().map(|s| s / scale).collect())
    }
}

fn outer_radius(shape: &Shape) -> f64 {
    match *shape {
        Shape::Disk2d { radius, .. } => radius,
        Shape::Annulus2d { outer, .. } => outer,
        _ => 0.0,
    }
}

/// Grids for a configuration at `spacing`.
pub fn discretize(
    cfg: &Configuration,
    spacing: f64,
) -> Result<(DiscretizedDomain, DiscretizedDomain)> {
    let ctx = || format!("discretizing configuration `{}`", cfg.name);
    match cfg.grid {
        Grid::Cartesian => Ok((
            make_geometry_capped(&cfg.source, spacing, DEFAULT_ROW_CAP).with_context(ctx)?,
            make_geometry_capped(&cfg.receiver, spacing, DEFAULT_ROW_CAP).with_context(ctx)?,
        )),
        Grid::Polar => {
            let m = polar_angular_count(
                outer_radius(&cfg.source).max(outer_radius(&cfg.receiver)),
                spacing,
            );
            Ok((
                make_polar(&cfg.source, spacing, m).with_context(ctx)?,
                make_polar(&cfg.receiver, spacing, m).with_context(ctx)?,
            ))
        }
    }
}

pub fn config_spectrum(cfg: &Configuration, k: f64, spacing: f64) -> Result<ConfigSpectrum> {
    let t = Instant::now();
    let (src, rcv) = discretize(cfg, spacing)?;
    let ctx = || format!("singular values of configuration `{}`", cfg.name);
    let (strengths, harmonics, route) = if circulant_compatible(&src, &rcv) {
        let mut h = polar_singular_values(&src, &rcv, k).with_context(ctx)?;
        h.sort_by(|a, b| b.sigma.total_cmp(&a.sigma));
        (
            h.iter().map(|v| v.sigma * v.sigma).collect(),
            Some(h.iter().map(|v| v.q).collect()),
            "polar",
        )
    } else {
        let s = domain_singular_values(&src, &rcv, k).with_context(ctx)?;
        (s.iter().map(|v| v * v).collect(), None, "dense")
    };
    log::info!(
        "configuration {}: {} x {} ({route})",
        cfg.name,
        rcv.matrix_dim(),
        src.matrix_dim()
    );
    Ok(ConfigSpectrum {
        name: cfg.name.clone(),
        strengths,
        harmonics,
        route,
        spacing,
        source_points: src.len(),
        receiver_points: rcv.len(),
        rows: rcv.matrix_dim(),
        cols: src.matrix_dim(),
        runtime_s: t.elapsed().as_secs_f64(),
    })
}

fn spacing(sc: &Scenario) -> Result<f64> {
    sc.resolution
        .context("key `resolution`: required when configurations are present")
}

pub fn all_config_spectra(sc: &Scenario) -> Result<Vec<ConfigSpectrum>> {
    if sc.configurations.is_empty() {
        return Ok(Vec::new());
    }
    let h = spacing(sc)?;
    sc.configurations
        .iter()
        .map(|c| config_spectrum(c, sc.k(), h))
        .collect()
}

fn enumeration(sc: &Scenario) -> Enumeration {
    Enumeration {
        include_monopole: !sc.exclude_monopole,
    }
}

/// Raw strengths over `by`, keeping the labels.
fn scaled(raw: &ChannelSpectrum, by: f64) -> Result<ChannelSpectrum> {
    if !(by > 0.0) {
        bail!("reference strength is zero");
    }
    let entries = raw
        .entries()
        .iter()
        .map(|e| ChannelEntry {
            strength: e.strength / by,
            ..e.clone()
        })
        .collect();
    Ok(ChannelSpectrum::new(
        entries,
        Normalization::Raw,
        raw.provenance(),
    )?)
}

/// One row per individual channel of a bound spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub label: String,
    pub bound: f64,
    pub asymptote: Option<f64>,
    pub degeneracy: usize,
}

/// Bound rows under a normalization. `Sum` gives the relative bounds;
/// `Max` divides the closed-form strengths by the largest one.
pub fn bound_rows(sc: &Scenario, how: OutputNormalization) -> Result<(Vec<BoundRow>, Value)> {
    let (g2, g3) = if sc.dimension == 2 {
        (Some(sc.geometry_2d(None)?), None)
    } else {
        (None, Some(sc.geometry_3d(None)?))
    };
    let (spec, top, lower, trunc): (ChannelSpectrum, f64, f64, usize) = match (&g2, &g3) {
        (Some(g), _) => {
            let q_max = sc.max_n.unwrap_or_else(|| default_q_max(g));
            let raw = strength_spectrum_2d(g, q_max)?;
            let zeroth = raw
                .entries()
                .iter()
                .find(|e| e.label == ChannelLabel::Cylindrical { q: 0 })
                .map_or(0.0, |e| e.strength);
            let (spec, top) = match how {
                OutputNormalization::Sum => {
                    (bound_spectrum_2d(g, q_max)?, raw.entries()[0].strength)
                }
                OutputNormalization::Max => (
                    raw.normalized(Normalization::Max)?,
                    raw.entries()[0].strength,
                ),
                OutputNormalization::Zeroth => (scaled(&raw, zeroth)?, zeroth),
            };
            (spec, top, sum_rule_lower_2d(g)?, q_max)
        }
        (_, Some(g)) => {
            let n_max = sc.max_n.map_or_else(|| default_n_max(g), |n| n as u32);
            let raw = strength_spectrum_3d(g, n_max, enumeration(sc))?;
            let spec = match how {
                OutputNormalization::Sum => bound_spectrum_3d_with(g, n_max, enumeration(sc))?,
                OutputNormalization::Max => raw.normalized(Normalization::Max)?,
                OutputNormalization::Zeroth => bail!("`zeroth` normalization needs a 2D scenario"),
            };
            (
                spec,
                raw.entries()[0].strength,
                sum_rule_lower_3d(g, true)?,
                n_max as usize,
            )
        }
        _ => unreachable!(),
    };
    // asymptotes are relative to the sum-rule lower bound
    let asym_scale = match how {
        OutputNormalization::Sum => 1.0,
        OutputNormalization::Max | OutputNormalization::Zeroth => lower / top,
    };
    let mut rows = Vec::with_capacity(spec.len_expanded());
    let mut asymptotic = 0usize;
    for e in spec.entries() {
        asymptotic += e.asymptotic as usize;
        // emit the closed-form function values themselves
        let bound = match (how, e.label, e.asymptotic, &g2, &g3) {
            (OutputNormalization::Sum, ChannelLabel::Cylindrical { q }, false, Some(g), _) => {
                relative_bound_2d(q, g)?
            }
            (OutputNormalization::Sum, ChannelLabel::Spherical { n, j }, false, _, Some(g)) => {
                relative_bound_3d(n, j, g)?
            }
            _ => e.strength,
        };
        for label in e.label.expanded_labels(e.degeneracy) {
            let asymptote = match (e.label, &g2, &g3) {
                (ChannelLabel::Cylindrical { q }, Some(g), _) if q != 0 => {
                    Some(asymptotic_bound_2d(q.abs(), g)? * asym_scale)
                }
                (ChannelLabel::Spherical { .. }, _, Some(g)) => {
                    Some(asymptotic_bound_3d(rows.len() as u64 + 1, g)? * asym_scale)
                }
                _ => None,
            };
            rows.push(BoundRow {
                label,
                bound,
                asymptote,
                degeneracy: e.degeneracy,
            });
        }
    }
    let info = json!({
        "truncation": trunc,
        "sum_rule_lower": lower,
        "asymptotic_entries": asymptotic,
        "channels": rows.len(),
    });
    Ok((rows, info))
}

pub fn run_bounds(sc: &Scenario) -> Result<Outputs> {
    let t = Instant::now();
    let spectra = all_config_spectra(sc)?;
    let base = if sc.dimension == 2 {
        "bounds2d"
    } else {
        "bounds3d"
    };
    let mut out = Outputs::default();
    let mut info = serde_json::Map::new();
    for how in &sc.normalizations {
        let (rows, meta) = bound_rows(sc, *how)?;
        let mut header = vec![
            "rank".to_string(),
            "label".into(),
            "bound".into(),
            "asymptote".into(),
            "degeneracy".into(),
        ];
        header.extend(spectra.iter().map(|s| s.name.clone()));
        let mut table = Table::new(header);
        let numeric: Vec<Vec<f64>> = spectra
            .iter()
            .map(|s| {
                s.normalized(*how).with_context(|| {
                    format!("`zeroth` normalization of `{}` needs a polar grid", s.name)
                })
            })
            .collect::<Result<_>>()?;
        let len = rows
            .len()
            .max(numeric.iter().map(Vec::len).max().unwrap_or(0));
        for i in 0..len {
            let r = rows.get(i);
            let mut row: Vec<Cell> = vec![
                (i + 1).into(),
                r.map(|r| r.label.clone()).into(),
                r.map(|r| r.bound).into(),
                r.and_then(|r| r.asymptote).into(),
                r.map(|r| r.degeneracy).into(),
            ];
            row.extend(numeric.iter().map(|n| Cell::from(n.get(i).copied())));
            table.push(row);
        }
        let name = match how {
            OutputNormalization::Sum => format!("{base}.csv"),
            OutputNormalization::Max => format!("{base}_max.csv"),
            OutputNormalization::Zeroth => format!("{base}_q0.csv"),
        };
        info.insert(name.clone(), meta);
        out.csv(name, &table)?;
    }
    if sc.dimension == 3 && sc.sweep.is_some() {
        out.csv("max_strength.csv", &max_strength_table(sc)?)?;
    }
    let warnings = if sc.dimension == 2 {
        sc.geometry_2d(None)?.fill_warnings()
    } else {
        sc.geometry_3d(None)?.fill_warnings()
    };
    let meta = metadata(
        sc,
        "bounds",
        t,
        json!({ "outputs": info, "configurations": spectra, "warnings": warnings }),
    );
    out.json("metadata.json", &meta)?;
    Ok(out)
}

/// Largest sphere-shell strength over the sweep against the (0, 2) channel
/// and the far-field limit k^2 R_other R_core.
fn max_strength_table(sc: &Scenario) -> Result<Table> {
    let mut t = Table::new([
        "R_over_lambda",
        "max_strength",
        "s_002",
        "far_field",
        "relative_difference",
    ]);
    for r in radii(sc) {
        let g = sc.geometry_3d(Some(r))?;
        let n_max = sc.max_n.map_or_else(|| default_n_max(&g), |n| n as u32);
        let top = strength_spectrum_3d(&g, n_max, enumeration(sc))?.entries()[0].strength;
        let limit = max_channel_strength(&g);
        t.push(vec![
            (r / sc.wavelength).into(),
            top.into(),
            sphere_shell_strength(0, 2, &g)?.into(),
            limit.into(),
            ((top - limit).abs() / limit).into(),
        ]);
    }
    Ok(t)
}

fn radii(sc: &Scenario) -> Vec<f64> {
    sc.sweep
        .as_ref()
        .map_or_else(|| vec![sc.geometry.r_source], |s| s.radii.clone())
}

fn need_3d(sc: &Scenario, what: &str) -> Result<()> {
    if sc.dimension != 3 {
        bail!("`{what}` needs a 3D scenario (key `dimension`)");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountRow {
    pub r: f64,
    pub threshold: f64,
    pub bound_count: usize,
    pub n_sh: f64,
}

pub fn count_rows(sc: &Scenario) -> Result<Vec<CountRow>> {
    need_3d(sc, "count")?;
    if sc.thresholds.is_empty() {
        bail!("key `thresholds`: empty");
    }
    let mut rows = Vec::new();
    for r in radii(sc) {
        let g = sc.geometry_3d(Some(r))?;
        let n_max = sc.max_n.map_or_else(|| default_n_max(&g), |n| n as u32);
        let spec = bound_spectrum_3d_with(&g, n_max, enumeration(sc))?;
        for &t in &sc.thresholds {
            rows.push(CountRow {
                r,
                threshold: t,
                bound_count: count_channels(&spec, t)?,
                n_sh: spherical_heuristic(g.k, r),
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct CountFit {
    pub threshold: f64,
    /// ln(count) against ln(R).
    pub fit: Option<LineFit>,
    pub ratio_min: f64,
    pub ratio_max: f64,
}

pub fn count_fits(rows: &[CountRow], thresholds: &[f64]) -> Vec<CountFit> {
    thresholds
        .iter()
        .map(|&t| {
            let sel: Vec<&CountRow> = rows.iter().filter(|r| r.threshold == t).collect();
            let x: Vec<f64> = sel.iter().map(|r| r.r).collect();
            let y: Vec<f64> = sel.iter().map(|r| r.bound_count as f64).collect();
            let ratios = sel.iter().map(|r| r.bound_count as f64 / r.n_sh);
            CountFit {
                threshold: t,
                fit: log_log_fit(&x, &y),
                ratio_min: ratios.clone().fold(f64::INFINITY, f64::min),
                ratio_max: ratios.fold(f64::NEG_INFINITY, f64::max),
            }
        })
        .collect()
}

pub fn run_count(sc: &Scenario) -> Result<Outputs> {
    let t = Instant::now();
    let rows = count_rows(sc)?;
    let mut table = Table::new(["R_over_lambda", "threshold", "bound_count", "N_SH"]);
    for r in &rows {
        table.push(vec![
            (r.r / sc.wavelength).into(),
            r.threshold.into(),
            r.bound_count.into(),
            r.n_sh.into(),
        ]);
    }
    let mut out = Outputs::default();
    out.csv("count.csv", &table)?;
    out.json("count_fit.json", &count_fits(&rows, &sc.thresholds))?;
    out.json(
        "metadata.json",
        &metadata(sc, "count", t, json!({ "rows": rows.len() })),
    )?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapacityRow {
    pub r: f64,
    pub snr: f64,
    /// None for an unrestricted number of channels.
    pub n_antenna: Option<usize>,
    pub exact: f64,
    pub asymptote: f64,
    pub regime: &'static str,
}

pub fn capacity_rows(sc: &Scenario) -> Result<Vec<CapacityRow>> {
    need_3d(sc, "capacity")?;
    if sc.snr_list.is_empty() {
        bail!("key `snr_list`: empty");
    }
    let mut rows = Vec::new();
    for r in radii(sc) {
        let g = sc.geometry_3d(Some(r))?;
        for &snr in &sc.snr_list {
            let exact = capacity_bound_all(&g, snr)?.total_bits;
            let (asymptote, regime) = if snr >= 1.0 {
                (capacity_high_snr(&g, snr), "high_snr")
            } else {
                (capacity_low_snr(&g, snr), "low_snr")
            };
            rows.push(CapacityRow {
                r,
                snr,
                n_antenna: None,
                exact,
                asymptote,
                regime,
            });
            for &n in &sc.n_antenna_list {
                rows.push(CapacityRow {
                    r,
                    snr,
                    n_antenna: Some(n),
                    exact: capacity_bound(&g, n, snr)?.total_bits,
                    asymptote: capacity_antenna_limited(&g, snr, n),
                    regime: "antenna_limited",
                });
            }
        }
    }
    Ok(rows)
}

/// Knee of an antenna-limited capacity curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Saturation {
    pub n_antenna: usize,
    pub snr: f64,
    /// R with 2 k^2 R^2 = N.
    pub predicted: f64,
    /// Where the tail fit, extended back, meets the unrestricted curve.
    pub measured: Option<f64>,
    /// Capacity against ln R over R >= 1.5 * predicted.
    pub tail: Option<LineFit>,
}

/// `radii` ascending; `unrestricted` and `limited` are capacities on them.
pub fn saturation(
    k: f64,
    n: usize,
    snr: f64,
    radii: &[f64],
    unrestricted: &[f64],
    limited: &[f64],
) -> Saturation {
    let predicted = (n as f64 / 2.0).sqrt() / k;
    let (x, y): (Vec<f64>, Vec<f64>) = radii
        .iter()
        .zip(limited)
        .filter(|(r, _)| **r >= 1.5 * predicted)
        .map(|(r, c)| (r.ln(), *c))
        .unzip();
    let tail = line_fit(&x, &y);
    let measured = tail.and_then(|f| {
        let gap = |i: usize| f.intercept + f.slope * radii[i].ln() - unrestricted[i];
        // last radius where the line still lies above the unrestricted curve
        let i = (0..radii.len()).rev().find(|&i| gap(i) >= 0.0)?;
        if i + 1 == radii.len() {
            return None;
        }
        let (a, b) = (gap(i), gap(i + 1));
        let u = a / (a - b);
        Some((radii[i].ln() + u * (radii[i + 1].ln() - radii[i].ln())).exp())
    });
    Saturation {
        n_antenna: n,
        snr,
        predicted,
        measured,
        tail,
    }
}

pub fn capacity_analysis(sc: &Scenario, rows: &[CapacityRow]) -> Value {
    let rs = radii(sc);
    let pick = |snr: f64, n: Option<usize>| -> Vec<f64> {
        rows.iter()
            .filter(|r| r.snr == snr && r.n_antenna == n)
            .map(|r| r.exact)
            .collect()
    };
    let mut slopes = Vec::new();
    let mut knees = Vec::new();
    for &snr in &sc.snr_list {
        let all = pick(snr, None);
        let asym: Vec<f64> = rows
            .iter()
            .filter(|r| r.snr == snr && r.n_antenna.is_none())
            .map(|r| r.asymptote)
            .collect();
        slopes.push(json!({
            "snr": snr,
            "exact_log_log": log_log_fit(&rs, &all),
            "asymptote_log_log": log_log_fit(&rs, &asym),
        }));
        // the antenna limit only bends the curve once SNR is large
        for &n in sc.n_antenna_list.iter().filter(|_| snr >= 1.0) {
            knees.push(saturation(sc.k(), n, snr, &rs, &all, &pick(snr, Some(n))));
        }
    }
    json!({ "unrestricted": slopes, "saturation": knees })
}

pub fn run_capacity(sc: &Scenario) -> Result<Outputs> {
    let t = Instant::now();
    let rows = capacity_rows(sc)?;
    let mut table = Table::new([
        "R_over_lambda",
        "SNR",
        "N_antenna",
        "capacity_exact",
        "capacity_asymptote",
        "regime",
    ]);
    for r in &rows {
        table.push(vec![
            (r.r / sc.wavelength).into(),
            r.snr.into(),
            r.n_antenna.map_or(Cell::from("inf"), Cell::from),
            r.exact.into(),
            r.asymptote.into(),
            r.regime.into(),
        ]);
    }
    let mut out = Outputs::default();
    out.csv("capacity.csv", &table)?;
    out.json("capacity_fit.json", &capacity_analysis(sc, &rows))?;
    out.json(
        "metadata.json",
        &metadata(sc, "capacity", t, json!({ "rows": rows.len() })),
    )?;
    Ok(out)
}

fn apply_filter(
    d: &DiscretizedDomain,
    f: &Option<Filter>,
    label: String,
) -> Result<DiscretizedDomain> {
    Ok(match f {
        None => d.clone(),
        Some(Filter::Sector { from, to }) => d.sector([0.0, 0.0], *from, *to)?,
        Some(Filter::Box { center, half_width }) => d.retain(label, |p| {
            p.iter()
                .zip(center)
                .all(|(a, c)| (a - c).abs() <= *half_width)
        })?,
    })
}

/// Analytic relative bounds in rank order, for the oracle tables.
fn rank_bounds(sc: &Scenario) -> Result<Vec<f64>> {
    Ok(bound_rows(sc, OutputNormalization::Sum)?
        .0
        .iter()
        .map(|r| r.bound)
        .collect())
}

pub fn run_oracle(sc: &Scenario) -> Result<Outputs> {
    let t = Instant::now();
    let h = spacing(sc)?;
    let spectra = all_config_spectra(sc)?;
    let bounds = rank_bounds(sc)?;
    let mut out = Outputs::default();
    for s in &spectra {
        let sum = s
            .normalized(OutputNormalization::Sum)
            .expect("always defined");
        let max = s
            .normalized(OutputNormalization::Max)
            .expect("always defined");
        let mut table = Table::new([
            "rank",
            "harmonic",
            "strength",
            "sum_normalized",
            "max_normalized",
            "bound",
        ]);
        for i in 0..s.strengths.len() {
            table.push(vec![
                (i + 1).into(),
                s.harmonics.as_ref().map(|q| q[i]).into(),
                s.strengths[i].into(),
                sum[i].into(),
                max[i].into(),
                bounds.get(i).copied().into(),
            ]);
        }
        out.csv(format!("spectrum_{}.csv", s.name), &table)?;
    }

    let mut checks = Vec::new();
    for m in &sc.monotonicity {
        let cfg = sc
            .configurations
            .iter()
            .find(|c| c.name == m.configuration)
            .expect("validated");
        let (src, rcv) = discretize(cfg, h)?;
        let small_src = apply_filter(&src, &m.source_filter, format!("{}_source", m.name))?;
        let small_rcv = apply_filter(&rcv, &m.receiver_filter, format!("{}_receiver", m.name))?;
        let rep = verify_monotonicity(&small_src, &src, &small_rcv, &rcv, sc.k())
            .with_context(|| format!("monotonicity check `{}`", m.name))?;
        let mut table = Table::new(["rank", "sigma_smaller", "sigma_larger", "difference"]);
        for (i, d) in rep.differences.iter().enumerate() {
            table.push(vec![
                (i + 1).into(),
                rep.sigma_smaller[i].into(),
                rep.sigma_larger[i].into(),
                (*d).into(),
            ]);
        }
        out.csv(format!("monotonicity_{}.csv", m.name), &table)?;
        checks.push(json!({
            "name": m.name,
            "smaller_points": [small_src.len(), small_rcv.len()],
            "larger_points": [src.len(), rcv.len()],
            "epsilon": rep.epsilon,
            "worst_difference": rep.worst(),
            "passed": rep.passed,
        }));
    }

    let mut extra = json!({ "spacing": h, "configurations": spectra, "monotonicity": checks });
    if sc.piestun {
        let rep = piestun_counterexample(sc.k(), h)?;
        extra["piestun"] = json!({ "n_bound": rep.n_bound, "n_shell_shell": rep.n_shell_shell });
        out.json("piestun.json", &rep)?;
    }
    out.json("metadata.json", &metadata(sc, "oracle", t, extra))?;
    Ok(out)
}
