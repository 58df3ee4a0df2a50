//! The acceptance suite run by `wavechan verify` and by the `acceptance`
//! test target. Each criterion reports what it expected, what it measured
//! and whether it passed; a criterion that errors counts as failed.

use std::f64::consts::PI;
use std::fmt;
use std::time::Instant;

use anyhow::{anyhow, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wavechan_core::bounds2d::{
    bound_spectrum_2d, cylinder_shell_strength, default_q_max, quadrature_strength_2d,
    BoundingGeometry2D,
};
use wavechan_core::bounds3d::{
    bound_spectrum_3d, channel_index, default_n_max, max_channel_strength, quadrature_strength_3d,
    sphere_shell_strength, strength_spectrum_3d, BoundingGeometry3D, Enumeration,
};
use wavechan_core::geometry::Core;
use wavechan_core::metrics::{capacity, count_channels, count_indices, waterfill};
use wavechan_core::oracle::{
    assemble, make_geometry, piestun_counterexample, relative_spectrum, verify_monotonicity,
    DiscretizedDomain, Shape,
};
use wavechan_core::special::{bessel_j, bessel_y, spherical_j, spherical_y};

use crate::commands::{capacity_rows, config_spectrum, count_rows, saturation};
use crate::fit::{line_fit, log_log_fit};
use crate::scenario::{Configuration, Grid, OutputNormalization, Scenario};

const K: f64 = 2.0 * PI;

pub const FIG3: &str = include_str!("../../../scenarios/fig3.json");
pub const FIG4: &str = include_str!("../../../scenarios/fig4.json");
pub const SMFIG2: &str = include_str!("../../../scenarios/smfig2.json");

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub tolerance: String,
    pub passed: bool,
    pub runtime_s: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<34} {}  expected {} ({}), actual {}  [{:.1} s]",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.expected,
            self.tolerance,
            self.actual,
            self.runtime_s
        )
    }
}

struct Measured {
    expected: String,
    actual: String,
    tolerance: String,
    passed: bool,
}

fn measured(
    expected: impl Into<String>,
    actual: impl Into<String>,
    tolerance: impl Into<String>,
    passed: bool,
) -> Measured {
    Measured {
        expected: expected.into(),
        actual: actual.into(),
        tolerance: tolerance.into(),
        passed,
    }
}

pub const NAMES: [&str; 12] = [
    "special-function identities",
    "closed form vs quadrature",
    "2D channel count",
    "3D channel count",
    "counterexample ratio sums",
    "monotonicity suite",
    "2D bound domination and slope",
    "3D sub-exponential tail",
    "channel-count scaling",
    "capacity regimes",
    "water-filling optimality",
    "max-strength asymptote",
];

pub fn run(id: u8) -> Outcome {
    let t = Instant::now();
    let result = match id {
        1 => special_identities(),
        2 => closed_form_vs_quadrature(),
        3 => count_2d(),
        4 => count_3d(),
        5 => counterexample(),
        6 => monotonicity_suite(),
        7 => domination_2d(),
        8 => tail_3d(),
        9 => count_scaling(),
        10 => capacity_regimes(),
        11 => waterfilling(),
        12 => max_strength(),
        _ => Err(anyhow!("no criterion {id}")),
    };
    let name = NAMES.get(id as usize - 1).copied().unwrap_or("unknown");
    let m = result.unwrap_or_else(|e| measured("-", format!("error: {e:#}"), "-", false));
    Outcome {
        id,
        name,
        expected: m.expected,
        actual: m.actual,
        tolerance: m.tolerance,
        passed: m.passed,
        runtime_s: t.elapsed().as_secs_f64(),
    }
}

pub fn run_all(ids: &[u8], mut each: impl FnMut(&Outcome)) -> Vec<Outcome> {
    ids.iter()
        .map(|&id| {
            let o = run(id);
            each(&o);
            o
        })
        .collect()
}

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn special_identities() -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for n in 0..=20 {
        let nf = n as f64;
        let w = bessel_j(nf + 1.0, 1.0)? * bessel_y(nf, 1.0)?
            - bessel_j(nf, 1.0)? * bessel_y(nf + 1.0, 1.0)?;
        worst = worst.max(rel(w, 2.0 / PI));
    }
    let residual = |lower: f64, upper: f64, mid: f64| {
        (lower + upper - mid).abs() / lower.abs().max(upper.abs()).max(mid.abs())
    };
    for x in [0.1, 1.0, 10.0, 100.0] {
        for n in 0..=50i32 {
            let nf = n as f64;
            let j = spherical_j(n, x)?;
            let y = spherical_y(n, x)?;
            let jd = nf / x * j - spherical_j(n + 1, x)?;
            let yd = nf / x * y - spherical_y(n + 1, x)?;
            worst = worst.max(rel(j * yd - jd * y, 1.0 / (x * x)));
            if n == 0 {
                continue;
            }
            let cyl = |f: &dyn Fn(f64) -> wavechan_core::Result<f64>| -> Result<f64> {
                Ok(residual(f(nf - 1.0)?, f(nf + 1.0)?, 2.0 * nf / x * f(nf)?))
            };
            worst = worst.max(cyl(&|v| bessel_j(v, x))?);
            worst = worst.max(cyl(&|v| bessel_y(v, x))?);
            let sph = |f: &dyn Fn(i32) -> wavechan_core::Result<f64>| -> Result<f64> {
                Ok(residual(f(n - 1)?, f(n + 1)?, (2.0 * nf + 1.0) / x * f(n)?))
            };
            worst = worst.max(sph(&|m| spherical_j(m, x))?);
            worst = worst.max(sph(&|m| spherical_y(m, x))?);
        }
    }
    Ok(measured(
        "Wronskians and recurrences hold",
        format!("worst relative residual {worst:.2e}"),
        "1e-9",
        worst <= 1e-9,
    ))
}

fn fig2b() -> Result<BoundingGeometry2D> {
    Ok(BoundingGeometry2D::new(K, 0.5, 0.5, 1.0, 0.5, 0.5)?)
}

fn fig2c() -> Result<BoundingGeometry3D> {
    let v = 1.0 / (3.0 * 3f64.sqrt());
    Ok(BoundingGeometry3D::new(K, 0.5, 0.5, 1.0, v, v)?)
}

fn closed_form_vs_quadrature() -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut g2 = vec![fig2b()?];
    let mut g3 = vec![fig2c()?];
    for _ in 0..2 {
        let (rs, rr, d) = (
            rng.gen_range(0.2..1.0),
            rng.gen_range(0.2..1.0),
            rng.gen_range(0.1..2.0),
        );
        g2.push(BoundingGeometry2D::new(K, rs, rr, d, 0.1, 0.1)?);
        g3.push(BoundingGeometry3D::new(K, rs, rr, d, 0.1, 0.1)?);
    }
    for g in &g2 {
        for q in [0, 1, 5, 20] {
            worst = worst.max(rel(
                cylinder_shell_strength(q, g)?,
                quadrature_strength_2d(q, g)?,
            ));
        }
    }
    for g in &g3 {
        for (n, j) in [(0, 2), (1, 1), (1, 2), (5, 1), (5, 2), (20, 1), (20, 2)] {
            worst = worst.max(rel(
                sphere_shell_strength(n, j, g)?,
                quadrature_strength_3d(n, j, g)?,
            ));
        }
    }
    Ok(measured(
        "closed forms equal quadrature",
        format!("worst relative gap {worst:.2e}"),
        "1e-9",
        worst <= 1e-9,
    ))
}

fn count_2d() -> Result<Measured> {
    let g = fig2b()?;
    let spec = bound_spectrum_2d(&g, default_q_max(&g))?;
    let idx = count_indices(&spec, 1e-4)?;
    let all = count_channels(&spec, 1e-4)?;
    Ok(measured(
        "8",
        format!("{idx} indices |q| ({all} with +-q)"),
        "exact",
        idx == 8,
    ))
}

fn count_3d() -> Result<Measured> {
    let g = fig2c()?;
    let with = count_channels(&bound_spectrum_3d(&g, default_n_max(&g))?, 1e-4)?;
    let without = count_channels(
        &wavechan_core::bounds3d::bound_spectrum_3d_with(
            &g,
            default_n_max(&g),
            Enumeration::transverse_only(),
        )?,
        1e-4,
    )?;
    Ok(measured(
        "145",
        format!("{with} ({without} without the (0, 2) channel)"),
        "+-10",
        (135..=155).contains(&with),
    ))
}

fn counterexample() -> Result<Measured> {
    let coarse = piestun_counterexample(K, 1.0 / 40.0)?;
    let fine = piestun_counterexample(K, 1.0 / 80.0)?;
    let change = (fine.n_shell_shell - coarse.n_shell_shell).abs();
    let ok = (coarse.n_bound - 10.7).abs() <= 0.2
        && (coarse.n_shell_shell - 16.4).abs() <= 0.5
        && change < 0.3;
    Ok(measured(
        "N_bound 10.7, N_shell-shell 16.4",
        format!(
            "N_bound {:.4}, N_shell-shell {:.4} (lambda/40), {:.4} (lambda/80), change {:.2e}",
            coarse.n_bound, coarse.n_shell_shell, fine.n_shell_shell, change
        ),
        "+-0.2, +-0.5, change < 0.3",
        ok,
    ))
}

fn random_shape(rng: &mut ChaCha8Rng, center: [f64; 2]) -> Shape {
    match rng.gen_range(0..3) {
        0 => Shape::Disk2d {
            center,
            radius: rng.gen_range(0.3..0.6),
        },
        1 => {
            let inner = rng.gen_range(0.1..0.3);
            Shape::Annulus2d {
                center,
                inner,
                outer: inner + rng.gen_range(0.2..0.4),
            }
        }
        _ => Shape::Square2d {
            center,
            side: rng.gen_range(0.4..0.9),
        },
    }
}

/// A random non-empty subset: an angular sector about `c` or a half-plane.
fn random_subset(
    rng: &mut ChaCha8Rng,
    d: &DiscretizedDomain,
    c: [f64; 2],
) -> Result<DiscretizedDomain> {
    loop {
        let sub = if rng.gen_bool(0.5) {
            let from = rng.gen_range(0.0..2.0 * PI);
            let width = rng.gen_range(0.5..5.0);
            let shifted = d
                .translated([-c[0], -c[1], 0.0])
                .sector([0.0; 2], from, from + width);
            sub_or_empty(shifted.map(|s| s.translated([c[0], c[1], 0.0])))
        } else {
            let a = rng.gen_range(0.0..2.0 * PI);
            let off = rng.gen_range(-0.2..0.2);
            let (nx, ny) = (a.cos(), a.sin());
            sub_or_empty(d.retain("half-plane", |p| {
                (p[0] - c[0]) * nx + (p[1] - c[1]) * ny >= off
            }))
        };
        if let Some(s) = sub {
            return Ok(s);
        }
    }
}

fn sub_or_empty(r: wavechan_core::Result<DiscretizedDomain>) -> Option<DiscretizedDomain> {
    r.ok().filter(|s| !s.is_empty())
}

fn monotonicity_suite() -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let h = 0.1;
    let mut worst = f64::INFINITY;
    let mut failed = 0;
    for _ in 0..50 {
        let dist = rng.gen_range(1.8..3.0);
        let a = rng.gen_range(0.0..2.0 * PI);
        let rc = [dist * a.cos(), dist * a.sin()];
        let src = make_geometry(&random_shape(&mut rng, [0.0; 2]), h)?;
        let rcv = make_geometry(&random_shape(&mut rng, rc), h)?;
        let small_src = random_subset(&mut rng, &src, [0.0; 2])?;
        // shrink the receiver in half the instances
        let small_rcv = if rng.gen_bool(0.5) {
            random_subset(&mut rng, &rcv, rc)?
        } else {
            rcv.clone()
        };
        let rep = verify_monotonicity(&small_src, &src, &small_rcv, &rcv, K)?;
        let sigma1 = rep.sigma_larger[0];
        worst = worst.min(rep.worst() / sigma1);
        failed += !rep.passed as usize;
    }
    Ok(measured(
        "sigma_larger - sigma_smaller >= 0 on 50 nested pairs",
        format!("{failed} failing pairs, worst difference {worst:.2e} sigma_1"),
        ">= -1e-10 sigma_1",
        failed == 0,
    ))
}

/// Ranks where the bound sits well above round-off of the numerical values.
fn dominated(numeric: &[f64], bound: &[f64]) -> usize {
    numeric
        .iter()
        .zip(bound)
        .filter(|(n, b)| **b >= 1e-20 && **n > **b * (1.0 + 1e-9))
        .count()
}

fn domination_2d() -> Result<Measured> {
    let g = fig2b()?;
    let bound = bound_spectrum_2d(&g, default_q_max(&g))?.expanded();
    let side = 1.0 / 2f64.sqrt();
    let square = Configuration {
        name: "square_square".into(),
        source: Shape::Square2d {
            center: [0.0, 0.0],
            side,
        },
        receiver: Shape::Square2d {
            center: [2.0, 0.0],
            side,
        },
        grid: Grid::Cartesian,
    };
    let shell = Configuration {
        name: "shell_shell".into(),
        source: Shape::Annulus2d {
            center: [0.0; 2],
            inner: 0.30141,
            outer: 0.5,
        },
        receiver: Shape::Annulus2d {
            center: [0.0; 2],
            inner: 1.5,
            outer: 1.55215,
        },
        grid: Grid::Polar,
    };
    let sq = config_spectrum(&square, K, 1.0 / 40.0)?;
    let sh = config_spectrum(&shell, K, 1.0 / 40.0)?;
    let sq_rel = sq
        .normalized(OutputNormalization::Sum)
        .expect("sum normalization");
    let sh_rel = sh
        .normalized(OutputNormalization::Sum)
        .expect("sum normalization");
    let above = dominated(&sq_rel, &bound) + dominated(&sh_rel, &bound);

    let target = 2.0 * (1.0 + g.separation / g.r_source.min(g.r_receiver)).ln();
    let ranks: Vec<f64> = (5..=15).map(|r| r as f64).collect();
    let logs: Vec<f64> = (5..=15).map(|r| sh_rel[r - 1].ln()).collect();
    let per_rank = -line_fit(&ranks, &logs)
        .ok_or_else(|| anyhow!("rank fit"))?
        .slope;
    // same fit on the leading value of each harmonic q = 5..15
    let harmonics = sh
        .harmonics
        .as_ref()
        .ok_or_else(|| anyhow!("shell-shell needs the polar route"))?;
    let mut lead = [0.0f64; 16];
    for (q, s) in harmonics.iter().zip(&sh_rel) {
        if *q <= 15 {
            lead[*q] = lead[*q].max(*s);
        }
    }
    let per_q = -line_fit(&ranks, &(5..=15).map(|q| lead[q].ln()).collect::<Vec<_>>())
        .ok_or_else(|| anyhow!("harmonic fit"))?
        .slope;
    let ok = above == 0 && rel(per_rank, target) <= 0.15;
    Ok(measured(
        format!("no rank above the bound; decay rate {target:.4} per rank"),
        format!(
            "{above} ranks above ({} square, {} shell points); rate {per_rank:.4} per rank, {per_q:.4} per harmonic",
            sq.source_points, sh.source_points
        ),
        "15% on the rate",
        ok,
    ))
}

fn tail_3d() -> Result<Measured> {
    let g = fig2c()?;
    let mut n_max = default_n_max(&g);
    while channel_index(n_max) < 2000 {
        n_max += 1;
    }
    let staircase = bound_spectrum_3d(&g, n_max)?.expanded();
    let (x, y): (Vec<f64>, Vec<f64>) = (200..=2000)
        .map(|q: usize| ((q as f64).sqrt(), staircase[q - 1].ln()))
        .unzip();
    let fit = line_fit(&x, &y).ok_or_else(|| anyhow!("tail fit"))?;
    let target = -(2f64).sqrt() * (1.0 + g.separation / g.r_source.min(g.r_receiver)).ln();

    // coarse oracle: cubes of side lambda / sqrt(3) inscribed in the bounding balls
    let side = 1.0 / 3f64.sqrt();
    let a = make_geometry(
        &Shape::Cube3d {
            center: [0.0; 3],
            side,
        },
        1.0 / 6.0,
    )?;
    let b = a.translated([2.0, 0.0, 0.0]);
    let rel_spec = relative_spectrum(&assemble(&a, &b, K)?)?.sum.expanded();
    let top3_ok = dominated(&rel_spec[..3], &staircase[..3]) == 0;
    let ok = fit.r2 > 0.999 && rel(fit.slope, target) <= 0.02 && top3_ok;
    Ok(measured(
        format!("R^2 > 0.999, slope {target:.4}, oracle top-3 below bound"),
        format!(
            "R^2 {:.6}, slope {:.4} ({:+.1}%), top-3 {:.3e} {:.3e} {:.3e} vs bound {:.3e} {:.3e} {:.3e}",
            fit.r2,
            fit.slope,
            100.0 * (fit.slope / target - 1.0),
            rel_spec[0],
            rel_spec[1],
            rel_spec[2],
            staircase[0],
            staircase[1],
            staircase[2]
        ),
        "2% on the slope",
        ok,
    ))
}

fn count_scaling() -> Result<Measured> {
    let sc = Scenario::parse(FIG3)?;
    let rows = count_rows(&sc)?;
    let sel: Vec<_> = rows.iter().filter(|r| r.threshold == 1e-3).collect();
    let x: Vec<f64> = sel.iter().map(|r| r.r).collect();
    let y: Vec<f64> = sel.iter().map(|r| r.bound_count as f64).collect();
    let fit = log_log_fit(&x, &y).ok_or_else(|| anyhow!("count fit"))?;
    let ratios: Vec<f64> = sel.iter().map(|r| r.bound_count as f64 / r.n_sh).collect();
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(l, h), v| (l.min(*v), h.max(*v)));
    let ok = (fit.slope - 2.0).abs() <= 0.1 && lo >= 0.7 && hi <= 1.3;
    Ok(measured(
        "exponent 2.0, count / N_SH in [0.7, 1.3] at 0.1%",
        format!(
            "exponent {:.3}, count / N_SH from {lo:.3} to {hi:.3} (counts {:?})",
            fit.slope, y
        ),
        "+-0.1",
        ok,
    ))
}

fn capacity_regimes() -> Result<Measured> {
    let sc = Scenario::parse(FIG4)?;
    let rows = capacity_rows(&sc)?;
    let radii = sc
        .sweep
        .as_ref()
        .map(|s| s.radii.clone())
        .unwrap_or_default();
    let hi = sc.snr_list.iter().copied().fold(0.0, f64::max);
    let lo = sc.snr_list.iter().copied().fold(f64::INFINITY, f64::min);
    let curve = |snr: f64, n: Option<usize>, asym: bool| -> Vec<f64> {
        rows.iter()
            .filter(|r| r.snr == snr && r.n_antenna == n)
            .map(|r| if asym { r.asymptote } else { r.exact })
            .collect()
    };
    // slopes over R in [lambda, 10 lambda], past the small-domain onset
    let window: Vec<usize> = (0..radii.len())
        .filter(|&i| radii[i] >= sc.wavelength)
        .collect();
    let slope = |v: &[f64]| -> Result<f64> {
        let x: Vec<f64> = window.iter().map(|&i| radii[i]).collect();
        let y: Vec<f64> = window.iter().map(|&i| v[i]).collect();
        Ok(log_log_fit(&x, &y)
            .ok_or_else(|| anyhow!("slope fit"))?
            .slope)
    };
    let all = curve(hi, None, false);
    let s_hi = slope(&all)?;
    let s_lo_asym = slope(&curve(lo, None, true))?;
    let s_lo_exact = slope(&curve(lo, None, false))?;
    let mut ok = (s_hi - 2.0).abs() <= 0.1
        && (s_lo_asym - 1.0).abs() <= 0.1
        && (s_lo_exact - 1.0).abs() <= 0.1;
    let mut knees = Vec::new();
    for &n in &sc.n_antenna_list {
        let s = saturation(sc.k(), n, hi, &radii, &all, &curve(hi, Some(n), false));
        let r2 = s.tail.map_or(0.0, |f| f.r2);
        let good = r2 > 0.99 && s.measured.is_some_and(|m| rel(m, s.predicted) <= 0.2);
        ok &= good;
        knees.push(format!(
            "N={n}: R^2 {r2:.4}, knee {} vs {:.3}",
            s.measured.map_or("none".into(), |m| format!("{m:.3}")),
            s.predicted
        ));
    }
    Ok(measured(
        "slopes 2.0 (SNR high) and 1.0 (SNR low); tails linear in ln R, knee at 2k^2R^2 = N",
        format!(
            "slope {s_hi:.3} at SNR {hi:e}; low-SNR asymptote {s_lo_asym:.3}, exact {s_lo_exact:.3} at SNR {lo:e}; {}",
            knees.join("; ")
        ),
        "+-0.1 on slopes, R^2 > 0.99, knee 20%",
        ok,
    ))
}

fn waterfilling() -> Result<Measured> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut beaten = 0usize;
    let mut worst_power: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=20);
        let s: Vec<f64> = (0..n)
            .map(|_| 10f64.powf(rng.gen_range(-3.0..2.0)))
            .collect();
        let p = 10f64.powf(rng.gen_range(-2.0..3.0));
        let rep = waterfill(&s, p, 1.0)?;
        worst_power = worst_power.max(rel(rep.allocations.iter().sum(), p));
        for _ in 0..1000 {
            let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            let total: f64 = w.iter().sum();
            let alloc: Vec<f64> = w.iter().map(|v| v / total * p).collect();
            if capacity(&s, &alloc, 1.0)? > rep.total_bits * (1.0 + 1e-12) {
                beaten += 1;
            }
        }
    }
    Ok(measured(
        "no random allocation beats water-filling; power conserved",
        format!("{beaten} of 200000 beat it; worst power error {worst_power:.2e}"),
        "1e-12",
        beaten == 0 && worst_power <= 1e-12,
    ))
}

fn max_strength() -> Result<Measured> {
    let sc = Scenario::parse(SMFIG2)?;
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    let radii = sc
        .sweep
        .as_ref()
        .map(|s| s.radii.clone())
        .unwrap_or_default();
    for r in radii.into_iter().filter(|r| *r >= 3.0 * sc.wavelength) {
        let g = sc.geometry_3d(Some(r))?;
        debug_assert_eq!(g.core, Core::Source);
        let top = strength_spectrum_3d(&g, default_n_max(&g), Enumeration::default())?.entries()[0]
            .strength;
        let e = rel(top, max_channel_strength(&g));
        worst = worst.max(e);
        parts.push(format!("{r}:{:.2}%", 100.0 * e));
    }
    Ok(measured(
        "max strength = k^2 R_r R for R >= 3 lambda",
        format!("worst gap {:.2}% ({})", 100.0 * worst, parts.join(" ")),
        "5%",
        worst <= 0.05,
    ))
}
