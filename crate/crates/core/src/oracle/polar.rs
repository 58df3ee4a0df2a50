//! Block-circulant route for concentric polar grids in 2D.
//!
//! When both domains are rings of the same M equally spaced angles about a
//! common center, the kernel between angle indices m and m' depends only on
//! m - m' (mod M). A DFT over the angle splits the operator into M blocks of
//! size (receiver rings) x (source rings). Block p holds the angular
//! harmonic p, so its singular values carry the channel index
//! q = min(p, M - p).

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

use super::domain::{DiscretizedDomain, PolarLayout};
use super::kernel::scalar_green_2d;
use super::matrix::ComplexMatrix;
use super::svd::singular_values_of;

/// A singular value with the angular harmonic it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicValue {
    pub q: usize,
    pub sigma: f64,
}

fn layouts<'a>(
    src: &'a DiscretizedDomain,
    rcv: &'a DiscretizedDomain,
) -> Option<(&'a PolarLayout, &'a PolarLayout)> {
    let (s, r) = (src.polar.as_ref()?, rcv.polar.as_ref()?);
    (src.dimension == 2
        && rcv.dimension == 2
        && s.angular_count == r.angular_count
        && s.center == r.center)
        .then_some((s, r))
}

/// Whether two domains admit the block-circulant route.
pub fn circulant_compatible(src: &DiscretizedDomain, rcv: &DiscretizedDomain) -> bool {
    layouts(src, rcv).is_some()
}

/// Singular values of the 2D Green's operator between two concentric polar
/// grids, in non-increasing order.
pub fn polar_singular_values(
    src: &DiscretizedDomain,
    rcv: &DiscretizedDomain,
    k: f64,
) -> Result<Vec<HarmonicValue>> {
    let (sl, rl) = layouts(src, rcv).ok_or_else(|| {
        Error::Domain("domains are not concentric polar grids with a shared angle count".into())
    })?;
    let m = sl.angular_count;
    let (ns, nr) = (sl.radii.len(), rl.radii.len());
    let fft = FftPlanner::<f64>::new().plan_fft_forward(m);

    // c[i * ns + j][d]: receiver ring i at angle index d, source ring j at 0
    let sequences: Vec<Vec<Complex64>> = (0..nr * ns)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / ns, ij % ns);
            let sp = &src.points[j * m];
            let sw = src.weights[j * m];
            let mut seq = Vec::with_capacity(m);
            for d in 0..m {
                let r = i * m + d;
                let g = scalar_green_2d(k, sp, &rcv.points[r]).map_err(|_| Error::Overlap {
                    receiver_index: r,
                    source_index: j * m,
                })?;
                seq.push(g * (sw * rcv.weights[r]).sqrt());
            }
            fft.process(&mut seq);
            Ok(seq)
        })
        .collect::<Result<_>>()?;

    let mut out: Vec<HarmonicValue> = (0..m)
        .into_par_iter()
        .map(|p| {
            let block = ComplexMatrix::from_fn(nr, ns, |i, j| sequences[i * ns + j][p]);
            let q = p.min(m - p);
            Ok(singular_values_of(&block)?
                .into_iter()
                .map(|sigma| HarmonicValue { q, sigma })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|a, b| b.sigma.total_cmp(&a.sigma));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::domain::{make_polar, Shape};
    use crate::oracle::matrix::assemble;

    #[test]
    fn matches_dense_svd() {
        let k = 2.0 * std::f64::consts::PI;
        let m = 24;
        let src = make_polar(
            &Shape::Disk2d {
                center: [0.0; 2],
                radius: 0.5,
            },
            0.1,
            m,
        )
        .unwrap();
        let rcv = make_polar(
            &Shape::Annulus2d {
                center: [0.0; 2],
                inner: 1.2,
                outer: 1.5,
            },
            0.1,
            m,
        )
        .unwrap();
        let fast = polar_singular_values(&src, &rcv, k).unwrap();
        let dense = singular_values_of(&assemble(&src, &rcv, k).unwrap().matrix).unwrap();
        assert_eq!(fast.len(), dense.len());
        for (a, b) in fast.iter().zip(&dense) {
            assert!((a.sigma - b).abs() < 1e-10 * dense[0], "{} vs {b}", a.sigma);
        }
        // harmonics +q and -q carry equal values
        for h in fast
            .iter()
            .filter(|h| h.q >= 1 && h.q < m / 2 && h.sigma > 1e-6 * dense[0])
        {
            let twins = fast
                .iter()
                .filter(|o| o.q == h.q && (o.sigma - h.sigma).abs() <= 1e-12 * dense[0])
                .count();
            assert_eq!(twins, 2, "q = {}", h.q);
        }
    }

    #[test]
    fn rejects_mismatched_grids() {
        let a = make_polar(
            &Shape::Disk2d {
                center: [0.0; 2],
                radius: 0.5,
            },
            0.1,
            24,
        )
        .unwrap();
        let b = make_polar(
            &Shape::Annulus2d {
                center: [0.0; 2],
                inner: 1.0,
                outer: 1.2,
            },
            0.1,
            30,
        )
        .unwrap();
        assert!(polar_singular_values(&a, &b, 1.0).is_err());
        assert!(!circulant_compatible(&a, &b.translated([0.1, 0.0, 0.0])));
    }
}
