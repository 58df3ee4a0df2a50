//! Singular values by one-sided (Hestenes) Jacobi rotations.
//!
//! Rotating column pairs until they are mutually orthogonal is cyclic Jacobi
//! on G^H G carried out without forming the product, so small singular
//! values keep their relative accuracy.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::matrix::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    /// A pair is left alone once |a_p^H a_q| <= tol |a_p| |a_q|.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            tol: 1e-14,
            max_sweeps: 60,
        }
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let (mut re, mut im) = (0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        re += x.re * y.re + x.im * y.im;
        im += x.re * y.im - x.im * y.re;
    }
    Complex64::new(re, im)
}

fn norm_sq(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

/// Singular values in non-increasing order.
pub fn singular_values_of(m: &ComplexMatrix) -> Result<Vec<f64>> {
    singular_values_with(m, JacobiOptions::default())
}

pub fn singular_values_with(m: &ComplexMatrix, opts: JacobiOptions) -> Result<Vec<f64>> {
    if !m.is_finite() {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    let work = if m.cols() > m.rows() {
        m.conj_transpose()
    } else {
        m.clone()
    };
    let (rows, cols) = (work.rows(), work.cols());
    if rows == 0 || cols == 0 {
        return Ok(Vec::new());
    }
    let mut data = work.into_data();
    let tol = opts.tol.max(rows as f64 * f64::EPSILON);

    let mut norms: Vec<f64> = data.chunks(rows).map(norm_sq).collect();
    let mut residual = 0.0f64;
    for sweep in 0..opts.max_sweeps {
        residual = 0.0;
        let mut rotated = false;
        for p in 0..cols - 1 {
            for q in p + 1..cols {
                let (alpha, beta) = (norms[p], norms[q]);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let (left, right) = data.split_at_mut(q * rows);
                let ap = &mut left[p * rows..(p + 1) * rows];
                let aq = &mut right[..rows];
                let gamma = dot(ap, aq);
                let g = gamma.norm();
                let scale = (alpha * beta).sqrt();
                residual = residual.max(g / scale);
                if g <= tol * scale {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let phase = gamma.conj() / g;
                for (x, y) in ap.iter_mut().zip(aq.iter_mut()) {
                    let yq = *y * phase;
                    let xp = *x;
                    *x = xp * c - yq * s;
                    *y = xp * s + yq * c;
                }
                norms[p] = alpha - t * g;
                norms[q] = beta + t * g;
            }
        }
        // refresh tracked norms against drift
        for (n, col) in norms.iter_mut().zip(data.chunks(rows)) {
            *n = norm_sq(col);
        }
        if !rotated {
            log::debug!(
                "jacobi converged after {} sweeps ({rows}x{cols})",
                sweep + 1
            );
            let mut sigma: Vec<f64> = norms.iter().map(|n| n.sqrt()).collect();
            sigma.sort_by(|a, b| b.total_cmp(a));
            return Ok(sigma);
        }
    }
    Err(Error::NonConvergence {
        sweeps: opts.max_sweeps,
        residual,
    })
}
