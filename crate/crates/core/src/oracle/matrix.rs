use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::domain::DiscretizedDomain;
use super::kernel::{dyadic_green_3d, scalar_green_2d};

/// Dense complex matrix stored column by column.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// From column-major data.
    pub fn from_columns(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Domain(format!(
                "{} values for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = ComplexMatrix::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.data[j * rows + i] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[j * self.rows + i]
    }

    pub fn column(&self, j: usize) -> &[Complex64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub(crate) fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    pub fn conj_transpose(&self) -> Self {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain("matrix dimensions do not agree".into()));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            for l in 0..self.cols {
                let b = other.get(l, j);
                let a = self.column(l);
                let dst = &mut out.data[j * self.rows..(j + 1) * self.rows];
                for (d, x) in dst.iter_mut().zip(a) {
                    *d += x * b;
                }
            }
        }
        Ok(out)
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Nystrom discretization of the Green's operator from a source domain to a
/// receiver domain.
#[derive(Debug, Clone)]
pub struct GreenMatrix {
    pub matrix: ComplexMatrix,
    pub k: f64,
    pub dimension: usize,
    pub source_label: String,
    pub receiver_label: String,
}

/// Entry (i, j) = G(r_i, r'_j) sqrt(w_i w'_j), receivers on rows. In 3D each
/// point pair fills a 3x3 block.
pub fn assemble(src: &DiscretizedDomain, rcv: &DiscretizedDomain, k: f64) -> Result<GreenMatrix> {
    if src.dimension != rcv.dimension {
        return Err(Error::Domain(format!(
            "source is {}D but receiver is {}D",
            src.dimension, rcv.dimension
        )));
    }
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::Domain(format!("k = {k}")));
    }
    let rows = rcv.matrix_dim();
    let cols = src.matrix_dim();
    let mut data = vec![Complex64::new(0.0, 0.0); rows * cols];
    let overlap = |i, j| Error::Overlap {
        receiver_index: i,
        source_index: j,
    };
    if src.dimension == 2 {
        data.par_chunks_mut(rows)
            .enumerate()
            .try_for_each(|(j, col)| {
                let (p, wp) = (&src.points[j], src.weights[j]);
                for (i, v) in col.iter_mut().enumerate() {
                    let g = scalar_green_2d(k, p, &rcv.points[i]).map_err(|_| overlap(i, j))?;
                    *v = g * (wp * rcv.weights[i]).sqrt();
                }
                Ok::<(), Error>(())
            })?;
    } else {
        data.par_chunks_mut(3 * rows)
            .enumerate()
            .try_for_each(|(j, cols3)| {
                let (p, wp) = (&src.points[j], src.weights[j]);
                for i in 0..rcv.len() {
                    let g = dyadic_green_3d(k, p, &rcv.points[i]).map_err(|_| overlap(i, j))?;
                    let s = (wp * rcv.weights[i]).sqrt();
                    for b in 0..3 {
                        for a in 0..3 {
                            cols3[b * rows + 3 * i + a] = g[a][b] * s;
                        }
                    }
                }
                Ok::<(), Error>(())
            })?;
    }
    Ok(GreenMatrix {
        matrix: ComplexMatrix::from_columns(rows, cols, data)?,
        k,
        dimension: src.dimension,
        source_label: src.label.clone(),
        receiver_label: rcv.label.clone(),
    })
}
