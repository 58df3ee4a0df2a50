//! Globally adaptive 7/15-point Gauss-Kronrod quadrature.
//!
//! Used to check the closed-form radial integrals against their integral
//! definitions. Intervals are kept in a max-heap keyed on the error estimate.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Piece {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut gauss = fc * WG[3];
    let mut kron = fc * WGK[7];
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = h * x;
        let pair = f(c - dx) + f(c + dx);
        kron += w * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    Piece {
        a,
        b,
        value: kron * h,
        error: ((kron - gauss) * h).abs(),
    }
}

/// Integrates f over [a, b] until the summed error estimate is below
/// max(abs_tol, rel_tol * |value|).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Quadrature> {
    const MAX_INTERVALS: usize = 20_000;
    let mut heap = BinaryHeap::new();
    let first = kronrod(&f, a, b);
    let mut value = first.value;
    let mut error = first.error;
    heap.push(first);
    while error > abs_tol.max(rel_tol * value.abs()) {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::NonConvergence {
                sweeps: heap.len(),
                residual: error,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if !value.is_finite() {
            return Err(Error::Domain("non-finite integrand".into()));
        }
    }
    // re-sum to shed accumulated rounding from the running updates
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    Ok(Quadrature {
        value,
        error,
        intervals: heap.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let q = integrate(|x| x.powi(7) - 3.0 * x * x, -1.0, 2.0, 1e-14, 0.0).unwrap();
        let want = (2f64.powi(8) - 1.0) / 8.0 - (8.0 + 1.0);
        assert!((q.value - want).abs() < 1e-12);
        assert_eq!(q.intervals, 1);
    }

    #[test]
    fn oscillatory_integrand() {
        let q = integrate(|x| (50.0 * x).sin().powi(2), 0.0, 3.0, 1e-12, 0.0).unwrap();
        let want = 1.5 - (300.0f64).sin() / 200.0;
        assert!(((q.value - want) / want).abs() < 1e-12);
    }

    #[test]
    fn endpoint_singularity_converges() {
        let q = integrate(|x: f64| x.sqrt().recip(), 0.0, 1.0, 1e-10, 0.0).unwrap();
        assert!((q.value - 2.0).abs() < 1e-8);
    }
}
