use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::hankel1_0;

fn distance(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// (i k^2 / 4) H_0^(1)(k |r - r'|), using the x and y coordinates.
pub fn scalar_green_2d(k: f64, src: &[f64; 3], rcv: &[f64; 3]) -> Result<Complex64> {
    let r = (rcv[0] - src[0]).hypot(rcv[1] - src[1]);
    if r == 0.0 {
        return Err(Error::Singularity);
    }
    Ok(Complex64::new(0.0, k * k / 4.0) * hankel1_0(k * r))
}

/// (k^2 I + grad grad) e^{ikr} / (4 pi r) for r = |r - r'|, written as
/// k^2 e^{ikr} / (4 pi r) [A I + B rhat rhat] with
/// A = 1 + i/x - 1/x^2 and B = -1 - 3i/x + 3/x^2 at x = kr.
pub fn dyadic_green_3d(k: f64, src: &[f64; 3], rcv: &[f64; 3]) -> Result<[[Complex64; 3]; 3]> {
    let r = distance(src, rcv);
    if r == 0.0 {
        return Err(Error::Singularity);
    }
    let x = k * r;
    let ix = 1.0 / x;
    let a = Complex64::new(1.0 - ix * ix, ix);
    let b = Complex64::new(-1.0 + 3.0 * ix * ix, -3.0 * ix);
    let pre = Complex64::from_polar(k * k / (4.0 * PI * r), x);
    let u = [
        (rcv[0] - src[0]) / r,
        (rcv[1] - src[1]) / r,
        (rcv[2] - src[2]) / r,
    ];
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let diag = if i == j { a } else { Complex64::new(0.0, 0.0) };
            g[i][j] = pre * (diag + b * (u[i] * u[j]));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds3d::frobenius_green_norm_sq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// H_0^(1) from the ascending series of J_0 and Y_0.
    fn hankel0_series(x: f64) -> Complex64 {
        let euler = 0.577_215_664_901_532_9;
        let q = -(x * x) / 4.0;
        let (mut term, mut harmonic) = (1.0, 0.0);
        let (mut j0, mut tail) = (1.0, 0.0);
        for m in 1..80 {
            let mf = m as f64;
            term *= q / (mf * mf);
            harmonic += 1.0 / mf;
            j0 += term;
            tail -= harmonic * term;
        }
        let y0 = 2.0 / PI * (((x / 2.0).ln() + euler) * j0 + tail);
        Complex64::new(j0, y0)
    }

    #[test]
    fn scalar_kernel_matches_series() {
        let k = 2.5;
        let src = [0.0, 0.0, 0.0];
        let rcv = [1.2, 1.6, 0.0];
        let got = scalar_green_2d(k, &src, &rcv).unwrap();
        let want = Complex64::new(0.0, k * k / 4.0) * hankel0_series(5.0);
        assert!((got - want).norm() < 1e-10 * want.norm());
        assert_eq!(got, scalar_green_2d(k, &rcv, &src).unwrap());
        assert!(matches!(
            scalar_green_2d(k, &src, &src),
            Err(Error::Singularity)
        ));
    }

    #[test]
    fn scalar_kernel_decays() {
        let k = 2.0 * PI;
        let mut last = f64::INFINITY;
        for i in 1..200 {
            let r = 0.05 * i as f64;
            let g = scalar_green_2d(k, &[0.0; 3], &[r, 0.0, 0.0])
                .unwrap()
                .norm();
            assert!(g < last);
            last = g;
        }
    }

    #[test]
    fn dyadic_frobenius_and_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = 2.0 * PI;
        for _ in 0..20 {
            let a: [f64; 3] = [
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ];
            let b: [f64; 3] = [
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ];
            let g = dyadic_green_3d(k, &a, &b).unwrap();
            let f: f64 = g.iter().flatten().map(|z| z.norm_sqr()).sum();
            let want = frobenius_green_norm_sq(k, distance(&a, &b)).unwrap();
            assert!(((f - want) / want).abs() < 1e-10);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((g[i][j] - g[j][i]).norm() <= 1e-15 * g[i][i].norm().max(1.0));
                }
            }
        }
        assert!(dyadic_green_3d(k, &[1.0; 3], &[1.0; 3]).is_err());
    }

    #[test]
    fn far_field_is_transverse() {
        // along z at kr = 1e3: zz is the longitudinal part, xx transverse
        let k = 1.0;
        let g = dyadic_green_3d(k, &[0.0; 3], &[0.0, 0.0, 1e3]).unwrap();
        assert!(g[2][2].norm_sqr() <= 1e-5 * g[0][0].norm_sqr());
        assert!(g[0][1].norm() == 0.0);
    }
}
