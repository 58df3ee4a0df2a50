//! Integer-order cylindrical Bessel functions of real positive argument.
//!
//! J_n comes from Miller's backward recurrence normalized with
//! J_0 + 2 sum J_2k = 1. For x < 25 the same backward sweep also yields the
//! Neumann sums for Y_0 and Y_1; above that the Hankel asymptotic expansion
//! is used. Y_n for n >= 2 follows by forward recurrence, which is stable for Y.

use std::f64::consts::PI;

use num_complex::Complex64;

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Above this argument Y_0, Y_1 come from the asymptotic expansion.
const ASYMPTOTIC_X: f64 = 25.0;

pub(crate) const RESCALE_AT: f64 = 1e150;
pub(crate) const RESCALE: f64 = 1e-150;

fn envj(n: f64, x: f64) -> f64 {
    0.5 * (std::f64::consts::TAU * n).log10() - n * (1.36 * x / n).log10()
}

fn secant_order(x: f64, mut n0: f64, obj: f64) -> f64 {
    let mut f0 = envj(n0, x) - obj;
    let mut n1 = n0 + 5.0;
    let mut f1 = envj(n1, x) - obj;
    let mut nn = n1;
    for _ in 0..30 {
        if f1 == f0 {
            break;
        }
        nn = (n1 - (n1 - n0) / (1.0 - f0 / f1)).round();
        let f = envj(nn, x) - obj;
        if (nn - n1).abs() < 1.0 {
            break;
        }
        n0 = n1;
        f0 = f1;
        n1 = nn;
        f1 = f;
    }
    nn
}

/// Order beyond which J_n(x) is below 10^-mp in magnitude.
pub(crate) fn start_all(x: f64, mp: f64) -> usize {
    let n0 = (1.1 * x).floor() + 1.0;
    secant_order(x, n0, mp).max(1.0) as usize
}

/// Starting order of the backward sweep so that every J_k, k <= n, carries
/// about mp significant digits.
pub(crate) fn start_for(x: f64, n: usize, mp: f64) -> usize {
    let nf = (n.max(1)) as f64;
    let hmp = 0.5 * mp;
    let ejn = envj(nf, x);
    let (obj, n0) = if ejn <= hmp {
        (mp, (1.1 * x).floor() + 1.0)
    } else {
        (hmp + ejn, nf)
    };
    let start = secant_order(x, n0, obj) + 10.0;
    (start.max(0.0) as usize).max(n + 2)
}

/// Values recorded during a backward sweep, with the number of rescalings
/// that had happened when each was stored.
struct Sweep {
    values: Vec<f64>,
    rescales_at: Vec<u32>,
    total_rescales: u32,
}

impl Sweep {
    /// Brings stored value k to the final scale, multiplied by `factor`
    /// first so that tiny results do not underflow prematurely.
    fn scaled(&self, k: usize, factor: f64) -> f64 {
        let mut v = self.values[k] * factor;
        for _ in self.rescales_at[k]..self.total_rescales {
            v *= RESCALE;
        }
        v
    }
}

pub(crate) struct MillerJ {
    pub j: Vec<f64>,
    /// Normalized sum_{k>=1} (-1)^k J_2k / k.
    pub neumann_even: f64,
    /// Normalized sum over odd K >= 3 of (-1)^(K/2) K/(K^2-1) J_K.
    pub neumann_odd: f64,
}

/// J_0..=J_nmax at x > 0 by backward recurrence.
pub(crate) fn miller_j(nmax: usize, x: f64) -> MillerJ {
    debug_assert!(x > 0.0);
    let start = start_for(x, nmax, 17.0).max(start_all(x, 40.0) + 2);
    let mut sweep = Sweep {
        values: vec![0.0; nmax + 1],
        rescales_at: vec![0; nmax + 1],
        total_rescales: 0,
    };
    let mut norm = 0.0;
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut fp1 = 0.0;
    let mut f = 1e-100;
    let mut k = start;
    loop {
        if k <= nmax {
            sweep.values[k] = f;
            sweep.rescales_at[k] = sweep.total_rescales;
        }
        if k % 2 == 0 {
            if k == 0 {
                norm += f;
            } else {
                norm += 2.0 * f;
                let half = (k / 2) as f64;
                let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                su += sign * f / half;
            }
        } else if k >= 3 {
            let kf = k as f64;
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sv += sign * kf / (kf * kf - 1.0) * f;
        }
        if k == 0 {
            break;
        }
        let fm1 = 2.0 * k as f64 / x * f - fp1;
        fp1 = f;
        f = fm1;
        k -= 1;
        if f.abs() > RESCALE_AT {
            f *= RESCALE;
            fp1 *= RESCALE;
            norm *= RESCALE;
            su *= RESCALE;
            sv *= RESCALE;
            sweep.total_rescales += 1;
        }
    }
    let inv = 1.0 / norm;
    let j = (0..=nmax).map(|k| sweep.scaled(k, inv)).collect();
    MillerJ {
        j,
        neumann_even: su * inv,
        neumann_odd: sv * inv,
    }
}

/// (J, Y) for order 0 or 1 from the Hankel asymptotic expansion, x >= 25.
pub(crate) fn asymptotic_jy(order: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (order * order) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() > last {
            break;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs() {
            break;
        }
    }
    // chi = x - (order/2 + 1/4) pi; expand to keep the accuracy of sin/cos(x)
    let phase = (order as f64 * 0.5 + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = (2.0 / (PI * x)).sqrt();
    (
        amp * (p * cos_chi - q * sin_chi),
        amp * (p * sin_chi + q * cos_chi),
    )
}

/// J_0..=J_nmax and Y_0..=Y_nmax at x > 0. Y entries may overflow to
/// infinity for large orders at small x; callers check finiteness.
pub(crate) fn jy_sequences(nmax: usize, x: f64) -> (Vec<f64>, Vec<f64>) {
    let m = miller_j(nmax.max(1), x);
    let (y0, y1) = if x < ASYMPTOTIC_X {
        let ec = (0.5 * x).ln() + EULER_GAMMA;
        let (j0, j1) = (m.j[0], m.j[1]);
        let y0 = 2.0 / PI * (ec * j0 - 2.0 * m.neumann_even);
        let y1 = 2.0 / PI * ((ec - 1.0) * j1 - j0 / x - 4.0 * m.neumann_odd);
        (y0, y1)
    } else {
        (asymptotic_jy(0, x).1, asymptotic_jy(1, x).1)
    };
    let mut y = Vec::with_capacity(nmax + 1);
    y.push(y0);
    y.push(y1);
    for k in 1..nmax {
        let next = 2.0 * k as f64 / x * y[k] - y[k - 1];
        y.push(next);
    }
    let mut j = m.j;
    j.truncate(nmax + 1);
    y.truncate(nmax + 1);
    (j, y)
}

/// H_0^(1)(x) for x > 0, the 2D kernel's radial factor.
pub fn hankel1_0(x: f64) -> Complex64 {
    if x >= ASYMPTOTIC_X {
        let (j, y) = asymptotic_jy(0, x);
        return Complex64::new(j, y);
    }
    let m = miller_j(0, x);
    let j0 = m.j[0];
    let y0 = 2.0 / PI * (((0.5 * x).ln() + EULER_GAMMA) * j0 - 2.0 * m.neumann_even);
    Complex64::new(j0, y0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn hankel1_0_leading(x: f64) -> Complex64 {
        Complex64::from_polar((2.0 / (PI * x)).sqrt(), x - FRAC_PI_4)
    }

    #[test]
    fn neumann_and_asymptotic_agree_at_switch() {
        for &x in &[25.0, 30.0, 40.0] {
            let m = miller_j(1, x);
            let ec = (0.5 * x).ln() + EULER_GAMMA;
            let y0 = 2.0 / PI * (ec * m.j[0] - 2.0 * m.neumann_even);
            let y1 = 2.0 / PI * ((ec - 1.0) * m.j[1] - m.j[0] / x - 4.0 * m.neumann_odd);
            let (ja, ya) = asymptotic_jy(0, x);
            let (_, y1a) = asymptotic_jy(1, x);
            assert!((m.j[0] - ja).abs() < 1e-14, "x={x}");
            assert!((y0 - ya).abs() < 1e-13, "x={x} {y0} {ya}");
            assert!((y1 - y1a).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn start_orders_exceed_request() {
        for &x in &[1e-3, 0.5, 7.0, 300.0] {
            for &n in &[0usize, 3, 60, 200] {
                assert!(start_for(x, n, 17.0) >= n + 2);
            }
        }
    }

    #[test]
    fn leading_hankel_form_close_at_large_argument() {
        let x = 400.0;
        let rel = (hankel1_0(x) - hankel1_0_leading(x)).norm() / hankel1_0(x).norm();
        assert!(rel < 1e-3);
    }
}
