//! Spherical Bessel functions j_n, y_n for n >= 0 and real argument.
//!
//! j_n uses upward recurrence from the sin/cos closed forms while n <= x and
//! a normalized backward sweep otherwise. y_n always goes upward.

use super::cylindrical::{start_all, start_for, RESCALE, RESCALE_AT};

/// j_1 by its power series, for small arguments where the closed form cancels.
fn j1_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x / 3.0;
    let mut sum = term;
    for k in 1..20 {
        let kf = k as f64;
        term *= -0.5 * x2 / (kf * (2.0 * kf + 3.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

pub(crate) fn j0(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

pub(crate) fn j1(x: f64) -> f64 {
    if x < 0.5 {
        j1_series(x)
    } else {
        let (s, c) = x.sin_cos();
        (s / x - c) / x
    }
}

/// j_0..=j_nmax at x >= 0.
pub(crate) fn j_sequence(nmax: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; nmax + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    out[0] = j0(x);
    if nmax == 0 {
        return out;
    }
    out[1] = j1(x);
    if nmax == 1 {
        return out;
    }
    if (nmax as f64) <= x {
        for k in 1..nmax {
            out[k + 1] = (2 * k + 1) as f64 / x * out[k] - out[k - 1];
        }
        return out;
    }
    // Backward sweep of f_k = (2k+3)/x f_{k+1} - f_{k+2}.
    let start = start_for(x, nmax, 17.0).max(start_all(x, 40.0) + 2);
    let mut rescales_at = vec![0u32; nmax + 1];
    let mut total = 0u32;
    let mut fp1 = 0.0;
    let mut f = 1e-100;
    let mut k = start;
    loop {
        if k <= nmax {
            out[k] = f;
            rescales_at[k] = total;
        }
        if k == 0 {
            break;
        }
        let fm1 = (2 * k + 1) as f64 / x * f - fp1;
        fp1 = f;
        f = fm1;
        k -= 1;
        if f.abs() > RESCALE_AT {
            f *= RESCALE;
            fp1 *= RESCALE;
            total += 1;
        }
    }
    let to_final = |k: usize, v: f64| {
        let mut v = v;
        for _ in rescales_at[k]..total {
            v *= RESCALE;
        }
        v
    };
    // Normalize on whichever closed form is farther from a zero.
    let (a, b) = (j0(x), j1(x));
    let factor = if a.abs() >= b.abs() {
        a / to_final(0, out[0])
    } else {
        b / to_final(1, out[1])
    };
    for (k, v) in out.iter_mut().enumerate() {
        *v = to_final(k, *v * factor);
    }
    out
}

/// y_0..=y_nmax at x > 0. Large orders at small x overflow to infinity.
pub(crate) fn y_sequence(nmax: usize, x: f64) -> Vec<f64> {
    let (s, c) = x.sin_cos();
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(-c / x);
    if nmax >= 1 {
        out.push(-c / (x * x) - s / x);
    }
    for k in 1..nmax {
        let next = (2 * k + 1) as f64 / x * out[k] - out[k - 1];
        out.push(next);
    }
    out
}
