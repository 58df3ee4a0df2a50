//! Log-scaled reals for the closed-form radial integrals, where squared
//! Bessel values underflow and squared Hankel values overflow long before
//! the integrals themselves leave the floating-point range.

/// mantissa * exp(log_scale)
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Scaled {
    pub log_scale: f64,
    pub mantissa: f64,
}

/// Below this a direct square risks losing digits to gradual underflow.
const DIRECT_FLOOR: f64 = 1e-250;
const DIRECT_CEIL: f64 = 1e250;

impl Scaled {
    /// ln of the value, if positive.
    pub fn ln(self) -> Option<f64> {
        (self.mantissa > 0.0 && self.mantissa.is_finite())
            .then(|| self.log_scale + self.mantissa.ln())
    }

    pub fn sub(self, other: Scaled) -> Scaled {
        let top = self.log_scale.max(other.log_scale);
        Scaled {
            log_scale: top,
            mantissa: self.mantissa * (self.log_scale - top).exp()
                - other.mantissa * (other.log_scale - top).exp(),
        }
    }
}

/// ln(a) + ln(b) -> ln(a + b) for a, b > 0 given by their logs.
pub(crate) fn log_add(la: f64, lb: f64) -> f64 {
    let top = la.max(lb);
    if top == f64::NEG_INFINITY {
        return top;
    }
    top + ((la - top).exp() + (lb - top).exp()).ln()
}

/// (x^p / 2) [f_n^2 - f_{n+1} f_{n-1}] for a real sequence f.
pub(crate) fn regular_antiderivative(x: f64, power: i32, f: f64, fp: f64, fm: f64) -> Scaled {
    let pre = (0.5 * x.powi(power)).ln();
    let sq = f * f;
    if (DIRECT_FLOOR..DIRECT_CEIL).contains(&sq) || f == 0.0 {
        Scaled {
            log_scale: pre,
            mantissa: sq - fp * fm,
        }
    } else {
        Scaled {
            log_scale: pre + 2.0 * f.abs().ln(),
            mantissa: 1.0 - (fp / f) * (fm / f),
        }
    }
}

/// (y^p / 2) Re[|h_n|^2 - h_{n+1} conj(h_{n-1})] with h = j + i y given as
/// (real, imaginary) pairs. None when an input is not finite.
pub(crate) fn outgoing_antiderivative(
    y: f64,
    power: i32,
    h: (f64, f64),
    hp: (f64, f64),
    hm: (f64, f64),
) -> Option<Scaled> {
    let all = [h.0, h.1, hp.0, hp.1, hm.0, hm.1];
    if !all.iter().all(|v| v.is_finite()) {
        return None;
    }
    let pre = (0.5 * y.powi(power)).ln();
    let s = h.0.abs().max(h.1.abs());
    let (a, b) = (h.0 / s, h.1 / s);
    let cross = (hp.0 / s) * (hm.0 / s) + (hp.1 / s) * (hm.1 / s);
    let m = a * a + b * b - cross;
    m.is_finite().then(|| Scaled {
        log_scale: pre + 2.0 * s.ln(),
        mantissa: m,
    })
}
