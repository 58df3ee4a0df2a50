//! Bessel, Hankel and spherical Bessel functions of real argument, for
//! integer and half-integer orders.
//!
//! Negative orders are reached through the reflection formulas
//! J_{-n} = (-1)^n J_n, j_{-n-1} = (-1)^{n+1} y_n and y_{-n-1} = (-1)^n j_n.

mod cylindrical;
mod spherical;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use cylindrical::hankel1_0;

pub type ComplexValue = Complex64;

/// Largest |order| accepted by the scalar entry points.
pub const MAX_ORDER: f64 = 100_000.0;

enum Order {
    Integer(i64),
    /// nu = n + 1/2
    HalfInteger(i64),
}

fn classify(nu: f64) -> Result<Order> {
    if !nu.is_finite() || nu.abs() > MAX_ORDER {
        return Err(Error::UnsupportedOrder(nu));
    }
    if nu.fract() == 0.0 {
        Ok(Order::Integer(nu as i64))
    } else if (nu - 0.5).fract() == 0.0 {
        Ok(Order::HalfInteger((nu - 0.5) as i64))
    } else {
        Err(Error::UnsupportedOrder(nu))
    }
}

fn sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_finite(v: f64, what: &str, nu: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("{what}({nu}, {x})")))
    }
}

fn check_arg(x: f64, strictly_positive: bool) -> Result<()> {
    let ok = x.is_finite() && if strictly_positive { x > 0.0 } else { x >= 0.0 };
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("argument x = {x}")))
    }
}

/// J_nu(x) for integer or half-integer nu and x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_arg(x, false)?;
    match classify(nu)? {
        Order::Integer(n) => {
            let m = n.unsigned_abs() as usize;
            if x == 0.0 {
                return Ok(if m == 0 { 1.0 } else { 0.0 });
            }
            let j = cylindrical::miller_j(m, x).j[m];
            Ok(if n < 0 { sign(n) * j } else { j })
        }
        Order::HalfInteger(n) if n >= 0 => {
            let j = spherical_j(n as i32, x)?;
            Ok((2.0 * x / PI).sqrt() * j)
        }
        Order::HalfInteger(n) => {
            // nu = -(m + 1/2) with m = -n - 1
            check_arg(x, true)?;
            let m = -n - 1;
            let y = spherical_y(m as i32, x)?;
            check_finite(sign(m + 1) * (2.0 * x / PI).sqrt() * y, "bessel_j", nu, x)
        }
    }
}

/// Y_nu(x) for integer or half-integer nu and x > 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    check_arg(x, true)?;
    match classify(nu)? {
        Order::Integer(n) => {
            let m = n.unsigned_abs() as usize;
            let (_, y) = cylindrical::jy_sequences(m, x);
            let v = if n < 0 { sign(n) * y[m] } else { y[m] };
            check_finite(v, "bessel_y", nu, x)
        }
        Order::HalfInteger(n) if n >= 0 => {
            let y = spherical_y(n as i32, x)?;
            check_finite((2.0 * x / PI).sqrt() * y, "bessel_y", nu, x)
        }
        Order::HalfInteger(n) => {
            let m = -n - 1;
            let j = spherical_j(m as i32, x)?;
            Ok(sign(m) * (2.0 * x / PI).sqrt() * j)
        }
    }
}

/// H^(1)_nu(x) = J_nu(x) + i Y_nu(x).
pub fn hankel1(nu: f64, x: f64) -> Result<ComplexValue> {
    Ok(Complex64::new(bessel_j(nu, x)?, bessel_y(nu, x)?))
}

/// H^(2)_nu(x) = J_nu(x) - i Y_nu(x).
pub fn hankel2(nu: f64, x: f64) -> Result<ComplexValue> {
    Ok(hankel1(nu, x)?.conj())
}

/// J_0..=J_nmax at x >= 0.
pub fn bessel_j_sequence(nmax: usize, x: f64) -> Result<Vec<f64>> {
    check_arg(x, false)?;
    if x == 0.0 {
        let mut out = vec![0.0; nmax + 1];
        out[0] = 1.0;
        return Ok(out);
    }
    Ok(cylindrical::miller_j(nmax, x).j)
}

/// (J_0..=J_nmax, Y_0..=Y_nmax) at x > 0. Y entries that overflow are
/// infinite; the caller decides whether that matters.
pub fn bessel_jy_sequence(nmax: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_arg(x, true)?;
    Ok(cylindrical::jy_sequences(nmax, x))
}

/// j_n(x) for any integer n and x >= 0 (x > 0 when n < 0).
pub fn spherical_j(n: i32, x: f64) -> Result<f64> {
    if n >= 0 {
        check_arg(x, false)?;
        Ok(spherical::j_sequence(n as usize, x)[n as usize])
    } else {
        check_arg(x, true)?;
        let m = (-n - 1) as usize;
        let y = spherical::y_sequence(m, x)[m];
        check_finite(sign(m as i64 + 1) * y, "spherical_j", n as f64, x)
    }
}

/// y_n(x) for any integer n and x > 0.
pub fn spherical_y(n: i32, x: f64) -> Result<f64> {
    check_arg(x, true)?;
    if n >= 0 {
        let y = spherical::y_sequence(n as usize, x)[n as usize];
        check_finite(y, "spherical_y", n as f64, x)
    } else {
        let m = (-n - 1) as usize;
        Ok(sign(m as i64) * spherical::j_sequence(m, x)[m])
    }
}

/// h^(1)_n(x) = j_n(x) + i y_n(x) for x > 0.
pub fn spherical_h1(n: i32, x: f64) -> Result<ComplexValue> {
    check_arg(x, true)?;
    Ok(Complex64::new(spherical_j(n, x)?, spherical_y(n, x)?))
}

/// j_0..=j_nmax at x >= 0.
pub fn spherical_j_sequence(nmax: usize, x: f64) -> Result<Vec<f64>> {
    check_arg(x, false)?;
    Ok(spherical::j_sequence(nmax, x))
}

/// y_0..=y_nmax at x > 0; entries may be infinite for large orders.
pub fn spherical_y_sequence(nmax: usize, x: f64) -> Result<Vec<f64>> {
    check_arg(x, true)?;
    Ok(spherical::y_sequence(nmax, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    /// x j_n(x)
    Regular,
    /// x h^(1)_n(x)
    Outgoing,
}

/// d/dx [x f_n(x)] = (n + 1) f_n(x) - x f_{n+1}(x), with f = j_n or h^(1)_n.
/// The regular kind returns a value with zero imaginary part.
pub fn riccati_derivative(kind: RadialKind, n: i32, x: f64) -> Result<ComplexValue> {
    let nf = (n + 1) as f64;
    match kind {
        RadialKind::Regular => {
            if x == 0.0 && n >= 0 {
                return Ok(Complex64::new(if n == 0 { 1.0 } else { 0.0 }, 0.0));
            }
            let v = nf * spherical_j(n, x)? - x * spherical_j(n + 1, x)?;
            Ok(Complex64::new(v, 0.0))
        }
        RadialKind::Outgoing => {
            check_arg(x, true)?;
            Ok(spherical_h1(n, x)? * nf - spherical_h1(n + 1, x)? * x)
        }
    }
}
