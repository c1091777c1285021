//! Double-exponential quadrature on half-infinite intervals.
//!
//! `int_a^inf f(x) dx` is mapped through `x = a + exp(pi/2 sinh t)` and summed
//! with the trapezoid rule in `t`, halving the step until two successive
//! levels agree. The map removes both an algebraic end-point behavior at `a`
//! and exponential or algebraic decay at infinity.

use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

/// Beyond this `exp(pi/2 sinh t)` leaves the `f64` range.
const T_MAX: f64 = 6.7;
const INITIAL_STEP: f64 = 0.5;
/// Consecutive negligible samples that end the sweep in one direction.
const TAIL_RUN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    /// Number of step halvings after the initial `h = 1/2` pass.
    pub max_level: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_level: 14,
        }
    }
}

impl QuadConfig {
    pub fn with_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }
}

#[inline]
fn node(a: f64, t: f64) -> (f64, f64) {
    let u = FRAC_PI_2 * t.sinh();
    let e = u.exp();
    (a + e, FRAC_PI_2 * t.cosh() * e)
}

/// Sum `f(x(t)) x'(t)` over `t = (offset + stride k) h`, `k >= 0`, walking
/// away from the origin in direction `sign`.
fn sweep<F>(
    f: &mut F,
    a: f64,
    h: f64,
    first: i64,
    stride: i64,
    sign: f64,
    cut: f64,
) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    let mut small = 0usize;
    let mut k = first;
    loop {
        let t = sign * k as f64 * h;
        if t.abs() > T_MAX {
            break;
        }
        let (x, w) = node(a, t);
        if w == 0.0 || !x.is_finite() {
            break;
        }
        let fx = f(x)?;
        let term = fx * w;
        if !crate::is_finite(term) {
            return Err(Error::Evaluation { x });
        }
        acc += term;
        if term.norm() <= cut {
            small += 1;
            if small >= TAIL_RUN {
                break;
            }
        } else {
            small = 0;
        }
        k += stride;
    }
    Ok(acc)
}

/// `int_a^inf f(x) dx` for a complex-valued integrand.
pub fn exp_sinh<F>(mut f: F, a: f64, cfg: &QuadConfig) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let cut = 1e-6 * cfg.abs_tol;
    let mut h = INITIAL_STEP;
    // level 0: all integer multiples of h
    let mut sum = sweep(&mut f, a, h, 0, 1, 1.0, cut)? + sweep(&mut f, a, h, 1, 1, -1.0, cut)?;
    let mut estimate = sum * h;
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_level {
        h /= 2.0;
        let odd = sweep(&mut f, a, h, 1, 2, 1.0, cut)? + sweep(&mut f, a, h, 1, 2, -1.0, cut)?;
        sum += odd;
        let next = sum * h;
        change = (next - estimate).norm();
        estimate = next;
        if change <= cfg.abs_tol {
            return Ok(estimate);
        }
    }
    Err(Error::Quadrature {
        levels: cfg.max_level,
        change,
    })
}

/// Real-valued convenience wrapper around [`exp_sinh`].
pub fn exp_sinh_real<F>(mut f: F, a: f64, cfg: &QuadConfig) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    exp_sinh(|x| f(x).map(|v| Complex64::new(v, 0.0)), a, cfg).map(|z| z.re)
}
