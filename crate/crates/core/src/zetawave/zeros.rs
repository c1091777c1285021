use alloc::vec::Vec;

use num_traits::Float;

use crate::{Error, Result};

/// Largest coarse sampling step accepted by [`zero_scan`].
pub const MAX_COARSE_STEP: f64 = 0.05;

/// A refined minimum counts as a zero below this fraction of `max f`.
pub const ZERO_REL_THRESHOLD: f64 = 1e-4;

const BRACKET_WIDTH: f64 = 1e-8;

/// Zeros of a non-negative function on `[a, b]`.
///
/// Local minima of `f` on a grid of spacing `coarse_step` are refined by
/// golden-section search to a bracket of `1e-8` and kept when the refined
/// value is at most `1e-4 max f`. Returned in increasing order.
pub fn zero_scan<F>(mut f: F, t_range: (f64, f64), coarse_step: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (a, b) = t_range;
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::domain(alloc::format!(
            "zero_scan needs a < b, got [{a}, {b}]"
        )));
    }
    if !(coarse_step > 0.0 && coarse_step <= MAX_COARSE_STEP) {
        return Err(Error::domain(alloc::format!(
            "coarse step {coarse_step} outside (0, {MAX_COARSE_STEP}]"
        )));
    }
    let n = ((b - a) / coarse_step).ceil() as usize + 1;
    let ts: Vec<f64> = (0..n)
        .map(|k| {
            if k + 1 == n {
                b
            } else {
                a + k as f64 * coarse_step
            }
        })
        .collect();
    let fs = ts.iter().map(|&t| f(t)).collect::<Result<Vec<f64>>>()?;
    let max = fs.iter().fold(0.0f64, |m, &v| m.max(v));
    let mut out: Vec<f64> = Vec::new();
    for k in 1..n - 1 {
        if !(fs[k] < fs[k - 1] && fs[k] <= fs[k + 1]) {
            continue;
        }
        let (t, v) = golden_section(&mut f, ts[k - 1], ts[k + 1])?;
        if v <= ZERO_REL_THRESHOLD * max && out.last().map_or(true, |&l| t - l > coarse_step) {
            out.push(t);
        }
    }
    Ok(out)
}

fn golden_section<F>(f: &mut F, mut lo: f64, mut hi: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while hi - lo > BRACKET_WIDTH {
        if fc <= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d)?;
        }
    }
    let t = 0.5 * (lo + hi);
    Ok((t, f(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn sine_zeros() {
        let z = zero_scan(|t| Ok(t.sin().abs()), (1.0, 7.0), 0.05).unwrap();
        assert_eq!(z.len(), 2);
        assert!((z[0] - PI).abs() < 1e-8);
        assert!((z[1] - 2.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn shallow_minima_are_not_zeros() {
        let z = zero_scan(|t| Ok(2.0 + t.cos()), (0.0, 10.0), 0.01).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn bad_arguments() {
        assert!(zero_scan(Ok, (1.0, 0.0), 0.01).is_err());
        assert!(zero_scan(Ok, (0.0, 1.0), 0.1).is_err());
        assert!(zero_scan(Ok, (0.0, 1.0), 0.0).is_err());
    }
}
