use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::grid::{Axis, GridSpec, WaveGrid};
use crate::fft::Fft;
use crate::quad::{exp_sinh, QuadConfig};
use crate::{Error, Result};

/// Largest `|psi_bar|` tolerated at either end of an `eta` window.
pub const EDGE_DECAY_TOL: f64 = 1e-8;

/// Samples `psi_bar(eta) = e^{eta/2} f(e^eta)` on an `eta` grid and records
/// the norm.
pub fn to_eta_representation<F>(mut f: F, eta_spec: &GridSpec) -> Result<WaveGrid>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if eta_spec.axis() != Axis::EtaLine {
        return Err(Error::grid("to_eta_representation needs an eta grid"));
    }
    let mut values = Vec::with_capacity(eta_spec.n());
    for eta in eta_spec.points() {
        let x = eta.exp();
        let v = f(x).map_err(|_| Error::Evaluation { x })?;
        if !crate::is_finite(v) {
            return Err(Error::Evaluation { x });
        }
        values.push(v * (0.5 * eta).exp());
    }
    WaveGrid::with_norm(*eta_spec, values)
}

pub(crate) fn check_edges(psi_bar: &WaveGrid) -> Result<()> {
    let spec = psi_bar.spec();
    let v = psi_bar.values();
    for (k, eta) in [(0, spec.min()), (v.len() - 1, spec.max())] {
        let edge = v[k].norm();
        if !(edge <= EDGE_DECAY_TOL) {
            return Err(Error::Truncation { eta, edge });
        }
    }
    Ok(())
}

/// Hyperbolic-momentum amplitude `<p|psi>` of a sampled `psi_bar` on the dual
/// grid [`GridSpec::dual`], in increasing `p` order.
pub fn mellin_critical(psi_bar: &WaveGrid) -> Result<WaveGrid> {
    let spec = *psi_bar.spec();
    if spec.axis() != Axis::EtaLine {
        return Err(Error::grid("mellin_critical needs an eta grid"));
    }
    check_edges(psi_bar)?;
    let n = spec.n();
    let p_spec = spec.dual()?;
    let mut data: Vec<Complex64> = psi_bar
        .values()
        .iter()
        .enumerate()
        .map(|(j, &v)| v * spec.weight(j))
        .collect();
    Fft::new(n)?.forward(&mut data);
    let scale = 1.0 / (2.0 * PI).sqrt();
    let eta0 = spec.min();
    let half = n / 2;
    let values = (0..n)
        .map(|m| {
            let p = p_spec.point(m);
            let phase = Complex64::from_polar(scale, -p * eta0);
            data[(m + half) % n] * phase
        })
        .collect();
    WaveGrid::with_norm(p_spec, values)
}

/// `<p|psi>` at a single `p` by the same trapezoid rule as
/// [`mellin_critical`], for momenta off the FFT grid.
pub fn mellin_critical_at(psi_bar: &WaveGrid, p_eta: f64) -> Result<Complex64> {
    let spec = psi_bar.spec();
    if spec.axis() != Axis::EtaLine {
        return Err(Error::grid("mellin_critical_at needs an eta grid"));
    }
    check_edges(psi_bar)?;
    let sum: Complex64 = psi_bar
        .values()
        .iter()
        .enumerate()
        .map(|(j, &v)| v * Complex64::from_polar(spec.weight(j), -p_eta * spec.point(j)))
        .sum();
    Ok(sum / (2.0 * PI).sqrt())
}

/// `int_0^inf f(t) t^{s-1} dt` by double-exponential quadrature, as
/// `int_0^inf [f(e^eta) e^{s eta} + f(e^{-eta}) e^{-s eta}] d eta`.
pub fn mellin_integral_direct<F>(mut f: F, s: Complex64, quad: &QuadConfig) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if !crate::is_finite(s) {
        return Err(Error::domain("mellin_integral_direct needs a finite s"));
    }
    let half = QuadConfig {
        abs_tol: 0.5 * quad.abs_tol,
        ..*quad
    };
    let outer = exp_sinh(|eta| weighted(&mut f, eta, s), 0.0, &half)?;
    let inner = exp_sinh(|eta| weighted(&mut f, -eta, s), 0.0, &half)?;
    Ok(outer + inner)
}

#[inline]
fn weighted<F>(f: &mut F, eta: f64, s: Complex64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let x = eta.exp();
    if x == 0.0 || !x.is_finite() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let v = f(x)?;
    if v == Complex64::new(0.0, 0.0) {
        return Ok(v);
    }
    Ok(v * (s * eta).exp())
}

/// `| int |<p|psi>|^2 dp - psi_x_norm |`.
pub fn parseval_check(psi_x_norm: f64, psi_peta: &WaveGrid) -> f64 {
    (psi_peta.norm_sqr() - psi_x_norm).abs()
}
