//! Wigner function on hyperbolic phase space `(eta, p_eta)`.
//!
//! With the substitution `eta' = 2y`,
//!
//! ```text
//! W(eta, p) = (1/pi) int psi_bar(eta + y) conj(psi_bar(eta - y)) e^{-2 i y p} dy,
//! ```
//!
//! so on a uniform `eta` grid every row only needs samples at grid points.
//! Each row is summed at all requested `p` with one chirp-z transform. The
//! marginals are `int W dp = |psi_bar(eta)|^2` and
//! `int W deta = |<p|psi>|^2`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::fft::ChirpZ;
use crate::hyperbolic::{Axis, GridSpec, WaveGrid};
use crate::{Error, Result};

/// Accepted deviation of the input `norm_tag` from one.
pub const NORM_TOL: f64 = 1e-6;

/// Default output window.
pub const DEFAULT_ETA_RANGE: (f64, f64) = (-12.0, 8.0);
pub const DEFAULT_P_RANGE: (f64, f64) = (-45.0, 45.0);
pub const DEFAULT_POINTS: usize = 1024;

/// `W(eta_i, p_k)` stored row-major, `values[i * n_p + k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    eta_spec: GridSpec,
    p_spec: GridSpec,
    values: Vec<f64>,
    imag_residue: f64,
}

impl WignerGrid {
    pub fn eta_spec(&self) -> &GridSpec {
        &self.eta_spec
    }

    pub fn p_spec(&self) -> &GridSpec {
        &self.p_spec
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Row `i`, i.e. `W(eta_i, .)`.
    pub fn row(&self, i: usize) -> &[f64] {
        let n_p = self.p_spec.n();
        &self.values[i * n_p..(i + 1) * n_p]
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.p_spec.n() + k]
    }

    /// Largest `|Im W|` discarded during construction.
    pub fn imag_residue(&self) -> f64 {
        self.imag_residue
    }
}

/// Row-wise construction of a [`WignerGrid`]; rows are independent and may
/// be computed in any order or concurrently.
#[derive(Clone, Debug)]
pub struct WignerPlan<'a> {
    psi: &'a [Complex64],
    step: f64,
    eta_out: GridSpec,
    p_spec: GridSpec,
    /// Per output row: input index, or bracketing indices and weight.
    rows: Vec<RowSource>,
    chirp: ChirpZ,
}

#[derive(Clone, Copy, Debug)]
enum RowSource {
    Exact(usize),
    Lerp(usize, f64),
}

impl<'a> WignerPlan<'a> {
    /// `psi_bar` must be normalized and decayed at both ends; `eta_out` rows
    /// off the input grid are linearly interpolated between input rows.
    pub fn new(psi_bar: &'a WaveGrid, eta_out: GridSpec, p_spec: GridSpec) -> Result<Self> {
        let spec = *psi_bar.spec();
        if spec.axis() != Axis::EtaLine || eta_out.axis() != Axis::EtaLine {
            return Err(Error::grid("Wigner input and rows must lie on eta grids"));
        }
        if p_spec.axis() != Axis::PEtaLine {
            return Err(Error::grid("Wigner columns must lie on a p_eta grid"));
        }
        let norm = psi_bar.norm_tag().unwrap_or_else(|| psi_bar.norm_sqr());
        if !((norm - 1.0).abs() <= NORM_TOL) {
            return Err(Error::Normalization { norm });
        }
        crate::hyperbolic::check_edges(psi_bar)?;
        if eta_out.min() < spec.min() || eta_out.max() > spec.max() {
            return Err(Error::grid("Wigner rows extend beyond the sampled window"));
        }
        let step = spec.step();
        let n = spec.n();
        let rows = eta_out
            .points()
            .map(|eta| {
                let pos = (eta - spec.min()) / step;
                let j = pos.round();
                if (pos - j).abs() <= 1e-9 * pos.abs().max(1.0) {
                    RowSource::Exact((j as usize).min(n - 1))
                } else {
                    let j = (pos.floor() as usize).min(n - 2);
                    RowSource::Lerp(j, pos - j as f64)
                }
            })
            .collect();
        let chirp = ChirpZ::new(n, p_spec.n(), -2.0 * step * p_spec.step())?;
        Ok(Self {
            psi: psi_bar.values(),
            step,
            eta_out,
            p_spec,
            rows,
            chirp,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// `W(eta_out[i], .)` and the largest imaginary part dropped.
    pub fn row(&self, i: usize) -> (Vec<f64>, f64) {
        match self.rows[i] {
            RowSource::Exact(j) => self.grid_row(j),
            RowSource::Lerp(j, t) => {
                let (a, ra) = self.grid_row(j);
                let (b, rb) = self.grid_row(j + 1);
                let v = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| (1.0 - t) * x + t * y)
                    .collect();
                (v, ra.max(rb))
            }
        }
    }

    fn grid_row(&self, j: usize) -> (Vec<f64>, f64) {
        let n = self.psi.len();
        let m_max = j.min(n - 1 - j);
        let p0 = self.p_spec.min();
        let theta = -2.0 * self.step * self.p_spec.step();
        let input: Vec<Complex64> = (0..=2 * m_max)
            .map(|mp| {
                let m = mp as f64 - m_max as f64;
                let prod = self.psi[j + mp - m_max] * self.psi[j + m_max - mp].conj();
                prod * Complex64::from_polar(1.0, -2.0 * m * self.step * p0)
            })
            .collect();
        let out = self.chirp.transform(&input);
        let scale = self.step / PI;
        let mut residue = 0.0f64;
        let row = out
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                let w = x * Complex64::from_polar(scale, -theta * (m_max * k) as f64);
                residue = residue.max(w.im.abs());
                w.re
            })
            .collect();
        (row, residue)
    }

    /// Collects rows produced by [`Self::row`] in order.
    pub fn assemble<I>(&self, rows: I) -> Result<WignerGrid>
    where
        I: IntoIterator<Item = (Vec<f64>, f64)>,
    {
        let n_p = self.p_spec.n();
        let mut values = Vec::with_capacity(self.rows.len() * n_p);
        let mut imag_residue = 0.0f64;
        let mut count = 0;
        for (row, r) in rows {
            if row.len() != n_p {
                return Err(Error::grid("Wigner row of the wrong length"));
            }
            values.extend_from_slice(&row);
            imag_residue = imag_residue.max(r);
            count += 1;
        }
        if count != self.rows.len() {
            return Err(Error::grid("missing Wigner rows"));
        }
        Ok(WignerGrid {
            eta_spec: self.eta_out,
            p_spec: self.p_spec,
            values,
            imag_residue,
        })
    }
}

/// Wigner function on the input `eta` grid and the given `p` grid.
pub fn wigner_from_state(psi_bar: &WaveGrid, p_spec: &GridSpec) -> Result<WignerGrid> {
    wigner_on_window(psi_bar, psi_bar.spec(), p_spec)
}

/// Wigner function with rows at `eta_out`, a window inside the input grid.
pub fn wigner_on_window(
    psi_bar: &WaveGrid,
    eta_out: &GridSpec,
    p_spec: &GridSpec,
) -> Result<WignerGrid> {
    let plan = WignerPlan::new(psi_bar, *eta_out, *p_spec)?;
    plan.assemble((0..plan.n_rows()).map(|i| plan.row(i)))
}

/// `int W dp` per row (trapezoid).
pub fn marginal_eta(w: &WignerGrid) -> Vec<f64> {
    (0..w.eta_spec.n())
        .map(|i| w.p_spec.integrate(w.row(i)))
        .collect()
}

/// `int W deta` per column (trapezoid).
pub fn marginal_p(w: &WignerGrid) -> Vec<f64> {
    let n_p = w.p_spec.n();
    let mut out = vec![0.0; n_p];
    for i in 0..w.eta_spec.n() {
        let wt = w.eta_spec.weight(i);
        for (o, v) in out.iter_mut().zip(w.row(i)) {
            *o += wt * v;
        }
    }
    out
}

/// `int int W deta dp`.
pub fn total_mass(w: &WignerGrid) -> f64 {
    w.p_spec.integrate(&marginal_p(w))
}
