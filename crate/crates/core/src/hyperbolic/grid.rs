use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

/// Smallest accepted grid.
pub const MIN_POINTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Position on the half-line, `x >= 0`.
    XHalfLine,
    /// Logarithmic position `eta = ln x`.
    EtaLine,
    /// Hyperbolic momentum `p_eta`.
    PEtaLine,
}

impl Axis {
    /// Axes that feed or come out of an FFT and so need `n = 2^k`.
    pub fn is_spectral(self) -> bool {
        matches!(self, Axis::EtaLine | Axis::PEtaLine)
    }
}

/// Uniform grid `min + k step`, `k = 0..n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    min: f64,
    max: f64,
    n: usize,
    axis: Axis,
    step: f64,
}

impl GridSpec {
    /// Grid with both end points included; `step = (max - min)/(n - 1)`.
    pub fn new(min: f64, max: f64, n: usize, axis: Axis) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() || !(min < max) {
            return Err(Error::grid(alloc::format!(
                "need finite min < max, got [{min}, {max}]"
            )));
        }
        let step = (max - min) / (n.max(2) - 1) as f64;
        Self::checked(min, max, n, axis, step)
    }

    /// Grid starting at `min` with the given exact `step`.
    pub fn from_step(min: f64, step: f64, n: usize, axis: Axis) -> Result<Self> {
        if !min.is_finite() || !step.is_finite() || !(step > 0.0) {
            return Err(Error::grid(alloc::format!(
                "need finite min and step > 0, got {min}, {step}"
            )));
        }
        let max = min + (n.max(2) - 1) as f64 * step;
        Self::checked(min, max, n, axis, step)
    }

    fn checked(min: f64, max: f64, n: usize, axis: Axis, step: f64) -> Result<Self> {
        if n < MIN_POINTS {
            return Err(Error::grid(alloc::format!("n = {n} is below {MIN_POINTS}")));
        }
        if axis.is_spectral() && !n.is_power_of_two() {
            return Err(Error::grid(alloc::format!(
                "{axis:?} grid needs n = 2^k, got {n}"
            )));
        }
        if axis == Axis::XHalfLine && min < 0.0 {
            return Err(Error::grid("half-line grid must start at x >= 0"));
        }
        Ok(Self {
            min,
            max,
            n,
            axis,
            step,
        })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// The `k`-th abscissa.
    #[inline]
    pub fn point(&self, k: usize) -> f64 {
        if k + 1 == self.n {
            self.max
        } else {
            self.min + k as f64 * self.step
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.point(k))
    }

    /// Hyperbolic-momentum grid `p_k = 2 pi k / (n step)`, `k in [-n/2, n/2)`,
    /// dual to an `eta` grid.
    pub fn dual(&self) -> Result<Self> {
        if self.axis != Axis::EtaLine {
            return Err(Error::grid("only an eta grid has a momentum dual"));
        }
        let dp = 2.0 * core::f64::consts::PI / (self.n as f64 * self.step);
        Self::from_step(-((self.n / 2) as f64) * dp, dp, self.n, Axis::PEtaLine)
    }

    /// Trapezoid weight of sample `k`.
    #[inline]
    pub fn weight(&self, k: usize) -> f64 {
        if k == 0 || k + 1 == self.n {
            0.5 * self.step
        } else {
            self.step
        }
    }

    /// Trapezoid rule for sampled real values.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.n);
        values
            .iter()
            .enumerate()
            .map(|(k, v)| v * self.weight(k))
            .sum()
    }
}

/// Wavefunction sampled on a [`GridSpec`].
#[derive(Clone, Debug, PartialEq)]
pub struct WaveGrid {
    spec: GridSpec,
    values: Vec<Complex64>,
    norm_tag: Option<f64>,
}

impl WaveGrid {
    /// Wraps samples without computing the norm.
    pub fn new(spec: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != spec.n {
            return Err(Error::grid(alloc::format!(
                "{} samples for a grid of {} points",
                values.len(),
                spec.n
            )));
        }
        Ok(Self {
            spec,
            values,
            norm_tag: None,
        })
    }

    /// Wraps samples and records their trapezoid `L^2` norm.
    pub fn with_norm(spec: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        let mut g = Self::new(spec, values)?;
        g.norm_tag = Some(g.norm_sqr());
        Ok(g)
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Trapezoid `int |psi|^2` recorded at construction, if any.
    pub fn norm_tag(&self) -> Option<f64> {
        self.norm_tag
    }

    /// Trapezoid `int |psi|^2` over the grid.
    pub fn norm_sqr(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| v.norm_sqr() * self.spec.weight(k))
            .sum()
    }

    /// `(abscissa, value)` pairs.
    pub fn samples(&self) -> impl ExactSizeIterator<Item = crate::ComplexSample> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| crate::ComplexSample::new(self.spec.point(k), v))
    }

    /// `alpha self + beta other` on a shared grid.
    pub fn combine(&self, alpha: Complex64, other: &Self, beta: Complex64) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::grid(
                "linear combination of samples on different grids",
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| alpha * a + beta * b)
            .collect();
        Self::with_norm(self.spec, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GridSpec::new(1.0, 0.0, 64, Axis::EtaLine).is_err());
        assert!(GridSpec::new(0.0, 1.0, 8, Axis::EtaLine).is_err());
        assert!(GridSpec::new(0.0, 1.0, 100, Axis::EtaLine).is_err());
        assert!(GridSpec::new(0.0, 1.0, 100, Axis::XHalfLine).is_ok());
        assert!(GridSpec::new(-1.0, 1.0, 64, Axis::XHalfLine).is_err());
        assert!(GridSpec::new(0.0, f64::INFINITY, 64, Axis::PEtaLine).is_err());
    }

    #[test]
    fn end_points_are_exact() {
        let g = GridSpec::new(-40.0, 40.0, 1 << 10, Axis::EtaLine).unwrap();
        assert_eq!(g.point(0), -40.0);
        assert_eq!(g.point(g.n() - 1), 40.0);
        assert_eq!(g.step(), 80.0 / 1023.0);
    }

    #[test]
    fn dual_grid() {
        let g = GridSpec::new(-40.0, 40.0, 1 << 16, Axis::EtaLine).unwrap();
        let p = g.dual().unwrap();
        let dp = 2.0 * core::f64::consts::PI / ((1 << 16) as f64 * g.step());
        assert_eq!(p.step(), dp);
        assert_eq!(p.point(1 << 15), 0.0);
        assert!((p.min() + core::f64::consts::PI / g.step()).abs() < 1e-9);
        assert!(p.dual().is_err());
    }

    #[test]
    fn trapezoid_is_exact_for_linear() {
        let g = GridSpec::new(0.0, 2.0, 17, Axis::XHalfLine).unwrap();
        let v: Vec<f64> = g.points().map(|x| 3.0 * x + 1.0).collect();
        assert!((g.integrate(&v) - 8.0).abs() < 1e-14);
    }

    #[test]
    fn wavegrid_length_and_norm() {
        let g = GridSpec::new(0.0, 1.0, 16, Axis::XHalfLine).unwrap();
        assert!(WaveGrid::new(g, alloc::vec![Complex64::new(1.0, 0.0); 15]).is_err());
        let w = WaveGrid::with_norm(g, alloc::vec![Complex64::new(0.0, 2.0); 16]).unwrap();
        assert!((w.norm_tag().unwrap() - 4.0).abs() < 1e-14);
        assert_eq!(w.norm_tag().unwrap(), w.norm_sqr());
    }
}
