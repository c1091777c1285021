use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::accel::AccelConfig;
use crate::hyperbolic::GridSpec;
use crate::quad::{exp_sinh_real, QuadConfig};
use crate::specialfn::{gamma_complex, lerch_phi, zeta_critical, LerchParams, POLE_TOL};
use crate::{Error, Result};

/// `(ln 2 - 1/2)^{-1/2}`, the normalization of `psi_zeta = N / (1 + e^x)`.
pub const PSI_ZETA_NORM: f64 = 2.275_389_834_539_167_4;

/// Normalized `psi_{z,u}(x) = N e^{-u x} / (1 - z e^{-x})`, an eigenfunction
/// of [`PotentialKind::VbarGeneral`] with energy `-u^2/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LerchWave {
    z: Complex64,
    u: f64,
    norm: f64,
    energy: f64,
}

impl LerchWave {
    /// Requires `|z| < 1` or `z = -1`, and `u > 0`.
    pub fn new(z: Complex64, u: f64) -> Result<Self> {
        if !crate::is_finite(z) || !u.is_finite() || !(u > 0.0) {
            return Err(Error::domain("LerchWave needs finite z and u > 0"));
        }
        if !(z.norm() < 1.0 - POLE_TOL || (z + 1.0).norm() <= POLE_TOL) {
            return Err(Error::domain(alloc::format!(
                "LerchWave needs |z| < 1 or z = -1, got {z}"
            )));
        }
        let mut w = Self {
            z,
            u,
            norm: 1.0,
            energy: -0.5 * u * u,
        };
        let mass = exp_sinh_real(
            |x| Ok(psi_lerch_eval(&w, x).norm_sqr()),
            0.0,
            &QuadConfig::default(),
        )?;
        w.norm = mass.sqrt().recip();
        Ok(w)
    }

    /// `psi_zeta(x) = N / (1 + e^x)`.
    pub fn zeta() -> Result<Self> {
        Self::new(Complex64::new(-1.0, 0.0), 1.0)
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }
}

/// `psi_{z,u}(x)`, `x >= 0`.
pub fn psi_lerch_eval(w: &LerchWave, x: f64) -> Complex64 {
    let decay = (-x).exp();
    w.norm * (-w.u * x).exp() / (Complex64::new(1.0, 0.0) - w.z * decay)
}

/// Closed-form amplitude `N Gamma(s) Phi(z, s, u) / sqrt(2 pi)`,
/// `s = 1/2 - i p`.
pub fn psi_lerch_momentum_closed(
    w: &LerchWave,
    p_eta: f64,
    accel: &AccelConfig,
) -> Result<Complex64> {
    let s = Complex64::new(0.5, -p_eta);
    let phi = lerch_phi(&LerchParams::new(w.z, s, w.u)?, accel)?;
    Ok(gamma_complex(s)? * phi * (w.norm / (2.0 * PI).sqrt()))
}

/// `<p|psi_zeta> = N (1 - 2^{1/2 + i p}) Gamma(1/2 - i p) zeta(1/2 - i p) / sqrt(2 pi)`.
pub fn psi_zeta_momentum_closed(p_eta: f64, accel: &AccelConfig) -> Result<Complex64> {
    let s = Complex64::new(0.5, -p_eta);
    let factor =
        Complex64::new(1.0, 0.0) - (Complex64::new(0.5, p_eta) * core::f64::consts::LN_2).exp();
    let zeta = zeta_critical(-p_eta, accel)?;
    Ok(factor * gamma_complex(s)? * zeta * (PSI_ZETA_NORM / (2.0 * PI).sqrt()))
}

fn real_z(z: Complex64, what: &str) -> Result<f64> {
    if !crate::is_finite(z) || z.im != 0.0 {
        return Err(Error::domain(alloc::format!(
            "{what} is defined for real z, got {z}"
        )));
    }
    Ok(z.re)
}

/// Robin constant `lim_{x->0+} psi'/psi = -u + z/(z - 1)` for real `z != 1`.
pub fn boundary_kappa(z: Complex64, u: f64) -> Result<f64> {
    let z = real_z(z, "boundary_kappa")?;
    if (z - 1.0).abs() < POLE_TOL {
        return Err(Error::domain("boundary_kappa is singular at z = 1"));
    }
    Ok(-u + z / (z - 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PotentialKind {
    /// `V(x) = [(u + R)^2 - u^2 + R(R + 1)] / 2`, `R = z e^{-x}/(1 - z e^{-x})`.
    VbarGeneral,
    /// `V(x) = -[1 - e^x/(e^x + 1) tanh(x/2)] / 2`, the `z = -1, u = 1` case.
    VZeta,
}

/// Potential for which `psi_{z,u}` is a bound state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialProfile {
    kind: PotentialKind,
    z: f64,
    u: f64,
}

impl PotentialProfile {
    /// `VZeta` requires `z = -1, u = 1`. Both kinds require real `z` with
    /// `|z| < 1` or `z = -1`.
    pub fn new(kind: PotentialKind, z: Complex64, u: f64) -> Result<Self> {
        let z = real_z(z, "PotentialProfile")?;
        if !(z.abs() < 1.0 || z == -1.0) || !u.is_finite() {
            return Err(Error::domain(alloc::format!(
                "potential needs |z| < 1 or z = -1, got {z}"
            )));
        }
        if kind == PotentialKind::VZeta && (z != -1.0 || u != 1.0) {
            return Err(Error::domain("VZeta is the z = -1, u = 1 potential"));
        }
        Ok(Self { kind, z, u })
    }

    pub fn vbar(z: f64, u: f64) -> Result<Self> {
        Self::new(PotentialKind::VbarGeneral, Complex64::new(z, 0.0), u)
    }

    pub fn zeta() -> Self {
        Self {
            kind: PotentialKind::VZeta,
            z: -1.0,
            u: 1.0,
        }
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn u(&self) -> f64 {
        self.u
    }
}

/// `V(x)` for `x >= 0`.
pub fn potential_eval(p: &PotentialProfile, x: f64) -> f64 {
    match p.kind {
        PotentialKind::VbarGeneral => {
            let q = p.z * (-x).exp();
            let r = q / (1.0 - q);
            let u = p.u;
            0.5 * ((u + r) * (u + r) - u * u + r * (r + 1.0))
        }
        PotentialKind::VZeta => {
            let logistic = 1.0 / (1.0 + (-x).exp());
            -0.5 * (1.0 - logistic * (0.5 * x).tanh())
        }
    }
}

/// `max_k |-psi''/2 + V psi - E psi|` over grid points at least two steps
/// from either end, with a five-point `psi''`.
pub fn schrodinger_residual<P, V>(mut psi: P, mut v: V, energy: f64, x_grid: &GridSpec) -> f64
where
    P: FnMut(f64) -> Complex64,
    V: FnMut(f64) -> f64,
{
    let n = x_grid.n();
    let h = x_grid.step();
    let samples: alloc::vec::Vec<Complex64> = x_grid.points().map(&mut psi).collect();
    let mut worst = 0.0f64;
    for k in 2..n - 2 {
        let d2 = (-samples[k - 2] + samples[k - 1] * 16.0 - samples[k] * 30.0
            + samples[k + 1] * 16.0
            - samples[k + 2])
            / (12.0 * h * h);
        let x = x_grid.point(k);
        let r = -d2 * 0.5 + samples[k] * (v(x) - energy);
        worst = worst.max(r.norm());
    }
    worst
}

/// Central-difference `psi'(x)/psi(x)` with step `h`.
pub fn log_derivative<P>(mut psi: P, x: f64, h: f64) -> Complex64
where
    P: FnMut(f64) -> Complex64,
{
    (psi(x + h) - psi(x - h)) / (psi(x) * (2.0 * h))
}
