use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::accel::{alternating_sum, AccelConfig};
use crate::quad::{exp_sinh_real, QuadConfig};
use crate::specialfn::{zeta_critical, BERNOULLI_EVEN};
use crate::{Error, Result};

/// Largest admissible `phi`; near `pi` the kernel `g` develops a pole on the
/// positive axis.
pub const PHI_MAX: f64 = 3.0;

/// Below this `Sigma` is evaluated from its small-`x` expansion.
pub const SMALL_X: f64 = 0.01;

/// `g(x, phi) = (1 + x cos phi) / (1 + 2 x cos phi + x^2) = Re 1/(1 + x e^{i phi})`,
/// unnormalized.
pub fn g_family_eval(phi: f64, x: f64) -> f64 {
    let c = phi.cos();
    (1.0 + x * c) / (1.0 + 2.0 * x * c + x * x)
}

/// Mellin transform of `g(., phi)`,
/// `Xi(s, phi) = pi/(2 sin pi s) [(cos phi - i|sin phi|)^s + (cos phi + i|sin phi|)^s]`
/// with principal-branch powers, for `0 < Re s < 1`.
pub fn g_mellin_closed(s: Complex64, phi: f64) -> Result<Complex64> {
    if !crate::is_finite(s) || !phi.is_finite() {
        return Err(Error::domain("g_mellin_closed needs finite s and phi"));
    }
    let n = s.re.round();
    if (s - n).norm() < crate::specialfn::POLE_TOL {
        return Err(Error::Pole {
            function: "g_mellin_closed",
            at: s,
        });
    }
    if !(s.re > 0.0 && s.re < 1.0) {
        return Err(Error::domain(alloc::format!(
            "g_mellin_closed needs 0 < Re s < 1, got {s}"
        )));
    }
    let (c, sn) = (phi.cos(), phi.sin().abs());
    let ln_r = c.hypot(sn).ln();
    let theta = sn.atan2(c);
    let lower = (s * Complex64::new(ln_r, -theta)).exp();
    let upper = (s * Complex64::new(ln_r, theta)).exp();
    Ok((lower + upper) * PI / ((s * PI).sin() * 2.0))
}

/// `T_k` in `Sigma(x) = 1/2 + sum_{k odd} T_k cos(k phi) x^k`,
/// `T_k = -(2^{k+1} - 1) B_{k+1} / (k + 1)`.
fn small_x_coefficient(k: usize) -> f64 {
    let b = BERNOULLI_EVEN[k.div_ceil(2) - 1];
    -((1u64 << (k + 1)) as f64 - 1.0) * b / (k + 1) as f64
}

const SMALL_X_ORDER: usize = 15;

/// Unnormalized `sum_{n>=1} (-1)^{n-1} g(n x, phi)`, `x > 0`.
pub fn sigma_unnormalized(phi: f64, x: f64, accel: &AccelConfig) -> Result<f64> {
    check_phi(phi)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(alloc::format!(
            "Sigma needs finite x > 0, got {x}"
        )));
    }
    if x < SMALL_X {
        let mut sum = 0.5;
        let mut power = x;
        for k in (1..=SMALL_X_ORDER).step_by(2) {
            sum += small_x_coefficient(k) * (k as f64 * phi).cos() * power;
            power *= x * x;
        }
        let next = small_x_coefficient(SMALL_X_ORDER + 2).abs() * power;
        if next > accel.abs_tol {
            return Err(Error::Convergence {
                what: "Sigma small-x expansion",
                terms: SMALL_X_ORDER,
                tol: accel.abs_tol,
            });
        }
        return Ok(sum);
    }
    // Past n0 the sequence g(n x) is monotone and CVZ applies.
    let n0 = ((phi.cos().abs() + 0.5) / x).ceil().max(1.0) as usize;
    let mut head = 0.0;
    for n in 1..n0 {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        head += sign * g_family_eval(phi, n as f64 * x);
    }
    let tail = alternating_sum(accel, "Sigma", |k| {
        Ok(Complex64::new(g_family_eval(phi, (n0 + k) as f64 * x), 0.0))
    })?
    .re;
    let sign = if n0 % 2 == 1 { 1.0 } else { -1.0 };
    Ok(head + sign * tail)
}

fn check_phi(phi: f64) -> Result<()> {
    if !(0.0..=PHI_MAX).contains(&phi) {
        return Err(Error::domain(alloc::format!(
            "phi = {phi} outside [0, {PHI_MAX}]"
        )));
    }
    Ok(())
}

/// Normalized `Sigma(x, phi) = N(phi) sum_{n>=1} (-1)^{n-1} g(n x, phi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SigmaWave {
    phi: f64,
    norm: f64,
    accel: AccelConfig,
}

impl SigmaWave {
    /// Computes `N(phi)` by quadrature of `Sigma^2`.
    pub fn new(phi: f64, accel: AccelConfig) -> Result<Self> {
        check_phi(phi)?;
        accel.validate()?;
        let mass = exp_sinh_real(
            |x| {
                if x == 0.0 {
                    return Ok(0.25);
                }
                sigma_unnormalized(phi, x, &accel).map(|v| v * v)
            },
            0.0,
            &QuadConfig::default(),
        )?;
        Ok(Self {
            phi,
            norm: mass.sqrt().recip(),
            accel,
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn accel(&self) -> &AccelConfig {
        &self.accel
    }
}

/// `Sigma(x, phi)` for `x > 0`.
pub fn sigma_eval(w: &SigmaWave, x: f64) -> Result<f64> {
    Ok(w.norm * sigma_unnormalized(w.phi, x, &w.accel)?)
}

/// `<p|Sigma> = N(phi) (1 - 2^{1/2 + i p}) zeta(1/2 - i p) Xi(1/2 - i p, phi) / sqrt(2 pi)`.
pub fn chi_momentum_closed(p_eta: f64, w: &SigmaWave) -> Result<Complex64> {
    let s = Complex64::new(0.5, -p_eta);
    let factor =
        Complex64::new(1.0, 0.0) - (Complex64::new(0.5, p_eta) * core::f64::consts::LN_2).exp();
    let zeta = zeta_critical(-p_eta, &w.accel)?;
    let xi = g_mellin_closed(s, w.phi)?;
    Ok(factor * zeta * xi * (w.norm / (2.0 * PI).sqrt()))
}
