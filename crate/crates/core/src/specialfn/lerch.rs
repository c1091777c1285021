use num_complex::Complex64;
use num_traits::Float;

use super::zeta::pow_neg;
use super::{BERNOULLI_EVEN, POLE_TOL};
use crate::accel::{alternating_sum, AccelConfig};
use crate::{Error, Result};

/// Largest `|z|` summed directly; the annulus up to the unit circle is
/// rejected.
pub const DIRECT_SERIES_RADIUS: f64 = 0.99;

/// Validated argument triple `(z, s, u)` of the Lerch transcendent
/// `Phi(z, s, u) = sum_{n>=0} z^n (n + u)^{-s}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LerchParams {
    z: Complex64,
    s: Complex64,
    u: f64,
}

impl LerchParams {
    /// Requires `|z| <= 1`, `u > 0`, and on the unit circle `Re s > 1`
    /// (`Re s > 0` when `z = -1`).
    pub fn new(z: Complex64, s: Complex64, u: f64) -> Result<Self> {
        if !crate::is_finite(z) || !crate::is_finite(s) || !u.is_finite() {
            return Err(Error::domain("Lerch parameters must be finite"));
        }
        if !(u > 0.0) {
            return Err(Error::domain(alloc::format!(
                "Lerch shift u = {u} must be positive"
            )));
        }
        let r = z.norm();
        if r > 1.0 + POLE_TOL {
            return Err(Error::domain(alloc::format!("|z| = {r} exceeds 1")));
        }
        if (r - 1.0).abs() <= POLE_TOL {
            let minus_one = (z + 1.0).norm() <= POLE_TOL;
            if minus_one && !(s.re > 0.0) {
                return Err(Error::domain("z = -1 requires Re(s) > 0"));
            }
            if !minus_one && !(s.re > 1.0) {
                return Err(Error::domain("|z| = 1 requires Re(s) > 1"));
            }
        }
        Ok(Self { z, s, u })
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    pub fn u(&self) -> f64 {
        self.u
    }
}

/// Lerch transcendent `Phi(z, s, u)`.
///
/// Direct series with a geometric tail bound for `|z| <= 0.99`, accelerated
/// alternating series at `z = -1` and Hurwitz zeta at `z = 1`. Other points
/// with `|z| > 0.99` are a domain error.
pub fn lerch_phi(p: &LerchParams, cfg: &AccelConfig) -> Result<Complex64> {
    cfg.validate()?;
    let LerchParams { z, s, u } = *p;
    let r = z.norm();
    if r <= DIRECT_SERIES_RADIUS {
        return direct_series(z, s, u, cfg);
    }
    if (z + 1.0).norm() <= POLE_TOL {
        return alternating_sum(cfg, "lerch_phi(z = -1)", |n| Ok(pow_neg(n as f64 + u, s)));
    }
    if (z - 1.0).norm() <= POLE_TOL {
        return hurwitz_zeta(s, u, cfg);
    }
    Err(Error::domain(alloc::format!(
        "lerch_phi: |z| = {r} lies outside |z| <= {DIRECT_SERIES_RADIUS} and z is not +-1"
    )))
}

fn direct_series(z: Complex64, s: Complex64, u: f64, cfg: &AccelConfig) -> Result<Complex64> {
    let r = z.norm();
    let mut sum = pow_neg(u, s);
    if r == 0.0 {
        return Ok(sum);
    }
    let sigma = s.re;
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 1..cfg.max_terms {
        zn *= z;
        let base = u + n as f64;
        sum += zn * pow_neg(base, s);
        // Bound on sum_{k>n} |z|^k (u+k)^{-sigma}.
        let next = zn.norm() * r * (base + 1.0).powf(-sigma);
        let q = if sigma >= 0.0 {
            r
        } else {
            r * ((base + 2.0) / (base + 1.0)).powf(-sigma)
        };
        if q < 1.0 && next / (1.0 - q) <= cfg.abs_tol {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        what: "lerch_phi direct series",
        terms: cfg.max_terms,
        tol: cfg.abs_tol,
    })
}

/// Hurwitz zeta `sum_{n>=0} (n + u)^{-s}` by Euler–Maclaurin summation;
/// valid for every `s != 1`.
pub fn hurwitz_zeta(s: Complex64, u: f64, cfg: &AccelConfig) -> Result<Complex64> {
    if !crate::is_finite(s) || !(u > 0.0) || !u.is_finite() {
        return Err(Error::domain("hurwitz_zeta requires finite s and u > 0"));
    }
    if (s - 1.0).norm() < POLE_TOL {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            at: s,
        });
    }
    let n_direct = 20 + (2.0 * s.norm()).ceil() as usize;
    if n_direct > cfg.max_terms {
        return Err(Error::Convergence {
            what: "hurwitz_zeta",
            terms: cfg.max_terms,
            tol: cfg.abs_tol,
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in (0..n_direct).rev() {
        sum += pow_neg(u + n as f64, s);
    }
    let a = u + n_direct as f64;
    let a_s = pow_neg(a, s);
    sum += a_s * a / (s - 1.0) + a_s * 0.5;
    // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * a^{-s-2k+1}
    let mut rising = s;
    let mut power = a_s / a;
    let mut fact = 2.0;
    let mut last = f64::INFINITY;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = rising * power * (b / fact);
        sum += term;
        last = term.norm();
        if last <= cfg.abs_tol * 1e-3 {
            return Ok(sum);
        }
        let j = 2.0 * (k as f64 + 1.0);
        rising *= (s + (j - 1.0)) * (s + j);
        power /= a * a;
        fact *= (j + 1.0) * (j + 2.0);
    }
    if last <= cfg.abs_tol {
        Ok(sum)
    } else {
        Err(Error::Convergence {
            what: "hurwitz_zeta",
            terms: n_direct,
            tol: cfg.abs_tol,
        })
    }
}

/// Mellin integrand `chi(z, t, u) = e^{-(u-1) t} / (e^t - z)`, `t >= 0`.
pub fn lerch_integrand(z: Complex64, t: f64, u: f64) -> Result<Complex64> {
    if !(t >= 0.0) || !t.is_finite() || !u.is_finite() || !crate::is_finite(z) {
        return Err(Error::domain(alloc::format!(
            "lerch_integrand needs finite t >= 0, got {t}"
        )));
    }
    if t < 40.0 {
        let denom = Complex64::new(t.exp(), 0.0) - z;
        let distance = denom.norm();
        if distance < POLE_TOL {
            return Err(Error::Singularity { distance });
        }
        return Ok((-(u - 1.0) * t).exp() / denom);
    }
    // e^{-(u-1)t}/(e^t - z) = e^{-u t}/(1 - z e^{-t})
    Ok((-u * t).exp() / (Complex64::new(1.0, 0.0) - z * (-t).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn params_validation() {
        assert!(LerchParams::new(c(1.1, 0.0), c(2.0, 0.0), 1.0).is_err());
        assert!(LerchParams::new(c(0.5, 0.0), c(2.0, 0.0), 0.0).is_err());
        assert!(LerchParams::new(c(-1.0, 0.0), c(0.5, 3.0), 1.0).is_ok());
        assert!(LerchParams::new(c(-1.0, 0.0), c(0.0, 3.0), 1.0).is_err());
        assert!(LerchParams::new(c(1.0, 0.0), c(1.0, 0.0), 1.0).is_err());
        assert!(LerchParams::new(c(0.0, 1.0), c(1.5, 0.0), 1.0).is_ok());
    }

    #[test]
    fn z_zero_is_single_term() {
        let cfg = AccelConfig::default();
        let s = c(0.5, -3.0);
        let p = LerchParams::new(c(0.0, 0.0), s, 2.5).unwrap();
        assert!((lerch_phi(&p, &cfg).unwrap() - pow_neg(2.5, s)).norm() < 1e-15);
    }

    #[test]
    fn logarithm() {
        let p = LerchParams::new(c(0.5, 0.0), c(1.0, 0.0), 1.0).unwrap();
        let v = lerch_phi(&p, &AccelConfig::default()).unwrap();
        assert!((v - 2.0 * LN_2).norm() < 1e-12);
    }

    #[test]
    fn hurwitz_reduces_to_zeta() {
        let cfg = AccelConfig::default();
        let v = hurwitz_zeta(c(2.0, 0.0), 1.0, &cfg).unwrap();
        assert!((v - PI * PI / 6.0).norm() < 1e-13);
        // zeta(s, 1/2) = (2^s - 1) zeta(s)
        let v = hurwitz_zeta(c(4.0, 0.0), 0.5, &cfg).unwrap();
        assert!((v - 15.0 * PI.powi(4) / 90.0).norm() < 1e-12);
        assert!(matches!(
            hurwitz_zeta(c(1.0, 0.0), 1.0, &cfg),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn annulus_and_circle_rejected() {
        let cfg = AccelConfig::default();
        let p = LerchParams::new(c(0.995, 0.0), c(2.0, 0.0), 1.0).unwrap();
        assert!(matches!(lerch_phi(&p, &cfg), Err(Error::Domain(_))));
        let p = LerchParams::new(c(0.0, 1.0), c(2.0, 0.0), 1.0).unwrap();
        assert!(matches!(lerch_phi(&p, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn integrand_values() {
        let t = 1.3;
        assert!((lerch_integrand(c(0.0, 0.0), t, 1.0).unwrap() - (-t).exp()).norm() < 1e-15);
        let v = lerch_integrand(c(-1.0, 0.0), t, 1.0).unwrap();
        assert!((v - 1.0 / (t.exp() + 1.0)).norm() < 1e-15);
        let z = c(0.3, 0.4);
        let v = lerch_integrand(z, 0.0, 3.0).unwrap();
        assert!((v - 1.0 / (c(1.0, 0.0) - z)).norm() < 1e-15);
        assert!(matches!(
            lerch_integrand(c(1.0, 0.0), 0.0, 1.0),
            Err(Error::Singularity { .. })
        ));
        assert!(lerch_integrand(c(0.5, 0.0), -1.0, 1.0).is_err());
        let far = lerch_integrand(c(0.5, 0.0), 800.0, 0.5).unwrap();
        assert!(crate::is_finite(far) && far.norm() < 1e-170);
    }
}
