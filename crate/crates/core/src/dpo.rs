//! Semiclassical degenerate parametric oscillator used as an indirect meter
//! of hyperbolic momentum.
//!
//! With `tau = 4 chi t`, probe quadratures `2 beta = x_pb + i p_pb`, system
//! quadratures `2 alpha = x_s + i p_s` and `2u = x_s^2 - p_s^2`,
//! `2w = x_s^2 + p_s^2`, `v = x_s p_s`, the c-number equations are linear in
//! each variable:
//!
//! ```text
//! x_pb' = v/2,  v' = -x_pb w,  w' = -x_pb v + p_pb u,  u' = p_pb w,  p_pb' = -u/2.
//! ```
//!
//! `C = x_pb^2 + p_pb^2 + w` is conserved, and eliminating the system
//! variables leaves `2 x_pb'' = -x_pb (C - r^2)` (likewise for `p_pb`), motion
//! in the central potential `V = C r^2/4 - r^4/8`.

use alloc::vec::Vec;

use num_traits::Float;

use crate::{Error, Result};

/// Components beyond this abort the integration.
pub const BLOW_UP: f64 = 1e12;

/// `(x_pb, v, w, u_dpo, p_pb)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DpoState {
    pub x_pb: f64,
    pub v: f64,
    pub w: f64,
    pub u_dpo: f64,
    pub p_pb: f64,
}

impl DpoState {
    pub const fn new(x_pb: f64, v: f64, w: f64, u_dpo: f64, p_pb: f64) -> Self {
        Self {
            x_pb,
            v,
            w,
            u_dpo,
            p_pb,
        }
    }

    /// `x_pb^2 + p_pb^2 + w`.
    pub fn conserved(&self) -> f64 {
        self.x_pb * self.x_pb + self.p_pb * self.p_pb + self.w
    }

    pub fn to_array(self) -> [f64; 5] {
        [self.x_pb, self.v, self.w, self.u_dpo, self.p_pb]
    }

    pub fn from_array(a: [f64; 5]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4])
    }

    fn axpy(self, h: f64, d: Self) -> Self {
        Self::new(
            self.x_pb + h * d.x_pb,
            self.v + h * d.v,
            self.w + h * d.w,
            self.u_dpo + h * d.u_dpo,
            self.p_pb + h * d.p_pb,
        )
    }

    fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DpoMethod {
    /// Classical fourth-order Runge–Kutta.
    #[default]
    Rk4,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DpoConfig {
    dt: f64,
    t_end: f64,
    method: DpoMethod,
}

impl DpoConfig {
    /// Default step.
    pub const DEFAULT_DT: f64 = 1e-4;

    /// Requires `0 < dt <= 1e-3 t_end`.
    pub fn new(dt: f64, t_end: f64, method: DpoMethod) -> Result<Self> {
        if !(dt > 0.0) || !(t_end > 0.0) || !t_end.is_finite() {
            return Err(Error::domain("DPO step and end time must be positive"));
        }
        if dt > 1e-3 * t_end {
            return Err(Error::domain(alloc::format!(
                "dt = {dt} exceeds 1e-3 t_end = {}",
                1e-3 * t_end
            )));
        }
        Ok(Self { dt, t_end, method })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn method(&self) -> DpoMethod {
        self.method
    }
}

/// Vacuum probe and system quadratures `(x_s, p_s)`.
pub fn dpo_init(x_s: f64, p_s: f64) -> DpoState {
    DpoState::new(
        0.0,
        x_s * p_s,
        0.5 * (x_s * x_s + p_s * p_s),
        0.5 * (x_s * x_s - p_s * p_s),
        0.0,
    )
}

/// Time derivative of the state.
pub fn dpo_rhs(s: &DpoState) -> DpoState {
    DpoState::new(
        0.5 * s.v,
        -s.x_pb * s.w,
        -s.x_pb * s.v + s.p_pb * s.u_dpo,
        s.p_pb * s.w,
        -0.5 * s.u_dpo,
    )
}

/// One classical RK4 step; `dt` may be negative.
pub fn rk4_step(s: &DpoState, dt: f64) -> DpoState {
    let k1 = dpo_rhs(s);
    let k2 = dpo_rhs(&s.axpy(0.5 * dt, k1));
    let k3 = dpo_rhs(&s.axpy(0.5 * dt, k2));
    let k4 = dpo_rhs(&s.axpy(dt, k3));
    DpoState::new(
        s.x_pb + dt / 6.0 * (k1.x_pb + 2.0 * k2.x_pb + 2.0 * k3.x_pb + k4.x_pb),
        s.v + dt / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
        s.w + dt / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w),
        s.u_dpo + dt / 6.0 * (k1.u_dpo + 2.0 * k2.u_dpo + 2.0 * k3.u_dpo + k4.u_dpo),
        s.p_pb + dt / 6.0 * (k1.p_pb + 2.0 * k2.p_pb + 2.0 * k3.p_pb + k4.p_pb),
    )
}

/// Samples `(tau, state)` at every step, `tau_k = k dt`, ending at `t_end`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<(f64, DpoState)>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn last(&self) -> Option<&(f64, DpoState)> {
        self.samples.last()
    }

    /// `(min w, max w)` along the trajectory.
    pub fn w_range(&self) -> (f64, f64) {
        self.samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (_, s)| {
                (lo.min(s.w), hi.max(s.w))
            })
    }

    /// `max_tau |C(tau) - C(0)| / (1 + tau)`.
    pub fn conservation_drift(&self) -> f64 {
        let Some((_, s0)) = self.samples.first() else {
            return 0.0;
        };
        let c0 = s0.conserved();
        self.samples
            .iter()
            .map(|(t, s)| (s.conserved() - c0).abs() / (1.0 + t))
            .fold(0.0, f64::max)
    }
}

/// Integrates from `tau = 0` to `cfg.t_end()`.
pub fn dpo_integrate(s0: DpoState, cfg: &DpoConfig) -> Result<Trajectory> {
    let DpoMethod::Rk4 = cfg.method;
    let n = (cfg.t_end / cfg.dt - 1e-9).ceil().max(1.0) as usize;
    let mut samples = Vec::with_capacity(n + 1);
    let mut s = s0;
    if !(s.max_abs() <= BLOW_UP) {
        return Err(Error::Step { tau: 0.0 });
    }
    samples.push((0.0, s));
    for k in 1..=n {
        let t_prev = (k - 1) as f64 * cfg.dt;
        let t = if k == n { cfg.t_end } else { k as f64 * cfg.dt };
        s = rk4_step(&s, t - t_prev);
        if !(s.max_abs() <= BLOW_UP) {
            return Err(Error::Step { tau: t });
        }
        samples.push((t, s));
    }
    Ok(Trajectory { samples })
}

/// Leading terms of the small-`tau` expansion,
/// `x_pb = (v0/2) tau [1 - w0 tau^2/12]`, `p_pb = -(u0/2) tau [1 - w0 tau^2/12]`.
pub fn dpo_series(s0: &DpoState, tau: f64) -> (f64, f64) {
    let bracket = 1.0 - s0.w * tau * tau / 12.0;
    (0.5 * s0.v * tau * bracket, -0.5 * s0.u_dpo * tau * bracket)
}

/// Largest violation of the central-potential equations
/// `2 x'' + x (K - r^2) = 0`, `2 p'' + p (K - r^2) = 0` with `K = C(0)`, using
/// second differences at interior samples.
pub fn central_potential_check(traj: &Trajectory) -> Result<f64> {
    let s = &traj.samples;
    if s.len() < 5 {
        return Err(Error::domain(
            "central_potential_check needs at least 5 samples",
        ));
    }
    let h = s[1].0 - s[0].0;
    // The final step may be shortened to land on t_end; drop it.
    let uniform = s
        .windows(2)
        .take(s.len() - 2)
        .all(|w| ((w[1].0 - w[0].0) - h).abs() <= 1e-9 * h);
    if !uniform || !(h > 0.0) {
        return Err(Error::domain(
            "central_potential_check needs uniform samples",
        ));
    }
    let end = if ((s[s.len() - 1].0 - s[s.len() - 2].0) - h).abs() <= 1e-9 * h {
        s.len() - 1
    } else {
        s.len() - 2
    };
    let k_const = s[0].1.conserved();
    let mut worst = 0.0f64;
    for i in 1..end {
        let (a, b, c) = (&s[i - 1].1, &s[i].1, &s[i + 1].1);
        let xdd = (a.x_pb - 2.0 * b.x_pb + c.x_pb) / (h * h);
        let pdd = (a.p_pb - 2.0 * b.p_pb + c.p_pb) / (h * h);
        let r2 = b.x_pb * b.x_pb + b.p_pb * b.p_pb;
        let e = (2.0 * xdd + b.x_pb * (k_const - r2)).abs()
            + (2.0 * pdd + b.p_pb * (k_const - r2)).abs();
        worst = worst.max(e);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_states() {
        assert_eq!(dpo_init(0.0, 0.0), DpoState::default());
        assert_eq!(dpo_init(1.0, 1.0), DpoState::new(0.0, 1.0, 1.0, 0.0, 0.0));
        assert_eq!(dpo_init(2.0, 1.0), DpoState::new(0.0, 2.0, 2.5, 1.5, 0.0));
    }

    #[test]
    fn rhs_values() {
        assert_eq!(dpo_rhs(&DpoState::default()), DpoState::default());
        assert_eq!(
            dpo_rhs(&DpoState::new(0.0, 1.0, 1.0, 0.0, 0.0)),
            DpoState::new(0.5, 0.0, 0.0, 0.0, 0.0)
        );
        let s = DpoState::new(0.3, -1.2, 0.7, 0.4, -0.9);
        let d = dpo_rhs(&s);
        let dc = 2.0 * s.x_pb * d.x_pb + 2.0 * s.p_pb * d.p_pb + d.w;
        assert!(dc.abs() < 1e-15);
    }

    #[test]
    fn config_validation() {
        assert!(DpoConfig::new(1e-4, 1.0, DpoMethod::Rk4).is_ok());
        assert!(DpoConfig::new(1e-2, 1.0, DpoMethod::Rk4).is_err());
        assert!(DpoConfig::new(0.0, 1.0, DpoMethod::Rk4).is_err());
        assert!(DpoConfig::new(1e-4, -1.0, DpoMethod::Rk4).is_err());
    }

    #[test]
    fn zero_is_fixed() {
        let cfg = DpoConfig::new(1e-3, 1.0, DpoMethod::Rk4).unwrap();
        let t = dpo_integrate(DpoState::default(), &cfg).unwrap();
        assert_eq!(t.len(), 1001);
        assert!(t.samples.iter().all(|(_, s)| *s == DpoState::default()));
        assert_eq!(t.last().unwrap().0, 1.0);
        assert_eq!(central_potential_check(&t).unwrap(), 0.0);
    }

    #[test]
    fn uneven_final_step_lands_on_t_end() {
        let cfg = DpoConfig::new(3e-4, 1.0, DpoMethod::Rk4).unwrap();
        let t = dpo_integrate(dpo_init(1.0, 1.0), &cfg).unwrap();
        assert_eq!(t.last().unwrap().0, 1.0);
        assert!(central_potential_check(&t).unwrap() < 1e-4);
    }

    #[test]
    fn time_reversal() {
        let s = dpo_init(1.3, -0.7);
        let s = rk4_step(&s, 0.1);
        let back = rk4_step(&rk4_step(&s, 1e-3), -1e-3);
        for (a, b) in s.to_array().iter().zip(back.to_array()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn blow_up_guard() {
        let cfg = DpoConfig::new(1e-3, 1.0, DpoMethod::Rk4).unwrap();
        let r = dpo_integrate(DpoState::new(0.0, 2e12, 0.0, 0.0, 0.0), &cfg);
        assert!(matches!(r, Err(Error::Step { .. })));
    }
}
