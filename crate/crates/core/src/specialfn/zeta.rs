use num_complex::Complex64;
use num_traits::Float;

use crate::accel::{alternating_sum, AccelConfig};
use crate::{Error, Result};

/// `n^{-s}` for real `n > 0`.
#[inline]
pub(crate) fn pow_neg(n: f64, s: Complex64) -> Complex64 {
    (-s * n.ln()).exp()
}

fn require_positive_re(s: Complex64, what: &str) -> Result<()> {
    if !crate::is_finite(s) || !(s.re > 0.0) {
        return Err(Error::domain(alloc::format!(
            "{what} requires Re(s) > 0, got s = {s}"
        )));
    }
    Ok(())
}

/// Dirichlet eta `sum_{k>=1} (-1)^{k-1} k^{-s}`, `Re s > 0`.
pub fn dirichlet_eta(s: Complex64, cfg: &AccelConfig) -> Result<Complex64> {
    require_positive_re(s, "dirichlet_eta")?;
    cfg.validate()?;
    alternating_sum(cfg, "dirichlet_eta", |k| Ok(pow_neg(k as f64 + 1.0, s)))
}

/// Riemann zeta on the critical line, `zeta(1/2 + i t)`.
pub fn zeta_critical(t: f64, cfg: &AccelConfig) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::domain("zeta_critical requires finite t"));
    }
    let s = Complex64::new(0.5, t);
    let eta = dirichlet_eta(s, cfg)?;
    // 1 - 2^{1-s} never vanishes on Re s = 1/2.
    let factor = Complex64::new(1.0, 0.0) - pow_neg(2.0, s - 1.0);
    Ok(eta / factor)
}

/// Dirichlet beta `sum_{k>=0} (-1)^k (2k+1)^{-s}`, `Re s > 0`.
pub fn dirichlet_beta(s: Complex64, cfg: &AccelConfig) -> Result<Complex64> {
    require_positive_re(s, "dirichlet_beta")?;
    cfg.validate()?;
    alternating_sum(cfg, "dirichlet_beta", |k| {
        Ok(pow_neg(2.0 * k as f64 + 1.0, s))
    })
}

/// Truncated Dirichlet series `sum_{n=1}^{n_max} n^{-s}`.
///
/// This is the hyperbolic-momentum profile of a comb state cut off after
/// `n_max` teeth. On the critical line it oscillates without limit as
/// `n_max` grows and is *not* an approximation of `zeta(s)` there.
/// Summation is Neumaier-compensated.
pub fn dirichlet_partial_sum(s: Complex64, n_max: usize) -> Result<Complex64> {
    if n_max < 1 {
        return Err(Error::domain("dirichlet_partial_sum requires n_max >= 1"));
    }
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    for n in 1..=n_max {
        let term = pow_neg(n as f64, s);
        re.add(term.re);
        im.add(term.im);
    }
    Ok(Complex64::new(re.value(), im.value()))
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
