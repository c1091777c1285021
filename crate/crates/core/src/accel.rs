//! Convergence acceleration for alternating series.
//!
//! Sums of the form `sum_{k>=0} (-1)^k a_k` are evaluated with the
//! Cohen–Rodriguez Villegas–Zagier polynomial scheme. When `a_k` is a moment
//! sequence `a_k = int_0^1 t^k dmu(t)` the error after `n` terms is bounded
//! by `2 |mu| / (3 + sqrt 8)^n`, which covers `k^{-s}`, `(2k+1)^{-s}` and
//! samples of completely monotone functions.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

/// Number of terms of the first acceleration pass.
pub const DEFAULT_CVZ_TERMS: usize = 64;

/// `(3 + sqrt 8)^n` overflows an `f64` beyond this.
const CVZ_TERM_CAP: usize = 400;

/// Budget and target accuracy for accelerated or directly summed series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccelConfig {
    pub max_terms: usize,
    pub abs_tol: f64,
}

impl Default for AccelConfig {
    fn default() -> Self {
        Self {
            max_terms: 1_000_000,
            abs_tol: 1e-12,
        }
    }
}

impl AccelConfig {
    pub fn new(max_terms: usize, abs_tol: f64) -> Result<Self> {
        let cfg = Self { max_terms, abs_tol };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        if !(self.abs_tol >= 10.0 * f64::EPSILON) || !self.abs_tol.is_finite() {
            return Err(Error::domain(alloc::format!(
                "abs_tol = {:e} is below 10 machine epsilons",
                self.abs_tol
            )));
        }
        Ok(())
    }
}

/// One pass of the CVZ scheme with `n` terms: approximates
/// `sum_{k>=0} (-1)^k a[k]` using `a[..n]`.
pub fn cvz_sum(a: &[Complex64], n: usize) -> Complex64 {
    debug_assert!(n <= a.len() && n <= CVZ_TERM_CAP);
    let nf = n as f64;
    let d = (3.0 + 8.0.sqrt()).powi(n as i32);
    let d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = Complex64::new(0.0, 0.0);
    for (k, &ak) in a.iter().take(n).enumerate() {
        let kf = k as f64;
        c = b - c;
        s += ak * c;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

fn schedule(max_terms: usize) -> Vec<usize> {
    let cap = max_terms.min(CVZ_TERM_CAP);
    let mut out = Vec::new();
    if cap < DEFAULT_CVZ_TERMS {
        let lo = (cap * 2 / 3).max(1);
        if lo < cap {
            out.push(lo);
        }
        out.push(cap);
        return out;
    }
    let mut n = DEFAULT_CVZ_TERMS;
    while n < cap {
        out.push(n);
        n += n / 2;
    }
    out.push(cap);
    out
}

/// Accelerated value of `sum_{k>=0} (-1)^k a(k)`.
///
/// Passes with a growing number of terms are compared; the sum is accepted
/// once two consecutive passes agree to `cfg.abs_tol`.
pub fn alternating_sum<F>(cfg: &AccelConfig, what: &'static str, mut a: F) -> Result<Complex64>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    let steps = schedule(cfg.max_terms);
    let mut terms: Vec<Complex64> = Vec::with_capacity(*steps.last().unwrap_or(&0));
    let mut prev: Option<Complex64> = None;
    for &n in &steps {
        while terms.len() < n {
            let k = terms.len();
            let ak = a(k)?;
            if !crate::is_finite(ak) {
                return Err(Error::Convergence {
                    what,
                    terms: k,
                    tol: cfg.abs_tol,
                });
            }
            terms.push(ak);
        }
        let s = cvz_sum(&terms, n);
        if let Some(p) = prev {
            if (s - p).norm() <= cfg.abs_tol {
                return Ok(s);
            }
        }
        prev = Some(s);
    }
    Err(Error::Convergence {
        what,
        terms: terms.len(),
        tol: cfg.abs_tol,
    })
}
