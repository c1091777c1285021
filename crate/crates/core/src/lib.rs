//! Quantum mechanics on the half-line, viewed in hyperbolic phase space.
//!
//! The change of basis from position `x > 0` to the hyperbolic momentum
//! `p_eta` (the generator of dilations) is a Mellin transform evaluated on the
//! critical line `s = 1/2 - i p_eta`. This crate provides:
//!
//! * [`specialfn`]: reference evaluations of the complex Gamma function, the
//!   Dirichlet eta and beta functions, zeta on the critical line and the Lerch
//!   transcendent.
//! * [`hyperbolic`]: sampled wavefunctions, the `x -> eta = ln x` map and the
//!   FFT/quadrature Mellin transforms.
//! * [`zetawave`]: wavefunctions whose hyperbolic-momentum profile carries the
//!   Riemann zeta function, their potentials and the zero scanner.
//! * [`wigner`]: the Wigner function on `(eta, p_eta)` and its marginals.
//! * [`dpo`]: the semiclassical degenerate parametric oscillator used as an
//!   indirect meter of hyperbolic momentum.
//!
//! The crate is `no_std` and only needs `alloc`. Units are fixed to
//! `hbar = m = 1`.

#![no_std]
// `num_traits::Float` supplies float math on toolchains whose `core` lacks it.
#![allow(unused_imports)]
// `!(a < b)` comparisons deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod accel;
pub mod dpo;
mod error;
pub mod fft;
pub mod hyperbolic;
pub mod quad;
pub mod specialfn;
pub mod wigner;
pub mod zetawave;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// A complex value tagged with the real abscissa it was computed at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexSample {
    pub abscissa: f64,
    pub value: Complex64,
}

impl ComplexSample {
    pub const fn new(abscissa: f64, value: Complex64) -> Self {
        Self { abscissa, value }
    }

    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite()
    }
}

#[inline]
pub(crate) fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
