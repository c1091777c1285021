//! The unitary change of basis from the half-line `x > 0` to hyperbolic
//! momentum.
//!
//! A wavefunction `psi(x)` is carried to `eta = ln x` as
//! `psi_bar(eta) = e^{eta/2} psi(e^eta)`, which preserves the `L^2` norm.
//! Its hyperbolic-momentum amplitude is then an ordinary Fourier transform,
//!
//! ```text
//! <p|psi> = (2 pi)^{-1/2} int psi_bar(eta) e^{-i p eta} d eta
//!         = (2 pi)^{-1/2} (M psi)(1/2 - i p),
//! ```
//!
//! evaluated on a uniform `eta` grid by FFT. [`mellin_integral_direct`] is
//! the slow quadrature route valid for any `s`.

mod grid;
mod transform;

pub use grid::{Axis, GridSpec, WaveGrid};
pub(crate) use transform::check_edges;
pub use transform::{
    mellin_critical, mellin_critical_at, mellin_integral_direct, parseval_check,
    to_eta_representation, EDGE_DECAY_TOL,
};
