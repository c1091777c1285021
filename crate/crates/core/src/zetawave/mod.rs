//! Wavefunctions on the half-line whose hyperbolic-momentum amplitudes carry
//! the Lerch transcendent and the Riemann zeta function.
//!
//! * `psi_{z,u}(x) = N e^{-u x} / (1 - z e^{-x})` has Mellin transform
//!   `N Gamma(s) Phi(z, s, u)`; at `z = -1, u = 1` this is `psi_zeta` with
//!   amplitude `N (1 - 2^{1-s}) Gamma(s) zeta(s)`.
//! * The alternating sum `Sigma(x, phi) = sum_{n>=1} (-1)^{n-1} g(n x, phi)`
//!   replaces `Gamma(s)` by `Xi(s, phi) = pi cos(phi s) / sin(pi s)`, which
//!   decays far more slowly along the critical line.
//! * [`zero_scan`] locates the nodes of the momentum amplitude, which are the
//!   zeta zeros.

mod lerch_wave;
mod sigma;
mod zeros;

pub use lerch_wave::{
    boundary_kappa, log_derivative, potential_eval, psi_lerch_eval, psi_lerch_momentum_closed,
    psi_zeta_momentum_closed, schrodinger_residual, LerchWave, PotentialKind, PotentialProfile,
    PSI_ZETA_NORM,
};
pub use sigma::{
    chi_momentum_closed, g_family_eval, g_mellin_closed, sigma_eval, sigma_unnormalized, SigmaWave,
    PHI_MAX, SMALL_X,
};
pub use zeros::{zero_scan, MAX_COARSE_STEP, ZERO_REL_THRESHOLD};
