//! Reference evaluations of the special functions the transforms are checked
//! against: complex Gamma, Dirichlet eta and beta, zeta on the critical line,
//! Hurwitz zeta and the Lerch transcendent.

mod gamma;
mod lerch;
mod zeta;

pub use gamma::gamma_complex;
pub use lerch::{hurwitz_zeta, lerch_integrand, lerch_phi, LerchParams};
pub use zeta::{dirichlet_beta, dirichlet_eta, dirichlet_partial_sum, zeta_critical};

/// Absolute distance at which an argument counts as sitting on a pole or
/// singularity.
pub const POLE_TOL: f64 = 1e-14;

/// `B_{2k}` for `k = 1..=12`.
pub(crate) const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];
