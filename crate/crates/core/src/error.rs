use alloc::string::String;

use num_complex::Complex64;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole {
        function: &'static str,
        at: Complex64,
    },

    #[error("{what} did not reach tolerance {tol:e} within {terms} terms")]
    Convergence {
        what: &'static str,
        terms: usize,
        tol: f64,
    },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("singular integrand: |e^t - z| = {distance:e}")]
    Singularity { distance: f64 },

    #[error("wavefunction evaluation failed at x = {x}")]
    Evaluation { x: f64 },

    #[error("window too small: |psi| = {edge:e} at eta = {eta} exceeds the edge-decay threshold")]
    Truncation { eta: f64, edge: f64 },

    #[error("quadrature did not converge after {levels} refinements (last change {change:e})")]
    Quadrature { levels: u32, change: f64 },

    #[error("trajectory left the representable range at tau = {tau}")]
    Step { tau: f64 },

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("state is not normalized: norm = {norm}")]
    Normalization { norm: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn grid(msg: impl Into<String>) -> Self {
        Error::Grid(msg.into())
    }

    /// True for errors raised because a numerical method failed to converge,
    /// as opposed to invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Convergence { .. } | Error::Quadrature { .. } | Error::Step { .. }
        )
    }
}
