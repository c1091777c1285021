//! One function per subcommand; each returns the table it would write.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use hyperzeta_core::accel::AccelConfig;
use hyperzeta_core::dpo::{dpo_init, dpo_integrate, DpoConfig, DpoMethod};
use hyperzeta_core::hyperbolic::{
    mellin_critical, mellin_integral_direct, to_eta_representation, Axis, GridSpec,
};
use hyperzeta_core::quad::QuadConfig;
use hyperzeta_core::specialfn::{
    gamma_complex, lerch_integrand, lerch_phi, zeta_critical, LerchParams,
};
use hyperzeta_core::wigner::WignerPlan;
use hyperzeta_core::zetawave::{
    chi_momentum_closed, g_mellin_closed, potential_eval, psi_lerch_eval,
    psi_lerch_momentum_closed, psi_zeta_momentum_closed, sigma_eval, zero_scan, LerchWave,
    PotentialKind, PotentialProfile, SigmaWave,
};

use crate::args::{
    DpoArgs, LerchArgs, LerchParamsArgs, Method, PotentialArgs, PotentialChoice, TransformArgs,
    TransformInput, WaveState, WavefnArgs, WignerArgs, WignerState, XGridArgs, ZeroState,
    ZerosArgs,
};
use crate::error::{CliError, Result};
use crate::schema;
use crate::table::Table;

/// Tolerances shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub accel: AccelConfig,
    pub quad: QuadConfig,
}

impl Tolerance {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(CliError::Usage(format!(
                "--tol must lie in (0, 1), got {tol}"
            )));
        }
        Ok(Self {
            accel: AccelConfig::new(AccelConfig::default().max_terms, tol)?,
            quad: QuadConfig::with_tol(tol),
        })
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn lerch_z(a: &LerchParamsArgs) -> Complex64 {
    Complex64::new(a.z, a.z_im)
}

fn real_z(a: &LerchParamsArgs) -> Result<f64> {
    if a.z_im != 0.0 {
        return Err(usage("this command takes a real --z"));
    }
    Ok(a.z)
}

fn x_grid(g: &XGridArgs) -> Result<GridSpec> {
    Ok(GridSpec::new(g.x_min, g.x_max, g.n, Axis::XHalfLine)?)
}

/// `<p|psi>` on the `|p| <= p_max` part of the dual grid, closed form or FFT.
fn transform_one(a: &TransformArgs, phi: f64, tol: &Tolerance) -> Result<Vec<(f64, Complex64)>> {
    let eta = GridSpec::new(a.eta_min, a.eta_max, a.n, Axis::EtaLine)?;
    let ps: Vec<f64> = eta
        .dual()?
        .points()
        .filter(|p| p.abs() <= a.p_max)
        .collect();
    let accel = &tol.accel;
    let inv_sqrt_2pi = 1.0 / (2.0 * PI).sqrt();
    let closed_only = matches!(a.input, TransformInput::Zeta | TransformInput::Xi);
    if a.method == Method::Closed || closed_only {
        let lerch = match a.input {
            TransformInput::Lerch => Some(LerchWave::new(lerch_z(&a.lerch), a.lerch.u)?),
            _ => None,
        };
        let sigma = match a.input {
            TransformInput::Sigma => Some(SigmaWave::new(phi, *accel)?),
            _ => None,
        };
        let f = |p: f64| -> Result<Complex64> {
            let s = Complex64::new(0.5, -p);
            Ok(match (a.input, &lerch, &sigma) {
                (TransformInput::Exp, ..) => gamma_complex(s)? * inv_sqrt_2pi,
                (TransformInput::PsiZeta, ..) => psi_zeta_momentum_closed(p, accel)?,
                (TransformInput::Lerch, Some(w), _) => psi_lerch_momentum_closed(w, p, accel)?,
                (TransformInput::Sigma, _, Some(w)) => chi_momentum_closed(p, w)?,
                (TransformInput::Lerch | TransformInput::Sigma, ..) => unreachable!(),
                (TransformInput::Zeta, ..) => zeta_critical(-p, accel)?,
                (TransformInput::Xi, ..) => g_mellin_closed(s, phi)?,
            })
        };
        return ps.into_par_iter().map(|p| Ok((p, f(p)?))).collect();
    }
    let psi = match a.input {
        TransformInput::Exp => {
            to_eta_representation(|x| Ok(Complex64::new((-x).exp(), 0.0)), &eta)?
        }
        TransformInput::PsiZeta => {
            let w = LerchWave::zeta()?;
            to_eta_representation(|x| Ok(psi_lerch_eval(&w, x)), &eta)?
        }
        TransformInput::Lerch => {
            let w = LerchWave::new(lerch_z(&a.lerch), a.lerch.u)?;
            to_eta_representation(|x| Ok(psi_lerch_eval(&w, x)), &eta)?
        }
        TransformInput::Sigma => {
            let w = SigmaWave::new(phi, *accel)?;
            to_eta_representation(|x| sigma_eval(&w, x).map(|v| Complex64::new(v, 0.0)), &eta)?
        }
        TransformInput::Zeta | TransformInput::Xi => unreachable!(),
    };
    Ok(mellin_critical(&psi)?
        .samples()
        .filter(|s| s.abscissa.abs() <= a.p_max)
        .map(|s| (s.abscissa, s.value))
        .collect())
}

pub fn transform(a: &TransformArgs, tol: &Tolerance) -> Result<Table> {
    let sweep = a.phi.len() > 1;
    if sweep && !matches!(a.input, TransformInput::Sigma | TransformInput::Xi) {
        return Err(usage("a --phi sweep is only available for sigma and xi"));
    }
    let mut t = Table::new(if sweep {
        schema::TRANSFORM_SWEEP
    } else {
        schema::TRANSFORM
    });
    for &phi in &a.phi {
        for (p, v) in transform_one(a, phi, tol)? {
            let mut row = vec![p, v.re, v.im, v.norm()];
            if sweep {
                row.insert(0, phi);
            }
            t.push(row);
        }
    }
    let input = format!("{:?}", a.input).to_lowercase();
    Ok(t.with_meta("command", "transform")
        .with_meta("input", input)
        .with_meta("method", format!("{:?}", a.method).to_lowercase())
        .with_meta("eta", json!([a.eta_min, a.eta_max, a.n]))
        .with_meta("phi", json!(a.phi)))
}

pub fn wavefn(a: &WavefnArgs, tol: &Tolerance) -> Result<Table> {
    let grid = x_grid(&a.grid)?;
    let sweep = a.phi.len() > 1;
    if sweep && a.state != WaveState::Sigma {
        return Err(usage("a --phi sweep is only available for sigma"));
    }
    let mut t = Table::new(if sweep {
        schema::WAVEFN_SWEEP
    } else {
        schema::WAVEFN
    });
    match a.state {
        WaveState::PsiZeta | WaveState::Lerch => {
            let w = if a.state == WaveState::PsiZeta {
                LerchWave::zeta()?
            } else {
                LerchWave::new(Complex64::new(real_z(&a.lerch)?, 0.0), a.lerch.u)?
            };
            for x in grid.points() {
                t.push(vec![x, psi_lerch_eval(&w, x).re]);
            }
        }
        WaveState::Sigma => {
            for &phi in &a.phi {
                let w = SigmaWave::new(phi, tol.accel)?;
                for x in grid.points() {
                    let v = sigma_eval(&w, x)?;
                    t.push(if sweep { vec![phi, x, v] } else { vec![x, v] });
                }
            }
        }
    }
    Ok(t.with_meta("command", "wavefn")
        .with_meta("state", format!("{:?}", a.state).to_lowercase()))
}

pub fn potential(a: &PotentialArgs) -> Result<Table> {
    let grid = x_grid(&a.grid)?;
    let profile = match a.kind {
        PotentialChoice::Zeta => PotentialProfile::zeta(),
        PotentialChoice::Vbar => PotentialProfile::new(
            PotentialKind::VbarGeneral,
            Complex64::new(real_z(&a.lerch)?, 0.0),
            a.lerch.u,
        )?,
    };
    let mut t = Table::new(schema::WAVEFN);
    for x in grid.points() {
        t.push(vec![x, potential_eval(&profile, x)]);
    }
    Ok(t.with_meta("command", "potential")
        .with_meta("kind", format!("{:?}", a.kind).to_lowercase()))
}

pub fn zeros(a: &ZerosArgs, tol: &Tolerance) -> Result<Table> {
    let (lo, hi) = (a.range[0], a.range[1]);
    let accel = tol.accel;
    let found = match a.state {
        ZeroState::PsiZeta => zero_scan(
            |t| psi_zeta_momentum_closed(-t, &accel).map(|z| z.norm()),
            (lo, hi),
            a.step,
        )?,
        ZeroState::Zeta => zero_scan(
            |t| zeta_critical(t, &accel).map(|z| z.norm()),
            (lo, hi),
            a.step,
        )?,
        ZeroState::Sigma => {
            let w = SigmaWave::new(a.phi, accel)?;
            zero_scan(
                |t| chi_momentum_closed(-t, &w).map(|z| z.norm()),
                (lo, hi),
                a.step,
            )?
        }
    };
    let mut t = Table::new(schema::ZEROS);
    for (i, z) in found.into_iter().enumerate() {
        t.push(vec![(i + 1) as f64, z]);
    }
    Ok(t.with_meta("command", "zeros")
        .with_meta("state", format!("{:?}", a.state).to_lowercase())
        .with_meta("range", json!([lo, hi])))
}

/// Both tails of the supported states have decayed below the edge threshold
/// inside this window.
const WIGNER_INPUT_WINDOW: (f64, f64) = (-40.0, 40.0);

pub fn wigner(a: &WignerArgs, tol: &Tolerance) -> Result<Table> {
    if a.every == 0 {
        return Err(usage("--every must be at least 1"));
    }
    let rows = GridSpec::new(a.eta[0], a.eta[1], a.n, Axis::EtaLine)?;
    let cols = GridSpec::new(a.p[0], a.p[1], a.n, Axis::PEtaLine)?;
    // The input grid shares the row step, so every row is a grid row.
    let step = rows.step();
    let left = ((rows.min() - WIGNER_INPUT_WINDOW.0) / step)
        .ceil()
        .max(0.0);
    let start = rows.min() - left * step;
    let span = ((rows.max().max(WIGNER_INPUT_WINDOW.1) - start) / step).ceil() as usize + 1;
    let input = GridSpec::from_step(start, step, span.next_power_of_two(), Axis::EtaLine)?;
    let psi = match a.state {
        WignerState::PsiZeta => {
            let w = LerchWave::zeta()?;
            to_eta_representation(|x| Ok(psi_lerch_eval(&w, x)), &input)?
        }
        WignerState::Sigma => {
            let w = SigmaWave::new(a.phi, tol.accel)?;
            to_eta_representation(
                |x| sigma_eval(&w, x).map(|v| Complex64::new(v, 0.0)),
                &input,
            )?
        }
    };
    let plan = WignerPlan::new(&psi, rows, cols)?;
    let computed: Vec<_> = (0..plan.n_rows())
        .into_par_iter()
        .map(|i| plan.row(i))
        .collect();
    let grid = plan.assemble(computed)?;
    let mut t = Table::new(schema::WIGNER);
    for i in (0..rows.n()).step_by(a.every) {
        for k in (0..cols.n()).step_by(a.every) {
            t.push(vec![rows.point(i), cols.point(k), grid.get(i, k)]);
        }
    }
    Ok(t.with_meta("command", "wigner")
        .with_meta("state", format!("{:?}", a.state).to_lowercase())
        .with_meta("imag_residue", grid.imag_residue()))
}

pub fn dpo(a: &DpoArgs, seed: u64) -> Result<Table> {
    if a.stride == 0 {
        return Err(usage("--stride must be at least 1"));
    }
    let cfg = DpoConfig::new(a.dt, a.tend, DpoMethod::Rk4)?;
    if let Some(runs) = a.random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let starts: Vec<(f64, f64)> = (0..runs)
            .map(|_| (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let results = starts
            .par_iter()
            .map(|&(xs, ps)| {
                dpo_integrate(dpo_init(xs, ps), &cfg)
                    .map(|tr| (tr.conservation_drift(), tr.w_range()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut t = Table::new(schema::DPO_SWEEP);
        for (i, ((xs, ps), (drift, (lo, hi)))) in starts.into_iter().zip(results).enumerate() {
            t.push(vec![i as f64, xs, ps, drift, lo, hi]);
        }
        return Ok(t.with_meta("command", "dpo").with_meta("seed", seed));
    }
    let tr = dpo_integrate(dpo_init(a.xs, a.ps), &cfg)?;
    let mut t = Table::new(schema::DPO);
    let last = tr.len() - 1;
    for (i, (tau, s)) in tr.samples.iter().enumerate() {
        if i % a.stride == 0 || i == last {
            t.push(vec![*tau, s.x_pb, s.v, s.w, s.u_dpo, s.p_pb, s.conserved()]);
        }
    }
    let (lo, hi) = tr.w_range();
    Ok(t.with_meta("command", "dpo")
        .with_meta("initial", json!([a.xs, a.ps]))
        .with_meta("w_range", json!([lo, hi]))
        .with_meta("drift", tr.conservation_drift()))
}

/// The `lerch --check` reference does not depend on `--tol`, so the reported
/// error tracks the series alone.
const CHECK_REFERENCE_TOL: f64 = 1e-12;

pub fn lerch(a: &LerchArgs, tol: &Tolerance) -> Result<Table> {
    let z = Complex64::new(a.z, a.z_im);
    let s = Complex64::new(a.s, a.s_im);
    let v = lerch_phi(&LerchParams::new(z, s, a.u)?, &tol.accel)?;
    let mut row = vec![a.z, a.z_im, a.s, a.s_im, a.u, v.re, v.im, v.norm()];
    let t = if a.check {
        let integral = mellin_integral_direct(
            |x| lerch_integrand(z, x, a.u),
            s,
            &QuadConfig::with_tol(CHECK_REFERENCE_TOL),
        )?;
        let reference = integral / gamma_complex(s)?;
        row.extend([reference.re, reference.im, (v - reference).norm()]);
        Table::new(schema::LERCH_CHECK)
    } else {
        Table::new(schema::LERCH)
    };
    let mut t = t;
    t.push(row);
    Ok(t.with_meta("command", "lerch"))
}
