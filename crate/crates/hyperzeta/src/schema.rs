//! Column headers of every table the commands write.

pub const TRANSFORM: &[&str] = &["p_eta", "re", "im", "abs"];
/// `transform` with several `--phi` values.
pub const TRANSFORM_SWEEP: &[&str] = &["phi", "p_eta", "re", "im", "abs"];
pub const WAVEFN: &[&str] = &["x", "value"];
/// `wavefn` with several `--phi` values.
pub const WAVEFN_SWEEP: &[&str] = &["phi", "x", "value"];
pub const ZEROS: &[&str] = &["index", "t"];
pub const WIGNER: &[&str] = &["eta", "p_eta", "w_value"];
pub const DPO: &[&str] = &["tau", "x_pb", "v", "w", "u_dpo", "p_pb", "conserved"];
/// `dpo --random`.
pub const DPO_SWEEP: &[&str] = &["run", "x_s", "p_s", "drift", "w_min", "w_max"];
pub const LERCH: &[&str] = &["z_re", "z_im", "s_re", "s_im", "u", "re", "im", "abs"];
/// `lerch --check`.
pub const LERCH_CHECK: &[&str] = &[
    "z_re", "z_im", "s_re", "s_im", "u", "re", "im", "abs", "check_re", "check_im", "error",
];
