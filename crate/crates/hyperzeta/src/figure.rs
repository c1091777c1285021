//! Gnuplot scripts with the data inlined as datablocks.
//!
//! A script depends only on the parsed [`Table`], so CSV and JSON inputs with
//! the same contents give byte-identical scripts.

use std::fmt::Write as _;

use crate::error::{CliError, Result};
use crate::schema;
use crate::table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureId {
    /// |zeta| against the rescaled log|psi_zeta|.
    #[value(name = "FIG1_I")]
    Fig1I,
    /// |zeta| against |chi| for the phi = 3 state, linear and log panels.
    #[value(name = "FIG1_II")]
    Fig1II,
    /// Sigma(x, phi) for each phi of a sweep.
    #[value(name = "FIG2A")]
    Fig2A,
    /// Heatmap of |Xi(1/2 + it, phi)|.
    #[value(name = "FIG2B")]
    Fig2B,
    /// Wigner surface of psi_zeta.
    #[value(name = "FIG7")]
    Fig7,
    /// Wigner details of psi_zeta: W, ln|W|, p-marginal, |zeta|.
    #[value(name = "FIG8")]
    Fig8,
    /// Wigner surface of the phi = 3 state.
    #[value(name = "FIG9")]
    Fig9,
    /// Wigner details of the phi = 3 state.
    #[value(name = "FIG10")]
    Fig10,
}

impl FigureId {
    pub fn stem(self) -> &'static str {
        match self {
            FigureId::Fig1I => "fig1_i",
            FigureId::Fig1II => "fig1_ii",
            FigureId::Fig2A => "fig2a",
            FigureId::Fig2B => "fig2b",
            FigureId::Fig7 => "fig7",
            FigureId::Fig8 => "fig8",
            FigureId::Fig9 => "fig9",
            FigureId::Fig10 => "fig10",
        }
    }

    pub fn needs_overlay(self) -> bool {
        matches!(
            self,
            FigureId::Fig1I | FigureId::Fig1II | FigureId::Fig8 | FigureId::Fig10
        )
    }
}

/// Rows as a named datablock; a blank line separates runs of equal `group`
/// column values (gnuplot scans), two blank lines separate indexed blocks.
fn datablock<'a, I>(out: &mut String, name: &str, rows: I, group: Option<(usize, usize)>)
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let _ = writeln!(out, "${name} << EOD");
    let mut last: Option<f64> = None;
    for row in rows {
        if let Some((col, blanks)) = group {
            if last.is_some_and(|v| v != row[col]) {
                out.push_str(&"\n".repeat(blanks));
            }
            last = Some(row[col]);
        }
        let line: Vec<String> = row.iter().map(f64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.push_str("EOD\n\n");
}

fn header(out: &mut String, stem: &str, size: &str) {
    let _ = writeln!(out, "set terminal pngcairo size {size} enhanced");
    let _ = writeln!(out, "set output '{stem}.png'");
}

fn select<'a>(t: &'a Table, cols: &[usize], keep: impl Fn(&[f64]) -> bool + 'a) -> Vec<Vec<f64>> {
    t.rows
        .iter()
        .filter(|r| keep(r))
        .map(|r| cols.iter().map(|&c| r[c]).collect())
        .collect()
}

fn slices(rows: &[Vec<f64>]) -> impl Iterator<Item = &[f64]> {
    rows.iter().map(Vec::as_slice)
}

/// `(p, int W deta)` from a long-form Wigner table.
fn p_marginal(t: &Table) -> Result<Vec<Vec<f64>>> {
    let mut etas: Vec<f64> = Vec::new();
    let mut groups: Vec<Vec<(f64, f64)>> = Vec::new();
    for r in &t.rows {
        if etas.last() != Some(&r[0]) {
            etas.push(r[0]);
            groups.push(Vec::new());
        }
        groups.last_mut().unwrap().push((r[1], r[2]));
    }
    let n_p = groups.first().map_or(0, Vec::len);
    if etas.len() < 2 || groups.iter().any(|g| g.len() != n_p) {
        return Err(CliError::Schema(
            "Wigner rows do not form a rectangular grid".into(),
        ));
    }
    let mut out: Vec<Vec<f64>> = groups[0].iter().map(|&(p, _)| vec![p, 0.0]).collect();
    for (i, g) in groups.iter().enumerate() {
        let left = if i > 0 { etas[i] - etas[i - 1] } else { 0.0 };
        let right = if i + 1 < etas.len() {
            etas[i + 1] - etas[i]
        } else {
            0.0
        };
        let w = 0.5 * (left + right);
        for (o, (p, v)) in out.iter_mut().zip(g) {
            if o[0] != *p {
                return Err(CliError::Schema(
                    "Wigner rows use different p_eta grids".into(),
                ));
            }
            o[1] += w * v;
        }
    }
    Ok(out)
}

fn overlay_or_usage(id: FigureId, overlay: Option<&Table>) -> Result<&Table> {
    let t = overlay.ok_or_else(|| {
        CliError::Usage(format!(
            "{} needs --overlay with a `transform --input zeta` table",
            id.stem().to_uppercase()
        ))
    })?;
    t.expect_columns(schema::TRANSFORM)?;
    Ok(t)
}

fn wigner_map(out: &mut String, data: &str, z: &str, title: &str) {
    let _ = writeln!(
        out,
        "set view map\nset pm3d map\nset xlabel 'eta'\nset ylabel 'p_{{eta}}'"
    );
    let _ = writeln!(out, "set title '{title}'");
    let _ = writeln!(out, "splot {data} using 1:2:({z}) with pm3d notitle");
}

pub fn figure_script(id: FigureId, data: &Table, overlay: Option<&Table>) -> Result<String> {
    let mut s = String::new();
    let stem = id.stem();
    match id {
        FigureId::Fig1I => {
            data.expect_columns(schema::TRANSFORM)?;
            let zeta = overlay_or_usage(id, overlay)?;
            let window = |r: &[f64]| r[0] < 0.0 && r[0] >= -40.0;
            datablock(&mut s, "psi", slices(&select(data, &[0, 3], window)), None);
            datablock(&mut s, "zeta", slices(&select(zeta, &[0, 3], window)), None);
            header(&mut s, stem, "1200,400");
            s.push_str("set xlabel '-p_{eta}'\nset xrange [0:40]\n");
            s.push_str(
                "plot $zeta using (-$1):2 with lines lc rgb 'blue' title '|{/Symbol z}(1/2 - i p_{eta})|', \\\n     \
                 $psi using (-$1):(log($2)/(-$1)) with lines lc rgb 'red' title 'log|{/Symbol y}_{/Symbol z}(p_{eta})| / (-p_{eta})'\n",
            );
        }
        FigureId::Fig1II => {
            data.expect_columns(schema::TRANSFORM)?;
            let zeta = overlay_or_usage(id, overlay)?;
            let window = |r: &[f64]| r[0] <= 0.0;
            datablock(&mut s, "chi", slices(&select(data, &[0, 3], window)), None);
            datablock(&mut s, "zeta", slices(&select(zeta, &[0, 3], window)), None);
            header(&mut s, stem, "1200,500");
            s.push_str("set multiplot layout 1,2\nset xlabel '-p_{eta}'\n");
            let plot = "plot $zeta using (-$1):2 with lines lc rgb 'blue' title '|{/Symbol z}|', \\\n     \
                        $chi using (-$1):2 with lines lc rgb 'red' title '|{/Symbol c}(p_{eta})|'\n";
            s.push_str("set title '(IIA)'\n");
            s.push_str(plot);
            s.push_str("set title '(IIB)'\nset logscale y\n");
            s.push_str(plot);
            s.push_str("unset multiplot\n");
        }
        FigureId::Fig2A => {
            data.expect_columns(schema::WAVEFN_SWEEP)?;
            let mut phis: Vec<f64> = Vec::new();
            for r in &data.rows {
                if phis.last() != Some(&r[0]) {
                    phis.push(r[0]);
                }
            }
            datablock(&mut s, "sigma", slices(&data.rows), Some((0, 2)));
            header(&mut s, stem, "800,500");
            s.push_str(
                "set xlabel 'x'\nset ylabel '{/Symbol S}(x, {/Symbol f})'\nset logscale x\n",
            );
            let clauses: Vec<String> = phis
                .iter()
                .enumerate()
                .map(|(i, phi)| {
                    format!("$sigma index {i} using 2:3 with lines title '{{/Symbol f}} = {phi}'")
                })
                .collect();
            let _ = writeln!(s, "plot {}", clauses.join(", \\\n     "));
        }
        FigureId::Fig2B => {
            data.expect_columns(schema::TRANSFORM_SWEEP)?;
            let rows = select(data, &[0, 1, 4], |r| r[1] <= 0.0 && r[1] >= -30.0);
            datablock(&mut s, "xi", slices(&rows), Some((0, 1)));
            header(&mut s, stem, "800,600");
            s.push_str("set view map\nset pm3d map\nset xlabel 't'\nset ylabel '{/Symbol f}'\n");
            s.push_str("set title '|{/Symbol X}(1/2 + it, {/Symbol f})|'\n");
            s.push_str("splot $xi using (-$2):1:3 with pm3d notitle\n");
        }
        FigureId::Fig7 | FigureId::Fig9 => {
            data.expect_columns(schema::WIGNER)?;
            datablock(&mut s, "w", slices(&data.rows), Some((0, 1)));
            header(&mut s, stem, "900,700");
            s.push_str("set pm3d\nset xlabel 'eta'\nset ylabel 'p_{eta}'\nset zlabel 'W'\n");
            s.push_str("splot $w using 1:2:3 with pm3d notitle\n");
        }
        FigureId::Fig8 | FigureId::Fig10 => {
            data.expect_columns(schema::WIGNER)?;
            let zeta = overlay_or_usage(id, overlay)?;
            let marginal = p_marginal(data)?;
            let (lo, hi) = marginal
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), r| {
                    (a.min(r[0]), b.max(r[0]))
                });
            datablock(&mut s, "w", slices(&data.rows), Some((0, 1)));
            datablock(&mut s, "marginal", slices(&marginal), None);
            datablock(
                &mut s,
                "zeta",
                slices(&select(zeta, &[0, 3], |r| r[0] >= lo && r[0] <= hi)),
                None,
            );
            header(&mut s, stem, "1200,1000");
            s.push_str("set multiplot layout 2,2\n");
            wigner_map(&mut s, "$w", "$3", "(A) W");
            wigner_map(&mut s, "$w", "log(abs($3))", "(B) ln|W|");
            s.push_str("unset pm3d\nset xlabel 'p_{eta}'\nunset ylabel\n");
            s.push_str("set title '(C) {/Symbol \\362} W d{/Symbol h}'\n");
            s.push_str("plot $marginal using 1:2 with lines notitle\n");
            s.push_str("set title '(D) |{/Symbol z}(1/2 - i p_{eta})|'\n");
            s.push_str("plot $zeta using 1:2 with lines notitle\n");
            s.push_str("unset multiplot\n");
        }
    }
    Ok(s)
}

/// Quick-look script for any table produced by a data command.
pub fn quicklook_script(t: &Table, stem: &str) -> Result<String> {
    let mut s = String::new();
    let cols: Vec<&str> = t.columns.iter().map(String::as_str).collect();
    let plot = match cols.as_slice() {
        c if c == schema::TRANSFORM => {
            datablock(&mut s, "d", slices(&t.rows), None);
            "set xlabel 'p_{eta}'\nset logscale y\nplot $d using 1:4 with lines title '|<p_{eta}|{/Symbol y}>|'\n"
        }
        c if c == schema::TRANSFORM_SWEEP => {
            datablock(&mut s, "d", slices(&t.rows), Some((0, 1)));
            "set view map\nset pm3d map\nset xlabel 'p_{eta}'\nset ylabel '{/Symbol f}'\nsplot $d using 2:1:5 with pm3d notitle\n"
        }
        c if c == schema::WAVEFN => {
            datablock(&mut s, "d", slices(&t.rows), None);
            "set xlabel 'x'\nplot $d using 1:2 with lines notitle\n"
        }
        c if c == schema::WAVEFN_SWEEP => {
            datablock(&mut s, "d", slices(&t.rows), Some((0, 2)));
            "set xlabel 'x'\nplot for [i=0:*] $d index i using 2:3 with lines notitle\n"
        }
        c if c == schema::ZEROS => {
            datablock(&mut s, "d", slices(&t.rows), None);
            "set xlabel 't'\nset yrange [0:1]\nplot $d using 2:(1) with impulses notitle\n"
        }
        c if c == schema::WIGNER => {
            datablock(&mut s, "d", slices(&t.rows), Some((0, 1)));
            "set view map\nset pm3d map\nset xlabel 'eta'\nset ylabel 'p_{eta}'\nsplot $d using 1:2:3 with pm3d notitle\n"
        }
        c if c == schema::DPO => {
            datablock(&mut s, "d", slices(&t.rows), None);
            "set xlabel '{/Symbol t}'\nplot $d using 1:2 with lines title 'x_{pb}', $d using 1:6 with lines title 'p_{pb}'\n"
        }
        c if c == schema::DPO_SWEEP => {
            datablock(&mut s, "d", slices(&t.rows), None);
            "set xlabel 'run'\nset logscale y\nplot $d using 1:4 with points title 'drift'\n"
        }
        _ => {
            return Err(CliError::Usage(format!(
                "no plot recipe for columns {}",
                t.columns.join(",")
            )))
        }
    };
    header(&mut s, stem, "900,600");
    s.push_str(plot);
    Ok(s)
}
