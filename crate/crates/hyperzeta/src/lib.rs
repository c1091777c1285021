//! Command-line front end for `hyperzeta-core`: argument parsing, CSV and
//! JSON tables, and gnuplot figure recipes.

pub mod args;
pub mod error;
pub mod figure;
pub mod run;
pub mod schema;
pub mod table;

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use args::{Cli, Command};
use error::{CliError, Result};
use table::Table;

fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::io(format!("writing {}", p.display()), e))
        }
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("writing standard output", e)),
    }
}

/// Executes one parsed command line.
pub fn execute(cli: &Cli) -> Result<()> {
    if let Command::Figure(f) = &cli.command {
        if cli.plot {
            return Err(CliError::Usage("--plot does not apply to figure".into()));
        }
        let data = Table::read_path(&f.data)?;
        let overlay = f.overlay.as_deref().map(Table::read_path).transpose()?;
        let script = figure::figure_script(f.id, &data, overlay.as_ref())?;
        return write_text(cli.out.as_deref(), &script);
    }
    if cli.plot && cli.out.is_none() {
        return Err(CliError::Usage("--plot needs --out".into()));
    }
    let tol = run::Tolerance::new(cli.tol)?;
    let table = match &cli.command {
        Command::Transform(a) => run::transform(a, &tol)?,
        Command::Wavefn(a) => run::wavefn(a, &tol)?,
        Command::Potential(a) => run::potential(a)?,
        Command::Zeros(a) => run::zeros(a, &tol)?,
        Command::Wigner(a) => run::wigner(a, &tol)?,
        Command::Dpo(a) => run::dpo(a, cli.seed)?,
        Command::Lerch(a) => run::lerch(a, &tol)?,
        Command::Figure(_) => unreachable!(),
    };
    let table = table.with_meta("tol", cli.tol);
    // Build the script before writing anything so a missing recipe leaves no partial output.
    let script = match (&cli.out, cli.plot) {
        (Some(out), true) => {
            let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("plot");
            Some((
                out.with_extension("gp"),
                figure::quicklook_script(&table, stem)?,
            ))
        }
        _ => None,
    };
    table.emit(cli.format, cli.out.as_deref())?;
    if let Some((path, text)) = script {
        write_text(Some(&path), &text)?;
    }
    Ok(())
}
