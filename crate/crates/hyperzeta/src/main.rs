use std::process::ExitCode;

use clap::Parser;

use hyperzeta::args::Cli;
use hyperzeta::execute;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hyperzeta: {e}");
            ExitCode::from(e.status() as u8)
        }
    }
}
