//! `sbvp` — solve, tabulate and plot asymptotic approximations for
//! singularly perturbed two-point boundary value problems.

mod output;
mod run;
mod svg;

use std::process::ExitCode;

fn main() -> ExitCode {
    match run::run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
