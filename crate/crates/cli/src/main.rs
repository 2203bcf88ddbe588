mod args;
mod commands;
mod error;
mod report;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;
use report::Report;

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Moments { ctx, bold } => commands::moments(ctx, *bold, g),
        Command::Mahler { ctx } => commands::mahler(ctx, g),
        Command::Mass { ctx, t } => commands::mass(ctx, *t, g),
        Command::Lp { ctx, beta, s, route } => commands::lp(ctx, *beta, s, *route, g),
        Command::ZetaSh { ctx, s } => commands::zeta_sh(ctx, s, g),
        Command::Cohen { cmd } => commands::cohen(cmd, g),
        Command::Adelic { a, m, c, n, modulus } => commands::adelic(*a, *m, *c, *n, *modulus),
        Command::Verify(v) => suites::run(v, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = report.emit(cli.global.format, &mut out).and_then(|_| Ok(out.flush()?)) {
                eprintln!("ahz: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("ahz: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
