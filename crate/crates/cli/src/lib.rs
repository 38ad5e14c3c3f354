//! Command-line front end for `turankit`.

pub mod args;
pub mod commands;
pub mod error;
pub mod family_file;
pub mod format;
pub mod parse;
pub mod plot;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::Report;
use crate::error::CliResult;

/// Exit code when a counterexample or violated claim was found.
pub const EXIT_FINDINGS: i32 = 3;

pub fn execute(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Eval(a) => commands::cmd_eval(a),
        Command::Check(a) => commands::cmd_check(a, false),
        Command::Certify(a) => commands::cmd_check(a, true),
        Command::SharpTheta(a) => commands::cmd_sharp_theta(a),
        Command::Claims(a) => commands::cmd_claims(a),
        Command::Audit(a) => commands::cmd_audit(a),
        Command::Remark(a) => commands::cmd_remark(a),
        Command::Plot(a) => commands::cmd_plot(a),
        Command::AskeyCheck(a) => commands::cmd_askey(a),
        Command::HermiteCheck(a) => commands::cmd_hermite(a),
    }
}

fn common(cli: &Cli) -> &args::Common {
    match &cli.command {
        Command::Eval(a) => &a.common,
        Command::Check(a) | Command::Certify(a) => &a.common,
        Command::SharpTheta(a) => &a.common,
        Command::Claims(a) => &a.common,
        Command::Audit(a) => &a.common,
        Command::Remark(a) => &a.common,
        Command::Plot(a) => &a.common,
        Command::AskeyCheck(a) => &a.common,
        Command::HermiteCheck(a) => &a.common,
    }
}

fn run_parsed(cli: &Cli) -> CliResult<i32> {
    let report = execute(cli)?;
    let common = common(cli);
    let text = commands::render(&report, common.format)?;
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(if report.findings { EXIT_FINDINGS } else { 0 })
}

/// Parses `args` (program name first), runs the command and returns the exit code:
/// 0 clean, 1 math or i/o failure, 2 bad arguments, 3 counterexample or violation.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_parsed(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
