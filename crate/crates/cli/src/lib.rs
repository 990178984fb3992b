//! The `ucr` command line: parity tables, density grids, Airy-zero tables
//! and the trajectory check, written as CSV or JSON.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::Report;
use config::{RunConfig, DEFAULT_COMPARE_TOL, DEFAULT_VERIFY_TOL};
use error::{CliError, CliResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_PARITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "UCR_CONFIG";

/// Runs one invocation and returns the exit status. `env_config` stands in
/// for `UCR_CONFIG`.
pub fn run<I, T>(argv: I, env_config: Option<PathBuf>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, env_config, stdout) {
        Ok(report) => {
            for line in &report.summary {
                let _ = writeln!(stderr, "{line}");
            }
            if report.passed {
                EXIT_OK
            } else {
                EXIT_PARITY
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "ucr: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, env_config: Option<PathBuf>, stdout: &mut dyn Write) -> CliResult<Report> {
    let (args, tol, need_system, exec): (_, _, _, fn(&RunConfig) -> CliResult<Report>) = match command {
        Command::Compare(a) => (a, DEFAULT_COMPARE_TOL, true, commands::cmd_compare),
        Command::Density(a) => (a, DEFAULT_COMPARE_TOL, true, commands::cmd_density),
        Command::AiryZeros(a) => (a, DEFAULT_COMPARE_TOL, false, commands::cmd_airy_zeros),
        Command::Verify(a) => (a, DEFAULT_VERIFY_TOL, true, commands::cmd_verify),
        Command::Systems => {
            stdout.write_all(commands::systems_listing().as_bytes())?;
            return Ok(Report {
                table: table::Table::new(Vec::new()),
                passed: true,
                summary: Vec::new(),
            });
        }
    };
    let merged = config::load(args, env_config)?;
    let cfg = RunConfig::resolve(&merged, tol, need_system)?;
    let report = exec(&cfg)?;
    let text = report.table.render(cfg.format)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            CliError::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
        })?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(report)
}
