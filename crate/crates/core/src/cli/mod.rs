//! Command-line front end. Commands return their exit code and output text
//! so they can be driven in-process.

mod args;
mod commands;
mod report;

use std::ffi::OsString;

use clap::Parser;

pub use args::{ClassArgs, Cli, Command};
pub use commands::{cmd_count, cmd_exists, cmd_generate, cmd_graph, cmd_verify};

use crate::class::ClassSpec;

/// Process exit status; a total function of the outcome category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Ok = 0,
    /// Bad arguments, invalid class parameters, or cap exceeded.
    Usage = 1,
    /// A correct negative answer: no U-cycle, or an invalid candidate.
    Negative = 2,
    /// Self-verification or count cross-check failed.
    Internal = 3,
    /// A known existence result disagrees with the engine.
    Contradiction = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: ExitCode,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self::with(ExitCode::Ok, stdout)
    }

    fn with(code: ExitCode, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: ExitCode, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Everything a subcommand needs: the unbound class plus output options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub spec: ClassSpec,
    pub format: OutputFormat,
    pub canonical: bool,
}

/// Parses `args` (program name first) and runs the selected subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: ExitCode::Usage,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match cli.command {
        Command::Generate(a) => with_config(a, |cfg| cmd_generate(&cfg)),
        Command::Verify { class, candidate } => {
            with_config(class, |cfg| cmd_verify(&cfg, &candidate))
        }
        Command::Count(a) => with_config(a, |cfg| cmd_count(&cfg)),
        Command::Exists(a) => with_config(a, |cfg| cmd_exists(&cfg)),
        Command::Graph(a) => with_config(a, |cfg| cmd_graph(&cfg)),
    }
}

fn with_config(args: ClassArgs, f: impl FnOnce(RunConfig) -> CliOutput) -> CliOutput {
    match args.into_config() {
        Ok(cfg) => f(cfg),
        Err(e) => CliOutput::error(ExitCode::Usage, e),
    }
}
