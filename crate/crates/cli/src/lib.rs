//! Command-line front end for `bicomm-core`.

use std::fmt;
use std::io::Write;

use clap::Parser;
use serde_json::json;

pub mod args;
mod commands;
pub mod ideal;
mod render;
mod selftest;

pub use render::Report;

use args::{Cli, Command, GsAction};

/// Bad invocation that clap cannot detect; exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Normalize { .. } => "normalize",
        Command::IdentityCheck(_) => "identity-check",
        Command::Hilbert { .. } => "hilbert",
        Command::Dim { .. } => "dim",
        Command::Codim { .. } => "codim",
        Command::Gk { .. } => "gk",
        Command::Gs { action } => match action {
            GsAction::Basis { .. } => "gs basis",
            GsAction::Reduce { .. } => "gs reduce",
            GsAction::Member { .. } => "gs member",
            GsAction::Dims { .. } => "gs dims",
        },
        Command::Cochar { .. } => "cochar",
        Command::Schur { .. } => "schur",
        Command::Selftest => "selftest",
    }
}

/// Run with the given arguments (including the program name) and return the exit status.
///
/// 0 on success, 1 on a domain error or a failed selftest, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let report = commands::execute(&cli).and_then(|r| Ok((r.render(command_name(&cli.command), cli.format)?, r.exit_code)));
    match report {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let usage = e.downcast_ref::<Usage>().is_some();
            let kind = if usage { "usage" } else { "domain" };
            let line = json!({ "error": kind, "message": format!("{e:#}") });
            let _ = writeln!(err, "{line}");
            if usage {
                2
            } else {
                1
            }
        }
    }
}
