mod args;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use heckeq::laurent::rational::parse_rational;
use serde_json::{json, Value};

use args::{Cli, Command, Format};
use commands::{CliError, Ctx, Report};

const CACHE_ENV: &str = "HECKEQ_CACHE_DIR";

fn wants_json(raw: &[String]) -> bool {
    raw.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
        || raw.iter().any(|a| a == "--format=json")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eigenvalue(_) => "eigenvalue",
        Command::Reconstruct(_) => "reconstruct",
        Command::Characters(_) => "characters",
        Command::Traces(_) => "traces",
        Command::Verify(_) => "verify",
        Command::Suq(_) => "suq",
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn emit_error(json_out: bool, command: &str, kind: &str, message: &str) {
    if json_out {
        let doc = json!({
            "command": command,
            "format": "json",
            "error": { "kind": kind, "message": message },
        });
        emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    } else {
        eprintln!("error: {message}");
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let q0 = parse_rational(&cli.q0)
        .map_err(|e| CliError::Usage(format!("--q0: {e}")))?;
    let ctx = Ctx {
        q0,
        unsafe_large_n: cli.unsafe_large_n,
    };
    match &cli.command {
        Command::Eigenvalue(a) => commands::eigenvalue(a),
        Command::Reconstruct(a) => commands::reconstruct(a),
        Command::Characters(a) => commands::characters(&ctx, a),
        Command::Traces(a) => commands::traces(a),
        Command::Verify(a) => commands::verify(&ctx, a),
        Command::Suq(a) => commands::suq(&ctx, a),
    }
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let json_out = wants_json(&raw);
    let cli = match Cli::try_parse_from(&raw) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            if json_out {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
                emit_error(true, "", "usage", first);
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };

    let cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        if let Err(e) = heckeq::cache::load(dir) {
            eprintln!("warning: ignoring cache: {e}");
        }
    }

    let name = command_name(&cli.command);
    let code = match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "command": report.command,
                        "parameters": Value::Object(report.parameters),
                        "result": report.result,
                        "format": "json",
                    });
                    emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
                }
                Format::Table => emit(&report.table),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit_error(cli.format == Format::Json, name, e.kind(), &e.to_string());
            ExitCode::from(2)
        }
    };

    if let Some(dir) = &cache_dir {
        if let Err(e) = heckeq::cache::save(dir) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    code
}
