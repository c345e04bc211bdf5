use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fring::cli::{execute, Mode, Settings};

/// Runs a session of ring declarations and commands.
#[derive(Parser, Debug)]
#[command(name = "fring", version)]
struct Args {
    /// Session file; standard input when absent.
    #[arg(long, env = "FRING_SESSION")]
    session: Option<PathBuf>,
    /// Line-delimited JSON records.
    #[arg(long, env = "FRING_MACHINE")]
    machine: bool,
    /// Completion budget in work items.
    #[arg(long, env = "FRING_BUDGET")]
    budget: Option<usize>,
    #[arg(long, env = "FRING_SEED", default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match &args.session {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| e.to_string())
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let mut settings = Settings { seed: args.seed, ..Settings::default() };
    if let Some(b) = args.budget {
        settings.budget = b;
    }
    let mode = if args.machine { Mode::Machine } else { Mode::Text };
    let (out, code) = execute(&text, settings, mode);
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
