//! Session files in, canonical records out.

pub mod output;
mod run;
pub mod session;

pub use output::{exit_code, format_output, format_record, Mode, Outcome, Record};
pub use run::{run_session, Settings};
pub use session::{parse_session, ParseError, Session};

/// Parses and runs a session, returning the rendered output and exit code.
/// Parse errors exit with 2 before any command runs.
pub fn execute(text: &str, settings: Settings, mode: Mode) -> (String, i32) {
    match parse_session(text) {
        Ok(s) => {
            let records = run_session(&s, settings);
            (format_output(&records, mode), exit_code(&records))
        }
        Err(e) => (format!("error: {e}\n"), 2),
    }
}
