//! `rbx verify`: configuration, suite orchestration and reports on top of
//! `rbx-core`.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! usage, configuration or I/O error.

pub mod config;
pub mod error;
pub mod models;
pub mod report;
pub mod suites;

use std::ffi::OsString;

pub use config::{parse_config, Format, ModelKind, Suite, SuiteConfig};
pub use error::CliError;
pub use models::CorruptedTriangular;
pub use report::{emit_report, Report};
pub use suites::run_suite;

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match parse_config(argv) {
        Ok(cfg) => cfg,
        Err(CliError::Usage(e)) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
        Err(e) => {
            eprintln!("rbx: {e}");
            return 2;
        }
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("rbx: {e}");
            return 2;
        }
    };
    if let Err(e) = emit_report(&report, cfg.format, cfg.output.as_deref()) {
        eprintln!("rbx: {e}");
        return 2;
    }
    report.exit_code()
}
