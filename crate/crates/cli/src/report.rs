use std::io::Write;
use std::path::Path;

use rbx_core::CheckResult;
use serde::Serialize;

use crate::config::{Format, SuiteConfig};
use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: &'static str,
    pub anchor: String,
    pub counterexample: Option<String>,
}

/// Outcome of one run. Everything except `elapsed_ms` is a function of
/// the configuration.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(cfg: &SuiteConfig, results: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        let params = cfg
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::String(v)))
            .collect();
        let checks: Vec<CheckRecord> = results
            .into_iter()
            .map(|r| CheckRecord {
                status: r.status.as_str(),
                name: r.name,
                anchor: r.anchor,
                counterexample: r.counterexample,
            })
            .collect();
        let failed = checks.iter().filter(|c| c.status == "fail").count();
        Report {
            suite: cfg.suite.to_string(),
            params,
            passed: checks.len() - failed,
            failed,
            checks,
            elapsed_ms,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
            .collect();
        out.push_str(&format!("params: {}\n\n", params.join(" ")));
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(4).max(4);
        out.push_str(&format!("{:<6}  {:<width$}  {}\n", "STATUS", "NAME", "ANCHOR"));
        for c in &self.checks {
            out.push_str(&format!("{:<6}  {:<width$}  {}\n", c.status, c.name, c.anchor));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("        counterexample: {ce}\n"));
            }
        }
        out.push_str(&format!(
            "\npassed: {}  failed: {}  elapsed: {} ms\n",
            self.passed, self.failed, self.elapsed_ms
        ));
        out
    }
}

/// Writes the report in the requested format to `path` or standard output.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let body = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match path {
        Some(p) => std::fs::write(p, body).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
