use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("model '{model}' cannot run suite '{suite}': {reason}")]
    Incompatible { suite: String, model: String, reason: String },
    #[error(transparent)]
    Core(#[from] rbx_core::Error),
    #[error("cannot write report to {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
