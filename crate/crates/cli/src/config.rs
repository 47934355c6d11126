use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rbx_core::arith::parse_rational;
use rbx_core::identities::BS_MAX_ARITY;
use rbx_core::Rational;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    RbLaws,
    Shuffle,
    QuasiShuffle,
    Dendriform,
    Prelie,
    Spitzer,
    NcSpitzer,
    Magnus,
    BohnenblustSpitzer,
    Atkinson,
    Bogoliubov,
    FlowsBch,
    YangBaxter,
    StandardSymmetric,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const CONCRETE: [Suite; 14] = [
        Suite::RbLaws,
        Suite::Shuffle,
        Suite::QuasiShuffle,
        Suite::Dendriform,
        Suite::Prelie,
        Suite::Spitzer,
        Suite::NcSpitzer,
        Suite::Magnus,
        Suite::BohnenblustSpitzer,
        Suite::Atkinson,
        Suite::Bogoliubov,
        Suite::FlowsBch,
        Suite::YangBaxter,
        Suite::StandardSymmetric,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum ModelKind {
    StandardComm,
    StandardNc,
    Laurent,
    Matrix,
    Integration,
    Summation,
    Words,
    /// Triangular projector that also keeps one entry below the diagonal.
    #[value(hide = true)]
    MatrixCorrupted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

macro_rules! value_enum_text {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let v = self.to_possible_value().expect("no skipped variants");
                f.write_str(v.get_name())
            }
        }

        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                <$t as ValueEnum>::from_str(s.trim(), false)
            }
        }
    )*};
}

value_enum_text!(Suite, ModelKind, Format);

#[derive(Debug, Parser)]
#[command(name = "rbx", version, about = "Exact verifier for weighted Rota-Baxter identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Default)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(long)]
    suite: Option<Suite>,
    /// Restrict the suite to one model.
    #[arg(long)]
    model: Option<ModelKind>,
    /// Truncation order in λ.
    #[arg(long)]
    order: Option<usize>,
    /// Window length of sequence models.
    #[arg(long)]
    window: Option<usize>,
    /// Matrix dimension.
    #[arg(long)]
    dim: Option<usize>,
    /// Weight override p/q, realised by rescaling the operator.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Number of letters used by the samplers.
    #[arg(long)]
    alphabet: Option<u32>,
    /// Arity of the Bohnenblust–Spitzer checks.
    #[arg(long = "bs-arity")]
    bs_arity: Option<usize>,
    /// Random samples per law.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// key=value file with defaults for any of the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Fully resolved configuration of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub model: Option<ModelKind>,
    pub order: usize,
    pub window: usize,
    pub dim: usize,
    pub weight: Option<Rational>,
    pub alphabet: u32,
    pub bs_arity: usize,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            model: None,
            order: 6,
            window: 10,
            dim: 3,
            weight: None,
            alphabet: 3,
            bs_arity: 4,
            trials: 200,
            seed: 42,
            format: Format::Text,
            output: None,
        }
    }
}

pub const MAX_ORDER: usize = 10;
pub const MAX_WINDOW: usize = 16;
pub const MAX_DIM: usize = 4;
pub const MAX_ALPHABET: u32 = 9;

impl SuiteConfig {
    /// Resolved parameters as ordered key/value pairs.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        vec![
            ("suite", self.suite.to_string()),
            ("model", self.model.map_or("default".to_string(), |m| m.to_string())),
            ("order", self.order.to_string()),
            ("window", self.window.to_string()),
            ("dim", self.dim.to_string()),
            ("weight", self.weight.as_ref().map_or("model".to_string(), |w| w.to_string())),
            ("alphabet", self.alphabet.to_string()),
            ("bs-arity", self.bs_arity.to_string()),
            ("trials", self.trials.to_string()),
            ("seed", self.seed.to_string()),
        ]
    }

    fn validate(&self) -> Result<(), CliError> {
        let range = |name: &str, v: usize, lo: usize, hi: usize| {
            if (lo..=hi).contains(&v) {
                Ok(())
            } else {
                Err(CliError::Config(format!("{name} = {v} outside {lo}..={hi}")))
            }
        };
        range("order", self.order, 1, MAX_ORDER)?;
        range("window", self.window, 2, MAX_WINDOW)?;
        range("dim", self.dim, 2, MAX_DIM)?;
        range("alphabet", self.alphabet as usize, 1, MAX_ALPHABET as usize)?;
        range("bs-arity", self.bs_arity, 1, BS_MAX_ARITY)?;
        range("trials", self.trials, 1, 100_000)?;
        Ok(())
    }
}

fn file_values(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
        out.insert(key.trim().trim_start_matches("--").to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn parsed<T: FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| CliError::Config(format!("bad value '{value}' for {key}: {e}")))
}

fn apply_file(args: &mut VerifyArgs, values: BTreeMap<String, String>) -> Result<(), CliError> {
    for (key, value) in values {
        let v = value.as_str();
        match key.as_str() {
            "suite" => { args.suite.get_or_insert(parsed(&key, v)?); }
            "model" => { args.model.get_or_insert(parsed(&key, v)?); }
            "order" => { args.order.get_or_insert(parsed(&key, v)?); }
            "window" => { args.window.get_or_insert(parsed(&key, v)?); }
            "dim" => { args.dim.get_or_insert(parsed(&key, v)?); }
            "weight" => { args.weight.get_or_insert(value.clone()); }
            "alphabet" => { args.alphabet.get_or_insert(parsed(&key, v)?); }
            "bs-arity" => { args.bs_arity.get_or_insert(parsed(&key, v)?); }
            "trials" => { args.trials.get_or_insert(parsed(&key, v)?); }
            "seed" => { args.seed.get_or_insert(parsed(&key, v)?); }
            "format" => { args.format.get_or_insert(parsed(&key, v)?); }
            "output" => { args.output.get_or_insert(PathBuf::from(v)); }
            other => return Err(CliError::Config(format!("unknown config key '{other}'"))),
        }
    }
    Ok(())
}

/// Parses `rbx verify ...`. Flags override the config file, which
/// overrides the defaults.
pub fn parse_config<I, T>(argv: I) -> Result<SuiteConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(CliError::Usage)?;
    let Command::Verify(mut args) = cli.command;
    if let Some(path) = args.config.clone() {
        apply_file(&mut args, file_values(&path)?)?;
    }
    let d = SuiteConfig::default();
    let weight = args
        .weight
        .as_deref()
        .map(parse_rational)
        .transpose()
        .map_err(CliError::Core)?;
    let cfg = SuiteConfig {
        suite: args.suite.unwrap_or(d.suite),
        model: args.model,
        order: args.order.unwrap_or(d.order),
        window: args.window.unwrap_or(d.window),
        dim: args.dim.unwrap_or(d.dim),
        weight,
        alphabet: args.alphabet.unwrap_or(d.alphabet),
        bs_arity: args.bs_arity.unwrap_or(d.bs_arity),
        trials: args.trials.unwrap_or(d.trials),
        seed: args.seed.unwrap_or(d.seed),
        format: args.format.unwrap_or(d.format),
        output: args.output,
    };
    cfg.validate()?;
    Ok(cfg)
}

