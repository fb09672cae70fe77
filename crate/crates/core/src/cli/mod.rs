//! JSON-in/JSON-out front end. `run` never touches the process: it returns the
//! exit code and the text for standard output.

mod handlers;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::symkernel::{PolyError, Rational};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Subcommand → the library operations it exposes. Each operation appears once.
pub const ROUTES: &[(&str, &[&str])] = &[
    ("classify", &["singularity::classify_branch_profile"]),
    ("versal", &["singularity::versal", "singularity::versal_with_section"]),
    ("tjurina", &["singularity::tjurina_basis"]),
    ("lct", &["singularity::lct", "singularity::lct_window_check"]),
    ("thresholds", &["singularity::thresholds_to_types"]),
    ("a2d", &["singularity::a_to_d_transform"]),
    ("normal-form", &["singularity::normal_form"]),
    ("wps", &["singularity::wps_weights", "singularity::wps_equal"]),
    ("stability", &["trees::is_stable", "trees::stratum_label"]),
    ("parity", &["trees::odd_points", "trees::parity_certificate"]),
    ("genus", &["trees::arithmetic_genus"]),
    ("strata", &["trees::enumerate_strata"]),
    ("contract", &["trees::contract"]),
    (
        "divclass",
        &[
            "divcalc::canonical_class",
            "divcalc::k_m0a",
            "divcalc::transport",
            "divcalc::ample_form_check",
        ],
    ),
    ("verify-identities", &["divcalc::verify_identities"]),
    ("discrepancy", &["divcalc::discrepancy"]),
    ("log-mmp", &["divcalc::log_mmp_model"]),
    (
        "stable-reduce",
        &[
            "stablered::base_change",
            "stablered::chart",
            "stablered::tail_family",
            "stablered::attaching_points",
            "stablered::verify_tail_membership",
            "stablered::d_stable_reduction",
        ],
    ),
];

#[derive(Debug, Parser)]
#[command(name = "adcover", version = VERSION, about = "Exact computations for hyperelliptic covers with A and D singularities")]
pub struct Cli {
    /// Structured payload (trees, divisor classes) read from a JSON file.
    #[arg(long, global = true, value_name = "FILE")]
    pub json_in: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct TypeArgs {
    /// A or D.
    #[arg(long = "type", value_parser = parse_kind)]
    pub kind: crate::singularity::SingKind,
    #[arg(long)]
    pub index: u32,
}

#[derive(Debug, Clone, Args)]
pub struct TreeArgs {
    /// Tree as inline JSON (alternative to --json-in).
    #[arg(long)]
    pub tree: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[arg(long, value_parser = parse_rational)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub beta: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singularities of y² = f(x), optionally with a marked x-coordinate.
    Classify {
        #[arg(long)]
        poly: String,
        #[arg(long, value_parser = parse_rational)]
        marked: Option<Rational>,
    },
    /// Versal deformation with its G_m weights.
    Versal {
        #[command(flatten)]
        t: TypeArgs,
        /// The A_{index−1} family with the section x = y = 0 instead.
        #[arg(long)]
        with_section: bool,
    },
    Tjurina {
        #[command(flatten)]
        t: TypeArgs,
    },
    Lct {
        #[command(flatten)]
        t: TypeArgs,
        /// Also compare with the right end 1/2 + 1/(k+1) of the A_k window.
        #[arg(long)]
        window: bool,
    },
    Thresholds {
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
        #[arg(long)]
        n: u32,
    },
    /// The section family of A_{n−1} and its transform into versal D_n.
    A2d {
        #[arg(long)]
        n: u32,
    },
    NormalForm {
        #[arg(long)]
        poly: String,
    },
    Wps {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        pointed: bool,
        /// Comma-separated coordinates.
        #[arg(long, value_parser = parse_rational_list)]
        p: Option<Vec<Rational>>,
        #[arg(long, value_parser = parse_rational_list)]
        q: Option<Vec<Rational>>,
    },
    Stability {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        w: WeightArgs,
    },
    Parity {
        #[command(flatten)]
        tree: TreeArgs,
    },
    Genus {
        #[command(flatten)]
        tree: TreeArgs,
    },
    Strata {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        max_codim: Option<u32>,
        /// Graphviz output instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    Contract {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        to_k: u32,
        #[arg(long)]
        to_l: Option<u32>,
    },
    Divclass {
        /// canonical | k-m0a | hurwitz | template | transport | ample-check
        #[arg(long, default_value = "canonical")]
        op: String,
        #[arg(long)]
        pointed: bool,
        /// Inline JSON class (alternative to --json-in) for transport / ample-check.
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        w: WeightArgs,
    },
    VerifyIdentities,
    Discrepancy {
        /// grow_k or grow_l
        #[arg(long)]
        direction: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
    },
    LogMmp {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
    },
    StableReduce {
        #[arg(long = "type", value_parser = parse_kind)]
        kind: crate::singularity::SingKind,
        /// A_k to reduce (type A), or the target k (type D).
        #[arg(long)]
        k: u32,
        #[arg(long)]
        chart: Option<u32>,
        /// c0=1/2,e2=3: chart parameter values for tail membership.
        #[arg(long)]
        spec: Option<String>,
        /// D_n (type D).
        #[arg(long)]
        n: Option<u32>,
        /// Target ℓ (type D).
        #[arg(long)]
        l: Option<u32>,
        /// Accepted for compatibility; output is always JSON.
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Versal { .. } => "versal",
            Command::Tjurina { .. } => "tjurina",
            Command::Lct { .. } => "lct",
            Command::Thresholds { .. } => "thresholds",
            Command::A2d { .. } => "a2d",
            Command::NormalForm { .. } => "normal-form",
            Command::Wps { .. } => "wps",
            Command::Stability { .. } => "stability",
            Command::Parity { .. } => "parity",
            Command::Genus { .. } => "genus",
            Command::Strata { .. } => "strata",
            Command::Contract { .. } => "contract",
            Command::Divclass { .. } => "divclass",
            Command::VerifyIdentities => "verify-identities",
            Command::Discrepancy { .. } => "discrepancy",
            Command::LogMmp { .. } => "log-mmp",
            Command::StableReduce { .. } => "stable-reduce",
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: PolyError| e.to_string())
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(parse_rational).collect()
}

fn parse_kind(s: &str) -> Result<crate::singularity::SingKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a subcommand: malformed input (exit 2) or a typed domain error (exit 1).
#[derive(Debug)]
pub enum Failure {
    Malformed(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Poly(PolyError::Parse { .. }) => Failure::Malformed(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Error::from(e).into()
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Malformed(format!("invalid JSON: {e}"))
    }
}

/// What a handler produces: JSON payload plus diagnostics, or raw text.
pub enum Output {
    Json { payload: Value, diagnostics: Vec<String> },
    Text(String),
}

#[derive(Serialize)]
struct Envelope<'a> {
    subcommand: &'a str,
    version: &'a str,
    payload: Value,
    diagnostics: Vec<String>,
}

fn envelope(sub: &str, payload: Value, diagnostics: Vec<String>) -> String {
    let env = Envelope {
        subcommand: sub,
        version: VERSION,
        payload,
        diagnostics,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("values serialize");
    s.push('\n');
    s
}

fn error_payload(kind: &str, message: String) -> Value {
    serde_json::json!({ "error": kind, "message": message })
}

/// Parse `argv` (program name first) and execute. Returns (exit code, stdout).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, envelope("", error_payload("UsageError", e.to_string()), vec![])),
            };
        }
    };
    let sub = cli.command.name();
    match handlers::dispatch(&cli) {
        Ok(Output::Json { payload, diagnostics }) => (0, envelope(sub, payload, diagnostics)),
        Ok(Output::Text(t)) => (0, t),
        Err(Failure::Malformed(msg)) => (2, envelope(sub, error_payload("ParseError", msg), vec![])),
        Err(Failure::Domain(e)) => (1, envelope(sub, error_payload(e.name(), e.to_string()), vec![])),
    }
}
