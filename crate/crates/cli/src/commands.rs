//! Subcommands of the `regioncolor` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use regioncolor_core::instance::{perturb, validate_general_position, UnknownFamily};
use regioncolor_core::lab::{cf_from_proper, exact_chromatic, BudgetExceeded};
use regioncolor_core::oracle::{enumerate, verify_instance, verify_instance_cf, VerifyError};
use regioncolor_core::{ColorError, Family, Instance, InstanceError, Unsupported};
use serde_json::json;

use crate::formats::{coloring_to_json, instance_to_json, parse_coloring, parse_instance, verdict_to_json, FormatError, InstanceDoc};
use crate::gen::{generate, GenError};
use crate::render::render_svg;

#[derive(Debug, Parser)]
#[command(name = "regioncolor", version, about = "Proper and conflict-free colorings of geometric hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Instance file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Family; overrides the one named in the file.
    #[arg(long)]
    pub family: Option<Family>,
    /// Move objects slightly into general position instead of rejecting them.
    #[arg(long)]
    pub perturb: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random instance in general position.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Color an instance so that every hyperedge of size at least k is not monochromatic.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a coloring; exits with status 1 and prints a witness when it fails.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Check conflict-freeness instead of properness.
        #[arg(long)]
        cf: bool,
    },
    /// Smallest number of colors of a k-proper coloring, by exhaustive search.
    Chromatic {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_colors: usize,
    },
    /// Conflict-free coloring built from repeated proper colorings.
    Cf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Draw an instance, optionally colored, as SVG.
    Render {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Family(#[from] UnknownFamily),
    #[error(transparent)]
    Unsupported(#[from] Unsupported),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Invalid(#[from] InstanceError),
    #[error(transparent)]
    Length(#[from] regioncolor_core::hypergraph::LengthMismatch),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Family(_) | CliError::Unsupported(_) | CliError::Budget(_) => 2,
            CliError::Gen(GenError::Empty) => 2,
            CliError::Parse { source: FormatError::Family(_), .. } => 2,
            CliError::Parse { .. } | CliError::Io { .. } => 3,
            CliError::Invalid(_) | CliError::Length(_) | CliError::Gen(GenError::Exhausted { .. }) => 4,
        }
    }
}

impl From<ColorError> for CliError {
    fn from(e: ColorError) -> Self {
        match e {
            ColorError::Unsupported(u) => u.into(),
            ColorError::Instance(e) => e.into(),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Instance(e) => e.into(),
            VerifyError::Length(e) => e.into(),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn load_doc(path: &Path) -> Result<InstanceDoc, CliError> {
    parse_instance(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

/// The instance of `input` with its family, in general position.
fn load(input: &Input) -> Result<(Instance, Family), CliError> {
    let doc = load_doc(&input.input)?;
    let family = input
        .family
        .or(doc.family)
        .ok_or_else(|| CliError::Usage("no family given: pass --family or name one in the file".into()))?;
    let instance = if input.perturb {
        perturb(&doc.instance, family)?
    } else {
        validate_general_position(&doc.instance, family)?;
        doc.instance
    };
    Ok((instance, family))
}

/// Runs one subcommand, writing results to `stdout` unless `--out` is given.
/// Returns the exit status: 0, or 1 for a coloring that fails verification.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen { family, n, seed, out } => {
            let instance = generate(family, n, seed)?;
            emit(out.as_deref(), &instance_to_json(&InstanceDoc { family: Some(family), instance }), stdout)?;
        }
        Command::Color { input, k, out } => {
            let (instance, family) = load(&input)?;
            let col = regioncolor_core::color(&instance, family, k)?;
            emit(out.as_deref(), &coloring_to_json(&col), stdout)?;
        }
        Command::Verify { input, k, coloring, cf } => {
            let (instance, family) = load(&input)?;
            let col = parse_coloring(&read(&coloring)?).map_err(|source| CliError::Parse { path: coloring, source })?;
            let verdict = if cf {
                verify_instance_cf(&instance, family, &col, k)?
            } else {
                verify_instance(&instance, family, &col, k)?
            };
            emit(None, &format!("{}\n", verdict_to_json(&verdict)), stdout)?;
            return Ok(if verdict.is_valid() { 0 } else { 1 });
        }
        Command::Chromatic { input, k, max_colors } => {
            let (instance, family) = load(&input)?;
            let h = enumerate(&instance, family)?;
            let result = match exact_chromatic(&h, k, max_colors)? {
                Some(w) => json!({ "result": w.palette, "witness": w.colors }),
                None => json!({ "result": "none", "max_colors": max_colors }),
            };
            emit(None, &format!("{result}\n"), stdout)?;
        }
        Command::Cf { input, k, out } => {
            let (instance, family) = load(&input)?;
            let col = cf_from_proper(&instance, family, k)?;
            emit(out.as_deref(), &coloring_to_json(&col), stdout)?;
        }
        Command::Render { input, coloring, out } => {
            let doc = load_doc(&input)?;
            let col = match coloring {
                Some(path) => {
                    let c = parse_coloring(&read(&path)?).map_err(|source| CliError::Parse { path, source })?;
                    regioncolor_core::hypergraph::check_len(doc.instance.len(), &c)?;
                    Some(c)
                }
                None => None,
            };
            emit(out.as_deref(), &render_svg(&doc.instance, col.as_ref()), stdout)?;
        }
    }
    Ok(0)
}
