//! `ngsh`: n-concepts and introducer concepts of n-dimensional contexts.
//!
//! Results go to standard output; counts, timings and warnings go to
//! standard error. Exit status is 0 on success, 1 when `verify` finds a
//! failing check, and 2 on usage, input or parse errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ngsh_core::io::InputFormat;
use ngsh_core::DEFAULT_ORACLE_CAP;

#[derive(Parser)]
#[command(
    name = "ngsh",
    version,
    about = "n-concepts and introducer concepts of n-dimensional contexts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every n-concept of the context.
    Concepts(ConceptsArgs),
    /// List the introducer concepts with the elements each one introduces.
    Introducers(IntroducersArgs),
    /// Draw the order of one dimension over the introducers (or all concepts).
    Order(OrderArgs),
    /// Draw the Galois sub-hierarchy of a 2-context.
    Gsh(GshArgs),
    /// Report concept and introducer counts.
    Stats(StatsArgs),
    /// Cross-check enumeration and introducers against the reference oracles.
    Verify(VerifyArgs),
    /// Generate a seeded random context as a tuple file.
    Gen(GenArgs),
}

#[derive(Args)]
pub struct InputArgs {
    /// Tuple file or 2D cross table.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormatArg::Auto)]
    pub input_format: InputFormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum InputFormatArg {
    Auto,
    Tuples,
    Table,
}

impl From<InputFormatArg> for InputFormat {
    fn from(f: InputFormatArg) -> Self {
        match f {
            InputFormatArg::Auto => InputFormat::Auto,
            InputFormatArg::Tuples => InputFormat::Tuples,
            InputFormatArg::Table => InputFormat::Table,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderSet {
    Introducers,
    Concepts,
}

#[derive(Args)]
pub struct ConceptsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Abort once more than this many concepts are found.
    #[arg(long)]
    pub max_concepts: Option<usize>,
}

#[derive(Args)]
pub struct IntroducersArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Only introducers of this dimension (name or 1-based index).
    #[arg(long)]
    pub dim: Option<String>,
    /// Drop concepts with an empty component.
    #[arg(long)]
    pub nontrivial: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Dimension to order by (name or 1-based index).
    #[arg(long, default_value = "1")]
    pub dim: String,
    #[arg(long, value_enum, default_value_t = OrderSet::Introducers)]
    pub set: OrderSet,
    #[arg(long)]
    pub nontrivial: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct GshArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub nontrivial: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Largest number of subset combinations the oracles may try.
    #[arg(long, env = "NGSH_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,
}

#[derive(Args)]
pub struct GenArgs {
    /// Dimension sizes, e.g. `2,3,3`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Concepts(a) => commands::concepts(a),
        Command::Introducers(a) => commands::list_introducers(a),
        Command::Order(a) => commands::order(a),
        Command::Gsh(a) => commands::gsh(a),
        Command::Stats(a) => commands::stats(a),
        Command::Verify(a) => commands::verify(a),
        Command::Gen(a) => commands::gen(a),
    };
    match result {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
