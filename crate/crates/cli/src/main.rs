use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "spectra",
    version,
    about = "Signless Laplacian spectral extremal graphs"
)]
struct Cli {
    /// Worker threads for enumeration and search.
    #[arg(long, global = true, env = "SPECTRA_JOBS")]
    jobs: Option<usize>,

    /// Omit the metadata line that precedes stream and table output.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph family.
    Construct(ConstructArgs),
    /// Largest signless Laplacian eigenvalue and degree bounds of each graph6 line.
    Spectrum(InputArgs),
    /// Test each graph6 line for freeness from the given patterns.
    CheckFree(CheckFreeArgs),
    /// Run an exhaustive verification and report it as JSON.
    Verify(VerifyArgs),
    /// Closed forms, numeric values and bounds for the extremal families.
    BoundsReport(BoundsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Path lengths for theta families, e.g. `1,2,3`.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Vec<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub out: Format,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Read graph6 lines from a file instead of stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckFreeArgs {
    /// Comma-separated patterns: `theta-a-b-c`, `f<n>`, `p<k>`.
    #[arg(long)]
    pub free: String,
    /// Include an embedding for every pattern found.
    #[arg(long)]
    pub witness: bool,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").required(true).args(["theorem", "lemma"])))]
pub struct VerifyArgs {
    /// One of 1.2, 1.3, 1.4.
    #[arg(long)]
    pub theorem: Option<String>,
    /// One of 2.3, 2.4, 2.6.
    #[arg(long)]
    pub lemma: Option<String>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub out: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        spectra_core::enumerate::set_jobs(jobs);
    }
    let header = !cli.no_header;
    let result = match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Spectrum(a) => commands::spectrum(a, header),
        Command::CheckFree(a) => commands::check_free(a, header),
        Command::Verify(a) => commands::verify(a),
        Command::BoundsReport(a) => commands::bounds_report(a, header),
    };
    match result {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
