use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod manifest;
mod output;

use fldrank::Measure;
use output::Format;

#[derive(Parser)]
#[command(name = "fldrank", version, about = "Rank influential nodes with fuzzy local dimension and baseline centralities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank every node by one centrality measure.
    Rank(RankArgs),
    /// Simulate SI spreading from a seed set and print mean F(t).
    Si(SiArgs),
    /// Kendall's tau between a measure and simulated spreading across rates.
    Tau(TauArgs),
    /// Pairwise top-k overlap between measures.
    Compare(CompareArgs),
}

#[derive(Args)]
struct Io {
    /// Edge-list file, or `builtin:kite` / `builtin:karate`.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    output: Format,
    /// Write results to this file; the run manifest goes next to it as
    /// `<file>.manifest.json`. Without it results go to stdout and the
    /// manifest to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    io: Io,
    /// dc, cc, bc, ec, ld or fld.
    #[arg(long)]
    measure: Measure,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Rate {
    /// Spreading rate exponent; lambda = (1/2)^beta.
    #[arg(long)]
    beta: Option<f64>,
    /// Per-contact infection probability.
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Args)]
struct SiArgs {
    #[command(flatten)]
    io: Io,
    /// Comma-separated seed labels.
    #[arg(long, conflicts_with_all = ["top", "measure"], required_unless_present = "top")]
    seeds: Option<String>,
    /// Seed with the top-k nodes of --measure.
    #[arg(long, requires = "measure")]
    top: Option<usize>,
    #[arg(long)]
    measure: Option<Measure>,
    #[command(flatten)]
    rate: Rate,
    #[arg(long, default_value_t = 100)]
    replicates: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Step cap; defaults to ten times the graph diameter.
    #[arg(long)]
    max_steps: Option<usize>,
}

#[derive(Args)]
struct TauArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long)]
    measure: Measure,
    /// Inclusive `start:stop:step`.
    #[arg(long, default_value = "0.01:0.1:0.01")]
    lambda_range: String,
    /// Step at which spreading ability is read off.
    #[arg(long, default_value_t = 10)]
    t_eval: usize,
    #[arg(long, default_value_t = 100)]
    replicates: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    io: Io,
    /// Comma-separated measures; all six by default.
    #[arg(long, value_delimiter = ',', default_value = "dc,cc,bc,ec,ld,fld")]
    measures: Vec<Measure>,
    #[arg(long, default_value_t = 10)]
    k: usize,
}

/// Failure classes, each with its own exit code. Usage errors exit with 2
/// through clap.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Io(String),
    Invalid(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 3,
            Failure::Io(_) => 4,
            Failure::Invalid(_) => 5,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Io(m) => write!(f, "I/O error: {m}"),
            Failure::Invalid(m) => write!(f, "{m}"),
        }
    }
}

impl From<fldrank::Error> for Failure {
    fn from(e: fldrank::Error) -> Self {
        match e {
            fldrank::Error::Parse { .. } => Failure::Parse(e.to_string()),
            fldrank::Error::Io(_) => Failure::Io(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("FLDRANK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Invalid(format!("FLDRANK_THREADS must be an integer, got {raw:?}")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Invalid(e.to_string()))?;
    }
    Ok(())
}

fn emit(io: &Io, run: commands::Run) -> Result<(), Failure> {
    let io_err = |path: &Path, e: io::Error| Failure::Io(format!("{}: {e}", path.display()));
    let manifest = serde_json::to_string_pretty(&run.manifest).expect("manifest serializes");
    match &io.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io_err(path, e))?;
            let mut w = BufWriter::new(file);
            run.table.write(io.output, &mut w).map_err(|e| io_err(path, e))?;
            w.flush().map_err(|e| io_err(path, e))?;
            let mut mpath = path.clone().into_os_string();
            mpath.push(".manifest.json");
            let mpath = PathBuf::from(mpath);
            std::fs::write(&mpath, manifest + "\n").map_err(|e| io_err(&mpath, e))?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            run.table
                .write(io.output, &mut lock)
                .map_err(|e| Failure::Io(e.to_string()))?;
            eprintln!("{manifest}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Rank(a) => {
            let input = commands::load(&a.io.input)?;
            emit(&a.io, commands::rank(&input, a.measure, a.io.output)?)
        }
        Command::Si(a) => {
            let input = commands::load(&a.io.input)?;
            let seeds = match (&a.seeds, a.top, a.measure) {
                (Some(list), _, _) => commands::SeedSpec::Labels(
                    list.split(',').map(|s| s.trim().to_owned()).filter(|s| !s.is_empty()).collect(),
                ),
                (None, Some(k), Some(m)) => commands::SeedSpec::Top { k, measure: m },
                _ => return Err(Failure::Invalid("give --seeds or --top with --measure".into())),
            };
            let rate = match (a.rate.beta, a.rate.lambda) {
                (Some(beta), None) => commands::RateSpec::Beta(beta),
                (None, Some(lambda)) => commands::RateSpec::Lambda(lambda),
                _ => return Err(Failure::Invalid("give exactly one of --beta and --lambda".into())),
            };
            let params = commands::SiParams {
                seeds,
                rate,
                replicates: a.replicates,
                rng_seed: a.rng_seed,
                max_steps: a.max_steps,
            };
            emit(&a.io, commands::si(&input, &params, a.io.output)?)
        }
        Command::Tau(a) => {
            let input = commands::load(&a.io.input)?;
            let lambdas = commands::parse_lambda_range(&a.lambda_range)?;
            let params = commands::TauParams {
                measure: a.measure,
                lambda_range: a.lambda_range.clone(),
                lambdas,
                t_eval: a.t_eval,
                replicates: a.replicates,
                rng_seed: a.rng_seed,
            };
            emit(&a.io, commands::tau(&input, &params, a.io.output)?)
        }
        Command::Compare(a) => {
            let input = commands::load(&a.io.input)?;
            emit(&a.io, commands::compare(&input, &a.measures, a.k, a.io.output)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fldrank: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
