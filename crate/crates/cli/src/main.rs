use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Linear boolean decompositions and (sigma, rho) vertex-subset problems.
#[derive(Parser, Debug)]
#[command(name = "boolwidth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a linear decomposition of a graph.
    Decompose(DecomposeArgs),
    /// Solve a (sigma, rho) problem on a decomposition.
    Solve(SolveArgs),
    /// Compare strategies on random graphs, one CSV row per run.
    Bench(BenchArgs),
    /// Re-measure a decomposition file against its graph.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyName {
    Rn1,
    Rn2,
    Rn3,
    Lcv,
    Iun,
    Exact,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StartsArg {
    /// One start from a double BFS.
    Dbfs,
    /// Single- and double-BFS starts.
    #[value(name = "2")]
    Two,
    /// Every vertex.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CandidatesArg {
    Right,
    N2,
}

#[derive(Args, Debug)]
pub struct HeuristicArgs {
    #[arg(long, value_enum, default_value = "dbfs")]
    pub starts: StartsArg,
    #[arg(long, value_enum, default_value = "right")]
    pub candidates: CandidatesArg,
    /// Seed for the random strategy.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub strategy: StrategyName,
    #[command(flatten)]
    pub heuristic: HeuristicArgs,
    /// Decomposition file to write (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Per-cut CSV with columns prefix,un,booldim.
    #[arg(long)]
    pub cuts_csv: Option<PathBuf>,
    /// Give up after this many seconds (exit code 2).
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Also record the integer |UN| of the widest cut.
    #[arg(long)]
    pub raw: bool,
}

#[derive(Args, Debug)]
pub struct ProblemArgs {
    /// mim, independent-set, dominating-set or custom.
    #[arg(long, default_value = "mim")]
    pub problem: String,
    /// Custom sigma, e.g. "{1}" or "N\{0}".
    #[arg(long)]
    pub sigma: Option<String>,
    /// Custom rho, e.g. "N".
    #[arg(long)]
    pub rho: Option<String>,
    /// max or min, for custom problems.
    #[arg(long, default_value = "max")]
    pub objective: String,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Decomposition file, or `auto` for IUN from every start vertex.
    #[arg(long, default_value = "auto")]
    pub decomposition: String,
    #[command(flatten)]
    pub problem: ProblemArgs,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: usize,
    /// Edge probabilities as start:stop:step.
    #[arg(long, default_value = "0.05:0.95:0.05")]
    pub p_grid: String,
    #[arg(long, default_value_t = 20)]
    pub per_cell: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "iun,rn1,rn2,rn3,random")]
    pub strategies: Vec<StrategyName>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add the exact strategy.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, value_enum, default_value = "all")]
    pub starts: StartsArg,
    #[arg(long, value_enum, default_value = "n2")]
    pub candidates: CandidatesArg,
    /// Leave time_s empty so equal seeds give byte-identical output.
    #[arg(long)]
    pub no_timing: bool,
    /// Also solve this problem and fill the nec, bound and result columns.
    #[arg(long)]
    pub problem: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub decomposition: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { commands::EXIT_INPUT } else { commands::EXIT_OK });
        }
    };
    let result = match cli.command {
        Command::Decompose(args) => commands::decompose(args),
        Command::Solve(args) => commands::solve(args),
        Command::Bench(args) => commands::bench(args),
        Command::Verify(args) => commands::verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(commands::EXIT_INPUT)
        }
    }
}
