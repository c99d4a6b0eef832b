use std::error::Error;
use std::fs;
use std::io::{self, Write};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use boolwidth::generate::{derive_seed, erdos_renyi};
use boolwidth::heuristics::{CandidateStrategy, HeuristicConfig, Score, StartStrategy};
use boolwidth::sigma_rho::{bounds, nec_of_decomposition, solve_sigma_rho, MembershipSet, Objective, SigmaRhoSpec};
use boolwidth::{cuts_csv, decompose as run_strategy, read_graph, width_of_ordering, DecompositionFile, Graph, LinearDecomposition, Strategy};
use serde::Serialize;

use crate::{BenchArgs, CandidatesArg, DecomposeArgs, ProblemArgs, SolveArgs, StartsArg, StrategyName, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_TIME_LIMIT: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

type CmdResult = Result<u8, Box<dyn Error>>;

/// One CSV row of a run.
#[derive(Debug, Default, Serialize)]
struct RunRecord {
    graph: String,
    n: usize,
    density: String,
    strategy: String,
    width: String,
    time_s: Option<String>,
    nec: Option<usize>,
    ub1: Option<String>,
    ub2: Option<String>,
    ub3: Option<String>,
    result: Option<String>,
}

fn two(x: f64) -> String {
    format!("{x:.2}")
}

fn starts(arg: StartsArg) -> StartStrategy {
    match arg {
        StartsArg::Dbfs => StartStrategy::DoubleBfs,
        StartsArg::Two => StartStrategy::SingleAndDoubleBfs,
        StartsArg::All => StartStrategy::AllVertices,
    }
}

fn candidates(arg: CandidatesArg) -> CandidateStrategy {
    match arg {
        CandidatesArg::Right => CandidateStrategy::Right,
        CandidatesArg::N2 => CandidateStrategy::TwoNeighborhood,
    }
}

fn strategy_of(name: StrategyName, starts_arg: StartsArg, cand: CandidatesArg, seed: u64) -> Strategy {
    let score = match name {
        StrategyName::Rn1 => Score::Rn1,
        StrategyName::Rn2 => Score::Rn2,
        StrategyName::Rn3 => Score::Rn3,
        StrategyName::Lcv => Score::LeastCutValue,
        StrategyName::Iun => Score::Iun,
        StrategyName::Exact => return Strategy::exact(),
        StrategyName::Random => return Strategy::Random { seed },
    };
    Strategy::Heuristic(
        HeuristicConfig::new(score)
            .with_starts(starts(starts_arg))
            .with_candidates(candidates(cand)),
    )
}

fn strategy_label(name: StrategyName, starts_arg: StartsArg) -> String {
    let base = format!("{name:?}").to_lowercase();
    match (name, starts_arg) {
        (StrategyName::Exact | StrategyName::Random, _) | (_, StartsArg::Dbfs) => base,
        (_, StartsArg::Two) => format!("2-{base}"),
        (_, StartsArg::All) => format!("n-{base}"),
    }
}

fn graph_name(path: &std::path::Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn problem_spec(args: &ProblemArgs) -> Result<SigmaRhoSpec, Box<dyn Error>> {
    if args.problem == "custom" {
        let sigma: MembershipSet = args.sigma.as_deref().ok_or("custom problems need --sigma")?.parse()?;
        let rho: MembershipSet = args.rho.as_deref().ok_or("custom problems need --rho")?.parse()?;
        let objective: Objective = args.objective.parse()?;
        return Ok(SigmaRhoSpec::new(sigma, rho, objective)?);
    }
    SigmaRhoSpec::preset(&args.problem).ok_or_else(|| {
        format!(
            "unknown problem {:?}, expected mim, independent-set, dominating-set or custom",
            args.problem
        )
        .into()
    })
}

/// Runs `f` on a worker thread, giving up after `limit` seconds.
fn with_time_limit<T: Send + 'static>(limit: Option<f64>, f: impl FnOnce() -> T + Send + 'static) -> Option<T> {
    let Some(limit) = limit else {
        return Some(f());
    };
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(Duration::from_secs_f64(limit.max(0.0))).ok()
}

pub fn decompose(args: DecomposeArgs) -> CmdResult {
    let g = read_graph(&args.input)?;
    let strategy = strategy_of(args.strategy, args.heuristic.starts, args.heuristic.candidates, args.heuristic.seed);
    let shared = std::sync::Arc::new(g);
    let worker_graph = shared.clone();
    let Some(result) = with_time_limit(args.time_limit, move || run_strategy(&worker_graph, &strategy)) else {
        eprintln!("time limit of {}s exceeded", args.time_limit.unwrap_or_default());
        return Ok(EXIT_TIME_LIMIT);
    };
    let g = shared;
    let d = result?;
    let text = DecompositionFile::new(&g, &d, args.raw).render();
    match &args.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    if let Some(path) = &args.cuts_csv {
        fs::write(path, cuts_csv(&d.cuts(&g)?))?;
    }
    Ok(EXIT_OK)
}

fn load_order(g: &Graph, source: &str) -> Result<(String, LinearDecomposition), Box<dyn Error>> {
    if source == "auto" {
        let d = run_strategy(g, &Strategy::Heuristic(HeuristicConfig::n_iun()))?;
        return Ok(("n-iun".into(), d));
    }
    let file = DecompositionFile::parse(&fs::read_to_string(source)?)?;
    let order = file.ordering(g)?;
    Ok(("file".into(), LinearDecomposition::measure(g, order)?))
}

pub fn solve(args: SolveArgs) -> CmdResult {
    let g = read_graph(&args.input)?;
    let spec = problem_spec(&args.problem)?;
    let (strategy, d) = load_order(&g, &args.decomposition)?;
    let start = Instant::now();
    let solution = solve_sigma_rho(&g, &d.order, &spec)?;
    let elapsed = start.elapsed().as_secs_f64();
    let nec = nec_of_decomposition(&g, &d.order, spec.d())?;
    let b = bounds(&g, &d.order, spec.d())?;
    let record = RunRecord {
        graph: graph_name(&args.input),
        n: g.n(),
        density: two(g.density()),
        strategy,
        width: two(d.width()),
        time_s: Some(format!("{elapsed:.4}")),
        nec: Some(nec),
        ub1: Some(two(b.ub1)),
        ub2: Some(two(b.ub2)),
        ub3: Some(two(b.ub3)),
        result: Some(solution.as_ref().map_or_else(|| "infeasible".into(), |s| s.size.to_string())),
    };
    let mut out = csv::Writer::from_writer(io::stdout());
    out.serialize(&record)?;
    out.flush()?;
    match solution {
        Some(s) => {
            let labels: Vec<&str> = s.witness.iter().map(|v| g.label(v)).collect();
            eprintln!("witness: {}", labels.join(" "));
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("no ({}, {})-set exists", spec.sigma(), spec.rho());
            Ok(EXIT_INFEASIBLE)
        }
    }
}

fn parse_grid(grid: &str) -> Result<Vec<f64>, Box<dyn Error>> {
    let parts: Vec<f64> = grid
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad --p-grid {grid:?}: {e}"))?;
    let [start, stop, step] = parts[..] else {
        return Err(format!("--p-grid {grid:?} must be start:stop:step").into());
    };
    if step <= 0.0 || !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) {
        return Err(format!("--p-grid {grid:?} needs probabilities in [0, 1] and a positive step").into());
    }
    let mut ps = Vec::new();
    let mut k = 0;
    loop {
        let p = ((start + k as f64 * step) * 1e9).round() / 1e9;
        if p > stop + 1e-9 {
            break;
        }
        ps.push(p);
        k += 1;
    }
    Ok(ps)
}

pub fn bench(args: BenchArgs) -> CmdResult {
    let ps = parse_grid(&args.p_grid)?;
    let mut strategies = args.strategies.clone();
    if args.exact && !strategies.contains(&StrategyName::Exact) {
        strategies.push(StrategyName::Exact);
    }
    let problem = match &args.problem {
        Some(name) => Some(SigmaRhoSpec::preset(name).ok_or_else(|| format!("unknown problem {name:?}"))?),
        None => None,
    };
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(io::stdout());
    out.write_record(["graph", "n", "density", "strategy", "width", "time_s", "nec", "ub1", "ub2", "ub3", "result"])?;
    for (cell, &p) in ps.iter().enumerate() {
        for rep in 0..args.per_cell {
            let seed = derive_seed(args.seed, (cell * args.per_cell + rep) as u64);
            let g = erdos_renyi(args.n, p, seed);
            for &name in &strategies {
                let strategy = strategy_of(name, args.starts, args.candidates, derive_seed(seed, 1));
                let start = Instant::now();
                let d = run_strategy(&g, &strategy)?;
                let elapsed = start.elapsed().as_secs_f64();
                let mut record = RunRecord {
                    graph: format!("er-n{}-p{p:.2}-{rep}", args.n),
                    n: g.n(),
                    density: two(g.density()),
                    strategy: strategy_label(name, args.starts),
                    width: two(width_of_ordering(&g, &d.order)?.width()),
                    time_s: (!args.no_timing).then(|| format!("{elapsed:.4}")),
                    ..RunRecord::default()
                };
                if let Some(spec) = &problem {
                    let b = bounds(&g, &d.order, spec.d())?;
                    record.nec = Some(nec_of_decomposition(&g, &d.order, spec.d())?);
                    record.ub1 = Some(two(b.ub1));
                    record.ub2 = Some(two(b.ub2));
                    record.ub3 = Some(two(b.ub3));
                    let solution = solve_sigma_rho(&g, &d.order, spec)?;
                    record.result = Some(solution.map_or_else(|| "infeasible".into(), |s| s.size.to_string()));
                }
                out.serialize(&record)?;
            }
        }
        out.flush()?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

pub fn verify(args: VerifyArgs) -> CmdResult {
    let g = read_graph(&args.input)?;
    let file = DecompositionFile::parse(&fs::read_to_string(&args.decomposition)?)?;
    let order = match file.ordering(&g) {
        Ok(order) => order,
        Err(err) => {
            eprintln!("invalid ordering: {err}");
            return Ok(EXIT_INPUT);
        }
    };
    let measured = width_of_ordering(&g, &order)?;
    if (measured.width() - file.width).abs() > 0.005 {
        eprintln!("width mismatch: file declares {:.2}, ordering measures {:.2}", file.width, measured.width());
        return Ok(EXIT_INPUT);
    }
    if let Some(un) = file.max_un.filter(|&un| un != measured.max_un) {
        eprintln!("|UN| mismatch: file declares {un}, ordering measures {}", measured.max_un);
        return Ok(EXIT_INPUT);
    }
    println!("ok width {:.2}", measured.width());
    Ok(EXIT_OK)
}
