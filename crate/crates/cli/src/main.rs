//! `mstdp`: solve, cross-check, benchmark, generate and compile.
//!
//! Exit codes: 0 success, 1 input or parameter error, 2 an algorithm's
//! precondition does not hold, 3 `compare` found disagreeing results.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mstdp::generate::{generate, random_weights, rng, DEFAULT_MAX_WEIGHT};
use mstdp::oracles::BRUTEFORCE_LIMIT;
use mstdp::puredp::{solve_incremental, solve_naive};
use mstdp::{
    bruteforce_mst, compile_mst_circuit, fix_spanning_tree, kruskal_mst, maggs_plotkin_mst,
    parse_graph, write_edge_list, Error, Graph, Weighting,
};

use report::{weight_value, RunReport};

#[derive(Debug, Parser)]
#[command(
    name = "mstdp",
    version,
    about = "Minimum spanning tree weight by a pure (min, max, +) dynamic program"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the MST weight of an edge-list file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Puredp)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the per-tree-edge distance terms (pure-DP algorithms).
        #[arg(long)]
        decomposition: bool,
    },
    /// Run every applicable algorithm and check that they agree.
    Compare { file: PathBuf },
    /// Operation counts of both pure-DP solvers on random complete graphs, as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a random connected instance as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        /// Probability of each non-tree pair becoming an edge.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the pure-DP circuit for the graph in an edge-list file.
    EmitCircuit { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Puredp,
    PuredpNaive,
    Kruskal,
    MaggsPlotkin,
    Bruteforce,
}

impl Algorithm {
    const ALL: [Algorithm; 5] = [
        Algorithm::Puredp,
        Algorithm::PuredpNaive,
        Algorithm::Kruskal,
        Algorithm::MaggsPlotkin,
        Algorithm::Bruteforce,
    ];

    fn name(self) -> &'static str {
        match self {
            Algorithm::Puredp => "puredp",
            Algorithm::PuredpNaive => "puredp-naive",
            Algorithm::Kruskal => "kruskal",
            Algorithm::MaggsPlotkin => "maggs-plotkin",
            Algorithm::Bruteforce => "bruteforce",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Precondition(String),
    Disagreement,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Disagreement => 3,
        }
    }
}

fn load(path: &Path) -> Result<(Graph, Weighting<f64>), Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn precondition(e: Error) -> Failure {
    Failure::Precondition(e.to_string())
}

fn run(
    g: &Graph,
    x: &Weighting<f64>,
    algorithm: Algorithm,
    with_terms: bool,
) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let (weight, ops, decomposition) = match algorithm {
        Algorithm::Puredp | Algorithm::PuredpNaive => {
            let tree = fix_spanning_tree(g);
            let (d, counts) = if algorithm == Algorithm::Puredp {
                solve_incremental(g, x, &tree)
            } else {
                solve_naive(g, x, &tree)
            };
            let terms = with_terms.then(|| RunReport::terms(g, &d));
            (d.total, Some(counts.into()), terms)
        }
        Algorithm::Kruskal => (kruskal_mst(g, x), None, None),
        Algorithm::MaggsPlotkin => (maggs_plotkin_mst(g, x).map_err(precondition)?, None, None),
        Algorithm::Bruteforce => (bruteforce_mst(g, x).map_err(precondition)?, None, None),
    };
    Ok(RunReport {
        algorithm: algorithm.name(),
        mst_weight: weight_value(weight),
        ops,
        decomposition,
        time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn solve(
    file: &Path,
    algorithm: Algorithm,
    format: Format,
    with_terms: bool,
) -> Result<(), Failure> {
    let (g, x) = load(file)?;
    let report = run(&g, &x, algorithm, with_terms)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(())
}

fn close(a: f64, b: f64) -> bool {
    // integral sums are exact; this only absorbs float summation order
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn compare(file: &Path) -> Result<(), Failure> {
    let (g, x) = load(file)?;
    let mut weights = Vec::new();
    for algorithm in Algorithm::ALL {
        let start = Instant::now();
        let result = match algorithm {
            Algorithm::Puredp => Ok(solve_incremental(&g, &x, &fix_spanning_tree(&g)).0.total),
            Algorithm::PuredpNaive => Ok(solve_naive(&g, &x, &fix_spanning_tree(&g)).0.total),
            Algorithm::Kruskal => Ok(kruskal_mst(&g, &x)),
            Algorithm::MaggsPlotkin => maggs_plotkin_mst(&g, &x),
            Algorithm::Bruteforce if g.vertex_count() > BRUTEFORCE_LIMIT => Err(Error::TooLarge {
                n: g.vertex_count(),
                limit: BRUTEFORCE_LIMIT,
            }),
            Algorithm::Bruteforce => bruteforce_mst(&g, &x),
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match result {
            Ok(w) => {
                println!(
                    "{:<14}{:<20}{ms:.3} ms",
                    algorithm.name(),
                    weight_value(w).to_string()
                );
                weights.push(w);
            }
            Err(e) => println!("{:<14}skipped ({e})", algorithm.name()),
        }
    }
    if weights.windows(2).all(|w| close(w[0], w[1])) {
        println!("AGREE");
        Ok(())
    } else {
        println!("DISAGREE");
        Err(Failure::Disagreement)
    }
}

fn bench(sizes: &[usize], seed: u64) -> Result<(), Failure> {
    if let Some(&bad) = sizes.iter().find(|&&n| n < 2) {
        return Err(Failure::Input(format!(
            "sizes must be at least 2, got {bad}"
        )));
    }
    let mut rng = rng(seed);
    println!("n,mst_weight,ops_puredp,ops_naive,puredp_per_n3,naive_per_n4");
    for &n in sizes {
        let g = Graph::complete(n).map_err(|e| Failure::Input(e.to_string()))?;
        let x = random_weights(&mut rng, &g, DEFAULT_MAX_WEIGHT);
        let tree = fix_spanning_tree(&g);
        let (fast, fast_ops) = solve_incremental(&g, &x, &tree);
        let (slow, slow_ops) = solve_naive(&g, &x, &tree);
        if fast.total != slow.total {
            return Err(Failure::Disagreement);
        }
        let nf = n as f64;
        println!(
            "{n},{},{},{},{:.6},{:.6}",
            fast.total,
            fast_ops.total(),
            slow_ops.total(),
            fast_ops.total() as f64 / nf.powi(3),
            slow_ops.total() as f64 / nf.powi(4)
        );
    }
    Ok(())
}

fn gen(n: usize, density: f64, max_weight: u64, seed: u64) -> Result<(), Failure> {
    let (g, x) =
        generate(n, density, max_weight, seed).map_err(|e| Failure::Input(e.to_string()))?;
    println!("# mstdp gen --n {n} --density {density} --max-weight {max_weight} --seed {seed}");
    print!("{}", write_edge_list(&g, &x));
    Ok(())
}

fn emit_circuit(file: &Path) -> Result<(), Failure> {
    let (g, _) = load(file)?;
    print!("{}", compile_mst_circuit(&g));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Solve {
            file,
            algorithm,
            format,
            decomposition,
        } => solve(file, *algorithm, *format, *decomposition),
        Command::Compare { file } => compare(file),
        Command::Bench { sizes, seed } => bench(sizes, *seed),
        Command::Gen {
            n,
            density,
            max_weight,
            seed,
        } => gen(*n, *density, *max_weight, *seed),
        Command::EmitCircuit { file } => emit_circuit(file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(msg) | Failure::Precondition(msg) => eprintln!("error: {msg}"),
                Failure::Disagreement => eprintln!("error: algorithms disagree"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
