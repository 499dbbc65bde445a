//! Command-line front end: load a graph and lists, pick a solver, color the
//! square, optionally verify and dump the decision trace.
//!
//! Exit codes: 0 success; 1 malformed input; 2 precondition failure (the
//! failing quantity is printed); 3 internal case-analysis failure.

use std::fs;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use squarecol::discharging::{self, DischargeError};
use squarecol::io::{format_coloring, parse_edge_list, parse_lists, LabelMap};
use squarecol::mad::mad_exact;
use squarecol::solver8::{self, SolveError};
use squarecol::testkit::{exact_list_color, gen_named, random_lists};
use squarecol::trace::Trace;
use squarecol::{verify_square_coloring, Graph, ListAssignment, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Solver {
    /// Strongest applicable solver, checked in order 6, 7, 8.
    Auto,
    /// 8-lists; any connected subcubic graph except the Petersen graph.
    #[value(name = "8")]
    Eight,
    /// 7-lists; requires maximum average degree below 14/5.
    #[value(name = "7")]
    Seven,
    /// 6-lists; additionally requires girth at least 7 and mad below 18/7.
    #[value(name = "6")]
    Six,
    /// Exhaustive search; exact but exponential.
    Oracle,
}

/// List-colors the square of a subcubic graph.
#[derive(Debug, Parser)]
#[command(name = "squarecol", version)]
#[command(group(
    ArgGroup::new("list_source")
        .args(["lists", "uniform", "random"])
        .required(true)
))]
struct Cli {
    /// Graph file in edge-list format, or `@name` for a built-in fixture.
    input: String,

    /// Per-vertex color lists, one `label: c1 c2 ...` line per vertex.
    #[arg(long)]
    lists: Option<String>,

    /// Give every vertex the list {1..k}.
    #[arg(long, value_name = "K")]
    uniform: Option<u32>,

    /// Draw each list as a uniform K-subset of {1..3K}.
    #[arg(long, num_args = 2, value_names = ["K", "SEED"])]
    random: Option<Vec<u64>>,

    #[arg(long, value_enum, default_value_t = Solver::Auto)]
    solver: Solver,

    /// Re-check the output against the square before printing.
    #[arg(long)]
    verify: bool,

    /// Write the decision trace to this file.
    #[arg(long, value_name = "PATH")]
    trace: Option<String>,
}

enum Failure {
    /// Exit 1: unreadable or malformed input.
    Input(String),
    /// Exit 2: a solver precondition does not hold.
    Precondition(String),
    /// Exit 3: a case analysis that should be total failed.
    Internal(String, Trace),
}

impl Failure {
    fn report(self, labels: &LabelMap) -> ExitCode {
        match self {
            Failure::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Precondition(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Internal(msg, trace) => {
                eprintln!("error: {msg}");
                eprint!("{}", trace.render(&|v| labels.label(v).to_string()));
                ExitCode::from(3)
            }
        }
    }
}

fn load_graph(input: &str) -> Result<(Graph, LabelMap), Failure> {
    if let Some(name) = input.strip_prefix('@') {
        let g = gen_named(name).map_err(|e| Failure::Input(e.to_string()))?;
        let labels = LabelMap::identity(g.n());
        return Ok((g, labels));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))?;
    parse_edge_list(&text, true).map_err(|e| Failure::Input(e.to_string()))
}

fn load_lists(cli: &Cli, n: usize, labels: &LabelMap) -> Result<ListAssignment, Failure> {
    if let Some(path) = &cli.lists {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
        return parse_lists(&text, labels).map_err(|e| Failure::Input(e.to_string()));
    }
    if let Some(k) = cli.uniform {
        return Ok(ListAssignment::uniform(n, k));
    }
    let r = cli.random.as_ref().expect("clap enforces one list source");
    let (k, seed) = (r[0] as usize, r[1]);
    if k == 0 {
        return Err(Failure::Input("--random needs K >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_lists(n, k, 3 * k as u32, &mut rng))
}

fn from_solve8(e: SolveError) -> Failure {
    match e {
        SolveError::InternalCaseFailure { context, trace } => {
            Failure::Internal(format!("internal case analysis failed: {context}"), trace)
        }
        SolveError::PetersenInput => Failure::Precondition(format!("PetersenInput: {e}")),
        other => Failure::Precondition(other.to_string()),
    }
}

fn from_discharge(e: DischargeError) -> Failure {
    match e {
        DischargeError::InternalCaseFailure { context, trace } => {
            Failure::Internal(format!("internal case analysis failed: {context}"), trace)
        }
        DischargeError::MadTooLarge { mad, .. } => {
            Failure::Precondition(format!("mad = {mad}: {e}"))
        }
        DischargeError::GirthTooSmall { girth } => {
            Failure::Precondition(format!("girth = {girth}: {e}"))
        }
        other => Failure::Precondition(other.to_string()),
    }
}

/// The strongest solver whose graph preconditions hold, in order 6, 7, 8.
fn pick_solver(g: &Graph) -> Result<Solver, Failure> {
    if g.n() == 0 {
        return Err(Failure::Precondition("the input graph is empty".into()));
    }
    let girth = g.girth();
    let mad = mad_exact(g).map_err(|e| Failure::Precondition(e.to_string()))?;
    match girth {
        Some(c) => println!("# girth = {c}, mad = {mad}"),
        None => println!("# girth = infinity, mad = {mad}"),
    }
    let solver = if girth.map_or(true, |c| c >= 7) && mad < Rational::new(18, 7) {
        Solver::Six
    } else if mad < Rational::new(14, 5) {
        Solver::Seven
    } else if g.is_petersen() {
        return Err(Failure::Precondition(
            "PetersenInput: the input is the Petersen graph".into(),
        ));
    } else if !g.is_connected() {
        return Err(Failure::Precondition(
            "the input graph is disconnected".into(),
        ));
    } else {
        Solver::Eight
    };
    let name = match solver {
        Solver::Six => "6",
        Solver::Seven => "7",
        _ => "8",
    };
    println!("# solver = {name}");
    Ok(solver)
}

fn run(cli: &Cli, g: &Graph, labels: &LabelMap) -> Result<(), Failure> {
    let lists = load_lists(cli, g.n(), labels)?;
    let solver = match cli.solver {
        Solver::Auto => pick_solver(g)?,
        s => s,
    };
    let (coloring, trace) = match solver {
        Solver::Eight => solver8::solve8_traced(g, &lists).map_err(from_solve8)?,
        Solver::Seven => discharging::solve7_traced(g, &lists).map_err(from_discharge)?,
        Solver::Six => discharging::solve6_traced(g, &lists).map_err(from_discharge)?,
        Solver::Oracle => match exact_list_color(&g.square(), &lists) {
            Some(c) => {
                let mut t = Trace::new();
                t.note("exhaustive search");
                (c, t)
            }
            None => return Err(Failure::Precondition("no proper list coloring".into())),
        },
        Solver::Auto => unreachable!("resolved above"),
    };
    if cli.verify {
        verify_square_coloring(g, &lists, &coloring).map_err(|v| {
            Failure::Internal(format!("output failed verification: {v:?}"), trace.clone())
        })?;
        println!("# verified");
    }
    print!("{}", format_coloring(&coloring, labels));
    if let Some(path) = &cli.trace {
        let text = trace.render(&|v| labels.label(v).to_string());
        fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {path}: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (g, labels) = match load_graph(&cli.input) {
        Ok(x) => x,
        Err(f) => return f.report(&LabelMap::default()),
    };
    match run(&cli, &g, &labels) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(&labels),
    }
}
