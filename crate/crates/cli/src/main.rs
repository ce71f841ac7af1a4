//! Command-line front end. Computes a bend-minimum orthogonal representation
//! of a graph JSON file and writes the requested outputs.

use bendmin::dp::{verify, SolveError, SolveResult, Solver};
use bendmin::io::{parse_input, InputError};
use bendmin::oracle::{brute_min_bends, brute_min_bends_edge, brute_min_bends_vertex};
use bendmin::ortho::validate_rep;
use bendmin::realize::{compact, emit_json, emit_svg, round_trip};
use bendmin::Graph;
use clap::{Parser, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Largest graph accepted by `--oracle-check`.
const ORACLE_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Minimum over all planar embeddings.
    Global,
    /// Minimum with the edge given by `--edge` on the external face.
    Edge,
    /// Minimum with the vertex given by `--vertex` on the external face.
    Vertex,
}

#[derive(Debug, Parser)]
#[command(name = "bendmin", version, about = "Bend-minimum orthogonal drawings of planar 3-graphs")]
struct Args {
    /// Input graph JSON: {"n": .., "edges": [[u, v], ..], "rotation"?: .., "external_face"?: ..}. Use - for stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Global)]
    mode: Mode,
    /// Reference edge for `--mode edge`, as `u,v`.
    #[arg(long, value_parser = parse_pair)]
    edge: Option<(usize, usize)>,
    /// Reference vertex for `--mode vertex`.
    #[arg(long)]
    vertex: Option<usize>,
    /// Output files, repeatable. `*.svg` gets an SVG drawing. A `.json` file
    /// whose stem ends in `rep` gets the representation, other `.json` files
    /// the grid drawing.
    #[arg(long)]
    out: Vec<PathBuf>,
    /// Check the representation and the realized drawing.
    #[arg(long)]
    validate: bool,
    /// Compare the bend count with exhaustive search (at most 8 vertices).
    #[arg(long)]
    oracle_check: bool,
    /// Worker threads for the global loop (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v but got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// Failure categories with their exit codes.
#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
    Oracle(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
            Failure::Oracle(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Invariant(m) | Failure::Oracle(m) => m,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Invariant(_) => Failure::Invariant(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

enum Output {
    Rep,
    Drawing,
    Svg,
}

fn output_kind(path: &std::path::Path) -> Result<Output, Failure> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    match ext {
        "svg" => Ok(Output::Svg),
        "json" if stem.ends_with("rep") => Ok(Output::Rep),
        "json" => Ok(Output::Drawing),
        _ => Err(Failure::Input(format!("unsupported output file {}", path.display()))),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let read =
        if path.as_os_str() == "-" { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn solve(args: &Args, g: &Graph, solver: &Solver) -> Result<SolveResult, Failure> {
    Ok(match args.mode {
        Mode::Global => solver.global()?,
        Mode::Edge => {
            let (u, v) = args.edge.ok_or_else(|| Failure::Input("--mode edge needs --edge u,v".into()))?;
            let e = g.find_edge(u, v).ok_or_else(|| Failure::Input(format!("no edge ({u}, {v})")))?;
            solver.ref_edge(e)?
        }
        Mode::Vertex => {
            let v = args.vertex.ok_or_else(|| Failure::Input("--mode vertex needs --vertex v".into()))?;
            solver.vertex(v)?
        }
    })
}

fn oracle_value(args: &Args, g: &Graph, res: &SolveResult) -> Option<usize> {
    let best = match args.mode {
        Mode::Global => brute_min_bends(g),
        Mode::Edge => brute_min_bends_edge(g, res.ref_edge?),
        Mode::Vertex => brute_min_bends_vertex(g, args.vertex?),
    };
    // graphs without edges have no representation to enumerate
    Some(best.map_or(0, |b| b.0))
}

fn run(args: &Args) -> Result<(), Failure> {
    let kinds = args.out.iter().map(|p| output_kind(p)).collect::<Result<Vec<_>, _>>()?;
    let text = read_input(&args.input)?;
    let (g, emb) = parse_input(&text)?;
    if !g.is_connected() {
        return Err(Failure::Input("graph is disconnected".into()));
    }
    if args.oracle_check && g.n() > ORACLE_MAX_N {
        return Err(Failure::Input(format!("--oracle-check supports at most {ORACLE_MAX_N} vertices")));
    }
    let solver = Solver::new(&g, &emb)?;
    let res = match args.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            pool.install(|| solve(args, &g, &solver))?
        }
        None => solve(args, &g, &solver)?,
    };
    if args.validate {
        validate_rep(&res.rep).map_err(|e| Failure::Invariant(format!("representation: {e}")))?;
        verify(&res).map_err(Failure::Invariant)?;
        round_trip(&res.rep).map_err(|e| Failure::Invariant(format!("realization: {e}")))?;
    }
    if args.oracle_check {
        let want =
            oracle_value(args, &g, &res).ok_or_else(|| Failure::Invariant("oracle check needs a reference".into()))?;
        if want != res.bends {
            return Err(Failure::Oracle(format!("solver found {} bends but the optimum is {want}", res.bends)));
        }
    }
    let needs_drawing = kinds.iter().any(|k| !matches!(k, Output::Rep));
    let drawing = if needs_drawing {
        Some(compact(&res.rep).map_err(|e| Failure::Invariant(format!("realization: {e}")))?)
    } else {
        None
    };
    for (path, kind) in args.out.iter().zip(&kinds) {
        let body = match kind {
            Output::Rep => serde_json::to_string(&res.rep).map_err(|e| Failure::Invariant(e.to_string()))?,
            Output::Drawing => emit_json(drawing.as_ref().expect("drawing computed")),
            Output::Svg => emit_svg(drawing.as_ref().expect("drawing computed")),
        };
        std::fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    println!("bends: {}", res.bends);
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
