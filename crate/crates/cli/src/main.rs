use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use aalpha_core::charpoly::charpoly_direct;
use aalpha_core::closed_forms::{derived_graph, formula_path, verify_identity, TheoremId, TheoremInput};
use aalpha_core::corpus::standard_inputs;
use aalpha_core::ops::Op;
use aalpha_core::poly::{parse_rational, to_f64, Rational};
use aalpha_core::verify::{alpha_grid, numeric_spectrum, roots_match, Status, VerdictReport, DEFAULT_TOL};
use aalpha_core::{family_generate, FamilySpec, Graph};
use clap::{Args, Parser, Subcommand};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    NoInput(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EX_USAGE,
            CliError::Data(_) => EX_DATAERR,
            CliError::NoInput(_) => EX_NOINPUT,
            CliError::Hypothesis(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<aalpha_core::Error> for CliError {
    fn from(e: aalpha_core::Error) -> Self {
        use aalpha_core::Error as E;
        match e {
            E::Parameter(_) | E::Parse { .. } => CliError::Usage(e.to_string()),
            E::Hypothesis(_) => CliError::Hypothesis(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Exact A_α characteristic polynomials of graphs and graph operations.
#[derive(Parser, Debug)]
#[command(name = "aalpha", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the input graph as an edge list.
    Graph(GraphArgs),
    /// Apply the `--op` pipeline and print the result as an edge list.
    Op(GraphArgs),
    /// Print the bivariate characteristic polynomial in λ and α.
    Charpoly {
        #[command(flatten)]
        graph: GraphArgs,
        /// `direct` or `formula:<theorem-id>`.
        #[arg(long, default_value = "direct")]
        method: String,
        #[command(flatten)]
        theorem: TheoremArgs,
    },
    /// Print the numeric A_α eigenvalues at one α, non-increasing.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// α as `p/q` or a decimal in [0, 1].
        #[arg(long)]
        alpha: String,
    },
    /// Check one closed form against the direct computation.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        theorem_args: TheoremArgs,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Verify every closed form over the standard corpus.
    Suite {
        /// Largest order of the exhaustive connected-graph corpus.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    /// Operation applied to the graph; repeat to build a left-to-right pipeline.
    #[arg(long = "op")]
    ops: Vec<String>,
    /// Second operand (family spec) for binary ops and the coalescence theorem.
    #[arg(long = "with", conflicts_with = "with_file")]
    with: Option<String>,
    /// Second operand read from an edge-list file (`-` for stdin).
    #[arg(long)]
    with_file: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family spec such as `complete:5` or `complete_bipartite:2,3`.
    #[arg(long)]
    graph: Option<String>,
    /// Edge-list file (`-` for stdin).
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args, Debug)]
struct TheoremArgs {
    /// Vertex for submatrix-spectrum and pendant-one.
    #[arg(long)]
    vertex: Option<usize>,
    /// Number of pendants for pendant-one.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Comma-separated targets for pendant-many.
    #[arg(long)]
    targets: Option<String>,
    /// Coalescence vertices `u,v` (u in the main graph, v in `--with`).
    #[arg(long)]
    at: Option<String>,
}

#[derive(Args, Debug)]
struct NumericArgs {
    /// Also compare roots numerically against the derived graph's spectrum.
    #[arg(long)]
    numeric: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Comma-separated α values (`p/q` or decimals); default an 11-point grid.
    #[arg(long)]
    alphas: Option<String>,
}

impl NumericArgs {
    fn grid(&self) -> CliResult<Vec<Rational>> {
        match &self.alphas {
            None => Ok(alpha_grid(11)),
            Some(s) => s.split(',').map(|a| parse_rational(a).map_err(CliError::from)).collect(),
        }
    }
}

fn read_source(path: &str) -> CliResult<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::NoInput(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn load_file(path: &str) -> CliResult<Graph> {
    let text = read_source(path)?;
    Graph::parse_edge_list(&text).map_err(|e| CliError::Data(format!("{path}: {e}")))
}

fn parse_family(s: &str) -> CliResult<FamilySpec> {
    Ok(s.parse::<FamilySpec>()?)
}

fn parse_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("not a vertex number: {t:?}"))))
        .collect()
}

impl GraphArgs {
    fn family(&self) -> CliResult<Option<FamilySpec>> {
        self.source.graph.as_deref().map(parse_family).transpose()
    }

    fn base(&self) -> CliResult<Graph> {
        match (&self.source.graph, &self.source.file) {
            (Some(spec), _) => Ok(family_generate(&parse_family(spec)?)?),
            (None, Some(path)) => load_file(path),
            (None, None) => Err(CliError::Usage("one of --graph or --file is required".into())),
        }
    }

    fn operand(&self) -> CliResult<Option<Graph>> {
        match (&self.with, &self.with_file) {
            (Some(spec), _) => Ok(Some(family_generate(&parse_family(spec)?)?)),
            (None, Some(path)) => load_file(path).map(Some),
            (None, None) => Ok(None),
        }
    }

    /// The input graph after the whole `--op` pipeline.
    fn build(&self) -> CliResult<Graph> {
        let ops = self.ops.iter().map(|s| Op::parse(s)).collect::<Result<Vec<_>, _>>()?;
        let operand = if ops.iter().any(Op::needs_operand) { self.operand()? } else { None };
        let mut g = self.base()?;
        for op in &ops {
            if op.needs_operand() && operand.is_none() {
                return Err(CliError::Usage("binary op needs --with or --with-file".into()));
            }
            g = op.apply(&g, operand.as_ref())?;
        }
        Ok(g)
    }

    fn emit(&self, text: &str) -> CliResult<()> {
        emit(self.output.as_ref(), text)
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> CliResult<()> {
    let res = match output {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    res.map_err(|e| CliError::Failed(format!("cannot write output: {e}")))
}

fn theorem_input(id: TheoremId, graph: &GraphArgs, args: &TheoremArgs) -> CliResult<TheoremInput> {
    use TheoremId::*;
    let needs_family = || -> CliResult<FamilySpec> {
        match graph.family()? {
            Some(f) if graph.ops.is_empty() => Ok(f),
            _ => Err(CliError::Usage(format!("{id} needs --graph <family> without --op"))),
        }
    };
    Ok(match id {
        FamilySpectrum => TheoremInput::Family(needs_family()?),
        SubmatrixSpectrum => {
            let vertex = args.vertex.ok_or_else(|| CliError::Usage("submatrix-spectrum needs --vertex".into()))?;
            TheoremInput::Submatrix { family: needs_family()?, vertex }
        }
        Coalescence => {
            let h = graph
                .operand()?
                .ok_or_else(|| CliError::Usage("coalescence needs --with or --with-file".into()))?;
            let (u, v) = match args.at.as_deref().map(parse_list).transpose()?.as_deref() {
                None => (0, 0),
                Some([u, v]) => (*u, *v),
                Some(_) => return Err(CliError::Usage("--at takes two vertices u,v".into())),
            };
            TheoremInput::Coalescence { g: graph.build()?, u, h, v }
        }
        PendantOne => TheoremInput::PendantOne { h: graph.build()?, v: args.vertex.unwrap_or(0), s: args.count },
        PendantMany => {
            let targets = args
                .targets
                .as_deref()
                .ok_or_else(|| CliError::Usage("pendant-many needs --targets".into()))?;
            TheoremInput::PendantMany { g: graph.build()?, targets: parse_list(targets)? }
        }
        _ => TheoremInput::Graph(graph.build()?),
    })
}

fn parse_theorem(s: &str) -> CliResult<TheoremId> {
    s.parse::<TheoremId>().map_err(|_| {
        let ids: Vec<_> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
        CliError::Usage(format!("unknown theorem {s:?}; expected one of: {}", ids.join(", ")))
    })
}

/// Shortest representation after rounding to 15 significant digits, which
/// hides last-bit noise from the eigensolver (`0.5000000000000001` → `0.5`).
fn format_eigenvalue(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".into()
    } else {
        format!("{rounded}")
    }
}

/// The exact verdict, downgraded to a numeric failure when `--numeric` is set
/// and the formula's roots disagree with the derived graph's spectrum.
fn check(id: TheoremId, input: &TheoremInput, numeric: &NumericArgs, grid: &[Rational]) -> VerdictReport {
    let report = verify_identity(id, input);
    if !numeric.numeric || report.status != Status::Pass {
        return report;
    }
    match (formula_path(id, input), derived_graph(id, input)) {
        (Ok(p), Ok(g)) => {
            // the adjacency-only identity says nothing about α > 0
            let zero = [Rational::from_integer(0.into())];
            let grid = if id == TheoremId::ClassicalLineSemiregular { &zero[..] } else { grid };
            let mut r = roots_match(&p, &g, grid, numeric.tol);
            r.id = report.id.clone();
            r.graph = report.graph.clone();
            r
        }
        // no whole graph to compare against (submatrix spectra)
        _ => report,
    }
}

fn run_suite(max_n: usize, jobs: Option<usize>, numeric: &NumericArgs, output: Option<&PathBuf>) -> CliResult<u8> {
    let grid = numeric.grid()?;
    let inputs = standard_inputs(max_n);
    let workers = jobs
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1);
    let next = AtomicUsize::new(0);
    let mut reports: Vec<(usize, VerdictReport)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                let (grid, next, inputs) = (&grid, &next, &inputs);
                s.spawn(move || {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some((id, input)) = inputs.get(i) else { break };
                        done.push((i, check(*id, input, numeric, grid)));
                    }
                    done
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite worker panicked")).collect()
    });
    reports.sort_by_key(|(i, _)| *i);
    let reports: Vec<VerdictReport> = reports.into_iter().map(|(_, r)| r).collect();

    let mut table: BTreeMap<&str, [usize; 3]> = TheoremId::ALL.iter().map(|id| (id.as_str(), [0; 3])).collect();
    let mut failures = Vec::new();
    for r in &reports {
        let row = table.entry(r.id.as_str()).or_default();
        match r.status {
            Status::Pass => row[0] += 1,
            Status::Fail => {
                row[1] += 1;
                failures.push(r);
            }
            Status::HypothesisNotMet => row[2] += 1,
        }
    }
    let mut out = format!("{:<30} {:>7} {:>7} {:>9}\n", "theorem", "pass", "fail", "not-met");
    let mut total = [0usize; 3];
    for id in TheoremId::ALL {
        let row = table[id.as_str()];
        out.push_str(&format!("{:<30} {:>7} {:>7} {:>9}\n", id.as_str(), row[0], row[1], row[2]));
        for k in 0..3 {
            total[k] += row[k];
        }
    }
    out.push_str(&format!("{:<30} {:>7} {:>7} {:>9}\n", "total", total[0], total[1], total[2]));
    for r in failures {
        out.push_str(&format!("\n{r}\n"));
    }
    emit(output, &out)?;
    Ok(if total[1] == 0 { 0 } else { 1 })
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Graph(args) | Command::Op(args) => {
            let g = args.build()?;
            args.emit(&g.to_edge_list())?;
        }
        Command::Charpoly { graph, method, theorem } => {
            let p = match method.as_str() {
                "direct" => charpoly_direct(&graph.build()?),
                m => match m.strip_prefix("formula:") {
                    Some(id) => {
                        let id = parse_theorem(id)?;
                        formula_path(id, &theorem_input(id, &graph, &theorem)?)?
                    }
                    None => return Err(CliError::Usage(format!("unknown method {m:?}; use direct or formula:<id>"))),
                },
            };
            graph.emit(&format!("{p}\n"))?;
        }
        Command::Spectrum { graph, alpha } => {
            let a = to_f64(&parse_rational(&alpha)?);
            let spec = numeric_spectrum(&graph.build()?, a)?;
            let line: Vec<String> = spec.values.iter().map(|&x| format_eigenvalue(x)).collect();
            graph.emit(&format!("{}\n", line.join(" ")))?;
        }
        Command::Verify { graph, theorem, theorem_args, numeric } => {
            let id = parse_theorem(&theorem)?;
            let input = theorem_input(id, &graph, &theorem_args)?;
            let report = check(id, &input, &numeric, &numeric.grid()?);
            graph.emit(&format!("{report}\n"))?;
            return Ok(report.exit_code() as u8);
        }
        Command::Suite { max_n, jobs, numeric, output } => return run_suite(max_n, jobs, &numeric, output.as_ref()),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("aalpha: {e}");
            ExitCode::from(e.code())
        }
    }
}
