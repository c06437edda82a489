use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use unicolor::json::{
    classes_json, ratio_string, CensusSummaryJson, InputErrorJson, NuJson, NuPropertiesJson,
    ReportJson, SampleJson, WitnessJson,
};
use unicolor::parallel::{self, SharedBudget};
use unicolor::{catalog, checkpoint, dot, graph6};
use unicolor_core::census::{CensusTask, Checkpoint, DEFAULT_SPLIT_ORDER};
use unicolor_core::colouring::{
    chromatic_number, optimal_colouring, report_from_count, sigma_within,
};
use unicolor_core::constructions::{
    bollobas_sauer_sample, builtin, nu, nu_postconditions, remove_short_cycles, SamplerConfig,
    BUILTIN_HELP,
};
use unicolor_core::graph::{clique_number, girth};
use unicolor_core::{ColouredGraph, Colouring, Graph, Ratio, Verdict};

#[derive(Parser)]
#[command(
    name = "unicolor",
    version,
    about = "Exact tools for uniquely colourable graphs"
)]
struct Cli {
    /// Worker threads (default: one per CPU)
    #[arg(long, global = true, env = "UNICOLOR_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide unique k-colourability and report the necessary conditions
    Check(CheckArgs),
    /// Apply the ν construction to a coloured graph
    Nu(NuArgs),
    /// Isomorph-free search for uniquely k-colourable graphs
    Census(CensusArgs),
    /// Random balanced k-partite graph, optionally cleaned of short cycles
    Sample(SampleArgs),
    /// Print the catalog manifest
    Catalog,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// A graph6 string
    graph6: Option<String>,
    /// File of graph6 lines ("-" for stdin)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Builtin graph name
    #[arg(long, help = format!("Builtin graph: {BUILTIN_HELP}"))]
    catalog: Option<String>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node limit
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn build(&self) -> Result<SharedBudget, Failure> {
        let time = match self.budget_seconds {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(Failure::Input("--budget-seconds must be >= 0".into()))
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(SharedBudget::new(self.budget_nodes, time))
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of colours (default for catalog graphs: their class count)
    #[arg(long)]
    k: Option<usize>,
    /// Stop counting partitions at this many
    #[arg(long, default_value_t = 2)]
    cap: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the graphs, coloured when unique, as DOT
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct NuArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 1)]
    iterations: usize,
    /// Comma-separated class index per vertex (default: the catalog colouring
    /// or an optimal colouring)
    #[arg(long)]
    classes: Option<String>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy)]
struct EdgeWindow(usize, usize);

impl FromStr for EdgeWindow {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
        let lo = lo.parse().map_err(|e| format!("LO: {e}"))?;
        let hi = hi.parse().map_err(|e| format!("HI: {e}"))?;
        Ok(EdgeWindow(lo, hi))
    }
}

#[derive(Args)]
struct CensusArgs {
    /// Order of the graphs
    #[arg(long, required_unless_present = "resume")]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    triangle_free: bool,
    /// Already implied for witnesses; kept for symmetry with the task fields
    #[arg(long)]
    connected: bool,
    /// All classes of the unique colouring have size n/k
    #[arg(long)]
    balanced: bool,
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
    /// Inclusive edge-count window
    #[arg(long, value_name = "LO:HI")]
    edges: Option<EdgeWindow>,
    /// Order at which the search is split into independent subtrees
    #[arg(long, default_value_t = DEFAULT_SPLIT_ORDER)]
    split_order: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Where to write a checkpoint if the budget runs out
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint; task flags are taken from the file
    #[arg(long)]
    resume: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    /// Number of parts
    #[arg(long)]
    k: usize,
    /// Part size
    #[arg(long)]
    n: usize,
    #[arg(long)]
    eps: f64,
    /// Delete edges until no cycle is shorter than this
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    dot: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("unicolor: cannot start worker threads: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let outcome = pool.install(|| match cli.command {
        Command::Check(a) => check(a),
        Command::Nu(a) => run_nu(a),
        Command::Census(a) => census(a),
        Command::Sample(a) => sample(a),
        Command::Catalog => print_catalog(),
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("unicolor: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Io(e)) => {
            eprintln!("unicolor: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn emit<T: serde::Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

/// One input graph: where it came from and what it parsed to.
struct Item {
    line: usize,
    text: String,
    parsed: Result<(Graph, Option<Colouring>), String>,
}

fn read_inputs(input: &InputArgs) -> Result<Vec<Item>, Failure> {
    if let Some(name) = &input.catalog {
        let h = builtin(name).ok_or_else(|| {
            Failure::Input(format!("unknown catalog name {name:?} ({BUILTIN_HELP})"))
        })?;
        let (g, c) = h.into_parts();
        return Ok(vec![Item {
            line: 0,
            text: name.clone(),
            parsed: Ok((g, Some(c))),
        }]);
    }
    let parse = |line, text: String| {
        let parsed = graph6::parse(&text)
            .map(|g| (g, None))
            .map_err(|e| e.to_string());
        Item { line, text, parsed }
    };
    if let Some(s) = &input.graph6 {
        return Ok(vec![parse(0, s.clone())]);
    }
    let path = input
        .input
        .as_ref()
        .expect("clap enforces one input source");
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(io::BufReader::new(fs::File::open(path).map_err(|e| {
            Failure::Input(format!("{}: {e}", path.display()))
        })?))
    };
    let mut items = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end();
        if !text.is_empty() {
            items.push(parse(i + 1, text.to_string()));
        }
    }
    Ok(items)
}

fn check(args: CheckArgs) -> Result<u8, Failure> {
    let items = read_inputs(&args.input)?;
    let budget = args.budget.build()?;
    let mut out = io::stdout().lock();
    let mut dot_text = String::new();
    let (mut input_error, mut unknown, mut failed) = (false, false, false);
    for item in items {
        let (g, given) = match item.parsed {
            Ok(p) => p,
            Err(error) => {
                input_error = true;
                emit(
                    &mut out,
                    &InputErrorJson {
                        line: item.line,
                        input: item.text,
                        error,
                    },
                )?;
                continue;
            }
        };
        let Some(k) = args.k.or(given.as_ref().map(Colouring::class_count)) else {
            return Err(Failure::Input("--k is required for graph6 input".into()));
        };
        let count = parallel::partition_count(&g, k, args.cap.max(2), &budget);
        let report = report_from_count(&g, k, count.as_ref().map_err(|&e| e));
        match report.verdict {
            Verdict::Yes => {}
            Verdict::No => failed = true,
            Verdict::Unknown => unknown = true,
        }
        emit(&mut out, &ReportJson::new(&g, &report))?;
        if args.dot.is_some() {
            let unique = count
                .ok()
                .and_then(|c| c.first)
                .filter(|_| report.verdict == Verdict::Yes);
            dot_text.push_str(&dot::to_dot(&item.text, &g, unique.as_ref()));
        }
    }
    if let Some(path) = &args.dot {
        fs::write(path, dot_text)?;
    }
    Ok(if input_error {
        EXIT_INPUT
    } else if unknown {
        EXIT_BUDGET
    } else if failed {
        EXIT_FAIL
    } else {
        0
    })
}

fn parse_labels(text: &str, n: usize) -> Result<Colouring, Failure> {
    let labels = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(format!("--classes: {e}")))?;
    if labels.len() != n {
        return Err(Failure::Input(format!(
            "--classes has {} entries for {n} vertices",
            labels.len()
        )));
    }
    Ok(Colouring::from_labels(&labels))
}

fn run_nu(args: NuArgs) -> Result<u8, Failure> {
    let mut items = read_inputs(&args.input)?;
    if items.len() != 1 {
        return Err(Failure::Input(format!(
            "nu takes exactly one graph, got {}",
            items.len()
        )));
    }
    let item = items.remove(0);
    let (g, given) = item
        .parsed
        .map_err(|e| Failure::Input(format!("{}: {e}", item.text)))?;
    let colouring = match (&args.classes, given) {
        (Some(text), _) => parse_labels(text, g.order())?,
        (None, Some(c)) => c,
        (None, None) => optimal_colouring(&g),
    };
    let h = ColouredGraph::new(g, colouring).map_err(|e| Failure::Input(e.to_string()))?;
    let mut current = h.clone();
    let mut postconditions_ok = true;
    for _ in 0..args.iterations {
        let next = nu(&current).map_err(|e| Failure::Input(e.to_string()))?;
        postconditions_ok &= nu_postconditions(&current, &next).is_ok();
        current = next;
    }
    let budget = args.budget.build()?;
    let gg = current.graph();
    let chi = chromatic_number(gg);
    let chi_cr = (chi >= 2)
        .then(|| sigma_within(gg, &mut budget.handle()).ok())
        .flatten()
        .map(|s| {
            ratio_string(&Ratio::new(
                ((chi - 1) * gg.order()) as u64,
                (gg.order() - s) as u64,
            ))
        });
    let record = NuJson {
        graph6: graph6::encode(gg),
        n: gg.order(),
        edges: gg.size(),
        k: current.k(),
        iterations: args.iterations,
        classes: classes_json(current.colouring()),
        properties: NuPropertiesJson {
            postconditions_ok,
            input_clique_number: clique_number(h.graph()),
            clique_number: clique_number(gg),
            input_min_degree: h.graph().min_degree(),
            min_degree: gg.min_degree(),
            chi_cr,
        },
    };
    emit(&mut io::stdout().lock(), &record)?;
    if let Some(path) = &args.dot {
        fs::write(
            path,
            dot::to_dot(
                &format!("nu^{} {}", args.iterations, item.text),
                gg,
                Some(current.colouring()),
            ),
        )?;
    }
    Ok(0)
}

fn census(args: CensusArgs) -> Result<u8, Failure> {
    let start = match &args.resume {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            checkpoint::from_json(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => {
            let task = CensusTask {
                n: args.n.expect("clap requires --n without --resume"),
                k: args.k,
                triangle_free: args.triangle_free,
                connected: args.connected,
                min_degree: args.min_degree,
                balanced: args.balanced,
                edges: args.edges.map(|EdgeWindow(lo, hi)| (lo, hi)),
            };
            Checkpoint::start(task, args.split_order)
        }
    };
    let budget = args.budget.build()?;
    let (result, roots) =
        parallel::witness_census(&start, &budget).map_err(|e| Failure::Input(e.to_string()))?;
    let mut out = io::stdout().lock();
    for w in &result.witnesses {
        emit(&mut out, &WitnessJson::new(&w.graph, &w.report))?;
    }
    out.flush()?;
    let summary = CensusSummaryJson {
        n: start.task.n,
        k: start.task.k,
        complete: result.is_complete(),
        next_root: result.checkpoint.as_ref().map(|c| c.next_root),
        roots,
        stats: (&result.stats).into(),
    };
    emit(&mut io::stderr().lock(), &summary)?;
    match &result.checkpoint {
        None => Ok(0),
        Some(cp) => {
            match &args.checkpoint {
                Some(path) => fs::write(path, checkpoint::to_json(cp))?,
                None => {
                    eprintln!("unicolor: budget exhausted; pass --checkpoint PATH to keep progress")
                }
            }
            Ok(EXIT_BUDGET)
        }
    }
}

fn sample(args: SampleArgs) -> Result<u8, Failure> {
    let cfg = SamplerConfig {
        k: args.k,
        n: args.n,
        epsilon: args.eps,
        girth: args.girth,
        seed: args.seed,
    };
    let g = bollobas_sauer_sample(&cfg).map_err(|e| Failure::Input(e.to_string()))?;
    let (h, removed) = match args.girth {
        Some(target) => remove_short_cycles(&g, target),
        None => (g, 0),
    };
    let record = SampleJson {
        graph6: graph6::encode(&h),
        k: args.k,
        n: args.n,
        epsilon: args.eps,
        seed: args.seed,
        target_girth: args.girth,
        edges_sampled: g.size(),
        edges_removed: removed,
        edges: h.size(),
        girth: girth(&h),
    };
    emit(&mut io::stdout().lock(), &record)?;
    if let Some(path) = &args.dot {
        let parts = Colouring::from_labels(&(0..h.order()).map(|v| v / args.n).collect::<Vec<_>>());
        fs::write(path, dot::to_dot("sample", &h, Some(&parts)))?;
    }
    Ok(0)
}

fn print_catalog() -> Result<u8, Failure> {
    let entries: Vec<_> = catalog::CATALOG_NAMES
        .iter()
        .map(|n| catalog::entry(n).expect("catalog names are builtin"))
        .collect();
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &entries).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(0)
}
