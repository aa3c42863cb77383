use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bicomp::bounds::{connectivity_bounds_unconstrained, delta_bounds, sized_bounds, ParameterTriple};
use bicomp::connectivity::{edge_connectivity, vertex_connectivity, ConnectivityResult};
use bicomp::constructions::{bi_cayley, build_witness, CayleySubset, WitnessFamilyId};
use bicomp::verify::{check_theorem_with_jobs, extremal_scan, Metric, RangeSpec, TheoremId};
use bicomp::{io, BipartiteGraph, Error};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;

#[derive(Parser)]
#[command(name = "bicomp", version, about = "Connectivity of bipartite graphs and their bipartite complements")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    EdgeList,
}

#[derive(Subcommand)]
enum Command {
    /// κ, κ', δ and certificates for a graph and its bipartite complement.
    Connectivity { file: PathBuf },
    /// The bipartite complement of a graph.
    Complement { file: PathBuf },
    /// Bound values for a shape, and for an edge count if given.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Build a witness graph and report its verified connectivity pair.
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// The Bi-Cayley graph BC(Z_r, S).
    Bicayley {
        #[arg(long)]
        r: usize,
        /// Comma-separated members of S, e.g. 0,1,2.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        /// Extra right vertices joined round-robin with degree |S|.
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
    /// Check a result over a range and print the report.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Extremal values of a metric over all graphs with m edges.
    Scan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
        /// sum_edge, prod_edge, sum_vertex, prod_vertex, sum_delta or prod_delta.
        #[arg(long)]
        metric: String,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Args)]
struct Jobs {
    /// Worker threads (default: available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
}

impl Jobs {
    fn get(&self) -> Option<usize> {
        self.jobs.map(|j| j as usize)
    }
}

enum Failure {
    Usage(String),
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EX_USAGE,
            Failure::Input(_) => EX_NOINPUT,
            Failure::Lib(e) => match e {
                Error::TooLarge { .. }
                | Error::Parse { .. }
                | Error::Json(_)
                | Error::DuplicateEdge { .. }
                | Error::IndexOutOfRange { .. }
                | Error::TooSmall { .. }
                | Error::EmptyGraph => EX_DATAERR,
                _ => EX_USAGE,
            },
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Input(m) => m.clone(),
                Failure::Lib(e) => e.to_string(),
            };
            eprintln!("bicomp: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    let graph = if text.trim_start().starts_with('{') {
        io::from_json(&text)?
    } else {
        io::from_edge_list(&text)?
    };
    Ok(graph)
}

fn emit_graph(g: &BipartiteGraph, format: Format) -> String {
    match format {
        Format::Json => io::to_json(g) + "\n",
        Format::EdgeList | Format::Text => io::to_edge_list(g),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Connectivity { file } => {
            let g = read_graph(file)?;
            Ok(Output::ok(connectivity_report(&g, format(Format::Text))?))
        }
        Command::Complement { file } => {
            let g = read_graph(file)?;
            Ok(Output::ok(emit_graph(&g.complement(), format(Format::EdgeList))))
        }
        Command::Bounds { r, s, m } => bounds_report(*r, *s, *m, format(Format::Text)),
        Command::Witness { family, r, s, m } => {
            let family: WitnessFamilyId = family.parse()?;
            let w = build_witness(family, *r, *s, *m)?;
            let (edge, vertex) = (pair(&w.graph, edge_connectivity)?, pair(&w.graph, vertex_connectivity)?);
            let claimed = family.claimed_pair(*r, *s, *m);
            let text = match format(Format::Text) {
                Format::EdgeList => io::to_edge_list(&w.graph),
                Format::Json => {
                    let v = json!({
                        "family": family.name(),
                        "graph": w.graph,
                        "claimed": claimed,
                        "edge_pair": edge,
                        "vertex_pair": vertex,
                        "notes": w.notes,
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                Format::Text => {
                    let mut t = String::new();
                    writeln!(t, "family        {}", family.name()).unwrap();
                    writeln!(t, "claimed       {claimed:?}").unwrap();
                    writeln!(t, "(k', k'^bc)   {edge:?}").unwrap();
                    writeln!(t, "(k, k^bc)     {vertex:?}").unwrap();
                    for note in &w.notes {
                        writeln!(t, "note          {note}").unwrap();
                    }
                    t.push_str(&io::to_edge_list(&w.graph));
                    t
                }
            };
            Ok(Output::ok(text))
        }
        Command::Bicayley { r, set, extra } => {
            let spec = CayleySubset::new(*r, set)?;
            Ok(Output::ok(emit_graph(&bi_cayley(&spec, *extra), format(Format::EdgeList))))
        }
        Command::Verify { theorem, max_n, r, s, trials, seed, jobs } => {
            let id: TheoremId = theorem.parse()?;
            let defaults = RangeSpec::default();
            let range = RangeSpec {
                max_n: max_n.unwrap_or(defaults.max_n),
                r: *r,
                s: *s,
                trials: trials.unwrap_or(defaults.trials),
                seed: seed.unwrap_or(defaults.seed),
            };
            let report = check_theorem_with_jobs(id, &range, jobs.get())?;
            let text = match format(Format::Json) {
                Format::Json | Format::EdgeList => report.to_json() + "\n",
                Format::Text => {
                    let mut t = String::new();
                    writeln!(t, "theorem            {}", report.theorem).unwrap();
                    writeln!(t, "graphs checked     {}", report.graphs_checked).unwrap();
                    writeln!(t, "violations         {}", report.violation_count).unwrap();
                    writeln!(t, "attainment cells   {}", report.attainment.len()).unwrap();
                    for a in report.not_attained() {
                        let m = a.m.map_or("-".to_string(), |m| m.to_string());
                        writeln!(
                            t,
                            "not attained       r={} s={} m={} {} {}: enumerated {} formula {}",
                            a.r, a.s, m, a.quantity, a.goal, a.enumerated, a.formula
                        )
                        .unwrap();
                    }
                    writeln!(t, "wall ms            {}", report.wall_ms).unwrap();
                    t
                }
            };
            Ok(Output { text, code: report.exit_code() as u8 })
        }
        Command::Scan { r, s, m, metric, jobs } => {
            let metric: Metric = metric.parse()?;
            let pool = {
                let mut b = rayon::ThreadPoolBuilder::new();
                if let Some(j) = jobs.get() {
                    b = b.num_threads(j);
                }
                b.build().map_err(|e| Failure::Usage(e.to_string()))?
            };
            let res = pool.install(|| extremal_scan(*r, *s, *m, metric))?;
            let text = match format(Format::Text) {
                Format::Json | Format::EdgeList => serde_json::to_string_pretty(&res).expect("serializable") + "\n",
                Format::Text => {
                    let mut t = String::new();
                    writeln!(t, "metric           {}", res.metric).unwrap();
                    writeln!(t, "(r, s, m)        ({}, {}, {})", res.r, res.s, res.m).unwrap();
                    writeln!(t, "graphs checked   {}", res.graphs_checked).unwrap();
                    writeln!(t, "max              {}  {:?}", res.max_value, res.argmax.edge_list()).unwrap();
                    writeln!(t, "min              {}  {:?}", res.min_value, res.argmin.edge_list()).unwrap();
                    t
                }
            };
            Ok(Output::ok(text))
        }
    }
}

fn pair(g: &BipartiteGraph, f: fn(&BipartiteGraph) -> bicomp::Result<ConnectivityResult>) -> bicomp::Result<(usize, usize)> {
    Ok((f(g)?.value, f(&g.complement())?.value))
}

fn connectivity_report(g: &BipartiteGraph, format: Format) -> Result<String, Failure> {
    let h = g.complement();
    let mut rows = Vec::new();
    for (label, graph) in [("G", g), ("G^bc", &h)] {
        let kappa = vertex_connectivity(graph)?;
        let lambda = edge_connectivity(graph)?;
        rows.push((label, kappa, lambda, graph.min_degree()));
    }
    Ok(match format {
        Format::Json | Format::EdgeList => {
            let v: serde_json::Map<String, serde_json::Value> = rows
                .iter()
                .map(|(label, kappa, lambda, delta)| {
                    let key = if *label == "G" { "graph" } else { "complement" };
                    (key.to_string(), json!({ "vertex": kappa, "edge": lambda, "delta": delta }))
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "graph   kappa  kappa'  delta").unwrap();
            for (label, kappa, lambda, delta) in &rows {
                writeln!(t, "{label:<7} {:>5}  {:>6}  {delta:>5}", kappa.value, lambda.value).unwrap();
            }
            for (label, kappa, lambda, _) in &rows {
                writeln!(t, "{label} vertex certificate: {}", serde_json::to_string(&kappa.certificate).unwrap()).unwrap();
                writeln!(t, "{label} edge certificate:   {}", serde_json::to_string(&lambda.certificate).unwrap()).unwrap();
            }
            t
        }
    })
}

fn bounds_report(r: usize, s: usize, m: Option<usize>, format: Format) -> Result<Output, Failure> {
    if r == 0 || r > s {
        return Err(Failure::Usage(format!("need 1 <= r <= s, got r={r} s={s}")));
    }
    let delta = delta_bounds(r);
    let conn = connectivity_bounds_unconstrained(r);
    let sized = m.map(|m| ParameterTriple::new(r, s, m).map(|p| sized_bounds(&p))).transpose()?;
    let text = match format {
        Format::Json | Format::EdgeList => {
            let v = json!({ "r": r, "s": s, "m": m, "delta": delta, "connectivity": conn, "sized": sized });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "bound                 sum_lower  sum_upper  prod_lower  prod_upper").unwrap();
            let mut row = |name: &str, b: &bicomp::bounds::BoundSet| {
                writeln!(
                    t,
                    "{name:<20} {:>10} {:>10} {:>11} {:>11}",
                    b.sum_lower, b.sum_upper, b.prod_lower, b.prod_upper
                )
                .unwrap();
            };
            row("delta", &delta);
            row("connectivity", &conn);
            if let (Some(m), Some(b)) = (m, sized.as_ref()) {
                row(&format!("sized (m={m})"), b);
                writeln!(t, "N = {}  M = {}", b.sum_upper, b.prod_upper).unwrap();
            }
            t
        }
    };
    Ok(Output::ok(text))
}
