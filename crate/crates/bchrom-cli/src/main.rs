use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use bchrom::coloring::Coloring;
use bchrom::graph::Graph;
use bchrom::harness::{self, CheckSet, SweepOptions};
use bchrom::io::{parse_as, write_graph6_string, GraphFormat};
use bchrom::{generators, recognizers, recolor, solver};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// b-chromatic number toolkit: exact solver, class recognizers,
/// constructive vertex-deletion recoloring, and batch bound checking.
#[derive(Parser)]
#[command(name = "bchrom", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print chi, b, m, omega, girth and class flags for a graph file.
    Compute { file: String },
    /// Check that a coloring is a b-coloring; prints per-class domination.
    Verify { graph: String, coloring: String },
    /// Print the recognition report (chordal, quasi-line, claw-free, girth).
    Classify { graph: String },
    /// Evaluate every applicable deletion inequality at every vertex.
    Bounds {
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long, default_value_t = harness::DEFAULT_SOLVER_CAP)]
        solver_cap: usize,
    },
    /// Run a constructive recoloring for one vertex deletion.
    Recolor {
        graph: String,
        coloring: String,
        #[arg(long)]
        vertex: usize,
        /// Use the quasi-line procedure (bound 2) instead of the general one.
        #[arg(long)]
        quasi_line: bool,
    },
    /// Emit generated graphs as graph6 lines.
    Gen(GenArgs),
    /// Read graph6 lines from stdin and check bounds and certificates.
    Sweep {
        #[arg(long, default_value = "all")]
        checks: CheckSetArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
        /// Exit nonzero on parse errors too, not only on failed checks.
        #[arg(long)]
        strict: bool,
        /// Worker threads; defaults to BCHROM_JOBS, then all cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = harness::DEFAULT_SOLVER_CAP)]
        solver_cap: usize,
    },
}

#[derive(Clone, Copy)]
struct CheckSetArg(CheckSet);

impl std::str::FromStr for CheckSetArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(CheckSetArg)
    }
}

#[derive(Args)]
struct GenArgs {
    /// complete|path|cycle|star|petersen|gnp|chordal|line-graph|high-girth|g0|g1|enumerate
    family: String,
    /// Family parameters: sizes, then probability/width/girth/omega as needed.
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of samples for randomized families; seed advances by one each.
    #[arg(long, default_value_t = 1)]
    count: u64,
}

enum CliError {
    Usage(String),
    Check(String),
}

impl From<bchrom::Error> for CliError {
    fn from(e: bchrom::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    let contents = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let doc = parse_as(GraphFormat::from_path(path), &contents, path)
        .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    Ok(doc.graph)
}

fn read_coloring(path: &str, n: usize) -> Result<Coloring, CliError> {
    let contents = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let c: Coloring = serde_json::from_str(&contents)
        .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    if c.len() != n {
        return Err(CliError::Usage(format!(
            "{path}: coloring has {} entries for a graph on {n} vertices",
            c.len()
        )));
    }
    Ok(c)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn cmd_compute(file: &str) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let b = solver::b_chromatic(&g)?;
    let report = serde_json::json!({
        "n": g.vertex_count(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "chi": b.bounds_used.0,
        "b": b.b,
        "m": b.bounds_used.1,
        "omega": recognizers::clique_number(&g),
        "girth": g.girth(),
        "chordal": recognizers::is_chordal(&g),
        "quasi_line": recognizers::is_quasi_line(&g),
        "claw_free": recognizers::is_claw_free(&g),
        "witness": b.witness,
    });
    print_json(&report);
    Ok(())
}

fn cmd_verify(graph: &str, coloring: &str) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring, g.vertex_count())?;
    let proper = c.is_proper(&g)?;
    println!("proper: {proper}");
    let mut all_dominated = true;
    for i in 0..c.num_colors() {
        let class = c.color_class(i)?;
        let dominator = class
            .iter()
            .copied()
            .find(|&v| c.is_color_dominating(&g, v).unwrap_or(false));
        match dominator {
            Some(v) => println!("class {i}: dominated by vertex {v}"),
            None => {
                all_dominated = false;
                println!("class {i}: no dominating vertex");
            }
        }
    }
    if proper && all_dominated {
        println!("b-coloring with {} colors", c.num_colors());
        Ok(())
    } else {
        Err(CliError::Check("not a b-coloring".into()))
    }
}

fn cmd_bounds(graph: &str, format: OutFormat, solver_cap: usize) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let report = harness::check_bounds(&g, solver_cap)?;
    match format {
        OutFormat::Json => print_json(&report),
        OutFormat::Csv => {
            let rec = harness::SweepRecord {
                index: 0,
                line: report.graph6.clone(),
                body: harness::RecordBody::Report {
                    bounds: Some(report.clone()),
                    constructive: None,
                },
            };
            let mut out = io::stdout().lock();
            harness::write_csv(std::slice::from_ref(&rec), &mut out)
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
    }
    if report.all_pass {
        Ok(())
    } else {
        Err(CliError::Check("bound violation".into()))
    }
}

fn cmd_recolor(
    graph: &str,
    coloring: &str,
    vertex: usize,
    quasi_line: bool,
) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring, g.vertex_count())?;
    let cert = if quasi_line {
        recolor::recolor_quasi_line(&g, &c, vertex)
    } else {
        recolor::recolor_general(&g, &c, vertex)
    };
    let cert = cert.map_err(|e| CliError::Check(e.to_string()))?;
    cert.verify(&g).map_err(|e| CliError::Check(e.to_string()))?;
    print_json(&cert);
    Ok(())
}

fn usize_param(args: &GenArgs, i: usize, name: &str) -> Result<usize, CliError> {
    args.params
        .get(i)
        .ok_or_else(|| CliError::Usage(format!("{}: missing parameter <{name}>", args.family)))?
        .parse()
        .map_err(|_| CliError::Usage(format!("{}: bad <{name}>", args.family)))
}

fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    let mut emit = |g: &Graph| writeln!(out, "{}", write_graph6_string(g)).unwrap();
    match args.family.as_str() {
        "complete" => emit(&generators::complete(usize_param(args, 0, "n")?)),
        "path" => emit(&generators::path(usize_param(args, 0, "n")?)),
        "cycle" => emit(&generators::cycle(usize_param(args, 0, "n")?)),
        "star" => emit(&generators::star(usize_param(args, 0, "leaves")?)),
        "petersen" => emit(&generators::petersen()),
        "gnp" => {
            let n = usize_param(args, 0, "n")?;
            let p: f64 = args
                .params
                .get(1)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| CliError::Usage("gnp: missing or bad <p>".into()))?;
            for s in 0..args.count {
                emit(&generators::gnp(n, p, args.seed + s)?);
            }
        }
        "chordal" => {
            let n = usize_param(args, 0, "n")?;
            let width = usize_param(args, 1, "width")?;
            for s in 0..args.count {
                emit(&generators::random_chordal(n, width, args.seed + s)?);
            }
        }
        "line-graph" => {
            let base = read_graph(args.params.first().ok_or_else(|| {
                CliError::Usage("line-graph: missing parameter <graph-file>".into())
            })?)?;
            emit(&generators::line_graph(&base)?);
        }
        "high-girth" => {
            let n = usize_param(args, 0, "n")?;
            let g_min = usize_param(args, 1, "g_min")?;
            for s in 0..args.count {
                emit(&generators::high_girth(n, g_min, args.seed + s)?);
            }
        }
        "g0" => {
            let base = read_graph(args.params.first().ok_or_else(|| {
                CliError::Usage("g0: missing parameter <chordal-graph-file>".into())
            })?)?;
            emit(&generators::g0(&base)?.0);
        }
        "g1" => emit(&generators::g1(usize_param(args, 0, "omega")?)?.0),
        "enumerate" => {
            for g in generators::enumerate_labeled(usize_param(args, 0, "n")?)? {
                emit(&g);
            }
        }
        other => return Err(CliError::Usage(format!("unknown family '{other}'"))),
    }
    Ok(())
}

fn cmd_sweep(
    checks: CheckSet,
    format: OutFormat,
    strict: bool,
    jobs: Option<usize>,
    solver_cap: usize,
) -> Result<(), CliError> {
    let jobs = jobs.or_else(|| {
        std::env::var("BCHROM_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let lines: Vec<String> = input.lines().map(str::to_string).collect();
    let opts = SweepOptions { checks, solver_cap };
    let records = harness::sweep(&lines, &opts);
    let mut out = io::stdout().lock();
    let written = match format {
        OutFormat::Csv => harness::write_csv(&records, &mut out),
        OutFormat::Json => harness::write_json(&records, &mut out),
    };
    written.map_err(|e| CliError::Usage(e.to_string()))?;
    let mut failures = Vec::new();
    for rec in &records {
        if rec.failed() {
            failures.push(format!("line {}: check failed", rec.index + 1));
        }
        if strict && rec.is_parse_error() {
            failures.push(format!("line {}: parse error", rec.index + 1));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(failures.join("\n")))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute { file } => cmd_compute(&file),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Classify { graph } => {
            let g = read_graph(&graph)?;
            print_json(&recognizers::classify(&g));
            Ok(())
        }
        Command::Bounds {
            graph,
            format,
            solver_cap,
        } => cmd_bounds(&graph, format, solver_cap),
        Command::Recolor {
            graph,
            coloring,
            vertex,
            quasi_line,
        } => cmd_recolor(&graph, &coloring, vertex, quasi_line),
        Command::Gen(args) => cmd_gen(&args),
        Command::Sweep {
            checks,
            format,
            strict,
            jobs,
            solver_cap,
        } => cmd_sweep(checks.0, format, strict, jobs, solver_cap),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
