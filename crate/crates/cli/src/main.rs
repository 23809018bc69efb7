//! `gdka`: generate graphs, build products, run the exact alliance
//! solvers, and evaluate/verify the product bounds.

mod errors;
mod input;
mod sweep;

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gdka_core::{
    cartesian, cartesian_min_bound, corona, corona_bound, corona_equality, dka_number,
    dka_number_par, domination_number, domination_number_par, edge_corona, edge_corona_bound,
    emit_graph6, find_1_perfect_code, gdka_number, gdka_number_par, generate, hierarchical,
    hierarchical_bound, lex_pcode_bound, lex_shift_bound, lexicographic, verify_bound, Family,
    GraphJson, Label, ProductGraph, ProductKind, SolveResult, TheoremId, DEFAULT_EXACT_CAP,
};
use serde::Serialize;

use errors::CliError;
use input::{load_graph_spec, parse_id_list, LoadedGraph};
use sweep::{render_csv, render_json, run_sweep, SweepConfig};

#[derive(Parser)]
#[command(
    name = "gdka",
    version,
    about = "Graph products, exact global defensive k-alliance solvers, and bound verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    /// Domination number
    Gamma,
    /// Defensive k-alliance number
    Dka,
    /// Global defensive k-alliance number
    Gdka,
    /// 1-perfect code
    Pcode,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKindArg {
    Cartesian,
    Hierarchical,
    Lexicographic,
    Corona,
    #[value(name = "edge_corona")]
    EdgeCorona,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family (path, cycle, complete, empty, sun,
    /// truncated_cube, g12)
    Gen {
        family: String,
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a product of two graphs, emitting the labeled product
    Product {
        kind: ProductKindArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Vertex ids of the left factor carrying H-layer edges
        /// (hierarchical only)
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run an exact solver on one graph
    Solve {
        kind: SolveKind,
        #[arg(long)]
        graph: String,
        #[arg(short, long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Also print the witness vertex ids
        #[arg(long)]
        witness: bool,
        /// Parallel search over the given number of threads
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Evaluate one theorem bound (hier, cartesian_min, lex_shift,
    /// lex_pcode, corona, corona_eq, edge_corona)
    Bound {
        theorem: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i64,
        /// Vertex ids of the left factor (hier only)
        #[arg(long)]
        set: Option<String>,
        /// Solve the product exactly and report gap/sharpness
        #[arg(long)]
        verify: bool,
        /// Product-order cap for exact verification (default 24, or
        /// ALLIANCE_MAX_N)
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Evaluate bounds over factor lists and a k range
    Sweep {
        /// Comma-separated theorem ids; defaults to all
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        k_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        k_max: i64,
        /// Id list used as the hierarchical distinguished set for every
        /// left factor
        #[arg(long)]
        set: Option<String>,
        /// Skip exact solves; witnesses are still validated
        #[arg(long)]
        skip_exact: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(err.code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen {
            family,
            n,
            format,
            out,
        } => cmd_gen(&family, n, format, out),
        Command::Product {
            kind,
            left,
            right,
            set,
            format,
            out,
        } => cmd_product(kind, &left, &right, set.as_deref(), format, out),
        Command::Solve {
            kind,
            graph,
            k,
            witness,
            jobs,
        } => cmd_solve(kind, &graph, k, witness, jobs),
        Command::Bound {
            theorem,
            left,
            right,
            k,
            set,
            verify,
            max_n,
        } => cmd_bound(&theorem, &left, &right, k, set.as_deref(), verify, max_n),
        Command::Sweep {
            theorems,
            left,
            right,
            k_min,
            k_max,
            set,
            skip_exact,
            max_n,
            jobs,
            out,
            format,
        } => cmd_sweep(
            theorems, left, right, k_min, k_max, set, skip_exact, max_n, jobs, out, format,
        ),
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, format!("{text}\n"))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn exact_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("ALLIANCE_MAX_N") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid ALLIANCE_MAX_N: {raw}"))),
        Err(_) => Ok(DEFAULT_EXACT_CAP),
    }
}

fn cmd_gen(
    family: &str,
    n: Option<usize>,
    format: GraphFormat,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let family: Family = family.parse().map_err(CliError::usage)?;
    let generated = generate(family, n).map_err(CliError::usage)?;
    let text = match format {
        GraphFormat::Json => {
            let json = GraphJson::from_graph(&generated.graph, generated.distinguished.as_ref());
            serde_json::to_string(&json).map_err(|e| CliError::Internal(e.to_string()))?
        }
        GraphFormat::Graph6 => emit_graph6(&generated.graph).map_err(CliError::usage)?,
    };
    emit(out, &text)
}

#[derive(Serialize)]
struct ProductJson<'a> {
    n: usize,
    kind: ProductKind,
    edges: &'a [(usize, usize)],
    labels: &'a [Label],
}

fn build_product(
    kind: ProductKindArg,
    left: &LoadedGraph,
    right: &LoadedGraph,
    set: Option<&str>,
) -> Result<ProductGraph, CliError> {
    if set.is_some() && !matches!(kind, ProductKindArg::Hierarchical) {
        return Err(CliError::Usage(
            "--set only applies to the hierarchical product".to_string(),
        ));
    }
    let product = match kind {
        ProductKindArg::Cartesian => cartesian(&left.graph, &right.graph),
        ProductKindArg::Hierarchical => {
            let u = match set {
                Some(ids) => parse_id_list(ids, left.graph.n())?,
                None => left.set.clone().ok_or_else(|| {
                    CliError::Usage("hierarchical product requires --set".to_string())
                })?,
            };
            hierarchical(&left.graph, &u, &right.graph)
        }
        ProductKindArg::Lexicographic => lexicographic(&left.graph, &right.graph),
        ProductKindArg::Corona => corona(&left.graph, &right.graph),
        ProductKindArg::EdgeCorona => edge_corona(&left.graph, &right.graph),
    };
    product.map_err(CliError::usage)
}

fn cmd_product(
    kind: ProductKindArg,
    left: &str,
    right: &str,
    set: Option<&str>,
    format: GraphFormat,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let left = load_graph_spec(left)?;
    let right = load_graph_spec(right)?;
    let product = build_product(kind, &left, &right, set)?;
    let text = match format {
        GraphFormat::Json => {
            let json = ProductJson {
                n: product.graph().n(),
                kind: product.kind(),
                edges: product.graph().edges(),
                labels: product.labels(),
            };
            serde_json::to_string(&json).map_err(|e| CliError::Internal(e.to_string()))?
        }
        GraphFormat::Graph6 => emit_graph6(product.graph()).map_err(CliError::usage)?,
    };
    emit(out, &text)
}

fn cmd_solve(
    kind: SolveKind,
    graph: &str,
    k: Option<i64>,
    witness: bool,
    jobs: Option<usize>,
) -> Result<(), CliError> {
    let loaded = load_graph_spec(graph)?;
    let g = &loaded.graph;
    let need_k = || k.ok_or_else(|| CliError::Usage("this solver requires -k".to_string()));
    let reject_k = || {
        if k.is_some() {
            Err(CliError::Usage("this solver takes no -k".to_string()))
        } else {
            Ok(())
        }
    };
    let pool = jobs
        .map(|threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .transpose()?;

    match kind {
        SolveKind::Pcode => {
            reject_k()?;
            match find_1_perfect_code(g)? {
                Some(code) => println!("{code}"),
                None => println!("none"),
            }
            Ok(())
        }
        SolveKind::Gamma => {
            reject_k()?;
            let result =
                run_with_pool(&pool, || domination_number(g), || domination_number_par(g))?;
            print_solution(&result, witness);
            Ok(())
        }
        SolveKind::Dka => {
            let k = need_k()?;
            let result = run_with_pool(&pool, || dka_number(g, k), || dka_number_par(g, k))?;
            print_solution(&result, witness);
            Ok(())
        }
        SolveKind::Gdka => {
            let k = need_k()?;
            let result = run_with_pool(&pool, || gdka_number(g, k), || gdka_number_par(g, k))?;
            print_solution(&result, witness);
            Ok(())
        }
    }
}

fn run_with_pool<T: Send>(
    pool: &Option<rayon::ThreadPool>,
    seq: impl FnOnce() -> T,
    par: impl FnOnce() -> T + Send,
) -> T {
    match pool {
        Some(pool) => pool.install(par),
        None => seq(),
    }
}

fn print_solution(result: &SolveResult, witness: bool) {
    println!("{}", result.value);
    if witness {
        if let Some(w) = &result.witness {
            println!("witness: {w}");
        }
    }
}

fn cmd_bound(
    theorem: &str,
    left: &str,
    right: &str,
    k: i64,
    set: Option<&str>,
    verify: bool,
    max_n: Option<usize>,
) -> Result<(), CliError> {
    let theorem: TheoremId = theorem.parse().map_err(CliError::Usage)?;
    let left = load_graph_spec(left)?;
    let right = load_graph_spec(right)?;
    if set.is_some() && theorem != TheoremId::Hier {
        return Err(CliError::Usage(
            "--set only applies to the hier theorem".to_string(),
        ));
    }
    let (g, h) = (&left.graph, &right.graph);
    let mut outcome = match theorem {
        TheoremId::Hier => {
            let u = match set {
                Some(ids) => parse_id_list(ids, g.n())?,
                None => left.set.clone().ok_or_else(|| {
                    CliError::Usage("the hier theorem requires --set".to_string())
                })?,
            };
            hierarchical_bound(g, &u, h, k)?
        }
        TheoremId::CartesianMin => cartesian_min_bound(g, h, k)?,
        TheoremId::LexShift => lex_shift_bound(g, h, k)?,
        TheoremId::LexPcode => lex_pcode_bound(g, h, k)?,
        TheoremId::Corona => corona_bound(g, h, k)?,
        TheoremId::CoronaEq => corona_equality(g, h, k)?,
        TheoremId::EdgeCorona => edge_corona_bound(g, h, k)?,
    };
    if verify && outcome.report.applicable {
        verify_bound(&mut outcome.report, &outcome.product, exact_cap(max_n)?)?;
    }
    let text =
        serde_json::to_string(&outcome.report).map_err(|e| CliError::Internal(e.to_string()))?;
    emit(None, &text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    theorems: Vec<String>,
    left: Vec<String>,
    right: Vec<String>,
    k_min: i64,
    k_max: i64,
    set: Option<String>,
    skip_exact: bool,
    max_n: Option<usize>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    format: OutputFormat,
) -> Result<(), CliError> {
    let theorems: Vec<TheoremId> = if theorems.is_empty() {
        TheoremId::all().to_vec()
    } else {
        theorems
            .iter()
            .map(|t| t.parse().map_err(CliError::Usage))
            .collect::<Result<_, _>>()?
    };
    let lefts: Vec<LoadedGraph> = left
        .iter()
        .map(|s| load_graph_spec(s))
        .collect::<Result<_, _>>()?;
    let rights: Vec<LoadedGraph> = right
        .iter()
        .map(|s| load_graph_spec(s))
        .collect::<Result<_, _>>()?;
    let config = SweepConfig {
        theorems: &theorems,
        lefts: &lefts,
        rights: &rights,
        k_min,
        k_max,
        set: set.as_deref(),
        skip_exact,
        cap: exact_cap(max_n)?,
    };
    let rows = match jobs {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| run_sweep(&config))?
        }
        None => run_sweep(&config)?,
    };
    let text = match format {
        OutputFormat::Csv => render_csv(&rows)?,
        OutputFormat::Json => render_json(&rows)?,
    };
    emit(out, text.trim_end())
}
