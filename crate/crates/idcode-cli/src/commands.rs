//! Subcommand implementations.

use crate::report::{write_atomic, Report};
use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use idcode::bounds;
use idcode::config_model;
use idcode::corpus;
use idcode::extremal::{self, ExtremalInstance};
use idcode::generators;
use idcode::graph::{Graph, MultiGraph};
use idcode::identify;
use idcode::randomized::{self, Girth5Mode};
use idcode::solver;
use idcode::vertex_set::VertexSet;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

/// Loads `--graph` arguments: an edge-list file path, or a built-in
/// generator spec such as `complete:5`, `cycle:7`, `path:3`,
/// `hypercube:3`, `complete_bipartite:3:3` or `petersen`.
fn load_graph(spec: &str) -> Result<Graph> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        return Ok(Graph::parse_edge_list(&text, false)?);
    }
    Ok(generators::from_spec(spec)?)
}

fn load_multigraph(spec: &str) -> Result<MultiGraph> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        return Ok(MultiGraph::parse_edge_list(&text)?);
    }
    Ok(MultiGraph::from(&generators::from_spec(spec)?))
}

fn parse_code(n: usize, list: &str) -> Result<VertexSet> {
    let mut set = VertexSet::empty(n);
    for token in list.split(',').filter(|t| !t.trim().is_empty()) {
        let v: usize = token
            .trim()
            .parse()
            .with_context(|| format!("bad vertex '{token}'"))?;
        if v >= n {
            return Err(idcode::Error::VertexOutOfRange { vertex: v, n }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

fn worker_count(trials: usize) -> usize {
    let available = std::thread::available_parallelism().map_or(1, |p| p.get());
    let cap = std::env::var("IDCODE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(available);
    cap.min(available).min(trials.max(1))
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Edge-list file or generator spec.
    #[arg(long)]
    graph: String,
    /// Comma-separated candidate code, e.g. `0,2,5`.
    #[arg(long)]
    code: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn verify(args: VerifyArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let code = parse_code(g.n(), &args.code)?;
    let cert = identify::is_identifying_code(&g, &code);
    Report::new("verify", cert).emit(args.out.as_deref())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Exact,
    Greedy,
    Naive,
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value = "exact")]
    method: SolveMethod,
    /// Time budget in seconds for the exact search.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct SolveReport {
    gamma: usize,
    optimal: bool,
    code: VertexSet,
}

pub fn solve(args: SolveArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let budget = args.budget.map(Duration::from_secs);
    let result = match args.method {
        SolveMethod::Exact => {
            let out = solver::solve_exact(&g, budget)?;
            SolveReport {
                gamma: out.gamma,
                optimal: out.optimal,
                code: out.code,
            }
        }
        SolveMethod::Naive => {
            let out = solver::solve_naive(&g)?;
            SolveReport {
                gamma: out.gamma,
                optimal: out.optimal,
                code: out.code,
            }
        }
        SolveMethod::Greedy => {
            let code = solver::greedy_code(&g)?;
            SolveReport {
                gamma: code.len(),
                optimal: false,
                code,
            }
        }
    };
    Report::new("solve", result).emit(args.out.as_deref())
}

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long)]
    graph: String,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct BoundsReport {
    n: usize,
    max_degree: usize,
    lower: bounds::BoundReport,
    /// Absent when the formula domain (max degree >= 3) is not met.
    reference: Vec<bounds::ReferenceValue>,
}

pub fn bounds(args: BoundsArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let lower = bounds::lower_bounds(&g)?;
    let f = identify::forced_vertices(&g)?.f_ratio();
    let reference = if g.max_degree() >= 3 {
        bounds::theorem_upper_bounds(g.n(), g.max_degree(), f, g.min_degree())?
    } else {
        Vec::new()
    };
    if let Some(csv) = &args.csv {
        let mut text = String::from("name,value,asymptotic\n");
        text.push_str(&format!("log_lower,{},false\n", lower.log_lower));
        text.push_str(&format!("degree_lower,{},false\n", lower.degree_lower));
        text.push_str(&format!("forced_lower,{},false\n", lower.forced_lower));
        text.push_str(&format!("best_lower,{},false\n", lower.best_lower));
        text.push_str(&format!("trivial_upper,{},false\n", lower.trivial_upper));
        for r in &reference {
            text.push_str(&format!("{},{},{}\n", r.label, r.value, r.asymptotic));
        }
        write_atomic(csv, &text)?;
    }
    let report = BoundsReport {
        n: g.n(),
        max_degree: g.max_degree(),
        lower,
        reference,
    };
    Report::new("bounds", report).emit(args.out.as_deref())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructMethod {
    Lll,
    Girth5,
    Rrg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseMode {
    Case1,
    Case2,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum)]
    method: ConstructMethod,
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Resample budget per restart (lll only).
    #[arg(long, default_value = "10000")]
    max_resamples: u64,
    /// Restart budget (lll only).
    #[arg(long, default_value = "100")]
    max_restarts: u32,
    /// Size-accounting mode (girth5 only).
    #[arg(long, value_enum, default_value = "case1")]
    mode: CaseMode,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct ConstructReport {
    method: &'static str,
    seed: u64,
    n: usize,
    size: usize,
    code: VertexSet,
    restarts_used: u32,
    resamples_used: u64,
    met_size_target: bool,
    valid: bool,
}

pub fn construct(args: ConstructArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let (method, res) = match args.method {
        ConstructMethod::Lll => (
            "lll",
            randomized::lll_construct(&g, args.seed, args.max_resamples, args.max_restarts)?,
        ),
        ConstructMethod::Girth5 => {
            let mode = match args.mode {
                CaseMode::Case1 => Girth5Mode::Case1,
                CaseMode::Case2 => Girth5Mode::Case2,
            };
            ("girth5", randomized::girth5_construct(&g, args.seed, mode)?)
        }
        ConstructMethod::Rrg => ("rrg", randomized::rrg_construct(&g, args.seed)?),
    };
    let valid = identify::is_identifying_code(&g, &res.code).valid;
    let report = ConstructReport {
        method,
        seed: args.seed,
        n: g.n(),
        size: res.code.len(),
        code: res.code,
        restarts_used: res.restarts_used,
        resamples_used: res.resamples_used,
        met_size_target: res.met_size_target,
        valid,
    };
    Report::new("construct", report).emit(args.out.as_deref())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    C1,
    C2,
    C3,
    Ak,
}

#[derive(Args)]
pub struct ExtremalArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Base multigraph for c1/c2: edge-list file or generator spec.
    #[arg(long)]
    h: Option<String>,
    /// Cycle length parameter 2k for c3.
    #[arg(long)]
    two_k: Option<usize>,
    /// Degree parameter for c3.
    #[arg(long)]
    d: Option<usize>,
    /// Half-order parameter for ak.
    #[arg(long)]
    k: Option<usize>,
    /// Output prefix: writes PREFIX.el and PREFIX.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct ExtremalReport {
    family: extremal::Family,
    n: usize,
    max_degree: usize,
    claimed_gamma: usize,
    optimal_code: VertexSet,
    /// Inline edge list when no output prefix was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_list: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph_file: Option<String>,
}

pub fn extremal(args: ExtremalArgs) -> Result<()> {
    let need = |opt: Option<&String>, what: &str| -> Result<String> {
        opt.cloned()
            .with_context(|| format!("--{what} is required for this family"))
    };
    let inst: ExtremalInstance = match args.family {
        FamilyArg::C1 => extremal::construct_c1(&load_multigraph(&need(args.h.as_ref(), "h")?)?)?,
        FamilyArg::C2 => extremal::construct_c2(&load_multigraph(&need(args.h.as_ref(), "h")?)?)?,
        FamilyArg::C3 => {
            let two_k = args.two_k.context("--two-k is required for c3")?;
            let d = args.d.context("--d is required for c3")?;
            extremal::construct_c3(two_k, d)?
        }
        FamilyArg::Ak => {
            let k = args.k.context("--k is required for ak")?;
            extremal::construct_ak_universal(k)?
        }
    };
    let edge_list = inst.graph.to_edge_list();
    let (inline, file) = match &args.out {
        Some(prefix) => {
            let el_path = prefix.with_extension("el");
            write_atomic(&el_path, &edge_list)?;
            (None, Some(el_path.display().to_string()))
        }
        None => (Some(edge_list), None),
    };
    let report = ExtremalReport {
        family: inst.family,
        n: inst.graph.n(),
        max_degree: inst.graph.max_degree(),
        claimed_gamma: inst.claimed_gamma,
        optimal_code: inst.optimal_code,
        edge_list: inline,
        graph_file: file,
    };
    match &args.out {
        Some(prefix) => Report::new("extremal", report).emit(Some(&prefix.with_extension("json"))),
        None => Report::new("extremal", report).emit(None),
    }
}

#[derive(Args)]
pub struct RrgArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value = "1000")]
    trials: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Write each accepted simple sample as an edge list under this directory.
    #[arg(long)]
    write_graphs: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct RrgReport {
    n: usize,
    d: usize,
    seed: u64,
    stats: config_model::SampleStats,
    twin_probability_reference: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    graphs_written: Option<usize>,
}

pub fn rrg(args: RrgArgs) -> Result<()> {
    let stats = config_model::cycle_statistics(args.n, args.d, args.seed, args.trials)?;
    let mut written = None;
    if let Some(dir) = &args.write_graphs {
        std::fs::create_dir_all(dir)?;
        let mut count = 0usize;
        for t in 0..args.trials {
            let mg = config_model::sample_multigraph_indexed(args.n, args.d, args.seed, t as u64)?;
            if mg.is_simple() {
                let g = mg.to_simple(false)?;
                let path = dir.join(format!("rrg_n{}_d{}_t{t}.el", args.n, args.d));
                write_atomic(&path, &g.to_edge_list())?;
                count += 1;
            }
        }
        written = Some(count);
    }
    let report = RrgReport {
        n: args.n,
        d: args.d,
        seed: args.seed,
        stats,
        twin_probability_reference: config_model::twin_probability_reference(args.n, args.d),
        graphs_written: written,
    };
    Report::new("rrg", report).emit(args.out.as_deref())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExperimentMethod {
    Rrg,
    Lll,
}

#[derive(Args)]
pub struct ExperimentArgs {
    /// Experiment variant; `table1` compares constructed code sizes
    /// against the reference bound columns on random regular graphs.
    variant: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "5")]
    trials: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, value_enum, default_value = "rrg")]
    method: ExperimentMethod,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write per-trial rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Serialize)]
struct TrialRecord {
    trial: usize,
    size: usize,
    size_ratio: f64,
    valid: bool,
    millis: u128,
}

#[derive(Serialize)]
struct ExperimentReport {
    variant: String,
    method: &'static str,
    n: usize,
    d: usize,
    trials: usize,
    seed: u64,
    records: Vec<TrialRecord>,
    mean_size_ratio: f64,
    min_size_ratio: f64,
    max_size_ratio: f64,
    reference: Vec<bounds::ReferenceValue>,
}

pub fn experiment(args: ExperimentArgs) -> Result<()> {
    if args.variant != "table1" {
        bail!(
            "unknown experiment variant '{}'; available: table1",
            args.variant
        );
    }
    let method_name = match args.method {
        ExperimentMethod::Rrg => "rrg",
        ExperimentMethod::Lll => "lll",
    };
    let n = args.n;
    let d = args.d;
    let workers = worker_count(args.trials);

    let run_trial = |trial: usize| -> Result<TrialRecord> {
        let started = Instant::now();
        // fresh sample per trial; skip past the rare twinned samples
        let mut attempt = 0u64;
        let g = loop {
            let sample_seed = args
                .seed
                .wrapping_add(trial as u64)
                .wrapping_add(attempt.wrapping_mul(0x9E37_79B9))
                .wrapping_add(1);
            let g = config_model::sample_simple_switched(n, d, sample_seed, 10_000_000)?;
            if g.is_twin_free() {
                break g;
            }
            attempt += 1;
        };
        let res = match args.method {
            ExperimentMethod::Rrg => randomized::rrg_construct(&g, args.seed ^ trial as u64)?,
            ExperimentMethod::Lll => {
                randomized::lll_construct(&g, args.seed ^ trial as u64, 10_000, 100)?
            }
        };
        let valid = identify::is_identifying_code(&g, &res.code).valid;
        Ok(TrialRecord {
            trial,
            size: res.code.len(),
            size_ratio: res.code.len() as f64 / n as f64,
            valid,
            millis: started.elapsed().as_millis(),
        })
    };

    let mut records: Vec<TrialRecord> = Vec::with_capacity(args.trials);
    std::thread::scope(|scope| -> Result<()> {
        let mut handles = Vec::new();
        for w in 0..workers {
            let run_trial = &run_trial;
            handles.push(scope.spawn(move || -> Result<Vec<TrialRecord>> {
                let mut local = Vec::new();
                let mut t = w;
                while t < args.trials {
                    local.push(run_trial(t)?);
                    t += workers;
                }
                Ok(local)
            }));
        }
        for h in handles {
            records.extend(h.join().expect("worker panicked")?);
        }
        Ok(())
    })?;
    records.sort_by_key(|r| r.trial);
    for r in &records {
        if !r.valid {
            bail!(
                "trial {} produced an invalid code (constructor bug)",
                r.trial
            );
        }
    }

    let ratios: Vec<f64> = records.iter().map(|r| r.size_ratio).collect();
    let mean = ratios.iter().sum::<f64>() / ratios.len().max(1) as f64;
    let reference = bounds::theorem_upper_bounds(n, d, 1.0, d)?;
    if let Some(csv) = &args.csv {
        let mut text = String::from("trial,size,size_ratio,valid,millis\n");
        for r in &records {
            text.push_str(&format!(
                "{},{},{},{},{}\n",
                r.trial, r.size, r.size_ratio, r.valid, r.millis
            ));
        }
        write_atomic(csv, &text)?;
    }
    let report = ExperimentReport {
        variant: args.variant,
        method: method_name,
        n,
        d,
        trials: args.trials,
        seed: args.seed,
        mean_size_ratio: mean,
        min_size_ratio: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        max_size_ratio: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        records,
        reference,
    };
    Report::new("experiment", report).emit(args.out.as_deref())
}

#[derive(Args)]
pub struct CorpusArgs {
    /// Largest order to enumerate (hard cap 8).
    #[arg(long, default_value = "6")]
    max_n: usize,
    /// Write every connected graph as an edge list under this directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CorpusOrderRow {
    n: usize,
    connected: usize,
    twin_free: usize,
}

#[derive(Serialize)]
struct CorpusReport {
    max_n: usize,
    orders: Vec<CorpusOrderRow>,
    total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    files_written: Option<usize>,
}

pub fn corpus(args: CorpusArgs) -> Result<()> {
    let graphs = corpus::corpus_enumerate(args.max_n)?;
    let mut orders: Vec<CorpusOrderRow> = (1..=args.max_n)
        .map(|n| CorpusOrderRow {
            n,
            connected: 0,
            twin_free: 0,
        })
        .collect();
    for c in &graphs {
        let row = &mut orders[c.graph.n() - 1];
        row.connected += 1;
        if c.twin_free {
            row.twin_free += 1;
        }
    }
    let mut written = None;
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir)?;
        let mut per_order = vec![0usize; args.max_n + 1];
        let mut count = 0usize;
        for c in &graphs {
            let n = c.graph.n();
            per_order[n] += 1;
            let path = dir.join(format!("corpus_n{}_{:04}.el", n, per_order[n]));
            write_atomic(&path, &c.graph.to_edge_list())?;
            count += 1;
        }
        written = Some(count);
    }
    let report = CorpusReport {
        max_n: args.max_n,
        total: graphs.len(),
        orders,
        files_written: written,
    };
    Report::new("corpus", report).emit(args.out.as_deref())
}
