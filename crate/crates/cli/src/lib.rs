//! Command line front end: parses ring expressions, runs the computations
//! and renders text, JSON and DOT output.

pub mod emit;
pub mod parse;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use ringgraph_core::aut::automorphisms_with;
use ringgraph_core::classify::{
    build_catalog_with, run_verification, verify_field_extension_connectivity,
    verify_type_formulas, CatalogOptions, TheoremId, VerificationReport, DEFAULT_N_LIST,
    DEFAULT_P_LIST,
};
use ringgraph_core::{
    make_ring_with, Limits, OrbitGraph, RingError, RingExpr, DEFAULT_MAX_ORDER,
    DEFAULT_SEARCH_BUDGET,
};
use serde::Serialize;
use thiserror::Error;

pub use emit::{emit_dot, emit_graph_json, GraphAutOrder, RingReport};
pub use parse::{parse_ring_expr, ExprError, ParseError, SemanticError};

/// Atlas DOT files are skipped above this order unless forced.
pub const ATLAS_DOT_LIMIT: usize = 128;

#[derive(Debug, Parser)]
#[command(
    name = "ringgraph",
    version,
    about = "Automorphism orbit graphs of finite commutative rings"
)]
pub struct Cli {
    /// Largest ring order that will be tabulated.
    #[arg(long, global = true, env = "RINGGRAPH_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_ring_order: usize,
    /// Backtrack nodes allowed per automorphism or isomorphism search.
    #[arg(long, global = true, env = "RINGGRAPH_BUDGET", default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub search_budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a ring and its orbit graph.
    Info {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// The automorphism group.
    Aut {
        expr: String,
        /// List every automorphism by its action on the generators.
        #[arg(long)]
        list: bool,
    },
    /// The orbit graph under the full automorphism group.
    Graph {
        expr: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// One node per orbit instead of one per element.
        #[arg(long)]
        collapse: bool,
    },
    /// The type: largest orbit size minus one.
    Type { expr: String },
    /// Check a classification over the ring catalog.
    Verify {
        /// Check id, or `all`.
        theorem: String,
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a JSON report (and DOT graph) for every catalog ring.
    Atlas {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
        /// Emit DOT files for every order.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Expr(_) | CliError::Usage(_) => 2,
            CliError::Ring(
                RingError::OrderLimitExceeded { .. }
                | RingError::SearchBudgetExceeded { .. }
                | RingError::GroupTooLarge { .. }
                | RingError::Overflow,
            ) => 3,
            CliError::Ring(RingError::InvalidExpr(_) | RingError::InvalidModulus(_)) => 2,
            CliError::Ring(_) | CliError::Io { .. } => 3,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_ring_order,
            search_budget: self.search_budget,
        }
    }
}

fn full_graph(text: &str, limits: &Limits) -> Result<(RingExpr, OrbitGraph), CliError> {
    let expr = parse_ring_expr(text)?;
    let ring = make_ring_with(&expr, limits)?;
    let group = automorphisms_with(&ring, limits)?;
    Ok((expr, OrbitGraph::build(Arc::new(group))))
}

/// Runs `cli`, writing results to `out`. The returned code is 0, or 1 when a
/// verification found a counterexample.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let limits = cli.limits();
    let stdout = |e| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match &cli.command {
        Command::Info { expr, json } => {
            let (expr, graph) = full_graph(expr, &limits)?;
            let report = RingReport::new(&expr, &graph);
            let text = if *json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            out.write_all(text.as_bytes()).map_err(stdout)?;
        }
        Command::Aut { expr, list } => {
            let (expr, graph) = full_graph(expr, &limits)?;
            write_aut(&expr, &graph, *list, out).map_err(stdout)?;
        }
        Command::Graph {
            expr,
            format,
            collapse,
        } => {
            let (expr, graph) = full_graph(expr, &limits)?;
            let text = match format {
                GraphFormat::Dot => emit_dot(&graph, *collapse),
                GraphFormat::Json => emit_graph_json(&expr, &graph) + "\n",
            };
            out.write_all(text.as_bytes()).map_err(stdout)?;
        }
        Command::Type { expr } => {
            let (_, graph) = full_graph(expr, &limits)?;
            writeln!(out, "{}", graph.graph_type()).map_err(stdout)?;
        }
        Command::Verify {
            theorem,
            max_order,
            json,
        } => {
            let reports = verify(theorem, *max_order, &limits)?;
            if *json {
                let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
                writeln!(out, "{text}").map_err(stdout)?;
            } else {
                for r in &reports {
                    writeln!(out, "{r}").map_err(stdout)?;
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(1);
            }
        }
        Command::Atlas {
            max_order,
            out: dir,
            force,
        } => {
            let count = atlas(*max_order, dir, *force, &limits)?;
            writeln!(out, "wrote {count} rings to {}", dir.display()).map_err(stdout)?;
        }
    }
    Ok(0)
}

fn write_aut(
    expr: &RingExpr,
    graph: &OrbitGraph,
    list: bool,
    out: &mut dyn Write,
) -> io::Result<()> {
    let group = graph.group();
    let ring = graph.ring();
    let gens = ring.generating_set();
    writeln!(out, "Aut({expr})")?;
    writeln!(out, "order: {}", group.order())?;
    writeln!(out, "abelian: {}", group.is_abelian())?;
    let gen_names: Vec<&str> = gens.iter().map(|&g| ring.name(g)).collect();
    writeln!(out, "ring generators: {}", gen_names.join(", "))?;
    let show = |s: &ringgraph_core::RingMorphism| {
        gens.iter()
            .map(|&g| format!("{} -> {}", ring.name(g), ring.name(s.apply(g))))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let strong = group.generators();
    writeln!(out, "group generators: {}", strong.len())?;
    for s in &strong {
        writeln!(out, "  {}", show(s))?;
    }
    if list {
        match group.elements() {
            Ok(all) => {
                writeln!(out, "elements:")?;
                for s in &all {
                    writeln!(out, "  {}", show(s))?;
                }
            }
            Err(e) => writeln!(out, "elements: not listed ({e})")?,
        }
    }
    Ok(())
}

fn verify(
    theorem: &str,
    max_order: usize,
    limits: &Limits,
) -> Result<Vec<VerificationReport>, CliError> {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(CliError::Usage)?]
    };
    let catalog = if ids.iter().any(|t| t.uses_catalog()) {
        let options = CatalogOptions {
            include_zero_ring: false,
            limits: *limits,
        };
        Some(build_catalog_with(max_order, options)?)
    } else {
        None
    };
    let mut reports = Vec::new();
    for id in ids {
        let report = match (id, &catalog) {
            (TheoremId::TypeFormulas, _) => {
                verify_type_formulas(&DEFAULT_P_LIST, &DEFAULT_N_LIST, limits)?
            }
            (TheoremId::FieldExt, _) => verify_field_extension_connectivity(5, 3, limits)?,
            (_, Some(cat)) => run_verification(id, cat)?,
            (_, None) => unreachable!("catalog built for catalog checks"),
        };
        reports.push(report);
    }
    Ok(reports)
}

/// File-name stem for an expression: ASCII alphanumerics kept, every other
/// run of characters collapsed to one underscore.
pub fn sanitize(expr: &str) -> String {
    let mut out = String::new();
    for c in expr.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

#[derive(Serialize)]
struct IndexEntry {
    expr: String,
    order: usize,
    family: ringgraph_core::classify::Family,
    json: String,
    dot: Option<String>,
}

#[derive(Serialize)]
struct AtlasIndex {
    max_order: usize,
    count: usize,
    entries: Vec<IndexEntry>,
}

fn atlas(max_order: usize, dir: &Path, force: bool, limits: &Limits) -> Result<usize, CliError> {
    let options = CatalogOptions {
        include_zero_ring: false,
        limits: *limits,
    };
    let catalog = build_catalog_with(max_order, options)?;
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut entries = Vec::new();
    for (i, e) in catalog.entries.iter().enumerate() {
        let graph = e.graph(limits)?;
        let stem = format!("{i:03}_{}", sanitize(&e.expr.to_string()));
        let json = format!("{stem}.json");
        let path = dir.join(&json);
        fs::write(&path, RingReport::new(&e.expr, &graph).to_json() + "\n")
            .map_err(io_err(&path))?;
        let dot = if force || e.ring.order() <= ATLAS_DOT_LIMIT {
            let name = format!("{stem}.dot");
            let path = dir.join(&name);
            fs::write(&path, emit_dot(&graph, false)).map_err(io_err(&path))?;
            Some(name)
        } else {
            None
        };
        entries.push(IndexEntry {
            expr: e.expr.to_string(),
            order: e.ring.order(),
            family: e.family,
            json,
            dot,
        });
    }
    let index = AtlasIndex {
        max_order,
        count: entries.len(),
        entries,
    };
    let path = dir.join("index.json");
    let text = serde_json::to_string_pretty(&index).expect("index serializes");
    fs::write(&path, text + "\n").map_err(io_err(&path))?;
    Ok(index.count)
}
