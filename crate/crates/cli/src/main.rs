//! Command-line surface: construct, verify, check, bound and search radio
//! labelings of Cartesian products of generalized Petersen graphs and
//! trees.
//!
//! Exit codes: 0 = success / verdict true, 1 = verdict false (invalid
//! labeling, failed check, unreached target), 2 = usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use radiolabel_core::construction::{construct_optimal_with, render_table_csv, FallbackConfig};
use radiolabel_core::graph::{
    all_pairs_distances, build_generalized_petersen, build_petersen_explicit, cartesian_product,
    Graph, GraphKind,
};
use radiolabel_core::io::{
    format_edge_list, load_graph, load_tree, to_dot, GraphDescriptor, LabelingDocument,
    PRODUCT_NAMING,
};
use radiolabel_core::radio::{
    check_equality_conditions, check_main_conditions, check_sufficient_conditions, lower_bound,
    validate, ConditionReport, ExtraCondition, ProductInstance, Verdict, VertexOrdering,
};
use radiolabel_core::search::{
    exact_radio_number, exact_radio_number_parallel, heuristic_search_from, AnnealConfig,
    SearchBudget,
};
use radiolabel_core::tree::compute_metrics;
use radiolabel_core::Error;

/// Environment variable holding the default search budget (nodes or
/// annealing iterations) used when no flag overrides it.
const BUDGET_ENV: &str = "RADIOLABEL_SEARCH_BUDGET";

#[derive(Parser)]
#[command(
    name = "radiolabel",
    version,
    about = "Radio labelings of Cartesian products of generalized Petersen graphs and trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Summary,
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build a generalized Petersen graph P_{m,k} and export it
    Petersen {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Use the explicit x_1..x_10 vertex naming of P_{5,2}
        #[arg(long)]
        explicit: bool,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight centers, levels, branches and total level of a tree
    TreeMetrics {
        /// Edge-list file (one `u v` per line, `#` comments, optional `n <count>` header)
        tree: PathBuf,
    },
    /// Cartesian product of P_{m,k} and a tree
    Product {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value = "summary")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form lower bound for rn(P_{m,k} box T)
    LowerBound {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Build an optimal labeling of P_{5,2} box K_{1,n} (span 10n + 27)
    Construct {
        #[arg(long)]
        n: usize,
        /// Write the labeling document here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the labeled grid as CSV
        #[arg(long)]
        emit_table: Option<PathBuf>,
        /// RNG seed for the small-n fallback search
        #[arg(long)]
        seed: Option<u64>,
        /// Iteration budget for the small-n fallback search
        #[arg(long)]
        iterations: Option<u64>,
    },
    /// Validate a labeling document against the radio condition
    Verify { file: PathBuf },
    /// Check ordering conditions: 3.1 = equality case, 3.2 = exact
    /// characterization, 3.3 = sufficient conditions
    Check {
        file: PathBuf,
        #[arg(long, value_parser = ["3.1", "3.2", "3.3"])]
        theorem: String,
        /// For 3.3: which of the optional conditions to check (e.g. "d,e")
        #[arg(long)]
        which: Option<String>,
    },
    /// Exact branch-and-bound or annealing search for small spans
    Search {
        /// Generic graph edge-list file
        #[arg(long, conflicts_with_all = ["m", "k", "tree"])]
        graph: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// With --m/--k: search P_{m,k} box T instead of P_{m,k}
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Exact branch-and-bound (practical up to ~12 vertices)
        #[arg(long)]
        exact: bool,
        /// Partition the exact search across threads
        #[arg(long, requires = "exact")]
        parallel: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        time_limit_secs: Option<u64>,
        #[arg(long)]
        target_span: Option<i64>,
        /// Annealing start temperature
        #[arg(long, conflicts_with = "exact")]
        initial_temp: Option<f64>,
        /// Annealing geometric cooling factor per iteration
        #[arg(long, conflicts_with = "exact")]
        cooling: Option<f64>,
        /// Probability of a swap move (the rest are relocations)
        #[arg(long, conflicts_with = "exact")]
        swap_probability: Option<f64>,
        /// Iterations without improvement before reheating
        #[arg(long, conflicts_with = "exact")]
        reheat_after: Option<u64>,
        /// Write the best labeling found as a document
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the labeled grid of the optimal P_{5,2} box K_{1,n} labeling
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                // A failed small-n fallback is a negative verdict, not bad input.
                Error::ConstructionIncomplete { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn env_budget() -> Option<u64> {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|value| value.parse().ok())
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn petersen_names(explicit: bool, m: usize) -> Vec<String> {
    if explicit {
        (1..=10).map(|i| format!("x{i}")).collect()
    } else {
        (0..m)
            .map(|i| format!("u{i}"))
            .chain((0..m).map(|i| format!("v{i}")))
            .collect()
    }
}

fn render_graph(
    g: &Graph,
    format: GraphFormat,
    names: Option<&[String]>,
    summary: String,
) -> String {
    match format {
        GraphFormat::Summary => summary,
        GraphFormat::Edges => format_edge_list(g),
        GraphFormat::Dot => to_dot(g, names),
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Petersen {
            m,
            k,
            explicit,
            format,
            out,
        } => {
            let g = if explicit {
                build_petersen_explicit()
            } else {
                build_generalized_petersen(m, k)?
            };
            let names = petersen_names(explicit, m);
            let dedup_note = if g.deduplicated_chords() {
                " (degenerate chords deduplicated)"
            } else {
                ""
            };
            let summary = format!(
                "P_{{{m},{k}}}: {} vertices, {} edges{dedup_note}\n",
                g.vertex_count(),
                g.edge_count()
            );
            write_or_print(
                out.as_deref(),
                &render_graph(&g, format, Some(&names), summary),
            )?;
            Ok(0)
        }
        Command::TreeMetrics { tree } => {
            let tree = load_tree(&tree)?;
            let metrics = compute_metrics(&tree)?;
            let centers: Vec<String> = metrics
                .weight_centers()
                .iter()
                .map(|c| c.to_string())
                .collect();
            println!("order = {}", metrics.order());
            println!("weight centers = {{{}}}", centers.join(", "));
            println!("epsilon = {}", metrics.epsilon());
            println!("diameter = {}", metrics.diameter());
            println!("total level = {}", metrics.total_level());
            for v in 0..metrics.order() {
                let branch = match metrics.branch(v) {
                    None => "root".to_string(),
                    Some(b) => b.to_string(),
                };
                println!(
                    "vertex {v}: level {}, branch {branch}, side {}",
                    metrics.level(v),
                    metrics.side(v)
                );
            }
            Ok(0)
        }
        Command::Product {
            m,
            k,
            tree,
            format,
            out,
        } => {
            let petersen = build_generalized_petersen(m, k)?;
            let tree = load_tree(&tree)?;
            let product = cartesian_product(&petersen, &tree);
            let d = all_pairs_distances(&product)?;
            let names: Vec<String> = (0..product.vertex_count())
                .map(|flat| {
                    let (a, b) = (flat / tree.vertex_count(), flat % tree.vertex_count());
                    let left = if a < m {
                        format!("u{a}")
                    } else {
                        format!("v{}", a - m)
                    };
                    format!("({left},y{b})")
                })
                .collect();
            let summary = format!(
                "product: {} vertices, {} edges, diameter {}\n",
                product.vertex_count(),
                product.edge_count(),
                d.diameter()
            );
            write_or_print(
                out.as_deref(),
                &render_graph(&product, format, Some(&names), summary),
            )?;
            Ok(0)
        }
        Command::LowerBound { m, k, tree } => {
            let petersen = build_generalized_petersen(m, k)?;
            let tree = load_tree(&tree)?;
            let report = lower_bound(&petersen, &tree)?;
            println!(
                "m = {}, k = {}, tree order n = {}, d_t = {}, epsilon = {}, L(T) = {}",
                report.m,
                report.k,
                report.tree_order,
                report.tree_diameter,
                report.epsilon,
                report.total_level
            );
            if report.degenerate_tree {
                println!("note: tree diameter 0 is outside the bound's intended regime");
            }
            println!("lower bound = {}", report.bound);
            Ok(0)
        }
        Command::Construct {
            n,
            out,
            emit_table,
            seed,
            iterations,
        } => {
            let mut fallback = FallbackConfig::default();
            if let Some(seed) = seed {
                fallback.budget.rng_seed = seed;
            }
            if let Some(iterations) = iterations.or_else(env_budget) {
                fallback.budget.max_nodes = iterations;
            }
            let outcome = construct_optimal_with(n, &fallback)?;
            println!(
                "constructed n={n}: span {} = lower bound (path: {})",
                outcome.labeling.span(),
                outcome.path
            );
            if let Some(path) = out {
                document_for_outcome(&outcome).save(&path)?;
                println!("labeling written to {}", path.display());
            }
            if let Some(path) = emit_table {
                std::fs::write(&path, render_table_csv(&outcome))
                    .map_err(|e| Error::io(path.clone(), e))?;
                println!("table written to {}", path.display());
            }
            Ok(0)
        }
        Command::Verify { file } => {
            let doc = LabelingDocument::load(&file)?;
            if doc.labels.is_empty() {
                return Err(Error::Parse("document has no labels to verify".into()));
            }
            let graph = doc.graph.build()?;
            let d = all_pairs_distances(&graph)?;
            let labeling = validate(&graph, &d, &doc.labels)?;
            match labeling.verdict() {
                Verdict::Valid => {
                    println!("VALID span={}", labeling.span());
                    Ok(0)
                }
                Verdict::Invalid {
                    u,
                    v,
                    required,
                    actual,
                } => {
                    println!("INVALID pair=({u},{v}) required_gap={required} actual_gap={actual}");
                    Ok(1)
                }
                Verdict::Unchecked => unreachable!("validate always decides"),
            }
        }
        Command::Check {
            file,
            theorem,
            which,
        } => {
            let doc = LabelingDocument::load(&file)?;
            let (petersen, tree) = product_parts(&doc.graph)?;
            let inst = ProductInstance::new(petersen, tree)?;
            let ordering = VertexOrdering::from_flat_indices(
                &doc.order,
                inst.petersen().vertex_count(),
                inst.metrics(),
            )?;
            let report = match theorem.as_str() {
                "3.1" => check_equality_conditions(&ordering, &inst),
                "3.2" => check_main_conditions(&ordering, &inst),
                "3.3" => {
                    let subset = parse_which(which.as_deref())?;
                    check_sufficient_conditions(&ordering, &inst, &subset)
                }
                _ => unreachable!("clap restricts the values"),
            };
            print_report(&theorem, &report);
            Ok(if report.all_hold() { 0 } else { 1 })
        }
        Command::Search {
            graph,
            m,
            k,
            tree,
            exact,
            parallel,
            seed,
            max_nodes,
            time_limit_secs,
            target_span,
            initial_temp,
            cooling,
            swap_probability,
            reheat_after,
            out,
        } => {
            let (g, descriptor) = search_instance(graph.as_deref(), m, k, tree.as_deref())?;
            let d = all_pairs_distances(&g)?;
            let mut budget = SearchBudget {
                rng_seed: seed,
                target_span,
                time_limit: time_limit_secs.map(Duration::from_secs),
                ..SearchBudget::default()
            };
            if let Some(nodes) = max_nodes.or_else(env_budget) {
                budget.max_nodes = nodes;
            }
            let result = if exact {
                if parallel {
                    exact_radio_number_parallel(&g, &d, &budget)
                } else {
                    exact_radio_number(&g, &d, &budget)
                }
            } else {
                let mut anneal = AnnealConfig::default();
                if let Some(value) = initial_temp {
                    anneal.initial_temp = value;
                }
                if let Some(value) = cooling {
                    anneal.cooling = value;
                }
                if let Some(value) = swap_probability {
                    if !(0.0..=1.0).contains(&value) {
                        return Err(Error::InvalidParameter(format!(
                            "--swap-probability must be in [0, 1], got {value}"
                        )));
                    }
                    anneal.swap_probability = value;
                }
                if let Some(value) = reheat_after {
                    anneal.reheat_after = value;
                }
                heuristic_search_from(&g, &d, &budget, &anneal, None)
            };
            println!(
                "span={} proven_optimal={} nodes_explored={}",
                result.best.span(),
                result.proven_optimal,
                result.nodes_explored
            );
            if let Some(path) = out {
                let mut order: Vec<(i64, usize)> = result
                    .best
                    .labels()
                    .iter()
                    .enumerate()
                    .map(|(v, &label)| (label, v))
                    .collect();
                order.sort_unstable();
                let doc = LabelingDocument {
                    graph: descriptor,
                    naming: None,
                    order: order.into_iter().map(|(_, v)| v).collect(),
                    labels: result.best.labels().to_vec(),
                    span: Some(result.best.span()),
                    valid: Some(result.best.is_valid()),
                };
                doc.save(&path)?;
                println!("labeling written to {}", path.display());
            }
            Ok(0)
        }
        Command::Table { n, out } => {
            let outcome = construct_optimal_with(n, &FallbackConfig::default())?;
            write_or_print(out.as_deref(), &render_table_csv(&outcome))?;
            Ok(0)
        }
    }
}

fn document_for_outcome(
    outcome: &radiolabel_core::construction::ConstructionOutcome,
) -> LabelingDocument {
    LabelingDocument {
        graph: GraphDescriptor::Product {
            left: Box::new(GraphDescriptor::PetersenExplicit),
            right: Box::new(GraphDescriptor::Tree {
                n: outcome.n + 1,
                edges: (1..=outcome.n).map(|j| (0, j)).collect(),
            }),
        },
        naming: Some(PRODUCT_NAMING.to_string()),
        order: outcome.ordering.flat_indices(),
        labels: outcome.labeling.labels().to_vec(),
        span: Some(outcome.labeling.span()),
        valid: Some(outcome.labeling.is_valid()),
    }
}

fn product_parts(descriptor: &GraphDescriptor) -> Result<(Graph, Graph), Error> {
    let GraphDescriptor::Product { left, right } = descriptor else {
        return Err(Error::InvalidParameter(
            "check requires a product graph descriptor (generalized Petersen x tree)".into(),
        ));
    };
    let petersen = left.build()?;
    if !matches!(petersen.kind(), GraphKind::GeneralizedPetersen { .. }) {
        return Err(Error::InvalidParameter(
            "left factor must be a generalized Petersen graph".into(),
        ));
    }
    let tree = right.build()?;
    if tree.kind() != GraphKind::Tree {
        return Err(Error::InvalidParameter(
            "right factor must be a tree".into(),
        ));
    }
    Ok((petersen, tree))
}

fn parse_which(which: Option<&str>) -> Result<Vec<ExtraCondition>, Error> {
    let Some(which) = which else {
        return Ok(Vec::new());
    };
    which
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| match name {
            "d" => Ok(ExtraCondition::MinConsecutivePair),
            "e" => Ok(ExtraCondition::EveryConsecutive),
            "f" => Ok(ExtraCondition::LevelCapAndSeparation),
            other => Err(Error::InvalidParameter(format!(
                "--which accepts a subset of d,e,f; got {other:?}"
            ))),
        })
        .collect()
}

fn print_report(theorem: &str, report: &ConditionReport) {
    for condition in &report.conditions {
        match (&condition.witness, condition.holds) {
            (_, true) => {
                println!(
                    "condition ({}): PASS: {}",
                    condition.name, condition.description
                )
            }
            (Some(witness), false) => println!(
                "condition ({}): FAIL: {} [witness a={} b={}: {}]",
                condition.name, condition.description, witness.a, witness.b, witness.note
            ),
            (None, false) => {
                println!(
                    "condition ({}): FAIL: {}",
                    condition.name, condition.description
                )
            }
        }
    }
    println!(
        "check {theorem}: {}",
        if report.all_hold() {
            "all conditions hold"
        } else {
            "some condition failed"
        }
    );
}

fn search_instance(
    graph: Option<&Path>,
    m: Option<usize>,
    k: Option<usize>,
    tree: Option<&Path>,
) -> Result<(Graph, GraphDescriptor), Error> {
    match (graph, m, k) {
        (Some(path), None, None) => {
            let g = load_graph(path)?;
            let descriptor = GraphDescriptor::generic_of(&g);
            Ok((g, descriptor))
        }
        (None, Some(m), Some(k)) => {
            let petersen = build_generalized_petersen(m, k)?;
            let petersen_desc = GraphDescriptor::GeneralizedPetersen { m, k };
            match tree {
                None => Ok((petersen, petersen_desc)),
                Some(path) => {
                    let tree = load_tree(path)?;
                    let product = cartesian_product(&petersen, &tree);
                    let descriptor = GraphDescriptor::Product {
                        left: Box::new(petersen_desc),
                        right: Box::new(GraphDescriptor::tree_of(&tree)),
                    };
                    Ok((product, descriptor))
                }
            }
        }
        _ => Err(Error::InvalidParameter(
            "search needs either --graph FILE or --m M --k K (optionally with --tree FILE)".into(),
        )),
    }
}
