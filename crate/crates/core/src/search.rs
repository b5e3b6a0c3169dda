//! Independent search oracles: exact radio number by branch-and-bound for
//! desk-scale graphs, and simulated annealing over vertex orderings for
//! target spans.
//!
//! Both solvers work in ordering space: any radio labeling, sorted by
//! label, induces a vertex ordering, and for a fixed ordering the minimal
//! labeling is the greedy one. Minimizing greedy span over orderings is
//! therefore exact.

use std::sync::atomic::{AtomicI64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::radio::{greedy_min_labeling, greedy_span, validate, RadioLabeling};

/// Limits and knobs for a search run. The RNG seed fully determines every
/// heuristic trajectory.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Branch-and-bound nodes or annealing iterations.
    pub max_nodes: u64,
    /// Wall-clock cutoff. Leave `None` for deterministic runs.
    pub time_limit: Option<Duration>,
    pub rng_seed: u64,
    /// Stop as soon as a valid labeling with this span (or better) is found.
    pub target_span: Option<i64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 5_000_000,
            time_limit: None,
            rng_seed: 0,
            target_span: None,
        }
    }
}

/// Best labeling found by a search, with an optimality certificate flag.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best: RadioLabeling,
    /// True only when the full search tree was exhausted within budget.
    pub proven_optimal: bool,
    pub nodes_explored: u64,
}

/// Simulated-annealing schedule. Defaults are deliberately pinned down so
/// runs are reproducible; override via flags where exposed.
#[derive(Debug, Clone)]
pub struct AnnealConfig {
    pub initial_temp: f64,
    /// Geometric cooling factor applied every iteration.
    pub cooling: f64,
    /// Probability of a swap move; the rest are single-position relocations.
    pub swap_probability: f64,
    /// Iterations without improvement before reheating from the best order.
    pub reheat_after: u64,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        AnnealConfig {
            initial_temp: 3.0,
            cooling: 0.9995,
            swap_probability: 0.9,
            reheat_after: 25_000,
        }
    }
}

/// Vertices sorted by descending eccentricity, ties by index: tightly
/// constrained vertices first, reproducibly.
fn branching_order(d: &DistanceMatrix) -> Vec<VertexId> {
    let n = d.vertex_count();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.eccentricity(v)), v));
    order
}

struct BranchAndBound<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    candidates: Vec<VertexId>,
    diam: i64,
    /// Local recording threshold: the best span this solver has stored.
    incumbent: i64,
    best_order: Vec<VertexId>,
    best_labels: Vec<i64>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
    cur_order: Vec<VertexId>,
    cur_labels: Vec<i64>,
    used: Vec<bool>,
    /// Cross-worker incumbent in parallel mode. Shared values prune only
    /// strictly worse subtrees, so which labelings a worker records does
    /// not depend on timing.
    shared: Option<&'a AtomicI64>,
    /// Keep the lexicographically smallest labeling among equal spans.
    lexicographic_ties: bool,
}

impl<'a> BranchAndBound<'a> {
    fn gap(&self, u: VertexId, v: VertexId) -> i64 {
        self.diam + 1 - i64::from(self.d.get(u, v))
    }

    fn out_of_budget(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        if self.nodes >= self.max_nodes {
            self.exhausted = true;
            return true;
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(4096) && Instant::now() >= deadline {
                self.exhausted = true;
                return true;
            }
        }
        false
    }

    fn record_complete(&mut self) {
        let span = *self.cur_labels.last().unwrap();
        let record = span < self.incumbent
            || (self.lexicographic_ties
                && span == self.incumbent
                && !self.best_order.is_empty()
                && per_vertex_labels(&self.cur_order, &self.cur_labels)
                    < per_vertex_labels(&self.best_order, &self.best_labels));
        if record {
            self.incumbent = span;
            self.best_order = self.cur_order.clone();
            self.best_labels = self.cur_labels.clone();
            if let Some(shared) = self.shared {
                shared.fetch_min(span, AtomicOrdering::Relaxed);
            }
        }
    }

    /// Prune a node when its completion bound reaches this value.
    fn prune_bound(&self) -> i64 {
        match self.shared {
            Some(shared) => shared.load(AtomicOrdering::Relaxed).min(self.incumbent) + 1,
            None => self.incumbent,
        }
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.n {
            self.record_complete();
            return;
        }
        let last_label = if depth == 0 {
            -1
        } else {
            self.cur_labels[depth - 1]
        };
        // Every remaining vertex needs a strictly larger label.
        if last_label + (self.n - depth) as i64 >= self.prune_bound() {
            return;
        }
        for i in 0..self.candidates.len() {
            let v = self.candidates[i];
            if self.used[v] {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return;
            }
            let mut label = 0i64;
            for s in 0..depth {
                label = label.max(self.cur_labels[s] + self.gap(self.cur_order[s], v));
            }
            if label + (self.n - depth - 1) as i64 >= self.prune_bound() {
                continue;
            }
            self.used[v] = true;
            self.cur_order.push(v);
            self.cur_labels.push(label);
            self.dfs(depth + 1);
            self.cur_labels.pop();
            self.cur_order.pop();
            self.used[v] = false;
            if self.exhausted {
                return;
            }
        }
    }
}

fn per_vertex_labels(order: &[VertexId], labels_by_pos: &[i64]) -> Vec<i64> {
    let mut labels = vec![0i64; order.len()];
    for (t, &v) in order.iter().enumerate() {
        labels[v] = labels_by_pos[t];
    }
    labels
}

/// Exact radio number by branch-and-bound over label-sorted vertex
/// orderings. Labels are assigned in increasing order, each vertex getting
/// the smallest feasible label; a node is pruned when its partial span
/// plus one per remaining vertex cannot beat the incumbent.
///
/// Practical for graphs up to roughly a dozen vertices. When the budget
/// runs out, the best incumbent is returned with `proven_optimal = false`.
pub fn exact_radio_number(g: &Graph, d: &DistanceMatrix, budget: &SearchBudget) -> SearchResult {
    let n = g.vertex_count();
    let candidates = branching_order(d);
    // Greedy on the branching order seeds the incumbent.
    let seed_labeling =
        greedy_min_labeling(g, d, &candidates).expect("branching order is a permutation");
    if n == 0 {
        return SearchResult {
            best: seed_labeling,
            proven_optimal: true,
            nodes_explored: 0,
        };
    }
    let seed_labels_by_pos: Vec<i64> = candidates.iter().map(|&v| seed_labeling.label(v)).collect();

    let mut solver = BranchAndBound {
        d,
        n,
        candidates: candidates.clone(),
        diam: i64::from(d.diameter()),
        incumbent: seed_labeling.span(),
        best_order: candidates,
        best_labels: seed_labels_by_pos,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|limit| Instant::now() + limit),
        exhausted: false,
        cur_order: Vec::with_capacity(n),
        cur_labels: Vec::with_capacity(n),
        used: vec![false; n],
        shared: None,
        lexicographic_ties: false,
    };
    solver.dfs(0);

    let labels = per_vertex_labels(&solver.best_order, &solver.best_labels);
    let best = validate(g, d, &labels).expect("branch-and-bound labeling validates");
    debug_assert!(best.is_valid());
    SearchResult {
        best,
        proven_optimal: !solver.exhausted,
        nodes_explored: solver.nodes,
    }
}

/// Parallel exact search: the root vertex choices are partitioned across
/// workers, a shared incumbent is published monotonically (improvements
/// only), and the final result is the minimum span with the
/// lexicographically smallest labeling as tie-break.
///
/// The returned span and labeling are deterministic; `nodes_explored` may
/// vary from run to run because cross-worker pruning depends on timing.
pub fn exact_radio_number_parallel(
    g: &Graph,
    d: &DistanceMatrix,
    budget: &SearchBudget,
) -> SearchResult {
    let n = g.vertex_count();
    if n <= 1 {
        return exact_radio_number(g, d, budget);
    }
    let candidates = branching_order(d);
    let seed_labeling =
        greedy_min_labeling(g, d, &candidates).expect("branching order is a permutation");
    let shared = AtomicI64::new(seed_labeling.span());
    let per_root_budget = budget.max_nodes / n as u64;

    // Per root: best (span, labels) if any was recorded, nodes, exhausted.
    type WorkerOutcome = (Option<(i64, Vec<i64>)>, u64, bool);
    let results: Vec<WorkerOutcome> = candidates
        .par_iter()
        .map(|&root| {
            let mut solver = BranchAndBound {
                d,
                n,
                candidates: candidates.clone(),
                diam: i64::from(d.diameter()),
                incumbent: i64::MAX,
                best_order: Vec::new(),
                best_labels: Vec::new(),
                nodes: 0,
                max_nodes: per_root_budget,
                deadline: budget.time_limit.map(|limit| Instant::now() + limit),
                exhausted: false,
                cur_order: vec![root],
                cur_labels: vec![0],
                used: {
                    let mut used = vec![false; n];
                    used[root] = true;
                    used
                },
                shared: Some(&shared),
                lexicographic_ties: true,
            };
            solver.dfs(1);
            let found = (!solver.best_order.is_empty()).then(|| {
                (
                    solver.incumbent,
                    per_vertex_labels(&solver.best_order, &solver.best_labels),
                )
            });
            (found, solver.nodes, solver.exhausted)
        })
        .collect();

    let mut best_labels: Vec<i64> = seed_labeling.labels().to_vec();
    let mut best_span = seed_labeling.span();
    let mut nodes = 0;
    let mut exhausted = false;
    for (found, worker_nodes, worker_exhausted) in results {
        nodes += worker_nodes;
        exhausted |= worker_exhausted;
        if let Some((span, labels)) = found {
            if span < best_span || (span == best_span && labels < best_labels) {
                best_span = span;
                best_labels = labels;
            }
        }
    }
    let best = validate(g, d, &best_labels).expect("parallel search labeling validates");
    debug_assert!(best.is_valid());
    SearchResult {
        best,
        proven_optimal: !exhausted,
        nodes_explored: nodes,
    }
}

/// Simulated annealing over vertex orderings with the greedy span as the
/// objective. Deterministic given the budget's RNG seed; stops early when
/// `target_span` is reached. Always returns a valid labeling.
pub fn heuristic_search(g: &Graph, d: &DistanceMatrix, budget: &SearchBudget) -> SearchResult {
    heuristic_search_from(g, d, budget, &AnnealConfig::default(), None)
}

/// [`heuristic_search`] with an explicit schedule and an optional initial
/// ordering to seed the walk (e.g. an almost-valid construction).
pub fn heuristic_search_from(
    g: &Graph,
    d: &DistanceMatrix,
    budget: &SearchBudget,
    config: &AnnealConfig,
    initial: Option<&[VertexId]>,
) -> SearchResult {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.rng_seed);
    let mut order: Vec<VertexId> = match initial {
        Some(seed) => seed.to_vec(),
        None => {
            let mut order: Vec<VertexId> = (0..n).collect();
            order.shuffle(&mut rng);
            order
        }
    };
    assert_eq!(order.len(), n, "initial ordering must cover every vertex");

    let deadline = budget.time_limit.map(|limit| Instant::now() + limit);
    let mut scratch = Vec::new();
    let mut current = greedy_span(d, &order, &mut scratch);
    let mut best_order = order.clone();
    let mut best = current;
    let mut temp = config.initial_temp.max(1e-9);
    let mut since_improvement = 0u64;
    let mut iterations = 0u64;

    let target_reached = |span: i64| budget.target_span.is_some_and(|t| span <= t);

    if n >= 2 && !target_reached(best) {
        for iter in 0..budget.max_nodes {
            iterations = iter + 1;
            if let Some(deadline) = deadline {
                if iter.is_multiple_of(4096) && Instant::now() >= deadline {
                    break;
                }
            }
            let mut candidate = order.clone();
            if rng.gen_bool(config.swap_probability) {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                candidate.swap(i, j);
            } else {
                let from = rng.gen_range(0..n);
                let to = rng.gen_range(0..n);
                let v = candidate.remove(from);
                candidate.insert(to, v);
            }
            let span = greedy_span(d, &candidate, &mut scratch);
            let delta = span - current;
            let accept = delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp();
            if accept {
                order = candidate;
                current = span;
                if current < best {
                    best = current;
                    best_order = order.clone();
                    since_improvement = 0;
                    if target_reached(best) {
                        break;
                    }
                }
            }
            temp *= config.cooling;
            since_improvement += 1;
            if since_improvement >= config.reheat_after {
                order = best_order.clone();
                current = best;
                temp = config.initial_temp;
                since_improvement = 0;
            }
        }
    }

    let labeling =
        greedy_min_labeling(g, d, &best_order).expect("annealing order is a permutation");
    debug_assert!(labeling.is_valid());
    SearchResult {
        best: labeling,
        proven_optimal: false,
        nodes_explored: iterations,
    }
}
