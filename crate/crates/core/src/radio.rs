//! Radio-labeling validation, the closed-form lower bound for
//! `P_{m,k} □ T`, canonical labelings of vertex orderings, and the
//! condition checkers that certify when the bound is attained.
//!
//! The central quantity is `E(a, b)`, the minimum combined factor distance
//! two ordered vertices must realize for the canonical labeling to satisfy
//! their pairwise radio constraint:
//!
//! ```text
//! E(a, b) = sum_{t=a}^{b-1} (L(y_t) + L(y_{t+1}) - d_t - eps) + d_t + d_p + 1
//! ```
//!
//! All pairwise checks evaluate it in O(1) from prefix sums.

use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distances, DistanceMatrix, Graph, GraphKind, ProductVertex, VertexId,
};
use crate::tree::{compute_metrics, TreeMetrics};

/// Outcome of checking a labeling against every vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Lexicographically smallest violating pair with both sides of the
    /// violated inequality.
    Invalid {
        u: VertexId,
        v: VertexId,
        required: i64,
        actual: i64,
    },
    /// Produced by a constructor that deliberately does not validate.
    Unchecked,
}

/// A vertex-to-label map with cached span and validity verdict.
///
/// Labels are wide integers so stress-size instances cannot overflow; the
/// span is the largest pairwise label difference, which equals the maximum
/// label once the minimum is normalized to 0.
#[derive(Debug, Clone)]
pub struct RadioLabeling {
    labels: Vec<i64>,
    span: i64,
    verdict: Verdict,
}

impl RadioLabeling {
    fn new(labels: Vec<i64>, verdict: Verdict) -> Self {
        let max = labels.iter().copied().max().unwrap_or(0);
        let min = labels.iter().copied().min().unwrap_or(0);
        RadioLabeling {
            labels,
            span: max - min,
            verdict,
        }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> i64 {
        self.labels[v]
    }

    pub fn span(&self) -> i64 {
        self.span
    }

    pub fn verdict(&self) -> &Verdict {
        &self.verdict
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.verdict, Verdict::Valid)
    }
}

/// Check `|f(u) - f(v)| >= diam + 1 - d(u, v)` over every unordered pair.
///
/// Returns the verdict with the lexicographically smallest violating pair,
/// if any. Negative labels are rejected up front.
pub fn validate(g: &Graph, d: &DistanceMatrix, labels: &[i64]) -> Result<RadioLabeling> {
    let n = g.vertex_count();
    if labels.len() != n || d.vertex_count() != n {
        return Err(Error::InvalidParameter(format!(
            "validate: got {} labels and a {}-vertex distance matrix for a {n}-vertex graph",
            labels.len(),
            d.vertex_count()
        )));
    }
    for (v, &label) in labels.iter().enumerate() {
        if label < 0 {
            return Err(Error::NegativeLabel { vertex: v, label });
        }
    }
    let diam = i64::from(d.diameter());
    let mut verdict = Verdict::Valid;
    'outer: for u in 0..n {
        for v in u + 1..n {
            let required = diam + 1 - i64::from(d.get(u, v));
            let actual = (labels[u] - labels[v]).abs();
            if actual < required {
                verdict = Verdict::Invalid {
                    u,
                    v,
                    required,
                    actual,
                };
                break 'outer;
            }
        }
    }
    Ok(RadioLabeling::new(labels.to_vec(), verdict))
}

/// Ingredients of the `P_{m,k} □ T` lower bound, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub m: usize,
    pub k: usize,
    pub tree_order: usize,
    pub tree_diameter: u32,
    pub epsilon: u32,
    pub total_level: u64,
    pub bound: i64,
    /// Set when the tree has diameter 0 (order 1), outside the regime the
    /// bound was derived for.
    pub degenerate_tree: bool,
}

/// Lower bound for `rn(P_{m,k} □ T)`:
/// `(2mn - 1)(d_t + eps) - 4m L(T)` with `n = |V(T)|`.
pub fn lower_bound(petersen: &Graph, tree: &Graph) -> Result<LowerBoundReport> {
    let GraphKind::GeneralizedPetersen { m, k } = petersen.kind() else {
        return Err(Error::InvalidParameter(
            "lower_bound requires a generalized Petersen graph as the left factor".into(),
        ));
    };
    let metrics = compute_metrics(tree)?;
    let n = tree.vertex_count();
    let d_t = i64::from(metrics.diameter());
    let eps = i64::from(metrics.epsilon());
    let bound = (2 * (m as i64) * (n as i64) - 1) * (d_t + eps)
        - 4 * (m as i64) * (metrics.total_level() as i64);
    Ok(LowerBoundReport {
        m,
        k,
        tree_order: n,
        tree_diameter: metrics.diameter(),
        epsilon: metrics.epsilon(),
        total_level: metrics.total_level(),
        bound,
        degenerate_tree: metrics.diameter() == 0,
    })
}

/// A permutation `z_0 .. z_{N-1}` of the product vertices, with prefix
/// sums of consecutive level sums for O(1) `E(a, b)` evaluation.
#[derive(Debug, Clone)]
pub struct VertexOrdering {
    entries: Vec<ProductVertex>,
    /// Tree level of each position's tree coordinate.
    levels: Vec<u32>,
    /// `prefix[t] = sum_{u < t} (L(y_u) + L(y_{u+1}))`.
    prefix: Vec<i64>,
    right_count: usize,
}

impl VertexOrdering {
    /// Build an ordering over `P □ T` where `P` has `petersen_order`
    /// vertices and the tree is described by `metrics`. Fails unless the
    /// entries are a permutation of all product vertices.
    pub fn new(
        entries: Vec<ProductVertex>,
        petersen_order: usize,
        metrics: &TreeMetrics,
    ) -> Result<Self> {
        let right_count = metrics.order();
        let n = petersen_order * right_count;
        if entries.len() != n {
            return Err(Error::NotAPermutation(format!(
                "ordering has {} entries, product has {n} vertices",
                entries.len()
            )));
        }
        let mut seen = vec![false; n];
        for pv in &entries {
            if pv.left >= petersen_order || pv.right >= right_count {
                return Err(Error::NotAPermutation(format!(
                    "entry ({}, {}) out of range",
                    pv.left, pv.right
                )));
            }
            let flat = pv.flat_index(right_count);
            if seen[flat] {
                return Err(Error::NotAPermutation(format!(
                    "vertex ({}, {}) appears twice",
                    pv.left, pv.right
                )));
            }
            seen[flat] = true;
        }
        let levels: Vec<u32> = entries.iter().map(|pv| metrics.level(pv.right)).collect();
        let mut prefix = vec![0i64; n];
        for t in 1..n {
            prefix[t] = prefix[t - 1] + i64::from(levels[t - 1]) + i64::from(levels[t]);
        }
        Ok(VertexOrdering {
            entries,
            levels,
            prefix,
            right_count,
        })
    }

    /// Ordering from flat vertex indices (position -> flat index).
    pub fn from_flat_indices(
        order: &[usize],
        petersen_order: usize,
        metrics: &TreeMetrics,
    ) -> Result<Self> {
        let entries = order
            .iter()
            .map(|&flat| ProductVertex::from_flat(flat, metrics.order()))
            .collect();
        VertexOrdering::new(entries, petersen_order, metrics)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, t: usize) -> ProductVertex {
        self.entries[t]
    }

    pub fn entries(&self) -> &[ProductVertex] {
        &self.entries
    }

    /// Tree level of the tree coordinate at position `t`.
    pub fn level_at(&self, t: usize) -> u32 {
        self.levels[t]
    }

    /// Flat product-vertex index at position `t`.
    pub fn flat_at(&self, t: usize) -> usize {
        self.entries[t].flat_index(self.right_count)
    }

    pub fn flat_indices(&self) -> Vec<usize> {
        (0..self.len()).map(|t| self.flat_at(t)).collect()
    }
}

/// `E(a, b)` evaluated from the ordering's prefix sums:
/// `S[b] - S[a] - (b - a)(d_t + eps) + d_t + d_p + 1`.
pub fn e_value(
    ordering: &VertexOrdering,
    d_t: u32,
    d_p: u32,
    epsilon: u32,
    a: usize,
    b: usize,
) -> Result<i64> {
    if a >= b || b >= ordering.len() {
        return Err(Error::IndexOutOfRange {
            a,
            b,
            len: ordering.len(),
        });
    }
    Ok(e_value_unchecked(ordering, d_t, d_p, epsilon, a, b))
}

#[inline]
fn e_value_unchecked(
    ordering: &VertexOrdering,
    d_t: u32,
    d_p: u32,
    epsilon: u32,
    a: usize,
    b: usize,
) -> i64 {
    ordering.prefix[b] - ordering.prefix[a] - ((b - a) as i64) * i64::from(d_t + epsilon)
        + i64::from(d_t)
        + i64::from(d_p)
        + 1
}

/// The equality-case labeling of an ordering: `f(z_0) = 0` and
/// `f(z_{t+1}) = f(z_t) + d_t + eps - L(y_t) - L(y_{t+1})`.
///
/// Returns the labeling without asserting validity; whether it is a radio
/// labeling is exactly what the condition checkers decide. A negative step
/// (consecutive level sums exceeding `d_t + eps`) is a construction error.
pub fn canonical_labeling(
    ordering: &VertexOrdering,
    metrics: &TreeMetrics,
    d_t: u32,
    epsilon: u32,
) -> Result<RadioLabeling> {
    let n = ordering.len();
    let mut labels = vec![0i64; n];
    let mut value = 0i64;
    for t in 0..n {
        if t > 0 {
            let step = i64::from(d_t) + i64::from(epsilon)
                - i64::from(metrics.level(ordering.entry(t - 1).right))
                - i64::from(metrics.level(ordering.entry(t).right));
            if step < 0 {
                return Err(Error::InfeasibleStep {
                    position: t - 1,
                    step,
                });
            }
            value += step;
        }
        labels[ordering.flat_at(t)] = value;
    }
    Ok(RadioLabeling::new(labels, Verdict::Unchecked))
}

/// Greedy labels by position for a processing order: each vertex gets the
/// smallest label satisfying every constraint against already-labeled
/// vertices. Since every pairwise gap is at least 1, labels are strictly
/// increasing along the order.
fn greedy_labels_by_position(d: &DistanceMatrix, order: &[VertexId], out: &mut Vec<i64>) {
    let diam = i64::from(d.diameter());
    out.clear();
    out.reserve(order.len());
    for (t, &v) in order.iter().enumerate() {
        let mut label = 0i64;
        for (s, &u) in order[..t].iter().enumerate() {
            let gap = (diam + 1 - i64::from(d.get(u, v))).max(0);
            label = label.max(out[s] + gap);
        }
        out.push(label);
    }
}

/// Minimal valid labeling consistent with a given processing order. The
/// output always validates.
pub fn greedy_min_labeling(
    g: &Graph,
    d: &DistanceMatrix,
    order: &[VertexId],
) -> Result<RadioLabeling> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::NotAPermutation(format!(
            "greedy order must be a permutation of 0..{n}"
        )));
    }
    let mut by_position = Vec::new();
    greedy_labels_by_position(d, order, &mut by_position);
    let mut labels = vec![0i64; n];
    for (t, &v) in order.iter().enumerate() {
        labels[v] = by_position[t];
    }
    let labeling = validate(g, d, &labels)?;
    debug_assert!(labeling.is_valid(), "greedy labeling must validate");
    Ok(labeling)
}

/// Span of the greedy labeling for an order, without allocating a labeling.
pub(crate) fn greedy_span(d: &DistanceMatrix, order: &[VertexId], scratch: &mut Vec<i64>) -> i64 {
    greedy_labels_by_position(d, order, scratch);
    *scratch.last().unwrap_or(&0)
}

/// Which family of conditions a [`ConditionReport`] covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Equality-case conditions (a)-(d): consecutive factor distance,
    /// zero end levels, branch placement, and the canonical labeling
    /// validating.
    Equality,
    /// The exact characterization (a)-(c): equality holds iff every pair
    /// satisfies the E-inequality.
    Exact,
    /// The standalone sufficient conditions (a)-(f).
    Sufficient,
}

/// Witness of a failed condition: the ordering indices involved and both
/// sides of the violated inequality.
#[derive(Debug, Clone)]
pub struct Witness {
    pub a: usize,
    pub b: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub note: String,
}

/// Verdict for one lettered condition.
#[derive(Debug, Clone)]
pub struct Condition {
    pub name: &'static str,
    pub description: &'static str,
    pub holds: bool,
    /// First failure in lexicographic `(a, b)` order, when `holds` is false.
    pub witness: Option<Witness>,
}

impl Condition {
    fn pass(name: &'static str, description: &'static str) -> Self {
        Condition {
            name,
            description,
            holds: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, description: &'static str, witness: Witness) -> Self {
        Condition {
            name,
            description,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Per-condition verdicts with first-failure witnesses.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub kind: CheckKind,
    pub conditions: Vec<Condition>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// First failed condition, if any.
    pub fn first_failure(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

/// One `P_{m,k} □ T` instance: both factors with their exact distances and
/// the tree metrics. Owns everything the checkers need.
#[derive(Debug, Clone)]
pub struct ProductInstance {
    petersen: Graph,
    petersen_dist: DistanceMatrix,
    tree: Graph,
    tree_dist: DistanceMatrix,
    metrics: TreeMetrics,
}

impl ProductInstance {
    pub fn new(petersen: Graph, tree: Graph) -> Result<Self> {
        if !matches!(petersen.kind(), GraphKind::GeneralizedPetersen { .. }) {
            return Err(Error::InvalidParameter(
                "left factor must be a generalized Petersen graph".into(),
            ));
        }
        if tree.kind() != GraphKind::Tree {
            return Err(Error::InvalidParameter(
                "right factor must be a tree".into(),
            ));
        }
        let petersen_dist = all_pairs_distances(&petersen)?;
        let tree_dist = all_pairs_distances(&tree)?;
        let metrics = compute_metrics(&tree)?;
        Ok(ProductInstance {
            petersen,
            petersen_dist,
            tree,
            tree_dist,
            metrics,
        })
    }

    pub fn petersen(&self) -> &Graph {
        &self.petersen
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn metrics(&self) -> &TreeMetrics {
        &self.metrics
    }

    pub fn petersen_dist(&self) -> &DistanceMatrix {
        &self.petersen_dist
    }

    pub fn tree_dist(&self) -> &DistanceMatrix {
        &self.tree_dist
    }

    pub fn d_p(&self) -> u32 {
        self.petersen_dist.diameter()
    }

    pub fn d_t(&self) -> u32 {
        self.tree_dist.diameter()
    }

    pub fn epsilon(&self) -> u32 {
        self.metrics.epsilon()
    }

    pub fn product_order(&self) -> usize {
        self.petersen.vertex_count() * self.tree.vertex_count()
    }

    /// Distance matrix of the product, composed additively from the
    /// factor matrices.
    pub fn product_distances(&self) -> DistanceMatrix {
        DistanceMatrix::product_of(&self.petersen_dist, &self.tree_dist)
    }

    /// Product graph itself (only needed when a BFS cross-check or the
    /// validator's graph argument is wanted).
    pub fn product_graph(&self) -> Graph {
        crate::graph::cartesian_product(&self.petersen, &self.tree)
    }

    /// The closed-form lower bound for this instance.
    pub fn bound(&self) -> i64 {
        let m = self.petersen.vertex_count() as i64 / 2;
        let n = self.tree.vertex_count() as i64;
        (2 * m * n - 1) * i64::from(self.d_t() + self.epsilon())
            - 4 * m * self.metrics.total_level() as i64
    }
}

/// Consecutive tree coordinates must sit in different branches (one
/// center) or opposite branches (two centers). Equal center coordinates
/// satisfy the one-center convention.
fn consecutive_branch_ok(metrics: &TreeMetrics, x: VertexId, y: VertexId) -> bool {
    if metrics.epsilon() == 1 {
        metrics.phi(x, y) == 0
    } else {
        metrics.delta(x, y) == 1
    }
}

fn check_condition_a(ordering: &VertexOrdering, inst: &ProductInstance) -> Condition {
    const DESC: &str = "consecutive Petersen coordinates at distance d_p";
    let d_p = i64::from(inst.d_p());
    for t in 0..ordering.len() - 1 {
        let actual = i64::from(
            inst.petersen_dist
                .get(ordering.entry(t).left, ordering.entry(t + 1).left),
        );
        if actual != d_p {
            return Condition::fail(
                "a",
                DESC,
                Witness {
                    a: t,
                    b: t + 1,
                    lhs: actual,
                    rhs: d_p,
                    note: format!(
                        "d_P(x at z_{t}, x at z_{}) = {actual}, expected {d_p}",
                        t + 1
                    ),
                },
            );
        }
    }
    Condition::pass("a", DESC)
}

fn check_condition_b(ordering: &VertexOrdering) -> Condition {
    const DESC: &str = "first and last tree coordinates at level 0";
    let last = ordering.len() - 1;
    let sum = i64::from(ordering.level_at(0)) + i64::from(ordering.level_at(last));
    if sum != 0 {
        return Condition::fail(
            "b",
            DESC,
            Witness {
                a: 0,
                b: last,
                lhs: sum,
                rhs: 0,
                note: format!("L(y at z_0) + L(y at z_{last}) = {sum}, expected 0"),
            },
        );
    }
    Condition::pass("b", DESC)
}

fn check_condition_branches(ordering: &VertexOrdering, inst: &ProductInstance) -> Condition {
    const DESC: &str =
        "consecutive tree coordinates in different branches (one center) / opposite branches (two centers)";
    let metrics = &inst.metrics;
    for t in 0..ordering.len() - 1 {
        let x = ordering.entry(t).right;
        let y = ordering.entry(t + 1).right;
        if !consecutive_branch_ok(metrics, x, y) {
            let (lhs, rhs, what) = if metrics.epsilon() == 1 {
                (i64::from(metrics.phi(x, y)), 0, "phi")
            } else {
                (i64::from(metrics.delta(x, y)), 1, "delta")
            };
            return Condition::fail(
                "c",
                DESC,
                Witness {
                    a: t,
                    b: t + 1,
                    lhs,
                    rhs,
                    note: format!(
                        "{what}(y at z_{t}, y at z_{}) = {lhs}, expected {rhs}",
                        t + 1
                    ),
                },
            );
        }
    }
    Condition::pass("c", DESC)
}

/// Equality-case conditions (a)-(d): (a) consecutive Petersen distance is
/// `d_p`; (b) end levels are zero; (c) branch placement of consecutive
/// tree coordinates; (d) the canonical labeling is a radio labeling.
pub fn check_equality_conditions(
    ordering: &VertexOrdering,
    inst: &ProductInstance,
) -> ConditionReport {
    let mut conditions = vec![
        check_condition_a(ordering, inst),
        check_condition_b(ordering),
        check_condition_branches(ordering, inst),
    ];
    const DESC_D: &str = "canonical labeling of the ordering is a radio labeling";
    let d = match canonical_labeling(ordering, &inst.metrics, inst.d_t(), inst.epsilon()) {
        Err(err) => Condition::fail(
            "d",
            DESC_D,
            Witness {
                a: 0,
                b: 0,
                lhs: 0,
                rhs: 0,
                note: format!("construction failed: {err}"),
            },
        ),
        Ok(labeling) => {
            let product_dist = inst.product_distances();
            let diam = i64::from(product_dist.diameter());
            let n = product_dist.vertex_count();
            let mut failure = None;
            'outer: for u in 0..n {
                for v in u + 1..n {
                    let required = diam + 1 - i64::from(product_dist.get(u, v));
                    let actual = (labeling.label(u) - labeling.label(v)).abs();
                    if actual < required {
                        failure = Some((u, v, required, actual));
                        break 'outer;
                    }
                }
            }
            match failure {
                None => Condition::pass("d", DESC_D),
                Some((u, v, required, actual)) => Condition::fail(
                    "d",
                    DESC_D,
                    Witness {
                        a: u,
                        b: v,
                        lhs: actual,
                        rhs: required,
                        note: format!(
                            "|f - f| = {actual} < required {required} for product vertices {u}, {v}"
                        ),
                    },
                ),
            }
        }
    };
    conditions.push(d);
    ConditionReport {
        kind: CheckKind::Equality,
        conditions,
    }
}

/// Exact-characterization conditions (a)-(c): (a), (b) as in the
/// equality case, and (c) every pair `a < b` satisfies
/// `d_T(y_a, y_b) + d_P(x_a, x_b) >= E(a, b)`.
///
/// All three holding is equivalent to the canonical labeling being an
/// optimal radio labeling with span equal to the lower bound.
pub fn check_main_conditions(ordering: &VertexOrdering, inst: &ProductInstance) -> ConditionReport {
    let mut conditions = vec![
        check_condition_a(ordering, inst),
        check_condition_b(ordering),
    ];
    const DESC_C: &str = "all pairs satisfy the E(a, b) distance inequality";
    let (d_t, d_p, eps) = (inst.d_t(), inst.d_p(), inst.epsilon());
    let n = ordering.len();
    let mut failure = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            let e = e_value_unchecked(ordering, d_t, d_p, eps, a, b);
            let za = ordering.entry(a);
            let zb = ordering.entry(b);
            let lhs = i64::from(inst.tree_dist.get(za.right, zb.right))
                + i64::from(inst.petersen_dist.get(za.left, zb.left));
            if lhs < e {
                failure = Some((a, b, lhs, e));
                break 'outer;
            }
        }
    }
    conditions.push(match failure {
        None => Condition::pass("c", DESC_C),
        Some((a, b, lhs, rhs)) => Condition::fail(
            "c",
            DESC_C,
            Witness {
                a,
                b,
                lhs,
                rhs,
                note: format!("d_T + d_P = {lhs} < E({a}, {b}) = {rhs}"),
            },
        ),
    });
    ConditionReport {
        kind: CheckKind::Exact,
        conditions,
    }
}

/// The optional parts (d)-(f) of the sufficient conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtraCondition {
    /// (d): of any two adjacent consecutive tree distances, the smaller is
    /// at most `(d_t + 1 - eps) / 2`.
    MinConsecutivePair,
    /// (e): every consecutive tree distance is at most `(d_t + 1 + eps) / 2`.
    EveryConsecutive,
    /// (f): level caps plus same-branch separation `b - a >= d_t + d_p`.
    LevelCapAndSeparation,
}

impl ExtraCondition {
    pub const ALL: [ExtraCondition; 3] = [
        ExtraCondition::MinConsecutivePair,
        ExtraCondition::EveryConsecutive,
        ExtraCondition::LevelCapAndSeparation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtraCondition::MinConsecutivePair => "d",
            ExtraCondition::EveryConsecutive => "e",
            ExtraCondition::LevelCapAndSeparation => "f",
        }
    }
}

/// Sufficient conditions (a)-(c) plus the requested subset of (d)-(f).
/// Fractional thresholds are compared exactly by doubling both sides.
///
/// (a) additionally requires, for `b >= a + 2`, the long-range bound
/// `d_P(x_a, x_b) >= d_p - (b - a - 1)` (one center) or
/// `d_p - (b - a - 2)` (two centers). Conditions (a)-(c) plus (d) or (f)
/// imply the exact characterization holds. Route (e) alone does not: it
/// cannot exclude a tree vertex recurring two positions apart, and such
/// orderings can fail the pairwise E-inequality (see the frozen
/// counterexample in tests/properties.rs).
pub fn check_sufficient_conditions(
    ordering: &VertexOrdering,
    inst: &ProductInstance,
    which: &[ExtraCondition],
) -> ConditionReport {
    let metrics = &inst.metrics;
    let (d_t, d_p, eps) = (
        i64::from(inst.d_t()),
        i64::from(inst.d_p()),
        i64::from(inst.epsilon()),
    );
    let n = ordering.len();

    // (a): consecutive distance plus the long-range lower bound.
    let mut cond_a = check_condition_a(ordering, inst);
    const DESC_A: &str = "consecutive Petersen distance d_p and long-range Petersen distance bound";
    cond_a.description = DESC_A;
    if cond_a.holds {
        let slack = if eps == 1 { 1 } else { 2 };
        // d_p - (b - a - slack) <= 0 is vacuous, so only a window matters.
        let window = (d_p + slack - 1).max(0) as usize;
        'outer_a: for a in 0..n {
            for b in (a + 2)..n.min(a + window + 1) {
                let rhs = d_p - ((b - a) as i64 - slack);
                if rhs <= 0 {
                    continue;
                }
                let lhs = i64::from(
                    inst.petersen_dist
                        .get(ordering.entry(a).left, ordering.entry(b).left),
                );
                if lhs < rhs {
                    cond_a = Condition::fail(
                        "a",
                        DESC_A,
                        Witness {
                            a,
                            b,
                            lhs,
                            rhs,
                            note: format!("long-range bound: d_P = {lhs} < {rhs}"),
                        },
                    );
                    break 'outer_a;
                }
            }
        }
    }

    let mut conditions = vec![
        cond_a,
        check_condition_b(ordering),
        check_condition_branches(ordering, inst),
    ];

    let selected: &[ExtraCondition] = if which.is_empty() {
        &ExtraCondition::ALL
    } else {
        which
    };

    for &extra in &ExtraCondition::ALL {
        if !selected.contains(&extra) {
            continue;
        }
        let cond = match extra {
            ExtraCondition::MinConsecutivePair => {
                const DESC: &str =
                    "smaller of adjacent consecutive tree distances at most (d_t + 1 - eps) / 2";
                let mut result = Condition::pass("d", DESC);
                for t in 0..n.saturating_sub(2) {
                    let d1 = i64::from(
                        inst.tree_dist
                            .get(ordering.entry(t).right, ordering.entry(t + 1).right),
                    );
                    let d2 = i64::from(
                        inst.tree_dist
                            .get(ordering.entry(t + 1).right, ordering.entry(t + 2).right),
                    );
                    let lhs = 2 * d1.min(d2);
                    let rhs = d_t + 1 - eps;
                    if lhs > rhs {
                        result = Condition::fail(
                            "d",
                            DESC,
                            Witness {
                                a: t,
                                b: t + 2,
                                lhs,
                                rhs,
                                note: format!(
                                    "2 * min(d_T at {t}..{}, d_T at {}..{}) = {lhs} > {rhs}",
                                    t + 1,
                                    t + 1,
                                    t + 2
                                ),
                            },
                        );
                        break;
                    }
                }
                result
            }
            ExtraCondition::EveryConsecutive => {
                const DESC: &str = "every consecutive tree distance at most (d_t + 1 + eps) / 2";
                let mut result = Condition::pass("e", DESC);
                for t in 0..n - 1 {
                    let lhs = 2 * i64::from(
                        inst.tree_dist
                            .get(ordering.entry(t).right, ordering.entry(t + 1).right),
                    );
                    let rhs = d_t + 1 + eps;
                    if lhs > rhs {
                        result = Condition::fail(
                            "e",
                            DESC,
                            Witness {
                                a: t,
                                b: t + 1,
                                lhs,
                                rhs,
                                note: format!("2 * d_T = {lhs} > {rhs}"),
                            },
                        );
                        break;
                    }
                }
                result
            }
            ExtraCondition::LevelCapAndSeparation => {
                const DESC: &str =
                    "level cap ((d_t + 1) / 2 or (d_t - 1) / 2) and same-branch separation b - a >= d_t + d_p";
                let cap = if eps == 1 { d_t + 1 } else { d_t - 1 };
                let mut result = Condition::pass("f", DESC);
                'level: for t in 0..n {
                    let lhs = 2 * i64::from(ordering.level_at(t));
                    if lhs > cap {
                        result = Condition::fail(
                            "f",
                            DESC,
                            Witness {
                                a: t,
                                b: t,
                                lhs,
                                rhs: cap,
                                note: format!("2 * L(y at z_{t}) = {lhs} > {cap}"),
                            },
                        );
                        break 'level;
                    }
                }
                if result.holds {
                    let separation = (d_t + d_p) as usize;
                    'sep: for a in 0..n {
                        let ya = ordering.entry(a).right;
                        if metrics.branch(ya).is_none() {
                            continue;
                        }
                        for b in (a + 1)..n.min(a + separation) {
                            let yb = ordering.entry(b).right;
                            let same_branch = metrics.branch(yb) == metrics.branch(ya)
                                && metrics.branch(yb).is_some();
                            if same_branch {
                                result = Condition::fail(
                                    "f",
                                    DESC,
                                    Witness {
                                        a,
                                        b,
                                        lhs: (b - a) as i64,
                                        rhs: d_t + d_p,
                                        note: format!(
                                            "same-branch pair at positions {a}, {b}: separation {} < {}",
                                            b - a,
                                            d_t + d_p
                                        ),
                                    },
                                );
                                break 'sep;
                            }
                        }
                    }
                }
                result
            }
        };
        conditions.push(cond);
    }

    ConditionReport {
        kind: CheckKind::Sufficient,
        conditions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_petersen_explicit, Graph};

    fn k2_setup() -> (Graph, DistanceMatrix) {
        let g = Graph::path(2);
        let d = all_pairs_distances(&g).unwrap();
        (g, d)
    }

    #[test]
    fn validate_k2() {
        let (g, d) = k2_setup();
        let bad = validate(&g, &d, &[0, 0]).unwrap();
        assert!(!bad.is_valid());
        assert_eq!(
            *bad.verdict(),
            Verdict::Invalid {
                u: 0,
                v: 1,
                required: 1,
                actual: 0
            }
        );
        let good = validate(&g, &d, &[0, 1]).unwrap();
        assert!(good.is_valid());
        assert_eq!(good.span(), 1);
    }

    #[test]
    fn validate_rejects_negative_labels() {
        let (g, d) = k2_setup();
        assert!(matches!(
            validate(&g, &d, &[0, -1]),
            Err(Error::NegativeLabel {
                vertex: 1,
                label: -1
            })
        ));
    }

    #[test]
    fn validate_is_shift_invariant() {
        let g = Graph::cycle(5);
        let d = all_pairs_distances(&g).unwrap();
        let labels = vec![0i64, 3, 6, 1, 4];
        let base = validate(&g, &d, &labels).unwrap();
        let shifted: Vec<i64> = labels.iter().map(|&l| l + 7).collect();
        let moved = validate(&g, &d, &shifted).unwrap();
        assert_eq!(base.is_valid(), moved.is_valid());
        assert_eq!(base.span(), moved.span());
    }

    #[test]
    fn lower_bound_examples() {
        let petersen = build_petersen_explicit();
        let report = lower_bound(&petersen, &Graph::star(6)).unwrap();
        assert_eq!(report.bound, 87);
        assert_eq!(report.epsilon, 1);
        assert_eq!(report.tree_diameter, 2);
        assert_eq!(report.total_level, 6);
        assert!(!report.degenerate_tree);

        for n in 3..=100usize {
            let report = lower_bound(&petersen, &Graph::star(n)).unwrap();
            assert_eq!(report.bound, 10 * n as i64 + 27, "star with {n} leaves");
        }

        // Two-vertex path: m=5, n=2, d_t=1, eps=0, L=0 gives 19.
        let report = lower_bound(&petersen, &Graph::path(2)).unwrap();
        assert_eq!(report.bound, 19);
        assert!(!report.degenerate_tree);

        // Order-1 tree is accepted but flagged as degenerate.
        let single = crate::graph::build_tree(&[], 1).unwrap();
        let report = lower_bound(&petersen, &single).unwrap();
        assert_eq!(report.bound, 9);
        assert!(report.degenerate_tree);
    }

    #[test]
    fn greedy_on_k2() {
        let (g, d) = k2_setup();
        let labeling = greedy_min_labeling(&g, &d, &[0, 1]).unwrap();
        assert!(labeling.is_valid());
        assert_eq!(labeling.span(), 1);
    }

    #[test]
    fn ordering_rejects_non_permutations() {
        let metrics = compute_metrics(&Graph::star(2)).unwrap();
        let dup = vec![ProductVertex::new(0, 0); 6];
        assert!(matches!(
            VertexOrdering::new(dup, 2, &metrics),
            Err(Error::NotAPermutation(_))
        ));
    }

    fn star6_instance() -> (VertexOrdering, ProductInstance) {
        let plan = crate::construction::build_ordering(6).unwrap();
        let inst = ProductInstance::new(build_petersen_explicit(), Graph::star(6)).unwrap();
        (plan.into_ordering(), inst)
    }

    #[test]
    fn canonical_labeling_gaps_on_constructed_ordering() {
        let (ordering, inst) = star6_instance();
        let labeling =
            canonical_labeling(&ordering, inst.metrics(), inst.d_t(), inst.epsilon()).unwrap();
        let at = |t: usize| labeling.label(ordering.flat_at(t));
        // Center start: 0 -> 2; leaf-to-leaf steps: +1.
        assert_eq!(at(0), 0);
        assert_eq!(at(1), 2);
        assert_eq!(at(2), 3);
        assert_eq!(at(6), 7);
        // Back into the center column (+2), then center-to-center steps: +3.
        assert_eq!(at(61), 63);
        assert_eq!(at(62), 66);
        assert_eq!(at(69), 87);
        assert_eq!(labeling.span(), 87);
    }

    #[test]
    fn canonical_labeling_rejects_negative_steps() {
        // Star with one long leg: center 0, leaves 1..3, path 0-4-5-6.
        // Levels reach 3 while d_t + eps = 5, so a repeated deep column
        // makes the step 5 - 3 - 3 = -1.
        let tree =
            crate::graph::build_tree(&[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6)], 7).unwrap();
        let petersen = crate::graph::build_generalized_petersen(3, 1).unwrap();
        let inst = ProductInstance::new(petersen, tree).unwrap();
        let deep = 6usize; // the level-3 vertex
        let mut rest: Vec<ProductVertex> = (0..6)
            .flat_map(|l| (0..7).map(move |r| ProductVertex::new(l, r)))
            .filter(|pv| !(pv.right == deep && pv.left <= 1))
            .collect();
        let mut entries = vec![ProductVertex::new(0, deep), ProductVertex::new(1, deep)];
        entries.append(&mut rest);
        let ordering = VertexOrdering::new(entries, 6, inst.metrics()).unwrap();
        let err =
            canonical_labeling(&ordering, inst.metrics(), inst.d_t(), inst.epsilon()).unwrap_err();
        assert!(
            matches!(
                err,
                Error::InfeasibleStep {
                    position: 0,
                    step: -1
                }
            ),
            "unexpected: {err:?}"
        );
    }

    #[test]
    fn e_value_frozen_examples() {
        let (ordering, inst) = star6_instance();
        let (d_t, d_p, eps) = (inst.d_t(), inst.d_p(), inst.epsilon());
        // Consecutive leaves: E = 1 + 1 - 3 + 5 = 4.
        assert_eq!(e_value(&ordering, d_t, d_p, eps, 3, 4).unwrap(), 4);
        // From the center start: E(0, 2) = 2.
        assert_eq!(e_value(&ordering, d_t, d_p, eps, 0, 2).unwrap(), 2);
        // Interior all-leaf stretches: E = 5 - (b - a).
        for (a, b) in [(1usize, 4usize), (2, 7), (5, 30), (1, 60)] {
            assert_eq!(
                e_value(&ordering, d_t, d_p, eps, a, b).unwrap(),
                5 - (b - a) as i64,
                "({a}, {b})"
            );
        }
    }

    #[test]
    fn equality_conditions_hold_and_break_as_expected() {
        let (ordering, inst) = star6_instance();
        let report = check_equality_conditions(&ordering, &inst);
        assert!(report.all_hold(), "{:?}", report.first_failure());

        // Swapping z_1 and z_2 breaks the consecutive-distance condition:
        // the new z_1 = (x_2, y_2) is adjacent to z_0 = (x_5, y_0).
        let mut swapped = ordering.entries().to_vec();
        swapped.swap(1, 2);
        let swapped = VertexOrdering::new(swapped, 10, inst.metrics()).unwrap();
        let report = check_equality_conditions(&swapped, &inst);
        let a = report.condition("a").unwrap();
        assert!(!a.holds);
        let witness = a.witness.as_ref().unwrap();
        assert_eq!((witness.a, witness.b), (0, 1));
        assert_eq!(witness.lhs, 1);

        // Rotating the ordering starts it at a leaf: condition (b) breaks.
        let mut rotated = ordering.entries().to_vec();
        rotated.rotate_left(1);
        let rotated = VertexOrdering::new(rotated, 10, inst.metrics()).unwrap();
        let report = check_equality_conditions(&rotated, &inst);
        assert!(!report.condition("b").unwrap().holds);
    }

    #[test]
    fn main_conditions_fail_for_adjacent_same_branch_same_column() {
        // Spider 0-1-2 plus legs 0-3, 0-4: vertices 1 and 2 share a branch.
        let tree = crate::graph::build_tree(&[(0, 1), (1, 2), (0, 3), (0, 4)], 5).unwrap();
        let petersen = crate::graph::build_generalized_petersen(3, 1).unwrap();
        let inst = ProductInstance::new(petersen, tree).unwrap();
        let mut entries = vec![ProductVertex::new(0, 1), ProductVertex::new(0, 2)];
        entries.extend(
            (0..6)
                .flat_map(|l| (0..5).map(move |r| ProductVertex::new(l, r)))
                .filter(|pv| !(pv.left == 0 && (pv.right == 1 || pv.right == 2))),
        );
        let ordering = VertexOrdering::new(entries, 6, inst.metrics()).unwrap();
        let report = check_main_conditions(&ordering, &inst);
        let c = report.condition("c").unwrap();
        assert!(!c.holds);
        let witness = c.witness.as_ref().unwrap();
        assert_eq!((witness.a, witness.b), (0, 1));
    }

    #[test]
    fn greedy_reproduces_canonical_on_constructed_ordering() {
        let (ordering, inst) = star6_instance();
        let product = inst.product_graph();
        let dist = inst.product_distances();
        let order = ordering.flat_indices();
        let greedy = greedy_min_labeling(&product, &dist, &order).unwrap();
        assert_eq!(greedy.span(), 87);
        let canonical =
            canonical_labeling(&ordering, inst.metrics(), inst.d_t(), inst.epsilon()).unwrap();
        assert_eq!(greedy.labels(), canonical.labels());

        let reversed: Vec<usize> = order.iter().rev().copied().collect();
        let labeling = greedy_min_labeling(&product, &dist, &reversed).unwrap();
        assert!(labeling.is_valid());
        assert!(labeling.span() >= 87);
    }

    #[test]
    fn e_value_bounds_checked() {
        let metrics = compute_metrics(&Graph::star(2)).unwrap();
        let entries = (0..2)
            .flat_map(|l| (0..3).map(move |r| ProductVertex::new(l, r)))
            .collect::<Vec<_>>();
        let ordering = VertexOrdering::new(entries, 2, &metrics).unwrap();
        assert!(e_value(&ordering, 2, 2, 1, 0, 6).is_err());
        assert!(e_value(&ordering, 2, 2, 1, 3, 3).is_err());
        assert!(e_value(&ordering, 2, 2, 1, 0, 5).is_ok());
    }
}
