//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime. Run with `cargo test --test acceptance -- --nocapture`
//! to see every line.

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use radiolabel_core::construction::{
    build_ordering, construct_optimal, render_table_csv, ConstructionPath,
};
use radiolabel_core::graph::{
    all_pairs_distances, build_petersen_explicit, cartesian_product, DistanceMatrix, Graph,
};
use radiolabel_core::radio::{
    canonical_labeling, check_equality_conditions, check_main_conditions, lower_bound, validate,
    ProductInstance, VertexOrdering,
};
use radiolabel_core::search::{exact_radio_number, SearchBudget};
use radiolabel_core::tree::compute_metrics;

mod oracles;

fn finish(criterion: u32, what: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: {what} ... PASS ({elapsed:.2?})");
    assert!(
        elapsed < limit,
        "criterion {criterion} exceeded its {limit:?} budget: {elapsed:?}"
    );
}

/// Criterion 1: the constructed labeling of the Petersen-star product with
/// six leaves validates at span 87, which equals the closed-form bound.
#[test]
fn criterion_1_petersen_star6_span_87() {
    let started = Instant::now();
    let outcome = construct_optimal(6).expect("construction succeeds");
    assert!(outcome.labeling.is_valid());
    assert_eq!(outcome.labeling.span(), 87);
    let bound = lower_bound(&build_petersen_explicit(), &Graph::star(6)).unwrap();
    assert_eq!(bound.bound, 87);
    assert_eq!(outcome.labeling.span(), bound.bound);
    finish(
        1,
        "construct(6) valid, span 87 = lower bound",
        started,
        Duration::from_secs(1),
    );
}

/// Criterion 2: the emitted grid reproduces the shipped golden table
/// byte for byte.
#[test]
fn criterion_2_table_bit_exact() {
    let started = Instant::now();
    let outcome = construct_optimal(6).expect("construction succeeds");
    let rendered = render_table_csv(&outcome);
    let golden = include_str!("../../../golden/table_n6.csv");
    assert_eq!(rendered, golden, "rendered grid differs from golden table");
    finish(
        2,
        "n=6 grid matches golden table byte-for-byte",
        started,
        Duration::from_secs(1),
    );
}

/// Criterion 3: for every n in [6, 40] the construction validates with
/// span 10n + 27 equal to the bound, and the exact-characterization
/// conditions certify it.
#[test]
fn criterion_3_family_sweep() {
    let started = Instant::now();
    for n in 6..=40usize {
        let outcome = construct_optimal(n).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert_eq!(outcome.path, ConstructionPath::GeneralScheme, "n={n}");
        assert!(outcome.labeling.is_valid(), "n={n}");
        let target = 10 * n as i64 + 27;
        assert_eq!(outcome.labeling.span(), target, "n={n}");
        let bound = lower_bound(&build_petersen_explicit(), &Graph::star(n)).unwrap();
        assert_eq!(bound.bound, target, "n={n}");
        let inst = ProductInstance::new(build_petersen_explicit(), Graph::star(n)).unwrap();
        let report = check_main_conditions(&outcome.ordering, &inst);
        assert!(report.all_hold(), "n={n}: {:?}", report.first_failure());
        let equality = check_equality_conditions(&outcome.ordering, &inst);
        assert!(equality.all_hold(), "n={n}: {:?}", equality.first_failure());
    }
    finish(
        3,
        "n in [6, 40]: valid, span 10n+27 = bound, both condition families certify",
        started,
        Duration::from_secs(30),
    );
}

/// Criterion 4: small cases n in {3, 4, 5} produce a validated labeling
/// with span exactly 10n + 27 (general scheme or seeded fallback).
#[test]
fn criterion_4_small_n_closure() {
    let started = Instant::now();
    for n in 3..=5usize {
        let outcome = construct_optimal(n).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert!(outcome.labeling.is_valid(), "n={n}");
        assert_eq!(outcome.labeling.span(), 10 * n as i64 + 27, "n={n}");
        println!("criterion 4: n={n} closed via {}", outcome.path);
    }
    finish(
        4,
        "n in {3, 4, 5} reach span 10n+27",
        started,
        Duration::from_secs(60),
    );
}

/// Criterion 5: the level/delta/phi distance identity and the
/// weight-center component facts hold on 200 random trees of order <= 60.
#[test]
fn criterion_5_tree_metric_suite() {
    let started = Instant::now();
    let mut violations = 0usize;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize * 7919) % 59;
        let tree = Graph::random_tree(n, seed + 50_000);
        let metrics = compute_metrics(&tree).unwrap();
        let dist = all_pairs_distances(&tree).unwrap();
        for x in 0..n {
            for y in 0..n {
                let predicted = i64::from(metrics.level(x))
                    + i64::from(metrics.level(y))
                    + i64::from(metrics.delta(x, y))
                    - 2 * i64::from(metrics.phi(x, y));
                if predicted != i64::from(dist.get(x, y)) {
                    violations += 1;
                }
            }
        }
        for &w in metrics.weight_centers() {
            let mut seen = vec![false; n];
            seen[w] = true;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut stack = vec![start];
                seen[start] = true;
                let mut size = 0usize;
                while let Some(u) = stack.pop() {
                    size += 1;
                    for &v in tree.neighbors(u) {
                        if !seen[v] {
                            seen[v] = true;
                            stack.push(v);
                        }
                    }
                }
                if 2 * size > n {
                    violations += 1;
                }
            }
        }
        if let [w, w2] = *metrics.weight_centers() {
            if !tree.has_edge(w, w2) {
                violations += 1;
            }
            let side_w = (0..n)
                .filter(|&v| metrics.side(v) == metrics.side(w))
                .count();
            if 2 * side_w != n {
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0);
    finish(
        5,
        "distance identity + weight-center facts on 200 random trees",
        started,
        Duration::from_secs(10),
    );
}

/// Criterion 6: product distances compose additively, verified against
/// BFS on 50 random factor pairs of up to 12 vertices each.
#[test]
fn criterion_6_product_distance_suite() {
    let started = Instant::now();
    let mut violations = 0usize;
    for seed in 0..50u64 {
        let nl = 2 + (seed as usize * 13) % 11;
        let nr = 2 + (seed as usize * 17) % 11;
        let g = Graph::random_connected(nl, seed as usize % 4, seed + 60_000);
        let h = Graph::random_connected(nr, seed as usize % 3, seed + 61_000);
        let dg = all_pairs_distances(&g).unwrap();
        let dh = all_pairs_distances(&h).unwrap();
        let product = cartesian_product(&g, &h);
        let bfs = all_pairs_distances(&product).unwrap();
        let composed = DistanceMatrix::product_of(&dg, &dh);
        for u in 0..product.vertex_count() {
            for v in 0..product.vertex_count() {
                if composed.get(u, v) != bfs.get(u, v) {
                    violations += 1;
                }
            }
        }
        if bfs.diameter() != dg.diameter() + dh.diameter() {
            violations += 1;
        }
    }
    assert_eq!(violations, 0);
    finish(
        6,
        "additive product distances match BFS on 50 random factor pairs",
        started,
        Duration::from_secs(10),
    );
}

/// Criterion 7: branch-and-bound agrees with naive exhaustive enumeration
/// over the small-graph corpus, proving optimality everywhere.
#[test]
fn criterion_7_oracle_equivalence() {
    let started = Instant::now();

    // Petersen with one and two vertices removed stays connected.
    let petersen_minus = |drop: &[usize]| -> Graph {
        let p = build_petersen_explicit();
        let keep: Vec<usize> = (0..10).filter(|v| !drop.contains(v)).collect();
        let index_of = |v: usize| keep.iter().position(|&u| u == v).unwrap();
        let edges: Vec<(usize, usize)> = p
            .edges()
            .filter(|&(u, v)| !drop.contains(&u) && !drop.contains(&v))
            .map(|(u, v)| (index_of(u), index_of(v)))
            .collect();
        Graph::from_edges(keep.len(), &edges).unwrap()
    };

    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in 2..=8 {
        corpus.push((format!("path{n}"), Graph::path(n)));
    }
    for n in 3..=8 {
        corpus.push((format!("cycle{n}"), Graph::cycle(n)));
    }
    for leaves in 2..=7 {
        corpus.push((format!("star{leaves}"), Graph::star(leaves)));
    }
    corpus.push(("k4".into(), Graph::complete(4)));
    corpus.push(("petersen-minus-1".into(), petersen_minus(&[9])));
    corpus.push(("petersen-minus-2".into(), petersen_minus(&[8, 9])));

    for (name, g) in &corpus {
        let d = all_pairs_distances(g).unwrap();
        let exact = exact_radio_number(g, &d, &SearchBudget::default());
        assert!(exact.proven_optimal, "{name}: optimality not proven");
        let oracle = oracles::min_span_over_all_orderings(g, &d);
        assert_eq!(exact.best.span(), oracle, "{name}");
    }

    // The named tiny cases, additionally against the label-vector oracle.
    for (name, g, expected) in [
        ("k2", Graph::path(2), 1),
        ("path3", Graph::path(3), 3),
        ("cycle4", Graph::cycle(4), 4),
    ] {
        let d = all_pairs_distances(&g).unwrap();
        assert_eq!(
            oracles::min_span_over_label_vectors(&g, &d),
            expected,
            "{name}"
        );
        let exact = exact_radio_number(&g, &d, &SearchBudget::default());
        assert_eq!(exact.best.span(), expected, "{name}");
    }

    finish(
        7,
        "exact solver matches exhaustive enumeration on the small corpus",
        started,
        Duration::from_secs(60),
    );
}

/// Criterion 8: over 100 random single-swap mutations of the n=6
/// constructed ordering, the validator's verdict on the canonical
/// labeling and the all-pairs E-inequality verdict never disagree.
#[test]
fn criterion_8_checker_falsifiability() {
    let started = Instant::now();
    let base = build_ordering(6).unwrap().into_ordering();
    let inst = ProductInstance::new(build_petersen_explicit(), Graph::star(6)).unwrap();
    let product = inst.product_graph();
    let bfs = all_pairs_distances(&product).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(0xC81);
    let mut disagreements = 0usize;
    let mut still_passing = 0usize;
    for _ in 0..100 {
        let mut entries = base.entries().to_vec();
        let i = rng.gen_range(0..entries.len());
        let j = rng.gen_range(0..entries.len());
        entries.swap(i, j);
        let ordering = VertexOrdering::new(entries, 10, inst.metrics()).unwrap();
        let report = check_main_conditions(&ordering, &inst);
        let e_check = report.condition("c").unwrap();
        let validator_verdict =
            match canonical_labeling(&ordering, inst.metrics(), inst.d_t(), inst.epsilon()) {
                Err(_) => false,
                Ok(labeling) => validate(&product, &bfs, labeling.labels())
                    .unwrap()
                    .is_valid(),
            };
        if validator_verdict != e_check.holds {
            disagreements += 1;
        }
        if !e_check.holds {
            assert!(e_check.witness.is_some(), "failure must carry a witness");
        } else {
            still_passing += 1;
        }
    }
    assert_eq!(disagreements, 0);
    println!(
        "criterion 8: {still_passing}/100 mutations kept the E-check passing; 0 disagreements"
    );
    finish(
        8,
        "validator and E-inequality checker agree on 100 mutations",
        started,
        Duration::from_secs(30),
    );
}
