//! Naive exhaustive oracles, deliberately independent of the library's
//! search and labeling code paths: they recompute gaps and labels from
//! the distance matrix alone.

use radiolabel_core::graph::{DistanceMatrix, Graph};

/// Minimum span over every vertex ordering, labeling each ordering
/// greedily from scratch. Exhaustive over orderings; exact because any
/// radio labeling sorted by label induces an ordering whose greedy
/// labeling is no worse.
pub fn min_span_over_all_orderings(g: &Graph, d: &DistanceMatrix) -> i64 {
    let n = g.vertex_count();
    let diam = i64::from(d.diameter());
    let mut used = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut labels: Vec<i64> = Vec::with_capacity(n);
    let mut best = i64::MAX;

    fn recurse(
        n: usize,
        diam: i64,
        d: &DistanceMatrix,
        used: &mut [bool],
        order: &mut Vec<usize>,
        labels: &mut Vec<i64>,
        best: &mut i64,
    ) {
        if order.len() == n {
            *best = (*best).min(*labels.last().unwrap());
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let mut label = 0i64;
            for (s, &u) in order.iter().enumerate() {
                label = label.max(labels[s] + diam + 1 - i64::from(d.get(u, v)));
            }
            used[v] = true;
            order.push(v);
            labels.push(label);
            recurse(n, diam, d, used, order, labels, best);
            labels.pop();
            order.pop();
            used[v] = false;
        }
    }

    recurse(n, diam, d, &mut used, &mut order, &mut labels, &mut best);
    best
}

/// Minimum span over all label vectors with every label in
/// `0..=(n-1)*diam` (a spacing that is always feasible), checked pair by
/// pair. Exponential; only for tiny graphs.
pub fn min_span_over_label_vectors(g: &Graph, d: &DistanceMatrix) -> i64 {
    let n = g.vertex_count();
    let diam = i64::from(d.diameter());
    let ub = (n as i64 - 1) * diam;
    let mut labels = vec![0i64; n];
    let mut best = i64::MAX;

    fn recurse(
        v: usize,
        n: usize,
        ub: i64,
        diam: i64,
        d: &DistanceMatrix,
        labels: &mut [i64],
        best: &mut i64,
    ) {
        if v == n {
            let max = labels.iter().copied().max().unwrap();
            let min = labels.iter().copied().min().unwrap();
            *best = (*best).min(max - min);
            return;
        }
        'candidate: for label in 0..=ub {
            for (u, &assigned) in labels.iter().enumerate().take(v) {
                if (assigned - label).abs() < diam + 1 - i64::from(d.get(u, v)) {
                    continue 'candidate;
                }
            }
            labels[v] = label;
            recurse(v + 1, n, ub, diam, d, labels, best);
        }
    }

    recurse(0, n, ub, diam, d, &mut labels, &mut best);
    best
}
