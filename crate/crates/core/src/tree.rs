//! Weight centers, levels, branches and the pairwise tree quantities
//! (phi, delta, epsilon) that every labeling bound is built from.
//!
//! A weight center of a tree minimizes the sum of distances to all
//! vertices; every tree has one or two, and two centers are always
//! adjacent. The level of a vertex is its distance to the nearest center,
//! and the total level is the sum of levels over all vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, VertexId};

/// How two distinct tree vertices relate through the center-rooted view.
///
/// `Different`: branches hanging off the same weight center (or one of the
/// two is a center). `Opposite`: across the two-center edge. `Same`: the
/// same branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchRelation {
    Same,
    Different,
    Opposite,
}

/// Per-vertex level, branch and side data for one tree, immutable after
/// [`compute_metrics`].
#[derive(Debug, Clone)]
pub struct TreeMetrics {
    order: usize,
    centers: Vec<VertexId>,
    epsilon: u32,
    level: Vec<u32>,
    /// Branch root (the center neighbor whose subtree contains the vertex);
    /// `None` for the centers themselves.
    branch: Vec<Option<VertexId>>,
    /// Component tag of `T - ww'` when there are two centers; all zero
    /// otherwise.
    side: Vec<u8>,
    /// BFS parent toward the nearest center; `None` for centers.
    parent: Vec<Option<VertexId>>,
    total_level: u64,
    diameter: u32,
}

/// Sum of distances from `u` to every vertex of the graph.
pub fn vertex_weight(tree: &Graph, u: VertexId) -> u64 {
    let mut dist = vec![u32::MAX; tree.vertex_count()];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    let mut total = 0u64;
    while let Some(v) = queue.pop_front() {
        total += u64::from(dist[v]);
        for &w in tree.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    total
}

/// BFS farthest vertex from `start`, as (vertex, distance).
fn farthest(tree: &Graph, start: VertexId) -> (VertexId, u32) {
    let mut dist = vec![u32::MAX; tree.vertex_count()];
    let mut queue = VecDeque::from([start]);
    dist[start] = 0;
    let mut best = (start, 0);
    while let Some(v) = queue.pop_front() {
        if dist[v] > best.1 {
            best = (v, dist[v]);
        }
        for &w in tree.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    best
}

/// Compute weight centers, levels, branches and sides for a tree.
///
/// Weights are computed by the subtree-size rerooting identity
/// `w(child) = w(parent) + n - 2 * size(child)`, so the whole pass is
/// linear. Two centers are guaranteed adjacent; more than two cannot
/// occur, and this is asserted rather than assumed.
pub fn compute_metrics(tree: &Graph) -> Result<TreeMetrics> {
    if tree.kind() != GraphKind::Tree {
        return Err(Error::InvalidParameter(
            "compute_metrics requires a tree-kind graph".into(),
        ));
    }
    let n = tree.vertex_count();

    // BFS order from vertex 0 gives parents for the rerooting pass.
    let mut bfs_parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    bfs_parent[0] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if bfs_parent[w] == usize::MAX {
                bfs_parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    let mut size = vec![1u64; n];
    let mut depth_sum = 0u64;
    let mut depth = vec![0u64; n];
    for &v in order.iter().skip(1) {
        depth[v] = depth[bfs_parent[v]] + 1;
        depth_sum += depth[v];
    }
    for &v in order.iter().rev() {
        if v != 0 {
            size[bfs_parent[v]] += size[v];
        }
    }
    let mut weight = vec![0u64; n];
    weight[0] = depth_sum;
    for &v in order.iter().skip(1) {
        weight[v] = weight[bfs_parent[v]] + n as u64 - 2 * size[v];
    }

    let min_weight = *weight.iter().min().expect("nonempty tree");
    let mut centers: Vec<VertexId> = (0..n).filter(|&v| weight[v] == min_weight).collect();
    centers.sort_unstable();
    assert!(
        centers.len() <= 2,
        "a tree has at most two weight centers, found {}",
        centers.len()
    );
    if centers.len() == 2 {
        assert!(
            tree.has_edge(centers[0], centers[1]),
            "two weight centers must be adjacent"
        );
    }
    let epsilon = if centers.len() == 1 { 1 } else { 0 };

    // Multi-source BFS from the centers: levels, parents toward the
    // nearest center, sides (component of T - ww'), and branch roots.
    let mut level = vec![u32::MAX; n];
    let mut parent = vec![None; n];
    let mut side = vec![0u8; n];
    let mut branch = vec![None; n];
    let mut queue = VecDeque::new();
    for (i, &c) in centers.iter().enumerate() {
        level[c] = 0;
        side[c] = i as u8;
        queue.push_back(c);
    }
    let mut total_level = 0u64;
    while let Some(v) = queue.pop_front() {
        total_level += u64::from(level[v]);
        for &w in tree.neighbors(v) {
            if level[w] == u32::MAX {
                // The opposite center is a neighbor but never a child here.
                if level[v] == 0 && centers.len() == 2 && centers.contains(&w) {
                    continue;
                }
                level[w] = level[v] + 1;
                parent[w] = Some(v);
                side[w] = side[v];
                branch[w] = if level[w] == 1 { Some(w) } else { branch[v] };
                queue.push_back(w);
            }
        }
    }

    let diameter = if n == 1 {
        0
    } else {
        let (far, _) = farthest(tree, 0);
        farthest(tree, far).1
    };

    Ok(TreeMetrics {
        order: n,
        centers,
        epsilon,
        level,
        branch,
        side,
        parent,
        total_level,
        diameter,
    })
}

impl TreeMetrics {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The one or two weight centers, sorted by index.
    pub fn weight_centers(&self) -> &[VertexId] {
        &self.centers
    }

    /// 1 if there is a single weight center, 0 if there are two.
    pub fn epsilon(&self) -> u32 {
        self.epsilon
    }

    pub fn is_center(&self, v: VertexId) -> bool {
        self.centers.contains(&v)
    }

    /// Distance from `v` to the nearest weight center.
    pub fn level(&self, v: VertexId) -> u32 {
        self.level[v]
    }

    /// Sum of levels over all vertices.
    pub fn total_level(&self) -> u64 {
        self.total_level
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Branch root of `v` (`None` for centers).
    pub fn branch(&self, v: VertexId) -> Option<VertexId> {
        self.branch[v]
    }

    /// Component tag of `v` in `T - ww'` (always 0 with one center).
    pub fn side(&self, v: VertexId) -> u8 {
        self.side[v]
    }

    /// Max level among common ancestors of `x` and `y` in the
    /// center-rooted view; 0 when they have none (opposite sides).
    ///
    /// With two centers, ancestors are confined to a vertex's own side,
    /// so opposite-side pairs get 0 by construction.
    pub fn phi(&self, x: VertexId, y: VertexId) -> u32 {
        if self.side[x] != self.side[y] {
            return 0;
        }
        let (mut a, mut b) = (x, y);
        while self.level[a] > self.level[b] {
            a = self.parent[a].expect("positive level has a parent");
        }
        while self.level[b] > self.level[a] {
            b = self.parent[b].expect("positive level has a parent");
        }
        while a != b {
            a = self.parent[a].expect("walk meets at the side's center");
            b = self.parent[b].expect("walk meets at the side's center");
        }
        self.level[a]
    }

    /// 1 iff the tree has two centers and `x`, `y` lie on opposite sides
    /// of the center edge.
    pub fn delta(&self, x: VertexId, y: VertexId) -> u32 {
        u32::from(self.centers.len() == 2 && self.side[x] != self.side[y])
    }

    /// Classify a pair of distinct vertices as same / different / opposite
    /// branches. A center paired with anything on its side counts as
    /// `Different`.
    pub fn branch_relation(&self, x: VertexId, y: VertexId) -> BranchRelation {
        assert_ne!(x, y, "branch_relation is defined for distinct vertices");
        if self.centers.len() == 2 && self.side[x] != self.side[y] {
            return BranchRelation::Opposite;
        }
        match (self.branch[x], self.branch[y]) {
            (None, _) | (_, None) => BranchRelation::Different,
            (Some(bx), Some(by)) if bx == by => BranchRelation::Same,
            _ => BranchRelation::Different,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_tree};

    #[test]
    fn star_weights() {
        let star = Graph::star(6);
        assert_eq!(vertex_weight(&star, 0), 6);
        assert_eq!(vertex_weight(&star, 1), 11);
    }

    #[test]
    fn path_endpoint_weight() {
        let path = Graph::path(4);
        assert_eq!(vertex_weight(&path, 0), 6);
    }

    #[test]
    fn star_metrics() {
        let m = compute_metrics(&Graph::star(6)).unwrap();
        assert_eq!(m.weight_centers(), &[0]);
        assert_eq!(m.epsilon(), 1);
        assert_eq!(m.total_level(), 6);
        assert_eq!(m.diameter(), 2);
        assert_eq!(m.level(0), 0);
        assert!((1..=6).all(|v| m.level(v) == 1));
    }

    #[test]
    fn path4_metrics() {
        let m = compute_metrics(&Graph::path(4)).unwrap();
        assert_eq!(m.weight_centers(), &[1, 2]);
        assert_eq!(m.epsilon(), 0);
        assert_eq!(
            (0..4).map(|v| m.level(v)).collect::<Vec<_>>(),
            vec![1, 0, 0, 1]
        );
        assert_eq!(m.total_level(), 2);
        assert_ne!(m.side(0), m.side(3));
        assert_eq!(m.side(0), m.side(1));
    }

    #[test]
    fn single_vertex_metrics() {
        let m = compute_metrics(&build_tree(&[], 1).unwrap()).unwrap();
        assert_eq!(m.weight_centers(), &[0]);
        assert_eq!(m.epsilon(), 1);
        assert_eq!(m.total_level(), 0);
        assert_eq!(m.diameter(), 0);
    }

    #[test]
    fn phi_examples() {
        let m = compute_metrics(&Graph::star(6)).unwrap();
        assert_eq!(m.phi(1, 2), 0);
        assert_eq!(m.phi(3, 3), m.level(3));

        // Spider with one leg 0-1-2: phi(1, 2) = 1 (1 is the level-1
        // ancestor of 2). Extra legs keep the center at 0.
        let spider = build_tree(&[(0, 1), (1, 2), (0, 3), (0, 4)], 5).unwrap();
        let m = compute_metrics(&spider).unwrap();
        assert_eq!(m.weight_centers(), &[0]);
        assert_eq!(m.phi(1, 2), 1);
        assert_eq!(m.phi(2, 3), 0);
        assert_eq!(m.phi(2, 2), 2);
    }

    #[test]
    fn delta_examples() {
        let star = compute_metrics(&Graph::star(6)).unwrap();
        assert_eq!(star.delta(1, 5), 0);
        assert_eq!(star.delta(0, 1), 0);

        let path = compute_metrics(&Graph::path(4)).unwrap();
        assert_eq!(path.delta(0, 3), 1);
        assert_eq!(path.delta(0, 1), 0);
    }

    #[test]
    fn branch_relation_examples() {
        let star = compute_metrics(&Graph::star(6)).unwrap();
        assert_eq!(star.branch_relation(1, 2), BranchRelation::Different);
        assert_eq!(star.branch_relation(1, 0), BranchRelation::Different);

        let path = compute_metrics(&Graph::path(4)).unwrap();
        assert_eq!(path.branch_relation(0, 3), BranchRelation::Opposite);
        assert_eq!(path.branch_relation(0, 1), BranchRelation::Different);

        let spider = build_tree(&[(0, 1), (1, 2), (0, 3), (0, 4)], 5).unwrap();
        let m = compute_metrics(&spider).unwrap();
        assert_eq!(m.branch_relation(1, 2), BranchRelation::Same);
    }

    #[test]
    fn distance_identity_small() {
        let tree = build_tree(&[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)], 6).unwrap();
        let m = compute_metrics(&tree).unwrap();
        let d = all_pairs_distances(&tree).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let predicted =
                    i64::from(m.level(x)) + i64::from(m.level(y)) + i64::from(m.delta(x, y))
                        - 2 * i64::from(m.phi(x, y));
                assert_eq!(predicted, i64::from(d.get(x, y)), "pair ({x}, {y})");
            }
        }
    }
}
