//! Graph construction (generalized Petersen graphs, trees, Cartesian
//! products) and exact BFS distances.
//!
//! Vertices are dense 0-based indices. The 1-based `x_i`/`y_j` names used
//! in rendered output are a presentation layer only (`x_i` is index `i-1`).

use std::collections::VecDeque;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// What a [`Graph`] was built as. Several operations require a specific kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Generic,
    Tree,
    /// `P_{m,k}`: outer m-cycle, spokes, inner circulant with step k.
    GeneralizedPetersen {
        m: usize,
        k: usize,
    },
    /// Cartesian product; `vertex_count = left_count * right_count`.
    Product {
        left_count: usize,
        right_count: usize,
    },
}

/// Undirected simple graph as an indexed adjacency structure.
///
/// Adjacency lists are sorted and deduplicated; the symmetry, no-self-loop
/// and no-duplicate invariants hold for every constructed graph.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    kind: GraphKind,
    deduplicated_chords: bool,
}

impl Graph {
    fn empty(n: usize, kind: GraphKind) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            kind,
            deduplicated_chords: false,
        }
    }

    /// Insert an undirected edge, silently ignoring self-loops and duplicates.
    /// Returns true if the edge was new.
    fn insert_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if u == v || self.adjacency[u].contains(&v) {
            return false;
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        true
    }

    fn finish(mut self) -> Self {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// True when a degenerate generalized Petersen parameter (coinciding
    /// inner chords, e.g. `m = 2k`) forced edge deduplication.
    pub fn deduplicated_chords(&self) -> bool {
        self.deduplicated_chords
    }

    /// All edges `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Build a generic graph from an explicit edge list. Rejects self-loops
    /// and duplicate edges rather than deduplicating.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = Graph::empty(n, GraphKind::Generic);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if !g.insert_edge(u, v) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({u}, {v})"
                )));
            }
        }
        Ok(g.finish())
    }

    /// Path on `n` vertices, edges `i -- i+1`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(
            n,
            if n >= 1 {
                GraphKind::Tree
            } else {
                GraphKind::Generic
            },
        );
        for i in 1..n {
            g.insert_edge(i - 1, i);
        }
        g.finish()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n, GraphKind::Generic);
        for i in 0..n {
            g.insert_edge(i, (i + 1) % n);
        }
        g.finish()
    }

    /// Star `K_{1,n}`: center at index 0 (`y_0`), leaves `1..=n` (`y_j`).
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1, GraphKind::Tree);
        for j in 1..=leaves {
            g.insert_edge(0, j);
        }
        g.finish()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n, GraphKind::Generic);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g.finish()
    }

    /// Uniform random labeled tree (random parent attachment), deterministic
    /// in `seed`.
    pub fn random_tree(n: usize, seed: u64) -> Graph {
        assert!(n >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n, GraphKind::Tree);
        for v in 1..n {
            let parent = rng.gen_range(0..v);
            g.insert_edge(parent, v);
        }
        g.finish()
    }

    /// Random connected graph: a random tree plus up to `extra_edges`
    /// additional random edges. Deterministic in `seed`.
    pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Graph {
        assert!(n >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n, GraphKind::Generic);
        for v in 1..n {
            let parent = rng.gen_range(0..v);
            g.insert_edge(parent, v);
        }
        let mut added = 0;
        let mut attempts = 0;
        while added < extra_edges && attempts < 20 * extra_edges + 100 {
            attempts += 1;
            if n < 2 {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if g.insert_edge(u, v) {
                added += 1;
            }
        }
        g.finish()
    }
}

/// Build the generalized Petersen graph `P_{m,k}` on `2m` vertices.
///
/// Outer vertices `u_0..u_{m-1}` are indices `0..m-1`, inner vertices
/// `v_0..v_{m-1}` are indices `m..2m-1`; edges are `u_i u_{i+1}`,
/// `u_i v_i` and `v_i v_{i+k}` with indices mod `m`. Degenerate parameters
/// with coinciding inner chords (e.g. `m = 2k`) are deduplicated to a
/// simple graph and flagged via [`Graph::deduplicated_chords`].
pub fn build_generalized_petersen(m: usize, k: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "generalized Petersen requires m >= 3, got m={m}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "generalized Petersen requires k >= 1, got k={k}"
        )));
    }
    let mut g = Graph::empty(2 * m, GraphKind::GeneralizedPetersen { m, k });
    let mut deduped = false;
    for i in 0..m {
        if !g.insert_edge(i, (i + 1) % m) {
            deduped = true;
        }
        g.insert_edge(i, m + i);
        if !g.insert_edge(m + i, m + (i + k) % m) {
            deduped = true;
        }
    }
    g.deduplicated_chords = deduped;
    Ok(g.finish())
}

/// The Petersen graph `P_{5,2}` under the explicit `x_1..x_10` naming
/// (stored 0-based, `x_i` at index `i-1`) used by the ordering
/// construction machinery: edges `x_i x_{i+2}` for i in {1,2,3,4,6,7,8},
/// `x_j x_{j+3}` for j in {1,2,5,6,7}, plus `x_1 x_10`, `x_2 x_7`,
/// `x_3 x_9`.
pub fn build_petersen_explicit() -> Graph {
    let mut g = Graph::empty(10, GraphKind::GeneralizedPetersen { m: 5, k: 2 });
    for i in [1usize, 2, 3, 4, 6, 7, 8] {
        g.insert_edge(i - 1, i + 2 - 1);
    }
    for j in [1usize, 2, 5, 6, 7] {
        g.insert_edge(j - 1, j + 3 - 1);
    }
    g.insert_edge(0, 9);
    g.insert_edge(1, 6);
    g.insert_edge(2, 8);
    g.finish()
}

/// Build a tree from an edge list, validating that it really is one.
pub fn build_tree(edges: &[(VertexId, VertexId)], n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidTree("a tree has at least one vertex".into()));
    }
    let mut g = Graph::empty(n, GraphKind::Tree);
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::InvalidTree(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidTree(format!("self-loop at vertex {u}")));
        }
        if !g.insert_edge(u, v) {
            return Err(Error::InvalidTree(format!("duplicate edge ({u}, {v})")));
        }
    }
    if edges.len() > n - 1 {
        return Err(Error::InvalidTree(format!(
            "contains a cycle: {} edges on {} vertices (a tree has {})",
            edges.len(),
            n,
            n - 1
        )));
    }
    if edges.len() < n - 1 {
        return Err(Error::InvalidTree(format!(
            "disconnected: {} edges on {} vertices (a tree has {})",
            edges.len(),
            n,
            n - 1
        )));
    }
    // n-1 edges and no duplicates: connected iff acyclic; BFS decides both.
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &g.adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached != n {
        let missing = seen.iter().position(|&s| !s).unwrap();
        return Err(Error::InvalidTree(format!(
            "disconnected: vertex {missing} unreachable from vertex 0"
        )));
    }
    Ok(g.finish())
}

/// A vertex of a Cartesian product, as the pair of factor indices.
///
/// The flat index is `left * |V(right)| + right`, which fixes a
/// reproducible order on `V(G) x V(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductVertex {
    pub left: VertexId,
    pub right: VertexId,
}

impl ProductVertex {
    pub fn new(left: VertexId, right: VertexId) -> Self {
        ProductVertex { left, right }
    }

    pub fn flat_index(&self, right_count: usize) -> usize {
        self.left * right_count + self.right
    }

    pub fn from_flat(flat: usize, right_count: usize) -> Self {
        ProductVertex {
            left: flat / right_count,
            right: flat % right_count,
        }
    }
}

/// Cartesian product `G □ H`: `(a,b) ~ (a',b')` iff `a ~ a'` and `b = b'`,
/// or `b ~ b'` and `a = a'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (nl, nr) = (g.vertex_count(), h.vertex_count());
    assert!(nl > 0 && nr > 0, "cartesian product of empty graph");
    let mut p = Graph::empty(
        nl * nr,
        GraphKind::Product {
            left_count: nl,
            right_count: nr,
        },
    );
    for a in 0..nl {
        for b in 0..nr {
            let from = a * nr + b;
            for &a2 in g.neighbors(a) {
                p.insert_edge(from, a2 * nr + b);
            }
            for &b2 in h.neighbors(b) {
                p.insert_edge(from, a * nr + b2);
            }
        }
    }
    p.finish()
}

/// All-pairs shortest-path distances in graph hops, immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Largest distance from `v` to any vertex.
    pub fn eccentricity(&self, v: VertexId) -> u32 {
        self.dist[v * self.n..(v + 1) * self.n]
            .iter()
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Distance matrix of `G □ H` composed additively from the factor
    /// matrices; equals BFS on the product graph.
    pub fn product_of(dg: &DistanceMatrix, dh: &DistanceMatrix) -> DistanceMatrix {
        let (nl, nr) = (dg.n, dh.n);
        let n = nl * nr;
        let mut dist = vec![0u32; n * n];
        for a in 0..nl {
            for b in 0..nr {
                let u = a * nr + b;
                for a2 in 0..nl {
                    for b2 in 0..nr {
                        dist[u * n + a2 * nr + b2] = dg.get(a, a2) + dh.get(b, b2);
                    }
                }
            }
        }
        DistanceMatrix {
            n,
            dist,
            diameter: dg.diameter + dh.diameter,
        }
    }
}

/// BFS-exact all-pairs distances. Errors if the graph is disconnected.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n * n];
    let mut diameter = 0;
    let mut queue = VecDeque::new();
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        for (v, &d) in row.iter().enumerate() {
            if d == u32::MAX {
                return Err(Error::Disconnected {
                    from: src,
                    unreachable: v,
                });
            }
            diameter = diameter.max(d);
        }
    }
    Ok(DistanceMatrix { n, dist, diameter })
}

/// Distance in `G □ H` between `(a, b)` and `(a2, b2)`: the factor
/// distances add.
pub fn product_distance(
    dg: &DistanceMatrix,
    dh: &DistanceMatrix,
    from: ProductVertex,
    to: ProductVertex,
) -> u32 {
    dg.get(from.left, to.left) + dh.get(from.right, to.right)
}
