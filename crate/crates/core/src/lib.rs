//! Radio labelings of Cartesian products of generalized Petersen graphs and trees.
//!
//! A radio labeling of a connected graph `G` assigns a nonnegative integer
//! `f(v)` to every vertex so that `|f(u) - f(v)| >= diam(G) + 1 - d(u, v)`
//! for every pair of distinct vertices. The span of `f` is the largest
//! pairwise label difference, and the radio number `rn(G)` is the minimum
//! span over all radio labelings.
//!
//! This crate provides:
//!
//! - graph construction (generalized Petersen graphs, trees, Cartesian
//!   products) with exact BFS distances ([`graph`]);
//! - weight centers, levels, branches and the pairwise tree quantities
//!   used by the labeling bounds ([`tree`]);
//! - the labeling validator, the closed-form lower bound for
//!   `P_{m,k} □ T`, canonical labelings of vertex orderings, and the
//!   condition checkers that certify when the bound is attained ([`radio`]);
//! - the explicit optimal ordering for `P_{5,2} □ K_{1,n}` built from
//!   permutation machinery ([`construction`]);
//! - independent search oracles: exact branch-and-bound for desk-scale
//!   graphs and seeded simulated annealing over orderings ([`search`]);
//! - stable file formats for trees, labelings and orderings ([`io`]).
//!
//! All arithmetic is exact integer arithmetic; fractional thresholds are
//! compared by doubling both sides.

pub mod construction;
pub mod error;
pub mod graph;
pub mod io;
pub mod radio;
pub mod search;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{
    all_pairs_distances, cartesian_product, product_distance, DistanceMatrix, Graph, GraphKind,
    ProductVertex, VertexId,
};
pub use radio::{
    canonical_labeling, check_equality_conditions, check_main_conditions,
    check_sufficient_conditions, e_value, greedy_min_labeling, lower_bound, validate, CheckKind,
    Condition, ConditionReport, ExtraCondition, LowerBoundReport, ProductInstance, RadioLabeling,
    Verdict, VertexOrdering,
};
pub use tree::{compute_metrics, vertex_weight, BranchRelation, TreeMetrics};
