//! Stable on-disk formats: plain-text edge lists for trees and graphs, a
//! structured JSON document for labelings and orderings, and DOT export.
//!
//! Files store 0-based indices; 1-based `x_i`/`y_j` names appear only in
//! rendered output. The labeling document round-trips bit-exactly:
//! loading and saving a document reproduces the file byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    build_generalized_petersen, build_petersen_explicit, build_tree, cartesian_product, Graph,
};

/// Recipe to rebuild a graph from a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum GraphDescriptor {
    GeneralizedPetersen {
        m: usize,
        k: usize,
    },
    /// `P_{5,2}` under the explicit `x_1..x_10` naming.
    PetersenExplicit,
    Tree {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Generic {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Product {
        left: Box<GraphDescriptor>,
        right: Box<GraphDescriptor>,
    },
}

impl GraphDescriptor {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphDescriptor::GeneralizedPetersen { m, k } => build_generalized_petersen(*m, *k),
            GraphDescriptor::PetersenExplicit => Ok(build_petersen_explicit()),
            GraphDescriptor::Tree { n, edges } => build_tree(edges, *n),
            GraphDescriptor::Generic { n, edges } => Graph::from_edges(*n, edges),
            GraphDescriptor::Product { left, right } => {
                Ok(cartesian_product(&left.build()?, &right.build()?))
            }
        }
    }

    pub fn tree_of(graph: &Graph) -> GraphDescriptor {
        GraphDescriptor::Tree {
            n: graph.vertex_count(),
            edges: graph.edges().collect(),
        }
    }

    pub fn generic_of(graph: &Graph) -> GraphDescriptor {
        GraphDescriptor::Generic {
            n: graph.vertex_count(),
            edges: graph.edges().collect(),
        }
    }
}

/// The one structured document shared by construct, verify and check:
/// graph descriptor, vertex order, labels, span and verdict. Orders and
/// labels use flat 0-based vertex indices; the `naming` header explains
/// the rendered 1-based names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub graph: GraphDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub naming: Option<String>,
    /// Position `t` holds the flat index of `z_t`.
    pub order: Vec<usize>,
    /// Per-vertex labels, indexed by flat vertex index. Empty for pure
    /// ordering documents.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
}

/// Naming header written into product labeling documents.
pub const PRODUCT_NAMING: &str =
    "x_i = left (Petersen) index i-1; y_j = right (tree) index j; flat = left * |V(tree)| + right";

impl LabelingDocument {
    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<LabelingDocument> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<LabelingDocument> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        LabelingDocument::from_json(&text)
    }
}

/// Parse a plain-text edge list: one `u v` pair per line, 0-based,
/// `#` starts a comment, and the first non-comment line may be
/// `n <count>` (required for edgeless order-1 trees). Returns the vertex
/// count and edges; the count is the maximum of the declared count and
/// the largest endpoint plus one.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut first_data_line = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if first_data_line && fields.len() == 2 && fields[0] == "n" {
            declared = Some(fields[1].parse().map_err(|_| {
                Error::Parse(format!(
                    "line {}: bad vertex count {:?}",
                    lineno + 1,
                    fields[1]
                ))
            })?);
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected `u v`, got {raw:?}",
                lineno + 1
            )));
        }
        let u: usize = fields[0].parse().map_err(|_| {
            Error::Parse(format!(
                "line {}: bad vertex index {:?}",
                lineno + 1,
                fields[0]
            ))
        })?;
        let v: usize = fields[1].parse().map_err(|_| {
            Error::Parse(format!(
                "line {}: bad vertex index {:?}",
                lineno + 1,
                fields[1]
            ))
        })?;
        edges.push((u, v));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(0).max(implied);
    if n == 0 {
        return Err(Error::Parse(
            "empty edge list and no `n <count>` header".into(),
        ));
    }
    Ok((n, edges))
}

/// Read a tree from an edge-list file.
pub fn load_tree(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let (n, edges) = parse_edge_list(&text)?;
    build_tree(&edges, n)
}

/// Read a generic graph from an edge-list file.
pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let (n, edges) = parse_edge_list(&text)?;
    Graph::from_edges(n, &edges)
}

/// Render an edge list in the same format [`parse_edge_list`] reads.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Render a graph in DOT, optionally naming vertices.
pub fn to_dot(g: &Graph, names: Option<&[String]>) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.vertex_count() {
        match names {
            Some(names) => out.push_str(&format!("  {v} [label=\"{}\"];\n", names[v])),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
