//! Bounded enumeration of k-labeled graphs.
//!
//! Connection matrices are indexed by the infinite family of all k-labeled
//! graphs; this crate works with finite truncations. A [`GraphCatalog`]
//! lists every canonical k-labeled loopless multigraph within the given
//! bounds exactly once, in a deterministic order (node count, then total
//! edge multiplicity, then edge list), so truncations are reproducible
//! across runs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::labeled::KLabeledGraph;

/// Size limits for a catalog truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogBounds {
    pub max_nodes: usize,
    pub max_total_edges: u32,
    pub max_multiplicity: u32,
}

impl CatalogBounds {
    pub fn new(max_nodes: usize, max_total_edges: u32, max_multiplicity: u32) -> Self {
        Self {
            max_nodes,
            max_total_edges,
            max_multiplicity,
        }
    }

    /// Default truncation for label count `k`.
    pub fn default_for(k: usize) -> Self {
        Self::new(k + 3, 6, 2)
    }

    pub fn admits(&self, f: &KLabeledGraph) -> bool {
        f.n() <= self.max_nodes
            && f.total_multiplicity() <= self.max_total_edges
            && f.max_multiplicity() <= self.max_multiplicity
    }
}

/// A deterministic, duplicate-free list of canonical k-labeled graphs.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    k: usize,
    bounds: CatalogBounds,
    graphs: Vec<KLabeledGraph>,
}

impl GraphCatalog {
    /// Catalog from an explicit list: canonicalized, deduplicated and
    /// sorted. All graphs must share the label count `k`.
    pub fn from_graphs(
        k: usize,
        graphs: impl IntoIterator<Item = KLabeledGraph>,
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for f in graphs {
            if f.k() != k {
                return Err(Error::InvalidLabeledGraph(format!(
                    "catalog of k = {k} cannot hold a graph with {} labels",
                    f.k()
                )));
            }
            set.insert(f.canonical_form());
        }
        let graphs: Vec<KLabeledGraph> = set.into_iter().collect();
        let bounds = CatalogBounds::new(
            graphs.iter().map(|f| f.n()).max().unwrap_or(k),
            graphs.iter().map(|f| f.total_multiplicity()).max().unwrap_or(0),
            graphs.iter().map(|f| f.max_multiplicity()).max().unwrap_or(1),
        );
        Ok(Self { k, bounds, graphs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bounds(&self) -> CatalogBounds {
        self.bounds
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[KLabeledGraph] {
        &self.graphs
    }

    pub fn iter(&self) -> impl Iterator<Item = &KLabeledGraph> {
        self.graphs.iter()
    }

    /// Keeps the first `len` graphs. Prefixes of the catalog order are the
    /// truncations used throughout.
    pub fn truncate(mut self, len: usize) -> Self {
        self.graphs.truncate(len);
        self
    }

    /// Drops every graph with a repeated edge.
    pub fn simple_only(mut self) -> Self {
        self.graphs.retain(|f| f.is_simple());
        self
    }

    /// Drops every disconnected graph.
    pub fn connected_only(mut self) -> Self {
        self.graphs.retain(|f| f.is_connected());
        self
    }
}

/// Enumerates every canonical k-labeled loopless multigraph with at most
/// `max_nodes` nodes, total edge multiplicity at most `max_total_edges`,
/// and per-edge multiplicity at most `max_multiplicity`. Always contains
/// the unit graph `E_k`.
pub fn enumerate_k_labeled(k: usize, bounds: CatalogBounds) -> Result<GraphCatalog, Error> {
    if bounds.max_nodes < k {
        return Err(Error::BoundsExcludeUnit {
            k,
            max_nodes: bounds.max_nodes,
        });
    }
    let mut seen = BTreeSet::new();
    for n in k..=bounds.max_nodes {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut edges: Vec<(usize, usize, u32)> = Vec::new();
        fill(
            k,
            n,
            &pairs,
            0,
            bounds.max_total_edges,
            bounds.max_multiplicity,
            &mut edges,
            &mut seen,
        );
    }
    Ok(GraphCatalog {
        k,
        bounds,
        graphs: seen.into_iter().collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn fill(
    k: usize,
    n: usize,
    pairs: &[(usize, usize)],
    next: usize,
    budget: u32,
    max_mult: u32,
    edges: &mut Vec<(usize, usize, u32)>,
    seen: &mut BTreeSet<KLabeledGraph>,
) {
    if next == pairs.len() {
        // Unlabeled nodes with no incident edge must form a suffix;
        // representatives of every isomorphism class survive this cut and
        // it skips most redundant presentations before canonicalization.
        let mut touched = vec![false; n];
        for &(u, v, _) in edges.iter() {
            touched[u] = true;
            touched[v] = true;
        }
        let mut seen_isolated = false;
        for t in touched.iter().skip(k) {
            if *t && seen_isolated {
                return;
            }
            seen_isolated |= !*t;
        }
        let g = KLabeledGraph::new(k, n, edges.iter().copied()).unwrap();
        seen.insert(g.canonical_form());
        return;
    }
    let (u, v) = pairs[next];
    for m in 0..=max_mult.min(budget) {
        if m > 0 {
            edges.push((u, v, m));
        }
        fill(k, n, pairs, next + 1, budget - m, max_mult, edges, seen);
        if m > 0 {
            edges.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog(k: usize, nodes: usize, edges: u32, mult: u32) -> GraphCatalog {
        enumerate_k_labeled(k, CatalogBounds::new(nodes, edges, mult)).unwrap()
    }

    #[test]
    fn one_label_two_nodes_one_edge() {
        // E_1, E_1 plus an isolated node, and the pendant edge.
        let c = catalog(1, 2, 1, 1);
        assert_eq!(c.len(), 3);
        assert_eq!(c.graphs()[0], KLabeledGraph::unit(1));
        assert_eq!(c.graphs()[1], KLabeledGraph::new(1, 2, []).unwrap());
        assert_eq!(
            c.graphs()[2],
            KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap()
        );
    }

    #[test]
    fn zero_labels_smallest_bounds() {
        // The empty graph and the single node.
        let c = catalog(0, 1, 0, 1);
        assert_eq!(c.len(), 2);
        assert_eq!(c.graphs()[0], KLabeledGraph::unit(0));
        assert_eq!(c.graphs()[1], KLabeledGraph::new(0, 1, []).unwrap());
    }

    #[test]
    fn always_contains_the_unit() {
        for k in 0..4 {
            let c = catalog(k, k, 0, 1);
            assert!(c.graphs().contains(&KLabeledGraph::unit(k)));
        }
    }

    #[test]
    fn rejects_bounds_below_k() {
        assert!(enumerate_k_labeled(3, CatalogBounds::new(2, 4, 1)).is_err());
    }

    #[test]
    fn duplicate_free_and_sorted() {
        let c = catalog(1, 4, 3, 2);
        for w in c.graphs().windows(2) {
            assert!(w[0] < w[1]);
        }
        for g in c.iter() {
            assert_eq!(g.canonical_form(), *g);
            assert!(c.bounds().admits(g));
        }
    }

    #[test]
    fn counts_unlabeled_simple_graphs() {
        // Graphs on <= 4 nodes up to isomorphism: 1, 1, 2, 4, 11.
        for (nodes, want) in [(0, 1), (1, 2), (2, 4), (3, 8), (4, 19)] {
            let c = catalog(0, nodes, 6, 1);
            assert_eq!(c.len(), want, "cumulative count through n = {nodes}");
        }
    }

    #[test]
    fn monotone_in_each_bound() {
        let base = catalog(1, 3, 3, 1).len();
        assert!(catalog(1, 4, 3, 1).len() >= base);
        assert!(catalog(1, 3, 4, 1).len() >= base);
        assert!(catalog(1, 3, 3, 2).len() >= base);
    }

    #[test]
    fn two_labeled_graphs_keep_label_distinctions() {
        let c = catalog(2, 3, 2, 1);
        // The labeled edge and the half-labeled edge are distinct entries.
        assert!(c
            .graphs()
            .contains(&KLabeledGraph::single_edge(2, 0, 1)));
        assert!(c
            .graphs()
            .contains(&KLabeledGraph::new(2, 3, [(0, 2, 1)]).unwrap()));
    }
}
