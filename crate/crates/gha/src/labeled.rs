//! k-labeled graphs: finite loopless multigraphs in which the first `k`
//! nodes carry the labels `1..k`.
//!
//! Nodes are indexed `0..n`; indices `0..k` are the labeled nodes in label
//! order, the rest are unlabeled. Two k-labeled graphs are considered the
//! same when a label-preserving isomorphism maps one onto the other;
//! [`KLabeledGraph::canonical_form`] picks a unique representative of that
//! class, so canonical graphs compare with plain `==`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A loopless multigraph with `k` labeled nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KLabeledGraph {
    k: usize,
    n: usize,
    /// Edge multiset keyed by `(u, v)` with `u < v`.
    edges: BTreeMap<(usize, usize), u32>,
}

impl KLabeledGraph {
    /// Builds a graph from an edge list, summing multiplicities of repeated
    /// pairs. Rejects loops, out-of-range endpoints and zero multiplicities.
    pub fn new(
        k: usize,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self, Error> {
        if k > n {
            return Err(Error::InvalidLabeledGraph(format!(
                "k = {k} exceeds node count n = {n}"
            )));
        }
        let mut map = BTreeMap::new();
        for (u, v, m) in edges {
            if u == v {
                return Err(Error::InvalidLabeledGraph(format!("loop at node {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidLabeledGraph(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            if m == 0 {
                return Err(Error::InvalidLabeledGraph(format!(
                    "edge ({u},{v}) has multiplicity 0"
                )));
            }
            *map.entry((u.min(v), u.max(v))).or_insert(0) += m;
        }
        Ok(Self { k, n, edges: map })
    }

    /// The edgeless graph `E_k` on exactly the `k` labeled nodes.
    pub fn unit(k: usize) -> Self {
        Self {
            k,
            n: k,
            edges: BTreeMap::new(),
        }
    }

    /// The complete graph `K_k` on the `k` labeled nodes.
    pub fn complete(k: usize) -> Self {
        let mut edges = BTreeMap::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.insert((u, v), 1);
            }
        }
        Self { k, n: k, edges }
    }

    /// `k` labeled nodes and a single edge between labeled nodes `i` and `j`.
    pub fn single_edge(k: usize, i: usize, j: usize) -> Self {
        assert!(i < k && j < k && i != j, "edge must join two distinct labels");
        let mut edges = BTreeMap::new();
        edges.insert((i.min(j), i.max(j)), 1);
        Self { k, n: k, edges }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of all edge multiplicities.
    pub fn total_multiplicity(&self) -> u32 {
        self.edges.values().sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.edges.values().copied().max().unwrap_or(0)
    }

    /// True when no edge has multiplicity above 1.
    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Glues `self` and `other` along their labeled nodes: disjoint union,
    /// then same-labeled nodes identified. Multiplicities of coinciding
    /// edges add.
    pub fn glue(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "glue requires equal label counts");
        let k = self.k;
        let mut edges = self.edges.clone();
        // Unlabeled nodes of `other` land after all nodes of `self`.
        let shift = |x: usize| if x < k { x } else { x - k + self.n };
        for (&(u, v), &m) in &other.edges {
            let (a, b) = (shift(u), shift(v));
            *edges.entry((a.min(b), a.max(b))).or_insert(0) += m;
        }
        Self {
            k,
            n: self.n + other.n - k,
            edges,
        }
    }

    /// Unique representative of the label-preserving isomorphism class:
    /// the lexicographically least edge list over all permutations of the
    /// unlabeled nodes. Labeled nodes stay fixed.
    pub fn canonical_form(&self) -> Self {
        let free = self.n - self.k;
        if free <= 1 || self.edges.is_empty() {
            return self.clone();
        }
        let unlabeled: Vec<usize> = (self.k..self.n).collect();
        let mut best: Option<Vec<(usize, usize, u32)>> = None;
        let mut new_index = vec![0usize; self.n];
        for i in 0..self.k {
            new_index[i] = i;
        }
        for order in unlabeled.iter().permutations(free) {
            // order[j] is the old node placed at new index k + j
            for (j, &&old) in order.iter().enumerate() {
                new_index[old] = self.k + j;
            }
            let mut relabeled: Vec<(usize, usize, u32)> = self
                .edges
                .iter()
                .map(|(&(u, v), &m)| {
                    let (a, b) = (new_index[u], new_index[v]);
                    (a.min(b), a.max(b), m)
                })
                .collect();
            relabeled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                best = Some(relabeled);
            }
        }
        let edges = best
            .unwrap()
            .into_iter()
            .map(|(u, v, m)| ((u, v), m))
            .collect();
        Self {
            k: self.k,
            n: self.n,
            edges,
        }
    }

    /// Erases the last label: node `k-1` keeps its edges but becomes the
    /// first unlabeled node. Panics when `k == 0`.
    pub fn trace_graph(&self) -> Self {
        assert!(self.k >= 1, "trace_graph requires at least one label");
        Self {
            k: self.k - 1,
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    /// Adds a fresh isolated node carrying the new label `k+1`.
    pub fn extend_with_isolated_label(&self) -> Self {
        let k = self.k;
        // The new labeled node takes index k; unlabeled nodes shift up by 1.
        let shift = |x: usize| if x < k { x } else { x + 1 };
        let edges = self
            .edges
            .iter()
            .map(|(&(u, v), &m)| ((shift(u), shift(v)), m))
            .collect();
        Self {
            k: k + 1,
            n: self.n + 1,
            edges,
        }
    }

    /// Same nodes and edges with every label forgotten.
    pub fn forget_labels(&self) -> Self {
        Self {
            k: 0,
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    /// Connected components as sorted lists of node indices, sorted by
    /// their smallest member. Isolated nodes form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in self.edges.keys() {
            let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.n {
            let r = root(&mut parent, x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Deterministic catalog order: node count, then total edge multiplicity,
/// then the canonical edge list.
impl Ord for KLabeledGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then_with(|| self.n.cmp(&other.n))
            .then_with(|| self.total_multiplicity().cmp(&other.total_multiplicity()))
            .then_with(|| self.edges().cmp(other.edges()))
    }
}

impl PartialOrd for KLabeledGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KLabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[k={} n={};", self.k, self.n)?;
        if self.edges.is_empty() {
            write!(f, " no edges")?;
        }
        for (i, ((u, v), m)) in self.edges.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            if *m == 1 {
                write!(f, "{sep}{u}-{v}")?;
            } else {
                write!(f, "{sep}{u}-{v}x{m}")?;
            }
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct LabeledFile {
    k: usize,
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl Serialize for KLabeledGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LabeledFile {
            k: self.k,
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KLabeledGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = LabeledFile::deserialize(deserializer)?;
        KLabeledGraph::new(file.k, file.n, file.edges).map_err(serde::de::Error::custom)
    }
}
