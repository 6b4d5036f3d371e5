//! Twins, twin quotients, automorphisms, and orbits on ordered tuples.
//!
//! Two nodes are twins when their edge-weight rows agree everywhere,
//! diagonal entries included; node weights play no role. Merging twin
//! classes (summing node weights, inheriting edge weights) preserves every
//! hom number and produces the twin-free quotient. An automorphism is a
//! node permutation preserving both weight structures; its coordinatewise
//! action on `V(G)^k` yields the orbit counts that the connection-matrix
//! rank is measured against.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::hom::{map_count, MapAssignment};
use crate::rational::Rational;
use crate::weighted::WeightedGraph;

/// Disjoint node-index blocks covering `V(G)`, each sorted, ordered by
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodePartition {
    pub blocks: Vec<Vec<usize>>,
}

impl NodePartition {
    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Block index of each node.
    pub fn block_of(&self, m: usize) -> Vec<usize> {
        let mut out = vec![0; m];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x] = b;
            }
        }
        out
    }
}

impl fmt::Display for NodePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(
                f,
                "{{{}}}",
                block.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )?;
        }
        Ok(())
    }
}

/// A node permutation, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Self { images }
    }

    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`: the image of `x` is `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// Coordinatewise action on a tuple.
    pub fn act_on(&self, phi: &MapAssignment) -> MapAssignment {
        MapAssignment::new(phi.targets().iter().map(|&t| self.images[t]).collect())
    }
}

/// Disjoint blocks of map indices covering `V(G)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuplePartition {
    pub m: usize,
    pub k: usize,
    /// Blocks of lexicographic map indices; each sorted, ordered by
    /// smallest member.
    pub blocks: Vec<Vec<usize>>,
}

impl TuplePartition {
    pub fn from_block_ids(m: usize, k: usize, ids: &[usize]) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, &b) in ids.iter().enumerate() {
            groups.entry(b).or_default().push(idx);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        Self { m, k, blocks }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each map index.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut out = vec![0; map_count(self.m, self.k)];
        for (b, block) in self.blocks.iter().enumerate() {
            for &idx in block {
                out[idx] = b;
            }
        }
        out
    }

    /// `true` when every block of `self` is contained in a block of
    /// `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let coarse = other.block_ids();
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&x| coarse[x] == coarse[block[0]]))
    }

    /// Blocks as explicit tuples, for serialization.
    pub fn tuples(&self) -> Vec<Vec<Vec<usize>>> {
        self.blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&idx| MapAssignment::from_index(self.m, self.k, idx).targets().to_vec())
                    .collect()
            })
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn root(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Maximal classes of mutually twin nodes. Singleton blocks everywhere
/// exactly when `g` is twin-free.
pub fn find_twins(g: &WeightedGraph) -> NodePartition {
    let mut by_row: BTreeMap<&[Rational], Vec<usize>> = BTreeMap::new();
    for i in 0..g.m() {
        by_row.entry(g.beta_row(i)).or_default().push(i);
    }
    let mut blocks: Vec<Vec<usize>> = by_row.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    NodePartition { blocks }
}

pub fn is_twin_free(g: &WeightedGraph) -> bool {
    find_twins(g).is_discrete()
}

/// Merges every twin class into one node, summing node weights and taking
/// edge weights from representatives. Checks that every representative
/// pair agrees before trusting it. The result is twin-free and has the
/// same hom numbers as `g`.
pub fn twin_quotient(g: &WeightedGraph) -> WeightedGraph {
    let partition = find_twins(g);
    let blocks = &partition.blocks;
    let alpha: Vec<Rational> = blocks
        .iter()
        .map(|block| block.iter().map(|&x| g.alpha(x).clone()).sum())
        .collect();
    let mut beta = vec![vec![Rational::zero(); blocks.len()]; blocks.len()];
    for (a, block_a) in blocks.iter().enumerate() {
        for (b, block_b) in blocks.iter().enumerate() {
            let value = g.beta(block_a[0], block_b[0]).clone();
            for &u in block_a {
                for &v in block_b {
                    assert_eq!(
                        g.beta(u, v),
                        &value,
                        "twin classes with inconsistent edge weights"
                    );
                }
            }
            beta[a][b] = value;
        }
    }
    let quotient = WeightedGraph::new(alpha, beta).expect("quotient of a valid graph is valid");
    debug_assert!(is_twin_free(&quotient));
    quotient
}

/// All node permutations preserving node weights and edge weights, found
/// by backtracking with weight-profile pruning. Contains the identity and
/// is closed under composition and inverse.
pub fn automorphisms(g: &WeightedGraph) -> Vec<Permutation> {
    let m = g.m();
    // A node can only map to a node with the same weight, loop weight and
    // multiset of incident edge weights.
    let profile = |i: usize| {
        let mut row: Vec<Rational> = g.beta_row(i).to_vec();
        row.sort();
        (g.alpha(i).clone(), g.beta(i, i).clone(), row)
    };
    let profiles: Vec<_> = (0..m).map(profile).collect();
    let mut result = Vec::new();
    let mut images = vec![0usize; m];
    let mut used = vec![false; m];
    fn search(
        g: &WeightedGraph,
        profiles: &[(Rational, Rational, Vec<Rational>)],
        level: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        result: &mut Vec<Permutation>,
    ) {
        let m = g.m();
        if level == m {
            result.push(Permutation::new(images.clone()));
            return;
        }
        'candidates: for j in 0..m {
            if used[j] || profiles[level] != profiles[j] {
                continue;
            }
            for prev in 0..level {
                if g.beta(prev, level) != g.beta(images[prev], j) {
                    continue 'candidates;
                }
            }
            if g.beta(level, level) != g.beta(j, j) {
                continue;
            }
            images[level] = j;
            used[j] = true;
            search(g, profiles, level + 1, images, used, result);
            used[j] = false;
        }
    }
    search(g, &profiles, 0, &mut images, &mut used, &mut result);
    result.sort();
    result
}

/// Orbits of the automorphism group acting coordinatewise on `V(G)^k`.
pub fn orbit_partition(g: &WeightedGraph, k: usize) -> TuplePartition {
    let m = g.m();
    let auts = automorphisms(g);
    let total = map_count(m, k);
    let mut uf = UnionFind::new(total);
    for sigma in &auts {
        if sigma.is_identity() {
            continue;
        }
        for idx in 0..total {
            let phi = MapAssignment::from_index(m, k, idx);
            uf.union(idx, sigma.act_on(&phi).index(m));
        }
    }
    let ids: Vec<usize> = (0..total).map(|i| uf.root(i)).collect();
    TuplePartition::from_block_ids(m, k, &ids)
}

/// Number of automorphism orbits on ordered k-tuples.
pub fn orbit_count(g: &WeightedGraph, k: usize) -> usize {
    orbit_partition(g, k).block_count()
}

/// Exhaustively checks that every edge-weight-preserving self-map of a
/// twin-free graph is a bijection, over all `m^m` self-maps. Rejects
/// graphs with twins, returning the twin classes as the witness.
pub fn verify_twin_free_rigidity(g: &WeightedGraph) -> Result<bool, Error> {
    let twins = find_twins(g);
    if !twins.is_discrete() {
        return Err(Error::NotTwinFree(twins));
    }
    let m = g.m();
    for idx in 0..map_count(m, m) {
        let map = MapAssignment::from_index(m, m, idx);
        let t = map.targets();
        let preserving = (0..m)
            .all(|i| (0..m).all(|j| g.beta(t[i], t[j]) == g.beta(i, j)));
        if !preserving {
            continue;
        }
        let mut seen = vec![false; m];
        for &x in t {
            seen[x] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Ok(false);
        }
    }
    Ok(true)
}
