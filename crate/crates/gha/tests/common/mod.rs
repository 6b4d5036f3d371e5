//! Independent oracles shared by the integration suites. Nothing here
//! calls into the evaluation machinery it is used to check: homomorphisms
//! are counted by enumerating raw maps, automorphisms by filtering all
//! permutations, orbit counts through the Burnside average.

#![allow(dead_code)] // each test binary uses its own subset

use gha::{KLabeledGraph, WeightedGraph};
use itertools::Itertools;

/// Adjacency view of a unit-weight simple target.
pub fn adjacency(g: &WeightedGraph) -> Vec<Vec<bool>> {
    (0..g.m())
        .map(|i| {
            (0..g.m())
                .map(|j| {
                    use num::Zero;
                    !g.beta(i, j).is_zero()
                })
                .collect()
        })
        .collect()
}

/// Counts homomorphisms of a (multi)graph pattern into a 0/1 target by
/// plain enumeration of all `m^n` maps. Multiplicities are irrelevant for
/// 0/1 weights.
pub fn count_homs(f: &KLabeledGraph, adj: &[Vec<bool>]) -> u64 {
    let n = f.n();
    let m = adj.len();
    let edges: Vec<(usize, usize)> = f.edges().map(|(u, v, _)| (u, v)).collect();
    let mut count = 0;
    let total = (m as u64).pow(n as u32);
    for code in 0..total {
        let mut x = code;
        let mut map = vec![0usize; n];
        for slot in map.iter_mut() {
            *slot = (x % m as u64) as usize;
            x /= m as u64;
        }
        if edges.iter().all(|&(u, v)| adj[map[u]][map[v]]) {
            count += 1;
        }
    }
    count
}

/// All weight-preserving permutations, found by filtering every
/// permutation of the nodes.
pub fn automorphisms_by_exhaustion(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let m = g.m();
    (0..m)
        .permutations(m)
        .filter(|perm| {
            (0..m).all(|i| g.alpha(i) == g.alpha(perm[i]))
                && (0..m).all(|i| (0..m).all(|j| g.beta(i, j) == g.beta(perm[i], perm[j])))
        })
        .collect()
}

/// Orbit count on ordered k-tuples through the Burnside average: the sum
/// of (fixed points)^k over the group, divided by the group order.
pub fn orbit_count_burnside(g: &WeightedGraph, k: usize) -> usize {
    let auts = automorphisms_by_exhaustion(g);
    let total: u64 = auts
        .iter()
        .map(|perm| {
            let fixed = perm.iter().enumerate().filter(|(i, &x)| *i == x).count() as u64;
            fixed.pow(k as u32)
        })
        .sum();
    assert_eq!(total % auts.len() as u64, 0, "Burnside sum must divide");
    (total / auts.len() as u64) as usize
}

/// Every connected simple unit-weight graph on 1..=max_nodes nodes, via
/// the catalog enumerator; the count is cross-checked by the callers
/// against the hand-known values.
pub fn connected_simple_graphs(max_nodes: usize) -> Vec<WeightedGraph> {
    let catalog = gha::enumerate_k_labeled(
        0,
        gha::CatalogBounds::new(max_nodes, (max_nodes * (max_nodes - 1) / 2) as u32, 1),
    )
    .unwrap()
    .connected_only();
    catalog
        .iter()
        .filter(|f| f.n() >= 1)
        .map(|f| {
            let edges: Vec<(usize, usize)> = f.edges().map(|(u, v, _)| (u, v)).collect();
            WeightedGraph::from_simple_edges(f.n(), &edges)
        })
        .collect()
}
