//! Exact weighted homomorphism counting.
//!
//! For a pattern `F` (a loopless multigraph) and a weighted target `G`, the
//! homomorphism number sums, over all maps of `V(F)` into `V(G)`, the
//! product of node weights of the images times the product of edge weights
//! along every edge of `F` (a repeated edge contributes one factor per
//! multiplicity). The partial variant fixes where the labeled nodes go and
//! sums only over extensions to the unlabeled nodes, weighting by the node
//! weights of the unlabeled images alone.
//!
//! Evaluation is brute force over all extensions, component by component,
//! with early termination as soon as a zero edge weight makes a branch
//! worthless. Components without labeled nodes are evaluated once and
//! their values multiplied in, so patterns with many small pieces stay
//! cheap.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::labeled::KLabeledGraph;
use crate::quantum::QuantumGraph;
use crate::rational::Rational;
use crate::weighted::WeightedGraph;

/// A map from the `k` labels into the nodes of a target graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MapAssignment(Vec<usize>);

impl MapAssignment {
    pub fn new(targets: Vec<usize>) -> Self {
        Self(targets)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    /// Position in the lexicographic enumeration of all maps `[1,k] -> [0,m)`
    /// (first coordinate most significant).
    pub fn index(&self, m: usize) -> usize {
        self.0.iter().fold(0, |acc, &t| acc * m + t)
    }

    pub fn from_index(m: usize, k: usize, mut index: usize) -> Self {
        let mut targets = vec![0; k];
        for slot in (0..k).rev() {
            targets[slot] = index % m;
            index /= m;
        }
        Self(targets)
    }

    /// All `m^k` maps in lexicographic order.
    pub fn all(m: usize, k: usize) -> impl Iterator<Item = MapAssignment> {
        (0..m.pow(k as u32)).map(move |i| Self::from_index(m, k, i))
    }

    /// Appends one more coordinate.
    pub fn extended(&self, c: usize) -> Self {
        let mut t = self.0.clone();
        t.push(c);
        Self(t)
    }

    /// Drops the last coordinate.
    pub fn restricted(&self) -> Self {
        assert!(!self.0.is_empty(), "cannot restrict the empty map");
        Self(self.0[..self.0.len() - 1].to_vec())
    }
}

/// Number of maps `[1,k] -> [0,m)`.
pub fn map_count(m: usize, k: usize) -> usize {
    m.pow(k as u32)
}

/// Product of the node weights over the entries of `phi`; 1 for `k == 0`.
pub fn alpha_weight(phi: &MapAssignment, g: &WeightedGraph) -> Rational {
    phi.targets()
        .iter()
        .map(|&t| {
            assert!(t < g.m(), "map target {t} out of range");
            g.alpha(t)
        })
        .product()
}

fn pow(base: &Rational, exp: u32) -> Rational {
    match exp {
        0 => Rational::one(),
        1 => base.clone(),
        _ => {
            let mut acc = base.clone();
            for _ in 1..exp {
                acc *= base;
            }
            acc
        }
    }
}

/// Where a back-edge of an unlabeled node points during the extension scan.
#[derive(Clone, Copy)]
enum Slot {
    Label(usize),
    Earlier(usize),
}

struct Component {
    /// Edges between labeled nodes, as label indices.
    labeled_edges: Vec<(usize, usize, u32)>,
    /// For each unlabeled node in assignment order, its edges back to
    /// already-placed nodes.
    unlabeled: Vec<Vec<(Slot, u32)>>,
}

/// Precomputed evaluation plan for one pattern against one target. Splits
/// the pattern into connected components; components without labels are
/// evaluated once in `new` and reused for every map.
pub struct PatternEvaluator<'g> {
    g: &'g WeightedGraph,
    k: usize,
    labeled_components: Vec<Component>,
    unlabeled_factor: Rational,
}

impl<'g> PatternEvaluator<'g> {
    pub fn new(f: &KLabeledGraph, g: &'g WeightedGraph) -> Self {
        let k = f.k();
        let mut labeled_components = Vec::new();
        let mut unlabeled_factor = Rational::one();
        for nodes in f.components() {
            let comp = build_component(f, k, &nodes);
            if nodes.iter().any(|&x| x < k) {
                labeled_components.push(comp);
            } else {
                let value = extend_sum(g, &comp, &[], &Rational::one());
                unlabeled_factor *= value;
            }
        }
        Self {
            g,
            k,
            labeled_components,
            unlabeled_factor,
        }
    }

    /// The partial homomorphism number for the map `phi`.
    pub fn eval(&self, phi: &[usize]) -> Rational {
        debug_assert_eq!(phi.len(), self.k);
        if self.unlabeled_factor.is_zero() {
            return Rational::zero();
        }
        let mut total = self.unlabeled_factor.clone();
        for comp in &self.labeled_components {
            let mut fixed = Rational::one();
            for &(i, j, m) in &comp.labeled_edges {
                let b = self.g.beta(phi[i], phi[j]);
                if b.is_zero() {
                    return Rational::zero();
                }
                fixed *= pow(b, m);
            }
            let value = extend_sum(self.g, comp, phi, &fixed);
            if value.is_zero() {
                return Rational::zero();
            }
            total *= value;
        }
        total
    }
}

fn build_component(f: &KLabeledGraph, k: usize, nodes: &[usize]) -> Component {
    let in_comp = |x: usize| nodes.binary_search(&x).is_ok();
    let unlabeled_nodes: Vec<usize> = nodes.iter().copied().filter(|&x| x >= k).collect();
    let slot_of = |x: usize| -> Slot {
        if x < k {
            Slot::Label(x)
        } else {
            Slot::Earlier(unlabeled_nodes.binary_search(&x).unwrap())
        }
    };
    let mut labeled_edges = Vec::new();
    let mut unlabeled: Vec<Vec<(Slot, u32)>> = vec![Vec::new(); unlabeled_nodes.len()];
    for (u, v, m) in f.edges() {
        if !in_comp(u) {
            continue;
        }
        if u < k && v < k {
            labeled_edges.push((u, v, m));
        } else {
            // u < v, so v is unlabeled and is placed after u in the scan.
            let pos = unlabeled_nodes.binary_search(&v).unwrap();
            unlabeled[pos].push((slot_of(u), m));
        }
    }
    Component {
        labeled_edges,
        unlabeled,
    }
}

/// Sums, over all assignments of the component's unlabeled nodes, the
/// product of their node weights and all back-edge weights, starting from
/// `fixed`. Zero branches are pruned immediately.
fn extend_sum(g: &WeightedGraph, comp: &Component, phi: &[usize], fixed: &Rational) -> Rational {
    if fixed.is_zero() {
        return Rational::zero();
    }
    let mut assign = vec![0usize; comp.unlabeled.len()];
    recurse(g, comp, phi, 0, fixed.clone(), &mut assign)
}

fn recurse(
    g: &WeightedGraph,
    comp: &Component,
    phi: &[usize],
    level: usize,
    acc: Rational,
    assign: &mut [usize],
) -> Rational {
    if level == comp.unlabeled.len() {
        return acc;
    }
    let mut sum = Rational::zero();
    'targets: for c in 0..g.m() {
        let mut factor = g.alpha(c).clone();
        for &(slot, m) in &comp.unlabeled[level] {
            let other = match slot {
                Slot::Label(i) => phi[i],
                Slot::Earlier(j) => assign[j],
            };
            let b = g.beta(other, c);
            if b.is_zero() {
                continue 'targets;
            }
            if !b.is_one() {
                factor *= pow(b, m);
            }
        }
        assign[level] = c;
        let next = if factor.is_one() {
            acc.clone()
        } else {
            &acc * &factor
        };
        sum += recurse(g, comp, phi, level + 1, next, assign);
    }
    sum
}

/// The homomorphism number of `F` into `G`. Labels of `F` are ignored:
/// every node is summed over and weighted by its image's node weight.
pub fn hom(f: &KLabeledGraph, g: &WeightedGraph) -> Rational {
    PatternEvaluator::new(&f.forget_labels(), g).eval(&[])
}

/// The partial homomorphism number of the k-labeled `F` with the labeled
/// nodes pinned by `phi`.
pub fn hom_partial(f: &KLabeledGraph, g: &WeightedGraph, phi: &MapAssignment) -> Rational {
    assert_eq!(phi.k(), f.k(), "map length must equal the label count");
    for &t in phi.targets() {
        assert!(t < g.m(), "map target {t} out of range");
    }
    PatternEvaluator::new(f, g).eval(phi.targets())
}

/// Linear extension of `hom` to quantum graphs.
pub fn hom_quantum(x: &QuantumGraph, g: &WeightedGraph) -> Rational {
    x.terms().map(|(f, coeff)| coeff * hom(f, g)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::weighted::WeightedGraph;

    /// Plain homomorphism counter for unweighted simple targets, written
    /// with none of the machinery above: enumerate all maps, check every
    /// edge.
    fn count_homs(f: &KLabeledGraph, adj: &[Vec<bool>]) -> u64 {
        let n = f.n();
        let m = adj.len();
        let edges: Vec<(usize, usize)> = f.edges().map(|(u, v, _)| (u, v)).collect();
        let mut count = 0;
        for code in 0..(m as u64).pow(n as u32) {
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

    fn p2() -> WeightedGraph {
        WeightedGraph::from_simple_edges(2, &[(0, 1)])
    }

    fn p3() -> WeightedGraph {
        WeightedGraph::from_simple_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn alpha_weight_examples() {
        let g = WeightedGraph::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        assert_eq!(alpha_weight(&MapAssignment::empty(), &g), int(1));
        assert_eq!(
            alpha_weight(&MapAssignment::new(vec![0, 1]), &g),
            ratio(1, 4)
        );
        let unit = p3();
        assert_eq!(
            alpha_weight(&MapAssignment::new(vec![2, 2]), &unit),
            int(1)
        );
    }

    #[test]
    fn hom_of_single_node_is_alpha_sum() {
        let g = WeightedGraph::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        let e1 = KLabeledGraph::unit(1);
        assert_eq!(hom(&e1, &g), int(1));
        assert_eq!(hom(&e1, &p3()), int(3));
    }

    #[test]
    fn hom_edge_into_edge() {
        let k2 = KLabeledGraph::new(0, 2, [(0, 1, 1)]).unwrap();
        assert_eq!(hom(&k2, &p2()), int(2));
    }

    #[test]
    fn hom_triangle_into_edge_is_zero() {
        let k3 = KLabeledGraph::complete(3).forget_labels();
        assert_eq!(hom(&k3, &p2()), int(0));
    }

    #[test]
    fn hom_matches_brute_force_on_simple_targets() {
        let targets = [p2(), p3(), WeightedGraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])];
        let adjs: Vec<Vec<Vec<bool>>> = targets
            .iter()
            .map(|g| {
                (0..g.m())
                    .map(|i| (0..g.m()).map(|j| !g.beta(i, j).is_zero()).collect())
                    .collect()
            })
            .collect();
        let patterns = [
            KLabeledGraph::new(0, 3, [(0, 1, 1), (1, 2, 1)]).unwrap(),
            KLabeledGraph::new(0, 4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap(),
            KLabeledGraph::complete(3).forget_labels(),
            KLabeledGraph::new(0, 4, [(0, 1, 1), (2, 3, 1)]).unwrap(),
            KLabeledGraph::new(0, 5, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1)]).unwrap(),
        ];
        for (g, adj) in targets.iter().zip(&adjs) {
            for f in &patterns {
                assert_eq!(
                    hom(f, g),
                    int(count_homs(f, adj) as i64),
                    "pattern {f} disagrees with brute force"
                );
            }
        }
    }

    #[test]
    fn multiple_edges_raise_weights_to_powers() {
        // Two parallel edges against beta = 1/2 contribute (1/2)^2.
        let g = WeightedGraph::new(
            vec![int(1), int(1)],
            vec![vec![int(0), ratio(1, 2)], vec![ratio(1, 2), int(0)]],
        )
        .unwrap();
        let double = KLabeledGraph::new(0, 2, [(0, 1, 2)]).unwrap();
        // Maps (0,1) and (1,0) each give 1/4.
        assert_eq!(hom(&double, &g), ratio(1, 2));
    }

    #[test]
    fn hom_partial_of_unit_is_one() {
        let g = p3();
        for k in 0..3 {
            let ek = KLabeledGraph::unit(k);
            for phi in MapAssignment::all(g.m(), k) {
                assert_eq!(hom_partial(&ek, &g, &phi), int(1));
            }
        }
    }

    #[test]
    fn hom_partial_of_single_edge_reads_beta() {
        let g = WeightedGraph::new(
            vec![int(1), int(1), int(1)],
            vec![
                vec![int(2), int(1), int(0)],
                vec![int(1), int(0), int(1)],
                vec![int(0), int(1), int(0)],
            ],
        )
        .unwrap();
        let k12 = KLabeledGraph::single_edge(2, 0, 1);
        for phi in MapAssignment::all(3, 2) {
            let (a, b) = (phi.targets()[0], phi.targets()[1]);
            assert_eq!(hom_partial(&k12, &g, &phi), g.beta(a, b).clone());
        }
    }

    #[test]
    fn hom_partial_pendant_edge_on_p2() {
        let pendant = KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap();
        let phi = MapAssignment::new(vec![0]);
        assert_eq!(hom_partial(&pendant, &p2(), &phi), int(1));
    }

    #[test]
    fn hom_decomposes_over_partial_maps() {
        let g = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(1), ratio(1, 2)], vec![ratio(1, 2), int(0)]],
        )
        .unwrap();
        let f = KLabeledGraph::new(2, 4, [(0, 1, 1), (0, 2, 1), (2, 3, 2), (1, 3, 1)]).unwrap();
        let total: Rational = MapAssignment::all(g.m(), f.k())
            .map(|phi| alpha_weight(&phi, &g) * hom_partial(&f, &g, &phi))
            .sum();
        assert_eq!(total, hom(&f, &g));
    }

    #[test]
    fn gluing_multiplies_partial_homs() {
        let g = p3();
        let f1 = KLabeledGraph::new(2, 3, [(0, 2, 1), (1, 2, 1)]).unwrap();
        let f2 = KLabeledGraph::new(2, 3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let glued = f1.glue(&f2);
        for phi in MapAssignment::all(g.m(), 2) {
            assert_eq!(
                hom_partial(&glued, &g, &phi),
                hom_partial(&f1, &g, &phi) * hom_partial(&f2, &g, &phi)
            );
        }
    }

    #[test]
    fn disjoint_union_multiplies_homs() {
        let g = p3();
        let f1 = KLabeledGraph::new(0, 3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let f2 = KLabeledGraph::new(0, 2, [(0, 1, 1)]).unwrap();
        assert_eq!(hom(&f1.glue(&f2), &g), hom(&f1, &g) * hom(&f2, &g));
    }

    #[test]
    fn hom_partial_is_isomorphism_invariant() {
        let g = p3();
        let a = KLabeledGraph::new(1, 4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        let b = KLabeledGraph::new(1, 4, [(0, 3, 1), (3, 1, 1), (3, 2, 1)]).unwrap();
        for phi in MapAssignment::all(g.m(), 1) {
            assert_eq!(hom_partial(&a, &g, &phi), hom_partial(&b, &g, &phi));
        }
    }

    #[test]
    fn quantum_hom_is_linear() {
        let g = p2();
        let e1 = KLabeledGraph::unit(1);
        let edge = KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap();
        assert_eq!(hom_quantum(&QuantumGraph::zero(1), &g), int(0));
        let mut x = QuantumGraph::zero(1);
        x.add_term(&e1, int(2));
        assert_eq!(hom_quantum(&x, &g), int(4));
        let diff = QuantumGraph::from_graph(&edge).sub(&QuantumGraph::from_graph(&edge));
        assert_eq!(hom_quantum(&diff, &g), int(0));
    }

    #[test]
    #[should_panic(expected = "label count")]
    fn hom_partial_rejects_wrong_map_length() {
        let edge = KLabeledGraph::single_edge(2, 0, 1);
        hom_partial(&edge, &p2(), &MapAssignment::new(vec![0]));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn hom_partial_rejects_out_of_range_targets() {
        let edge = KLabeledGraph::single_edge(2, 0, 1);
        hom_partial(&edge, &p2(), &MapAssignment::new(vec![0, 7]));
    }

    #[test]
    fn map_indexing_round_trips_lexicographically() {
        let mut prev = None;
        for (i, phi) in MapAssignment::all(3, 2).enumerate() {
            assert_eq!(phi.index(3), i);
            assert_eq!(MapAssignment::from_index(3, 2, i), phi);
            if let Some(p) = prev {
                assert!(p < phi);
            }
            prev = Some(phi);
        }
    }
}
