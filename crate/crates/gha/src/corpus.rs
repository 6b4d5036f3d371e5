//! A small zoo of named target graphs used by the examples and the test
//! suites: paths, cycles, cliques, a few deliberately weighted targets,
//! and the smallest asymmetric graph.

use crate::rational::{int, ratio, Rational};
use crate::weighted::WeightedGraph;

/// A single edge.
pub fn p2() -> WeightedGraph {
    WeightedGraph::from_simple_edges(2, &[(0, 1)])
}

/// The path on three nodes. Its two ends are twins.
pub fn p3() -> WeightedGraph {
    WeightedGraph::from_simple_edges(3, &[(0, 1), (1, 2)])
}

/// The path on four nodes.
pub fn p4() -> WeightedGraph {
    WeightedGraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3)])
}

/// The triangle.
pub fn k3() -> WeightedGraph {
    WeightedGraph::from_simple_edges(3, &[(0, 1), (1, 2), (0, 2)])
}

/// The complete graph on four nodes.
pub fn k4() -> WeightedGraph {
    WeightedGraph::from_simple_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The four-cycle. Opposite nodes are twins.
pub fn c4() -> WeightedGraph {
    WeightedGraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

/// The five-cycle.
pub fn c5() -> WeightedGraph {
    WeightedGraph::from_simple_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

/// The star with three leaves. The leaves are mutual twins.
pub fn star3() -> WeightedGraph {
    WeightedGraph::from_simple_edges(4, &[(0, 1), (0, 2), (0, 3)])
}

/// Triangle with a pendant edge.
pub fn paw() -> WeightedGraph {
    WeightedGraph::from_simple_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])
}

/// Triangle with two pendant edges on distinct nodes.
pub fn bull() -> WeightedGraph {
    WeightedGraph::from_simple_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
}

/// A smallest asymmetric graph: six nodes, six edges, no nontrivial
/// automorphism. A triangle with a pendant edge at one corner and a
/// pendant path of length two at another. Asymmetry is re-verified by
/// exhaustion in the tests.
pub fn asymmetric6() -> WeightedGraph {
    WeightedGraph::from_simple_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (4, 5)])
}

/// An edge with unequal node weights; no symmetry survives.
pub fn weighted_p2() -> WeightedGraph {
    WeightedGraph::new(
        vec![ratio(1, 3), ratio(2, 3)],
        vec![vec![int(0), int(1)], vec![int(1), int(0)]],
    )
    .unwrap()
}

/// A path with one edge of weight 1/2; twin-free with trivial symmetry.
pub fn weighted_p3() -> WeightedGraph {
    WeightedGraph::new(
        vec![int(1); 3],
        vec![
            vec![int(0), ratio(1, 2), int(0)],
            vec![ratio(1, 2), int(0), int(1)],
            vec![int(0), int(1), int(0)],
        ],
    )
    .unwrap()
}

/// A three-node path with a loop of weight 2 at one end.
pub fn looped3() -> WeightedGraph {
    WeightedGraph::new(
        vec![int(1); 3],
        vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(0), int(1)],
            vec![int(0), int(1), int(0)],
        ],
    )
    .unwrap()
}

/// Three nodes with every edge and loop weight 1; all nodes are twins.
pub fn complete_beta3() -> WeightedGraph {
    WeightedGraph::new(vec![int(1); 3], vec![vec![int(1); 3]; 3]).unwrap()
}

/// Every named target, for suites that sweep the whole corpus.
pub fn all() -> Vec<(&'static str, WeightedGraph)> {
    vec![
        ("p2", p2()),
        ("p3", p3()),
        ("p4", p4()),
        ("k3", k3()),
        ("k4", k4()),
        ("c4", c4()),
        ("c5", c5()),
        ("star3", star3()),
        ("paw", paw()),
        ("bull", bull()),
        ("asymmetric6", asymmetric6()),
        ("weighted_p2", weighted_p2()),
        ("weighted_p3", weighted_p3()),
        ("looped3", looped3()),
        ("complete_beta3", complete_beta3()),
    ]
}

/// The twin-free members of [`all`].
pub fn twin_free() -> Vec<(&'static str, WeightedGraph)> {
    all()
        .into_iter()
        .filter(|(_, g)| crate::symmetry::is_twin_free(g))
        .collect()
}

/// Scalar helper re-exported for the examples.
pub fn rational(p: i64, q: i64) -> Rational {
    ratio(p, q)
}
