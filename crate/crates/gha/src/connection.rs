//! Finite truncations of connection matrices.
//!
//! For a weighted target `G` and a catalog of k-labeled graphs, three
//! matrices are built:
//!
//! * `N`: rows indexed by the `m^k` maps of the labels into `V(G)` in
//!   lexicographic order, columns by the catalog; entry = partial hom.
//! * `A`: the `m^k` diagonal of node-weight products.
//! * `M`: the catalog-by-catalog matrix of hom numbers of glued pairs.
//!
//! The defining identity `M = N^T A N` is checked entrywise and exactly;
//! since `A` has a positive diagonal, the identity certifies that the `M`
//! truncation is positive semidefinite, and that `rk(M) = rk(N)`.

use rayon::prelude::*;

use crate::catalog::GraphCatalog;
use crate::hom::{alpha_weight, hom, map_count, MapAssignment, PatternEvaluator};
use crate::matrix::{rank_exact, RationalMatrix};
use crate::rational::Rational;
use crate::weighted::WeightedGraph;

/// One column of `N(k, G)`: the partial hom numbers of `f` over all maps
/// in lexicographic order.
pub fn n_column(f: &crate::labeled::KLabeledGraph, g: &WeightedGraph, k: usize) -> Vec<Rational> {
    let eval = PatternEvaluator::new(f, g);
    MapAssignment::all(g.m(), k)
        .map(|phi| eval.eval(phi.targets()))
        .collect()
}

/// `N(k, G)` truncated to the catalog columns.
pub fn build_n(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> RationalMatrix {
    assert_eq!(catalog.k(), k, "catalog label count mismatch");
    let rows = map_count(g.m(), k);
    let columns: Vec<Vec<Rational>> = catalog
        .graphs()
        .par_iter()
        .map(|f| n_column(f, g, k))
        .collect();
    let mut n = RationalMatrix::zeros(rows, catalog.len());
    for (c, col) in columns.into_iter().enumerate() {
        for (r, value) in col.into_iter().enumerate() {
            n.set(r, c, value);
        }
    }
    n
}

/// The diagonal matrix of `alpha_phi` over all maps in lexicographic order.
pub fn build_a(k: usize, g: &WeightedGraph) -> RationalMatrix {
    RationalMatrix::diagonal(
        MapAssignment::all(g.m(), k)
            .map(|phi| alpha_weight(&phi, g))
            .collect(),
    )
}

/// The connection matrix truncation: entry `(F1, F2)` is the hom number of
/// the glued graph `F1 F2`, evaluated directly.
pub fn build_m(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> RationalMatrix {
    assert_eq!(catalog.k(), k, "catalog label count mismatch");
    let len = catalog.len();
    // Symmetric: compute the upper triangle only.
    let entries: Vec<(usize, usize, Rational)> = (0..len)
        .into_par_iter()
        .flat_map_iter(|i| (i..len).map(move |j| (i, j)))
        .map(|(i, j)| {
            let glued = catalog.graphs()[i].glue(&catalog.graphs()[j]);
            (i, j, hom(&glued, g))
        })
        .collect();
    let mut m = RationalMatrix::zeros(len, len);
    for (i, j, value) in entries {
        m.set(j, i, value.clone());
        m.set(i, j, value);
    }
    m
}

/// Checks `M = N^T A N` entrywise, exactly. `true` certifies positive
/// semidefiniteness of the `M` truncation (the diagonal of `A` is
/// positive) and can only be `false` in the presence of a bug.
pub fn verify_factorization(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> bool {
    let n = build_n(k, g, catalog);
    let a = build_a(k, g);
    let m = build_m(k, g, catalog);
    let product = n.transpose().multiply(&a).multiply(&n);
    product == m
}

/// Exact rank of the `N(k, G)` truncation. Ranks of `M` and `N` coincide,
/// and `N` is far smaller, so rank questions are answered on `N`.
pub fn connection_rank(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> usize {
    rank_exact(&build_n(k, g, catalog))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{enumerate_k_labeled, CatalogBounds};
    use crate::labeled::KLabeledGraph;
    use crate::rational::{int, ratio};

    fn p2() -> WeightedGraph {
        WeightedGraph::from_simple_edges(2, &[(0, 1)])
    }

    fn p3() -> WeightedGraph {
        WeightedGraph::from_simple_edges(3, &[(0, 1), (1, 2)])
    }

    fn catalog(k: usize, nodes: usize, edges: u32, mult: u32) -> GraphCatalog {
        enumerate_k_labeled(k, CatalogBounds::new(nodes, edges, mult)).unwrap()
    }

    #[test]
    fn unit_column_is_all_ones() {
        let c = catalog(2, 4, 3, 2);
        let g = p3();
        let n = build_n(2, &g, &c);
        let unit_col = c.graphs().iter().position(|f| *f == KLabeledGraph::unit(2)).unwrap();
        for r in 0..n.rows() {
            assert_eq!(n.get(r, unit_col), &int(1));
        }
    }

    #[test]
    fn swap_symmetry_duplicates_rows() {
        // Both nodes of an edge look alike, so the two rows of N(1) agree.
        let c = catalog(1, 3, 3, 2);
        let n = build_n(1, &p2(), &c);
        assert_eq!(n.row(0), n.row(1));
        assert_eq!(rank_exact(&n), 1);
    }

    #[test]
    fn pendant_edge_column_counts_weighted_degrees() {
        let c = catalog(1, 2, 1, 1);
        let n = build_n(1, &p3(), &c);
        let edge_col = c
            .graphs()
            .iter()
            .position(|f| *f == KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap())
            .unwrap();
        let col: Vec<Rational> = (0..3).map(|r| n.get(r, edge_col).clone()).collect();
        assert_eq!(col, vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn diagonal_weight_matrix() {
        assert_eq!(build_a(0, &p3()), RationalMatrix::identity(1));
        assert_eq!(build_a(2, &p2()), RationalMatrix::identity(4));
        let half = WeightedGraph::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        let a = build_a(2, &half);
        for i in 0..4 {
            assert_eq!(a.get(i, i), &ratio(1, 4));
        }
    }

    #[test]
    fn connection_matrix_on_two_graph_catalog() {
        // Catalog {E_1, E_1 + node, pendant edge}.
        let c = catalog(1, 2, 1, 1);
        let g = p2();
        let m = build_m(1, &g, &c);
        let e1 = c.graphs().iter().position(|f| *f == KLabeledGraph::unit(1)).unwrap();
        let edge = c
            .graphs()
            .iter()
            .position(|f| *f == KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap())
            .unwrap();
        assert_eq!(m.get(e1, e1), &int(2));
        assert_eq!(m.get(e1, edge), &int(2));
        assert_eq!(m.get(edge, e1), &int(2));
        assert_eq!(m.get(edge, edge), &int(2));
    }

    #[test]
    fn zero_label_connection_matrix_has_rank_one() {
        // Gluing 0-labeled graphs is disjoint union, hom is multiplicative,
        // so M is an outer product.
        let c = catalog(0, 3, 2, 1);
        let g = p3();
        let m = build_m(0, &g, &c);
        assert!(m.rows() >= 4);
        assert_eq!(rank_exact(&m), 1);
        let e = c.graphs().iter().position(|f| *f == KLabeledGraph::unit(0)).unwrap();
        assert_eq!(m.get(e, e), &int(1));
    }

    #[test]
    fn factorization_identity_small_cases() {
        for k in 0..=2 {
            let c = catalog(k, k + 2, 3, 2);
            assert!(verify_factorization(k, &p2(), &c), "k = {k} on the edge");
            assert!(verify_factorization(k, &p3(), &c), "k = {k} on the path");
        }
        let weighted = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(2), ratio(1, 2)], vec![ratio(1, 2), int(0)]],
        )
        .unwrap();
        let c = catalog(1, 3, 4, 2);
        assert!(verify_factorization(1, &weighted, &c));
    }

    #[test]
    fn ranks_of_m_and_n_coincide() {
        for (k, g) in [(1usize, p3()), (2, p2())] {
            let c = catalog(k, k + 2, 3, 2);
            let n = build_n(k, &g, &c);
            let m = build_m(k, &g, &c);
            assert_eq!(rank_exact(&n), rank_exact(&m));
        }
    }

    #[test]
    fn factorization_on_a_single_column_catalog() {
        // Catalog {K_2} alone: a 1x1 instance of the identity.
        let c = GraphCatalog::from_graphs(0, [KLabeledGraph::new(0, 2, [(0, 1, 1)]).unwrap()])
            .unwrap();
        assert_eq!(c.len(), 1);
        let g = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        assert!(verify_factorization(0, &g, &c));
        let m = build_m(0, &g, &c);
        assert_eq!(m.get(0, 0), &(hom(&c.graphs()[0], &g) * hom(&c.graphs()[0], &g)));
    }

    #[test]
    fn m_diagonal_matches_the_self_inner_product() {
        let g = p3();
        let c = catalog(1, 3, 3, 2);
        let m = build_m(1, &g, &c);
        let e1 = c.graphs().iter().position(|f| *f == KLabeledGraph::unit(1)).unwrap();
        assert_eq!(m.get(e1, e1), &int(3)); // (sum of alpha)^k with k = 1
        for (i, f) in c.iter().enumerate() {
            let q = crate::quantum::QuantumGraph::from_graph(f);
            assert_eq!(
                m.get(i, i),
                &crate::algebra::inner_product_g(&q, &q, &g),
                "diagonal at {f}"
            );
        }
    }

    #[test]
    fn rank_bounded_by_map_count_and_monotone() {
        let g = p3();
        let small = catalog(1, 2, 1, 1);
        let large = catalog(1, 4, 4, 2);
        let r_small = connection_rank(1, &g, &small);
        let r_large = connection_rank(1, &g, &large);
        assert!(r_small <= r_large);
        assert!(r_large <= 3);
    }
}
