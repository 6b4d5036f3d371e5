//! Catalog enumeration: every canonical k-labeled multigraph within
//! bounds, exactly once, in a deterministic order.
//!
//!     cargo run --example enumerate_catalog

use gha::{enumerate_k_labeled, CatalogBounds};

fn main() {
    let catalog = enumerate_k_labeled(1, CatalogBounds::new(3, 2, 2)).unwrap();
    println!("one-labeled multigraphs with <= 3 nodes, <= 2 edge copies:");
    for f in catalog.iter() {
        println!("  {f}");
    }
    println!("total: {}", catalog.len());

    // Growing any bound never loses graphs.
    for bounds in [
        CatalogBounds::new(4, 2, 2),
        CatalogBounds::new(3, 3, 2),
        CatalogBounds::new(3, 2, 3),
    ] {
        let bigger = enumerate_k_labeled(1, bounds).unwrap();
        println!(
            "bounds n<={} e<={} mult<={}: {} graphs",
            bounds.max_nodes,
            bounds.max_total_edges,
            bounds.max_multiplicity,
            bigger.len()
        );
    }

    // Simple unlabeled graphs up to isomorphism: 1, 2, 4, 8, 19 through
    // n = 4 cumulatively.
    for n in 0..=4 {
        let c = enumerate_k_labeled(0, CatalogBounds::new(n, 6, 1)).unwrap();
        println!("unlabeled simple graphs with <= {n} nodes: {}", c.len());
    }
}
