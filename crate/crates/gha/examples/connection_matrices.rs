//! Builds the three connection matrices of one target and checks the
//! factorization M = N^T A N exactly, which also certifies that the M
//! truncation is positive semidefinite.
//!
//!     cargo run --example connection_matrices

use gha::{
    build_a, build_m, build_n, corpus, enumerate_k_labeled, rank_exact, verify_factorization,
    CatalogBounds,
};

fn main() {
    let g = corpus::paw();
    let k = 1;
    let catalog = enumerate_k_labeled(k, CatalogBounds::new(3, 3, 2)).unwrap();
    println!("catalog: {} one-labeled graphs", catalog.len());

    let n = build_n(k, &g, &catalog);
    let a = build_a(k, &g);
    let m = build_m(k, &g, &catalog);
    println!("N is {}x{}, A is {}x{}, M is {}x{}", n.rows(), n.cols(), a.rows(), a.cols(), m.rows(), m.cols());

    println!("M = N^T A N holds: {}", verify_factorization(k, &g, &catalog));
    println!("rank N = {}, rank M = {}", rank_exact(&n), rank_exact(&m));

    println!("\nfirst rows of N (rows = nodes of the paw, columns = catalog):");
    for row in n.to_string_rows() {
        println!("  [{}]", row.join(", "));
    }
}
