//! Twin classes, the twin-free quotient, and the fact that quotienting
//! never changes a hom number.
//!
//!     cargo run --example twins_and_quotient

use gha::{
    corpus, enumerate_k_labeled, find_twins, format_rational, hom, twin_quotient,
    verify_twin_free_rigidity, CatalogBounds,
};

fn main() {
    let c4 = corpus::c4();
    let twins = find_twins(&c4);
    println!("twin classes of the 4-cycle: {twins}");

    let q = twin_quotient(&c4);
    println!(
        "quotient: {} nodes, alpha [{}]",
        q.m(),
        q.alphas().iter().map(format_rational).collect::<Vec<_>>().join(", ")
    );

    let patterns = enumerate_k_labeled(0, CatalogBounds::new(4, 4, 2)).unwrap();
    let preserved = patterns.iter().all(|f| hom(f, &c4) == hom(f, &q));
    println!(
        "hom(F, C4) == hom(F, quotient) for all {} catalog patterns: {preserved}",
        patterns.len()
    );

    // On a twin-free graph, every edge-weight-preserving self-map is a
    // bijection; checked by full exhaustion over m^m maps.
    let bull = corpus::bull();
    println!(
        "rigidity of the bull graph (5^5 self-maps checked): {:?}",
        verify_twin_free_rigidity(&bull).unwrap()
    );
    println!(
        "rigidity check rejects the 4-cycle: {:?}",
        verify_twin_free_rigidity(&c4).unwrap_err().to_string()
    );
}
