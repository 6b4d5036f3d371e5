//! Deciding isomorphism of twin-free graphs by comparing hom numbers over
//! all small simple patterns, plus the two-apex gadget identity behind the
//! argument.
//!
//!     cargo run --example isomorphism_profiles

use gha::{
    corpus, decide_isomorphic, enumerate_k_labeled, gadget_apexes, gadget_join, hom_partial,
    CatalogBounds, IsoBounds, IsoVerdict, MapAssignment, WeightedGraph,
};

fn main() {
    // Two non-isomorphic graphs are caught by some pattern.
    let paw = corpus::paw();
    let p4 = corpus::p4();
    match decide_isomorphic(&paw, &p4, IsoBounds::default()).unwrap() {
        IsoVerdict::DistinguishedByPattern { pattern, hom_g1, hom_g2 } => {
            println!("paw vs P4: pattern {pattern} gives {hom_g1} vs {hom_g2}")
        }
        other => println!("unexpected: {other:?}"),
    }

    // A scrambled copy comes back with an explicit witness.
    let g = WeightedGraph::from_simple_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]);
    let h = WeightedGraph::from_simple_edges(5, &[(3, 1), (1, 4), (4, 0), (0, 2), (3, 4)]);
    match decide_isomorphic(&g, &h, IsoBounds::default()).unwrap() {
        IsoVerdict::IsomorphicWithWitness { witness } => {
            println!("scrambled copy: isomorphic, witness {:?}", witness.images())
        }
        other => println!("unexpected: {other:?}"),
    }

    // The gadget joins two graphs with looped apexes; when the two hom
    // profiles agree, both apexes root every connected pattern equally.
    let c5 = corpus::c5();
    let joined = gadget_join(&c5, &c5);
    let (v1, v2) = gadget_apexes(&c5, &c5);
    let patterns = enumerate_k_labeled(1, CatalogBounds::new(4, 4, 1))
        .unwrap()
        .connected_only();
    let agree = patterns.iter().all(|f| {
        hom_partial(f, &joined, &MapAssignment::new(vec![v1]))
            == hom_partial(f, &joined, &MapAssignment::new(vec![v2]))
    });
    println!(
        "gadget apexes agree on {} connected rooted patterns: {agree}",
        patterns.len()
    );
}
