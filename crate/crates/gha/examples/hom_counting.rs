//! Exact homomorphism numbers: plain counts into unweighted targets,
//! weighted targets, and partial numbers with pinned labels.
//!
//!     cargo run --example hom_counting

use gha::{corpus, format_rational, hom, hom_partial, KLabeledGraph, MapAssignment};

fn main() {
    let k2 = KLabeledGraph::new(0, 2, [(0, 1, 1)]).unwrap();
    let triangle = KLabeledGraph::complete(3).forget_labels();
    let p5 = KLabeledGraph::new(0, 5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]).unwrap();

    let c5 = corpus::c5();
    println!("hom(K2, C5)       = {}", format_rational(&hom(&k2, &c5)));
    println!("hom(K3, C5)       = {}", format_rational(&hom(&triangle, &c5)));
    println!("hom(P5, C5)       = {}", format_rational(&hom(&p5, &c5)));

    // A weighted target: node weights 1/3 and 2/3 on a single edge.
    let wp2 = corpus::weighted_p2();
    println!(
        "hom(K2, weighted edge) = {}",
        format_rational(&hom(&k2, &wp2))
    );

    // Pinning the labeled node: the pendant edge rooted at each node of a
    // path counts weighted degrees.
    let pendant = KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap();
    let p3 = corpus::p3();
    for node in 0..3 {
        let phi = MapAssignment::new(vec![node]);
        println!(
            "hom_phi(pendant edge, P3, phi = {node}) = {}",
            format_rational(&hom_partial(&pendant, &p3, &phi))
        );
    }

    // Repeated edges take edge weights to powers; weight 1/2 doubled gives
    // factors of 1/4 per map.
    let doubled = KLabeledGraph::new(0, 2, [(0, 1, 2)]).unwrap();
    let wp3 = corpus::weighted_p3();
    println!(
        "hom(double edge, path with a 1/2 edge) = {}",
        format_rational(&hom(&doubled, &wp3))
    );
}
