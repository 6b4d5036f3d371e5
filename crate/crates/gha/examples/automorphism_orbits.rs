//! Automorphism groups and their orbits on ordered k-tuples.
//!
//!     cargo run --example automorphism_orbits

use gha::{automorphisms, corpus, orbit_count, orbit_partition};

fn main() {
    for (name, g) in [
        ("p3", corpus::p3()),
        ("c5", corpus::c5()),
        ("k4", corpus::k4()),
        ("asymmetric6", corpus::asymmetric6()),
        ("weighted_p2", corpus::weighted_p2()),
    ] {
        let auts = automorphisms(&g);
        println!(
            "{name}: |Aut| = {}, orb_1 = {}, orb_2 = {}",
            auts.len(),
            orbit_count(&g, 1),
            orbit_count(&g, 2)
        );
    }

    println!("\norbits of node pairs of the path on three nodes:");
    let orbits = orbit_partition(&corpus::p3(), 2);
    for block in orbits.tuples() {
        let pairs: Vec<String> = block
            .iter()
            .map(|t| format!("({},{})", t[0], t[1]))
            .collect();
        println!("  {{{}}}", pairs.join(" "));
    }
}
