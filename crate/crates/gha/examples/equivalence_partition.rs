//! Maps that no k-labeled graph can tell apart form the blocks of the
//! map-equivalence partition; for twin-free graphs it coincides with the
//! automorphism orbit partition once the catalog is large enough.
//!
//!     cargo run --example equivalence_partition

use gha::{corpus, orbit_partition, verify_homeq, Escalation, VerifyStatus};

fn main() {
    for (name, g) in corpus::twin_free() {
        for k in [1, 2] {
            let report = verify_homeq(k, &g, &Escalation::default_for(k)).unwrap();
            println!(
                "{name:>14} k={k}: {} ({} blocks vs {} orbits, escalations {})",
                match report.status {
                    VerifyStatus::Equal => "equivalence == orbits",
                    VerifyStatus::InconclusiveAtBounds => "inconclusive at bounds",
                },
                report.blocks,
                report.orbit_blocks,
                report.escalations,
            );
        }
    }

    // A graph with twins is rejected: equivalence classes merge twin
    // images, orbits do not.
    let c4 = corpus::c4();
    println!(
        "\n4-cycle is refused (twins): {}",
        verify_homeq(1, &c4, &Escalation::default_for(1)).unwrap_err()
    );
    println!(
        "its orbit partition at k=1 has {} blocks",
        orbit_partition(&c4, 1).block_count()
    );
}
