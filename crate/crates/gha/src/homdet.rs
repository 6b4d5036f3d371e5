//! Deciding isomorphism of twin-free weighted graphs through homomorphism
//! profiles.
//!
//! Equal hom numbers over all simple patterns force twin-free graphs to be
//! isomorphic. A finite truncation can only certify the two honest
//! directions: a pattern whose hom numbers differ proves non-isomorphism,
//! and an explicit weight-preserving permutation proves isomorphism.
//! Agreement on a finite profile alone is reported as inconclusive.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{enumerate_k_labeled, CatalogBounds, GraphCatalog};
use crate::error::Error;
use crate::hom::hom;
use crate::labeled::KLabeledGraph;
use crate::rational::{format_rational, Rational};
use crate::symmetry::{find_twins, Permutation};
use crate::weighted::WeightedGraph;

/// Joins two graphs with two fresh apex nodes: apex `v_i` is adjacent to
/// every node of `G_i` and carries a loop; all new weights are 1. The
/// apexes sit at indices `m1 + m2` and `m1 + m2 + 1`.
pub fn gadget_join(g1: &WeightedGraph, g2: &WeightedGraph) -> WeightedGraph {
    let (m1, m2) = (g1.m(), g2.m());
    let m = m1 + m2 + 2;
    let one = || Rational::from_integer(1.into());
    let mut alpha: Vec<Rational> = Vec::with_capacity(m);
    alpha.extend(g1.alphas().iter().cloned());
    alpha.extend(g2.alphas().iter().cloned());
    alpha.push(one());
    alpha.push(one());
    let mut beta = vec![vec![Rational::from_integer(0.into()); m]; m];
    for i in 0..m1 {
        for j in 0..m1 {
            beta[i][j] = g1.beta(i, j).clone();
        }
    }
    for i in 0..m2 {
        for j in 0..m2 {
            beta[m1 + i][m1 + j] = g2.beta(i, j).clone();
        }
    }
    let (v1, v2) = (m1 + m2, m1 + m2 + 1);
    for i in 0..m1 {
        beta[v1][i] = one();
        beta[i][v1] = one();
    }
    for i in 0..m2 {
        beta[v2][m1 + i] = one();
        beta[m1 + i][v2] = one();
    }
    beta[v1][v1] = one();
    beta[v2][v2] = one();
    WeightedGraph::new(alpha, beta).expect("gadget construction is always valid")
}

/// Node indices of the two apexes in `gadget_join(g1, g2)`.
pub fn gadget_apexes(g1: &WeightedGraph, g2: &WeightedGraph) -> (usize, usize) {
    (g1.m() + g2.m(), g1.m() + g2.m() + 1)
}

/// The vector of hom numbers of `g` over a catalog of 0-labeled simple
/// patterns, in catalog order.
pub fn hom_profile(g: &WeightedGraph, catalog: &GraphCatalog) -> Vec<Rational> {
    assert_eq!(catalog.k(), 0, "profiles use unlabeled patterns");
    assert!(
        catalog.graphs().iter().all(|f| f.is_simple()),
        "profiles use simple patterns"
    );
    catalog.graphs().par_iter().map(|f| hom(f, g)).collect()
}

/// Verdict of the profile-based isomorphism test.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IsoVerdict {
    /// A weight-preserving node bijection was found.
    IsomorphicWithWitness { witness: Permutation },
    /// A simple pattern with different hom numbers; the graphs cannot be
    /// isomorphic.
    DistinguishedByPattern {
        pattern: KLabeledGraph,
        hom_g1: String,
        hom_g2: String,
    },
    /// Profiles agree over the whole truncation but no witness was found.
    InconclusiveAtBounds { bounds: CatalogBounds },
}

/// Pattern bounds for [`decide_isomorphic`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IsoBounds {
    pub max_pattern_nodes: usize,
}

impl Default for IsoBounds {
    fn default() -> Self {
        Self {
            max_pattern_nodes: 5,
        }
    }
}

impl IsoBounds {
    fn catalog_bounds(&self) -> CatalogBounds {
        let n = self.max_pattern_nodes as u32;
        CatalogBounds::new(self.max_pattern_nodes, n * (n.saturating_sub(1)) / 2, 1)
    }
}

/// Compares hom profiles over all simple patterns within bounds; on
/// agreement, searches for an explicit isomorphism. Requires twin-free
/// inputs, since equal profiles only force isomorphism without twins.
pub fn decide_isomorphic(
    g1: &WeightedGraph,
    g2: &WeightedGraph,
    bounds: IsoBounds,
) -> Result<IsoVerdict, Error> {
    for g in [g1, g2] {
        let twins = find_twins(g);
        if !twins.is_discrete() {
            return Err(Error::NotTwinFree(twins));
        }
    }
    let catalog = enumerate_k_labeled(0, bounds.catalog_bounds())?;
    let profile1 = hom_profile(g1, &catalog);
    let profile2 = hom_profile(g2, &catalog);
    for (f, (h1, h2)) in catalog.iter().zip(profile1.iter().zip(&profile2)) {
        if h1 != h2 {
            return Ok(IsoVerdict::DistinguishedByPattern {
                pattern: f.clone(),
                hom_g1: format_rational(h1),
                hom_g2: format_rational(h2),
            });
        }
    }
    if g1.m() == g2.m() {
        if let Some(witness) = find_isomorphism(g1, g2) {
            debug_assert!(is_valid_witness(g1, g2, &witness));
            return Ok(IsoVerdict::IsomorphicWithWitness { witness });
        }
    }
    Ok(IsoVerdict::InconclusiveAtBounds {
        bounds: bounds.catalog_bounds(),
    })
}

/// Backtracking search for a node bijection carrying the weights of `g1`
/// onto `g2`.
pub fn find_isomorphism(g1: &WeightedGraph, g2: &WeightedGraph) -> Option<Permutation> {
    if g1.m() != g2.m() {
        return None;
    }
    let m = g1.m();
    let mut images = vec![0usize; m];
    let mut used = vec![false; m];
    fn search(
        g1: &WeightedGraph,
        g2: &WeightedGraph,
        level: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let m = g1.m();
        if level == m {
            return true;
        }
        'candidates: for j in 0..m {
            if used[j] || g1.alpha(level) != g2.alpha(j) || g1.beta(level, level) != g2.beta(j, j)
            {
                continue;
            }
            for prev in 0..level {
                if g1.beta(prev, level) != g2.beta(images[prev], j) {
                    continue 'candidates;
                }
            }
            images[level] = j;
            used[j] = true;
            if search(g1, g2, level + 1, images, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    if search(g1, g2, 0, &mut images, &mut used) {
        Some(Permutation::new(images))
    } else {
        None
    }
}

/// Entrywise validation of a claimed isomorphism.
pub fn is_valid_witness(g1: &WeightedGraph, g2: &WeightedGraph, sigma: &Permutation) -> bool {
    if g1.m() != g2.m() || sigma.len() != g1.m() {
        return false;
    }
    (0..g1.m()).all(|i| {
        g1.alpha(i) == g2.alpha(sigma.apply(i))
            && (0..g1.m()).all(|j| g1.beta(i, j) == g2.beta(sigma.apply(i), sigma.apply(j)))
    })
}
