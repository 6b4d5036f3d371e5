//! The algebra side of connection matrices.
//!
//! `f_k` sends a k-labeled graph to the vector of its partial hom numbers
//! over all `m^k` maps. It is an algebra homomorphism from the gluing
//! algebra of graphs to the pointwise-product algebra on map space, and it
//! preserves the two inner products. The image spans a subspace whose
//! dimension is the connection-matrix rank; its idempotent basis consists
//! of the indicator vectors of the map-equivalence classes (maps with
//! identical partial hom numbers for every catalog graph).
//!
//! The verification drivers escalate catalog bounds. Refining the
//! equivalence partition can never split an automorphism orbit, and rank
//! can never exceed the orbit count, so reaching the orbit partition (or
//! the orbit count) certifies the answer exactly and stops the scan; the
//! ceiling is only reached on inputs where the match fails.

use num::{One, Zero};
use serde::Serialize;

use crate::catalog::{enumerate_k_labeled, CatalogBounds, GraphCatalog};
use crate::connection::{connection_rank, n_column};
use crate::error::Error;
use crate::hom::{hom_quantum, map_count, MapAssignment};
use crate::labeled::KLabeledGraph;
use crate::matrix::RankTracker;
use crate::quantum::{quantum_product, QuantumGraph};
use crate::rational::Rational;
use crate::symmetry::{find_twins, orbit_count, orbit_partition, twin_quotient, TuplePartition};
use crate::weighted::WeightedGraph;

/// A rational vector indexed by all `m^k` maps in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraVector {
    k: usize,
    values: Vec<Rational>,
}

impl AlgebraVector {
    pub fn new(k: usize, values: Vec<Rational>) -> Self {
        Self { k, values }
    }

    /// The unit: all-ones over map space.
    pub fn unit(m: usize, k: usize) -> Self {
        Self {
            k,
            values: vec![Rational::one(); map_count(m, k)],
        }
    }

    pub fn zero_like(&self) -> Self {
        Self {
            k: self.k,
            values: vec![Rational::zero(); self.values.len()],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, idx: usize) -> &Rational {
        &self.values[idx]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.values.len(), other.values.len(), "length mismatch");
        Self {
            k: self.k,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            k: self.k,
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }
}

/// `f_k(F)`: the vector of partial hom numbers of `F` over all maps.
pub fn f_k(f: &KLabeledGraph, g: &WeightedGraph) -> AlgebraVector {
    AlgebraVector::new(f.k(), n_column(f, g, f.k()))
}

/// Linear extension of `f_k` to quantum graphs.
pub fn f_k_quantum(x: &QuantumGraph, g: &WeightedGraph) -> AlgebraVector {
    let mut out = AlgebraVector::new(x.k(), vec![Rational::zero(); map_count(g.m(), x.k())]);
    for (f, coeff) in x.terms() {
        out = out.add(&f_k(f, g).scale(coeff));
    }
    out
}

/// Pointwise product: maps multiply to themselves, distinct maps to zero.
pub fn algebra_product(x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
    assert_eq!(x.k(), y.k(), "label count mismatch");
    assert_eq!(x.len(), y.len(), "dimension mismatch");
    AlgebraVector::new(
        x.k(),
        x.values()
            .iter()
            .zip(y.values())
            .map(|(a, b)| a * b)
            .collect(),
    )
}

/// The graph-side inner product: hom of the glued product.
pub fn inner_product_g(x: &QuantumGraph, y: &QuantumGraph, g: &WeightedGraph) -> Rational {
    hom_quantum(&quantum_product(x, y), g)
}

/// The map-side inner product: sum of `alpha_phi x(phi) y(phi)`.
pub fn inner_product_a(x: &AlgebraVector, y: &AlgebraVector, g: &WeightedGraph) -> Rational {
    assert_eq!(x.k(), y.k(), "label count mismatch");
    let mut total = Rational::zero();
    for (idx, phi) in MapAssignment::all(g.m(), x.k()).enumerate() {
        let (a, b) = (x.get(idx), y.get(idx));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        total += crate::hom::alpha_weight(&phi, g) * a * b;
    }
    total
}

/// Contracts the last coordinate against the node weights:
/// `tr(x)(phi') = sum_c alpha_c x(phi' c)`.
pub fn trace_a(x: &AlgebraVector, g: &WeightedGraph) -> AlgebraVector {
    assert!(x.k() >= 1, "trace requires at least one label");
    let m = g.m();
    let values = x
        .values()
        .chunks(m)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .map(|(c, v)| g.alpha(c) * v)
                .sum()
        })
        .collect();
    AlgebraVector::new(x.k() - 1, values)
}

/// Dimension of the span of `f_k` over the catalog. Equals the
/// connection-matrix rank by construction.
pub fn quotient_dimension(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> usize {
    connection_rank(k, g, catalog)
}

/// Partition of map space by row equality over the catalog columns: two
/// maps are together when every catalog graph gives them the same partial
/// hom number.
pub fn equivalence_partition(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> TuplePartition {
    let mut refiner = PartitionRefiner::new(g.m(), k);
    for f in catalog.iter() {
        refiner.refine(&n_column(f, g, k));
    }
    refiner.into_partition()
}

/// Indicator vectors of the equivalence classes. They square to
/// themselves, annihilate each other pairwise, and sum to the unit.
pub fn idempotent_basis(k: usize, g: &WeightedGraph, catalog: &GraphCatalog) -> Vec<AlgebraVector> {
    indicators(g.m(), k, &equivalence_partition(k, g, catalog))
}

fn indicators(m: usize, k: usize, partition: &TuplePartition) -> Vec<AlgebraVector> {
    partition
        .blocks
        .iter()
        .map(|block| {
            let mut values = vec![Rational::zero(); map_count(m, k)];
            for &idx in block {
                values[idx] = Rational::one();
            }
            AlgebraVector::new(k, values)
        })
        .collect()
}

/// Incremental refinement of a tuple partition by column values.
struct PartitionRefiner {
    m: usize,
    k: usize,
    ids: Vec<usize>,
    blocks: usize,
}

impl PartitionRefiner {
    fn new(m: usize, k: usize) -> Self {
        Self {
            m,
            k,
            ids: vec![0; map_count(m, k)],
            blocks: 1,
        }
    }

    fn refine(&mut self, column: &[Rational]) -> bool {
        use std::collections::BTreeMap;
        let mut fresh: BTreeMap<(usize, &Rational), usize> = BTreeMap::new();
        let mut next = Vec::with_capacity(self.ids.len());
        for (idx, value) in column.iter().enumerate() {
            let slot = fresh.len();
            let id = *fresh.entry((self.ids[idx], value)).or_insert(slot);
            next.push(id);
        }
        let changed = fresh.len() != self.blocks;
        self.blocks = fresh.len();
        self.ids = next;
        changed
    }

    fn block_count(&self) -> usize {
        self.blocks
    }

    fn into_partition(self) -> TuplePartition {
        TuplePartition::from_block_ids(self.m, self.k, &self.ids)
    }
}

/// Escalating sequence of catalog bounds, from `start` to `ceiling` by
/// unit steps in every coordinate.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Escalation {
    pub start: CatalogBounds,
    pub ceiling: CatalogBounds,
}

impl Escalation {
    pub fn new(start: CatalogBounds, ceiling: CatalogBounds) -> Self {
        let ceiling = CatalogBounds::new(
            ceiling.max_nodes.max(start.max_nodes),
            ceiling.max_total_edges.max(start.max_total_edges),
            ceiling.max_multiplicity.max(start.max_multiplicity),
        );
        Self { start, ceiling }
    }

    /// Defaults for label count `k`: start at `(k+3, 6, 2)`, escalate to
    /// `(k+5, 8, 3)`.
    pub fn default_for(k: usize) -> Self {
        Self::new(
            CatalogBounds::default_for(k),
            CatalogBounds::new(k + 5, 8, 3),
        )
    }

    pub fn levels(&self) -> Vec<CatalogBounds> {
        let mut out = vec![self.start];
        let mut cur = self.start;
        while cur != self.ceiling {
            cur = CatalogBounds::new(
                (cur.max_nodes + 1).min(self.ceiling.max_nodes),
                (cur.max_total_edges + 1).min(self.ceiling.max_total_edges),
                (cur.max_multiplicity + 1).min(self.ceiling.max_multiplicity),
            );
            out.push(cur);
        }
        out
    }
}

/// How far an escalating scan went.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScanOutcome {
    pub bounds: CatalogBounds,
    pub escalations: usize,
    pub columns: usize,
}

/// Feeds catalog columns to `visit` level by level, skipping graphs
/// already seen at earlier bounds. Stops when `visit` returns `true`.
fn scan_columns<F>(k: usize, g: &WeightedGraph, esc: &Escalation, mut visit: F) -> ScanOutcome
where
    F: FnMut(&KLabeledGraph, Vec<Rational>) -> bool,
{
    let levels = esc.levels();
    let mut previous: Option<CatalogBounds> = None;
    let mut columns = 0;
    for (level, bounds) in levels.iter().enumerate() {
        let catalog =
            enumerate_k_labeled(k, *bounds).expect("escalation bounds always admit the unit");
        for f in catalog.iter() {
            if previous.is_some_and(|p| p.admits(f)) {
                continue;
            }
            columns += 1;
            if visit(f, n_column(f, g, k)) {
                return ScanOutcome {
                    bounds: *bounds,
                    escalations: level,
                    columns,
                };
            }
        }
        previous = Some(*bounds);
    }
    ScanOutcome {
        bounds: *levels.last().unwrap(),
        escalations: levels.len() - 1,
        columns,
    }
}

/// The rank-equals-orbits verdict for one graph and one `k`.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub rank: usize,
    pub orb: usize,
    pub equal: bool,
    pub bounds: CatalogBounds,
    pub escalations: usize,
}

/// Escalates catalog bounds until the connection rank reaches the orbit
/// count of the twin-free quotient (rank can never exceed it, so reaching
/// it is an exact certificate), or the ceiling is hit. Graphs with twins
/// are quotiented first; rank is unchanged by that.
pub fn verify_theorem(k: usize, g: &WeightedGraph, esc: &Escalation) -> TheoremReport {
    let g = twin_quotient(g);
    let orb = orbit_count(&g, k);
    let mut tracker = RankTracker::new();
    let outcome = scan_columns(k, &g, esc, |_, column| {
        tracker.add(column);
        tracker.rank() == orb
    });
    TheoremReport {
        rank: tracker.rank(),
        orb,
        equal: tracker.rank() == orb,
        bounds: outcome.bounds,
        escalations: outcome.escalations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyStatus {
    Equal,
    InconclusiveAtBounds,
}

/// Result of comparing the stabilized map-equivalence partition with the
/// automorphism orbit partition.
#[derive(Clone, Debug, Serialize)]
pub struct HomeqReport {
    pub status: VerifyStatus,
    pub blocks: usize,
    pub orbit_blocks: usize,
    pub bounds: CatalogBounds,
    pub escalations: usize,
    #[serde(skip)]
    pub partition: TuplePartition,
}

/// Escalates bounds and refines the map-equivalence partition of a
/// twin-free graph until it coincides with the orbit partition. Orbit
/// blocks can never be split (rows repeat along orbits), so coincidence is
/// exact; failure to coincide at the ceiling is reported as inconclusive,
/// never as a refutation.
pub fn verify_homeq(k: usize, g: &WeightedGraph, esc: &Escalation) -> Result<HomeqReport, Error> {
    let twins = find_twins(g);
    if !twins.is_discrete() {
        return Err(Error::NotTwinFree(twins));
    }
    let orbits = orbit_partition(g, k);
    let (partition, outcome) = stabilize_partition(k, g, esc, &orbits);
    let equal = partition == orbits;
    Ok(HomeqReport {
        status: if equal {
            VerifyStatus::Equal
        } else {
            VerifyStatus::InconclusiveAtBounds
        },
        blocks: partition.block_count(),
        orbit_blocks: orbits.block_count(),
        bounds: outcome.bounds,
        escalations: outcome.escalations,
        partition,
    })
}

/// Refines the equivalence partition toward `target`, stopping as soon as
/// the block counts meet. The result is always coarser than or equal to
/// `target`; that is asserted before returning.
fn stabilize_partition(
    k: usize,
    g: &WeightedGraph,
    esc: &Escalation,
    target: &TuplePartition,
) -> (TuplePartition, ScanOutcome) {
    let mut refiner = PartitionRefiner::new(g.m(), k);
    let goal = target.block_count();
    let outcome = scan_columns(k, g, esc, |_, column| {
        refiner.refine(&column);
        refiner.block_count() == goal
    });
    let partition = refiner.into_partition();
    assert!(
        target.refines(&partition),
        "equivalence partition split a target block; this is a bug"
    );
    (partition, outcome)
}

/// Stabilized map-equivalence partition for any graph (twins allowed).
/// The certified stopping point is the orbit partition of the twin-free
/// quotient pulled back along the twin classes, which no catalog column
/// can split.
pub fn stabilized_equivalence_partition(
    k: usize,
    g: &WeightedGraph,
    esc: &Escalation,
) -> (TuplePartition, ScanOutcome) {
    let target = pullback_quotient_orbits(g, k);
    stabilize_partition(k, g, esc, &target)
}

/// Orbit partition of the twin quotient, pulled back to `V(G)^k` along
/// the twin-class projection.
pub fn pullback_quotient_orbits(g: &WeightedGraph, k: usize) -> TuplePartition {
    let twins = find_twins(g);
    let class_of = twins.block_of(g.m());
    let quotient = twin_quotient(g);
    let qorbit_ids = orbit_partition(&quotient, k).block_ids();
    let qm = quotient.m();
    let ids: Vec<usize> = MapAssignment::all(g.m(), k)
        .map(|phi| {
            let projected =
                MapAssignment::new(phi.targets().iter().map(|&t| class_of[t]).collect());
            qorbit_ids[projected.index(qm)]
        })
        .collect();
    TuplePartition::from_block_ids(g.m(), k, &ids)
}

/// Certification that the catalog columns span exactly the
/// automorphism-invariant vectors.
#[derive(Clone, Debug, Serialize)]
pub struct HomrepReport {
    pub columns_invariant: bool,
    pub span_dim: usize,
    pub orb: usize,
    pub equal: bool,
    pub bounds: CatalogBounds,
    pub escalations: usize,
}

/// Checks that every scanned column is constant on automorphism orbits
/// (entrywise) and that the span of the columns reaches the invariant
/// subspace dimension, which is the orbit count.
pub fn verify_homrep(k: usize, g: &WeightedGraph, esc: &Escalation) -> HomrepReport {
    let orbits = orbit_partition(g, k);
    let orb = orbits.block_count();
    let mut invariant = true;
    let mut tracker = RankTracker::new();
    let outcome = scan_columns(k, g, esc, |_, column| {
        for block in &orbits.blocks {
            let first = &column[block[0]];
            if block.iter().any(|&idx| &column[idx] != first) {
                invariant = false;
            }
        }
        tracker.add(column);
        tracker.rank() == orb
    });
    HomrepReport {
        columns_invariant: invariant,
        span_dim: tracker.rank(),
        orb,
        equal: tracker.rank() == orb,
        bounds: outcome.bounds,
        escalations: outcome.escalations,
    }
}

/// Restricting two equivalent maps (dropping the last coordinate) must
/// land them in a common block one level down.
pub fn check_restriction_closure(level_k: &TuplePartition, level_km1: &TuplePartition) -> bool {
    assert_eq!(level_k.k, level_km1.k + 1);
    assert_eq!(level_k.m, level_km1.m);
    let down = level_km1.block_ids();
    level_k.blocks.iter().all(|block| {
        let first = down[block[0] / level_k.m];
        block.iter().all(|&idx| down[idx / level_k.m] == first)
    })
}

/// Every member of a block must see the same set of blocks one level up
/// among its one-coordinate extensions.
pub fn check_extension_property(level_k: &TuplePartition, level_kp1: &TuplePartition) -> bool {
    use std::collections::BTreeSet;
    assert_eq!(level_kp1.k, level_k.k + 1);
    assert_eq!(level_kp1.m, level_k.m);
    let up = level_kp1.block_ids();
    let m = level_k.m;
    let reachable = |idx: usize| -> BTreeSet<usize> {
        (0..m).map(|c| up[idx * m + c]).collect()
    };
    level_k.blocks.iter().all(|block| {
        let first = reachable(block[0]);
        block.iter().all(|&idx| reachable(idx) == first)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
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
    fn f_k_of_unit_is_all_ones() {
        let g = p3();
        let v = f_k(&KLabeledGraph::unit(2), &g);
        assert_eq!(v, AlgebraVector::unit(3, 2));
    }

    #[test]
    fn f_1_of_pendant_edge_counts_degrees() {
        let v = f_k(&KLabeledGraph::new(1, 2, [(0, 1, 1)]).unwrap(), &p3());
        assert_eq!(v.values(), &[int(1), int(2), int(1)]);
    }

    #[test]
    fn f_k_of_labeled_edge_reads_beta() {
        let g = WeightedGraph::new(
            vec![int(1), int(1)],
            vec![vec![ratio(1, 2), int(2)], vec![int(2), int(0)]],
        )
        .unwrap();
        let v = f_k(&KLabeledGraph::single_edge(2, 0, 1), &g);
        let expected: Vec<Rational> = MapAssignment::all(2, 2)
            .map(|phi| g.beta(phi.targets()[0], phi.targets()[1]).clone())
            .collect();
        assert_eq!(v.values(), &expected[..]);
    }

    #[test]
    fn algebra_product_has_unit_and_annihilators() {
        let u = AlgebraVector::unit(3, 1);
        let x = AlgebraVector::new(1, vec![int(2), int(0), int(-5)]);
        assert_eq!(algebra_product(&u, &x), x);
        let a = AlgebraVector::new(1, vec![int(1), int(0), int(0)]);
        let b = AlgebraVector::new(1, vec![int(0), int(1), int(1)]);
        assert_eq!(algebra_product(&a, &b), x.zero_like());
    }

    #[test]
    fn f_k_is_an_algebra_homomorphism() {
        let g = p3();
        let f1 = KLabeledGraph::new(2, 3, [(0, 2, 1), (1, 2, 1)]).unwrap();
        let f2 = KLabeledGraph::new(2, 3, [(0, 1, 1), (0, 2, 2)]).unwrap();
        assert_eq!(
            f_k(&f1.glue(&f2), &g),
            algebra_product(&f_k(&f1, &g), &f_k(&f2, &g))
        );
    }

    #[test]
    fn inner_products_agree_through_f_k() {
        let g = p3();
        for k in 0..=2usize {
            let c = catalog(k, k + 1, 2, 2);
            for f1 in c.iter() {
                for f2 in c.iter() {
                    let q1 = QuantumGraph::from_graph(f1);
                    let q2 = QuantumGraph::from_graph(f2);
                    assert_eq!(
                        inner_product_g(&q1, &q2, &g),
                        inner_product_a(&f_k(f1, &g), &f_k(f2, &g), &g)
                    );
                }
            }
        }
    }

    #[test]
    fn map_side_inner_product_on_basis_vectors() {
        let g = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        let basis = |idx: usize| {
            let mut v = vec![Rational::zero(); 4];
            v[idx] = int(1);
            AlgebraVector::new(2, v)
        };
        // A basis map against itself gives its alpha product, 0 otherwise.
        assert_eq!(inner_product_a(&basis(0), &basis(0), &g), ratio(1, 9));
        assert_eq!(inner_product_a(&basis(3), &basis(3), &g), ratio(4, 9));
        assert_eq!(inner_product_a(&basis(0), &basis(1), &g), int(0));
    }

    #[test]
    fn inner_product_g_examples() {
        let g = p2();
        let e1 = QuantumGraph::from_graph(&KLabeledGraph::unit(1));
        assert_eq!(inner_product_g(&e1, &e1, &g), int(2));
        let zero = QuantumGraph::zero(1);
        assert_eq!(inner_product_g(&e1, &zero, &g), int(0));
    }

    #[test]
    fn trace_contracts_last_coordinate() {
        let g = p3();
        let u2 = AlgebraVector::unit(3, 2);
        assert_eq!(trace_a(&u2, &g), AlgebraVector::unit(3, 1).scale(&int(3)));

        // Basis map (0,1) against unit weights lands on basis map (0).
        let mut v = vec![Rational::zero(); 9];
        v[MapAssignment::new(vec![0, 1]).index(3)] = int(1);
        let basis = AlgebraVector::new(2, v);
        let traced = trace_a(&basis, &g);
        let mut expect = vec![Rational::zero(); 3];
        expect[0] = int(1);
        assert_eq!(traced.values(), &expect[..]);
    }

    #[test]
    fn trace_commutes_with_f_k() {
        let g = p3();
        let c = catalog(2, 4, 3, 2);
        for f in c.iter().take(40) {
            assert_eq!(
                trace_a(&f_k(f, &g), &g),
                f_k(&f.trace_graph(), &g),
                "trace mismatch on {f}"
            );
        }
    }

    #[test]
    fn equivalence_partition_of_path_separates_middle() {
        let c = catalog(1, 2, 1, 1);
        let partition = equivalence_partition(1, &p3(), &c);
        assert_eq!(partition.blocks, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn unit_only_catalog_gives_no_information() {
        let c = catalog(1, 1, 0, 1);
        assert_eq!(c.len(), 1);
        let partition = equivalence_partition(1, &p3(), &c);
        assert_eq!(partition.block_count(), 1);
    }

    #[test]
    fn idempotents_square_annihilate_and_sum_to_unit() {
        let g = p3();
        let c = catalog(1, 3, 3, 2);
        let ws = idempotent_basis(1, &g, &c);
        assert_eq!(ws.len(), 2);
        let mut total = ws[0].zero_like();
        for (i, w) in ws.iter().enumerate() {
            assert_eq!(algebra_product(w, w), *w);
            for (j, w2) in ws.iter().enumerate() {
                if i != j {
                    assert_eq!(algebra_product(w, w2), w.zero_like());
                }
            }
            total = total.add(w);
        }
        assert_eq!(total, AlgebraVector::unit(3, 1));
    }

    #[test]
    fn theorem_report_on_edge() {
        let report = verify_theorem(1, &p2(), &Escalation::default_for(1));
        assert!(report.equal);
        assert_eq!(report.rank, 1);
        assert_eq!(report.orb, 1);
    }

    #[test]
    fn theorem_quotients_paths_with_twin_ends() {
        // The path's two ends share every edge weight, so the quotient has
        // two nodes with trivial automorphisms: rank 4 at k = 2, not the
        // orbit count 5 of the unquotiented path.
        let report = verify_theorem(2, &p3(), &Escalation::default_for(2));
        assert!(report.equal);
        assert_eq!(report.rank, 4);
        assert_eq!(report.orb, 4);
        assert_eq!(orbit_count(&p3(), 2), 5);
        // Direct elimination on the unquotiented path agrees with the
        // pullback picture: rank stays 4.
        let c = catalog(2, 4, 4, 2);
        assert_eq!(connection_rank(2, &p3(), &c), 4);
    }

    #[test]
    fn homeq_on_twin_free_graphs() {
        let report = verify_homeq(1, &p3(), &Escalation::default_for(1));
        assert!(report.is_err(), "path has twin ends");

        let report = verify_homeq(2, &p2(), &Escalation::default_for(2)).unwrap();
        assert_eq!(report.status, VerifyStatus::Equal);
        assert_eq!(report.blocks, report.orbit_blocks);
    }

    #[test]
    fn homrep_on_small_graphs() {
        let report = verify_homrep(1, &p3(), &Escalation::default_for(1));
        assert!(report.columns_invariant);
        assert!(report.equal);
        assert_eq!(report.span_dim, 2);

        let g = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap();
        let report = verify_homrep(1, &g, &Escalation::default_for(1));
        assert!(report.columns_invariant);
        assert_eq!(report.span_dim, 2);
        assert_eq!(report.orb, 2);
    }

    #[test]
    fn quotient_dimension_matches_rank() {
        let c = catalog(1, 4, 4, 2);
        assert_eq!(quotient_dimension(1, &p2(), &c), 1);
        assert_eq!(quotient_dimension(0, &p3(), &catalog(0, 3, 3, 2)), 1);
    }

    #[test]
    fn restriction_and_extension_closure_on_path() {
        let esc1 = Escalation::default_for(1);
        let esc2 = Escalation::default_for(2);
        let (p1, _) = stabilized_equivalence_partition(1, &p3(), &esc1);
        let (p2_, _) = stabilized_equivalence_partition(2, &p3(), &esc2);
        assert!(check_restriction_closure(&p2_, &p1));
        assert!(check_extension_property(&p1, &p2_));
    }

    #[test]
    fn pullback_orbits_match_direct_orbits_when_twin_free(){
        let g = p2();
        assert_eq!(pullback_quotient_orbits(&g, 2), orbit_partition(&g, 2));
    }
}
