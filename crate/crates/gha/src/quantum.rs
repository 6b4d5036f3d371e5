//! Quantum graphs: formal rational linear combinations of k-labeled graphs,
//! with the gluing product extended bilinearly.

use std::collections::BTreeMap;

use num::Zero;

use crate::labeled::KLabeledGraph;
use crate::rational::Rational;

/// An element of the graph algebra on k-labeled graphs. Terms are keyed by
/// canonical form; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumGraph {
    k: usize,
    terms: BTreeMap<KLabeledGraph, Rational>,
}

impl QuantumGraph {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// A single graph with coefficient 1.
    pub fn from_graph(f: &KLabeledGraph) -> Self {
        let mut q = Self::zero(f.k());
        q.add_term(f, Rational::from_integer(1.into()));
        q
    }

    /// Adds `coeff * f`, canonicalizing `f` and dropping cancelled terms.
    pub fn add_term(&mut self, f: &KLabeledGraph, coeff: Rational) {
        assert_eq!(f.k(), self.k, "term label count mismatch");
        if coeff.is_zero() {
            return;
        }
        let key = f.canonical_form();
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = f.canonical_form();
            self.terms.remove(&key);
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KLabeledGraph, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.k);
        for (f, coeff) in &self.terms {
            out.add_term(f, coeff * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "label count mismatch");
        let mut out = self.clone();
        for (f, coeff) in &other.terms {
            out.add_term(f, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    /// Bilinear extension of gluing: coefficients multiply, products are
    /// canonicalized and collected.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "label count mismatch");
        let mut out = Self::zero(self.k);
        for (f1, c1) in &self.terms {
            for (f2, c2) in &other.terms {
                out.add_term(&f1.glue(f2), c1 * c2);
            }
        }
        out
    }
}

/// Bilinear extension of [`KLabeledGraph::glue`] to quantum graphs.
pub fn quantum_product(x: &QuantumGraph, y: &QuantumGraph) -> QuantumGraph {
    x.product(y)
}
