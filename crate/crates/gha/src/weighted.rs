//! Weighted target graphs: positive rational node weights and a symmetric
//! rational edge-weight matrix. A zero edge weight plays the role of a
//! missing edge; diagonal entries are loop weights.

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::{format_rational, int, is_positive, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    alpha: Vec<Rational>,
    beta: Vec<Vec<Rational>>,
}

impl WeightedGraph {
    pub fn new(alpha: Vec<Rational>, beta: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let m = alpha.len();
        if m == 0 {
            return Err(Error::InvalidWeightedGraph("no nodes".into()));
        }
        if let Some(i) = alpha.iter().position(|a| !is_positive(a)) {
            return Err(Error::InvalidWeightedGraph(format!(
                "node weight {} at node {i} is not positive",
                format_rational(&alpha[i])
            )));
        }
        if beta.len() != m || beta.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidWeightedGraph(format!(
                "edge weight matrix is not {m}x{m}"
            )));
        }
        for i in 0..m {
            for j in i + 1..m {
                if beta[i][j] != beta[j][i] {
                    return Err(Error::InvalidWeightedGraph(format!(
                        "edge weights not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { alpha, beta })
    }

    /// Unweighted simple graph: unit node weights, 0/1 edge weights.
    pub fn from_simple_edges(m: usize, edges: &[(usize, usize)]) -> Self {
        let mut beta = vec![vec![Rational::zero(); m]; m];
        for &(u, v) in edges {
            assert!(u < m && v < m && u != v, "bad edge ({u},{v})");
            beta[u][v] = Rational::one();
            beta[v][u] = Rational::one();
        }
        Self {
            alpha: vec![int(1); m],
            beta,
        }
    }

    /// Number of nodes.
    pub fn m(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, i: usize) -> &Rational {
        &self.alpha[i]
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn beta(&self, i: usize, j: usize) -> &Rational {
        &self.beta[i][j]
    }

    pub fn beta_row(&self, i: usize) -> &[Rational] {
        &self.beta[i]
    }

    pub fn alpha_sum(&self) -> Rational {
        self.alpha.iter().sum()
    }

    /// Scales node weights so they sum to 1. Optional: nothing in the crate
    /// requires it, ranks and orbits are unaffected.
    pub fn normalize_alpha(&self) -> Self {
        let s = self.alpha_sum();
        Self {
            alpha: self.alpha.iter().map(|a| a / &s).collect(),
            beta: self.beta.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WeightedFile {
    alpha: Vec<String>,
    beta: Vec<Vec<String>>,
}

impl Serialize for WeightedGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WeightedFile {
            alpha: self.alpha.iter().map(format_rational).collect(),
            beta: self
                .beta
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightedGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = WeightedFile::deserialize(deserializer)?;
        let parse = |s: &String| parse_rational(s).map_err(serde::de::Error::custom);
        let alpha = file.alpha.iter().map(parse).collect::<Result<_, _>>()?;
        let beta = file
            .beta
            .iter()
            .map(|row| row.iter().map(parse).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        WeightedGraph::new(alpha, beta).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn validates_weights() {
        assert!(WeightedGraph::new(vec![], vec![]).is_err());
        assert!(WeightedGraph::new(vec![int(0)], vec![vec![int(1)]]).is_err());
        assert!(WeightedGraph::new(vec![int(1)], vec![vec![int(1), int(0)]]).is_err());
        let asym = WeightedGraph::new(
            vec![int(1), int(1)],
            vec![vec![int(0), int(1)], vec![int(2), int(0)]],
        );
        assert!(asym.is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = WeightedGraph::new(
            vec![ratio(1, 3), ratio(2, 3)],
            vec![vec![int(0), ratio(1, 2)], vec![ratio(1, 2), int(2)]],
        )
        .unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"alpha":["1/3","2/3"],"beta":[["0","1/2"],["1/2","2"]]}"#
        );
        let back: WeightedGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn normalization_scales_alpha_only() {
        let g = WeightedGraph::from_simple_edges(2, &[(0, 1)]);
        let n = g.normalize_alpha();
        assert_eq!(n.alpha_sum(), int(1));
        assert_eq!(n.beta(0, 1), g.beta(0, 1));
    }
}
