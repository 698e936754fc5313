//! Orientations of a graph's edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A digraph obtained by directing every edge of `base` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    // arcs[i] directs base.edges()[i]
    arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrientationJson {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Builds an orientation from an arc list; the base graph is the
    /// underlying undirected graph.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let base = Graph::new(n, arcs)?;
        let mut directed = base.edges().to_vec();
        for &(t, h) in arcs {
            let i = base.edge_index(t, h).expect("arc is a base edge");
            directed[i] = (t, h);
        }
        Ok(Orientation {
            base,
            arcs: directed,
        })
    }

    /// `reversed[i]` selects `max -> min` for the i-th canonical edge.
    pub fn from_directions(base: &Graph, reversed: &[bool]) -> Self {
        assert_eq!(reversed.len(), base.edge_count());
        let arcs = base
            .edges()
            .iter()
            .zip(reversed)
            .map(|(&(a, b), &r)| if r { (b, a) } else { (a, b) })
            .collect();
        Orientation {
            base: base.clone(),
            arcs,
        }
    }

    pub fn from_json(json: &OrientationJson) -> Result<Self> {
        Self::from_arcs(json.n, &json.arcs)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> OrientationJson {
        OrientationJson {
            n: self.base.vertex_count(),
            arcs: self.arcs.clone(),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn outdegrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for &(t, _) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    pub fn indegrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for &(_, h) in &self.arcs {
            d[h] += 1;
        }
        d
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            base: self.base.clone(),
            arcs: self.arcs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }
}

/// Lazily enumerates orientations whose outdegree at `v` is at most
/// `bounds[v]`, in lexicographic order of the direction vector over the
/// canonical edge order (`min -> max` first).
#[derive(Debug, Clone)]
pub struct Orientations {
    base: Graph,
    bounds: Vec<usize>,
    outdeg: Vec<usize>,
    choice: Vec<u8>,
    started: bool,
    done: bool,
}

impl Orientations {
    fn new(base: &Graph, bounds: Vec<usize>) -> Self {
        Orientations {
            base: base.clone(),
            bounds,
            outdeg: vec![0; base.vertex_count()],
            choice: Vec::with_capacity(base.edge_count()),
            started: false,
            done: false,
        }
    }

    fn tail(&self, i: usize, c: u8) -> usize {
        let (a, b) = self.base.edges()[i];
        if c == 0 {
            a
        } else {
            b
        }
    }

    // Tries directions >= `from` for edge `choice.len()`; pushes on success.
    fn push_from(&mut self, from: u8) -> bool {
        let i = self.choice.len();
        for c in from..2 {
            let t = self.tail(i, c);
            if self.outdeg[t] < self.bounds[t] {
                self.outdeg[t] += 1;
                self.choice.push(c);
                return true;
            }
        }
        false
    }

    fn pop(&mut self) -> Option<u8> {
        let c = self.choice.pop()?;
        let i = self.choice.len();
        let t = self.tail(i, c);
        self.outdeg[t] -= 1;
        Some(c)
    }

    fn advance(&mut self) -> bool {
        let m = self.base.edge_count();
        // `retry` is the direction to try next at the current depth.
        let mut retry = if self.started {
            match self.pop() {
                Some(c) => c + 1,
                None => return false,
            }
        } else {
            self.started = true;
            0
        };
        loop {
            if self.choice.len() == m {
                return true;
            }
            if self.push_from(retry) {
                retry = 0;
            } else {
                match self.pop() {
                    Some(c) => retry = c + 1,
                    None => return false,
                }
            }
        }
    }
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.done {
            return None;
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        let reversed: Vec<bool> = self.choice.iter().map(|&c| c == 1).collect();
        Some(Orientation::from_directions(&self.base, &reversed))
    }
}

/// Every orientation with all outdegrees at most `bound`.
pub fn orientations_with_max_outdegree(graph: &Graph, bound: usize) -> Orientations {
    Orientations::new(graph, vec![bound; graph.vertex_count()])
}

/// Every orientation with outdegree at `v` at most `bounds[v]`.
pub fn orientations_with_outdegree_bounds(graph: &Graph, bounds: &[usize]) -> Result<Orientations> {
    if bounds.len() != graph.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "{} bounds for {} vertices",
            bounds.len(),
            graph.vertex_count()
        )));
    }
    Ok(Orientations::new(graph, bounds.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn single_edge_bound_one() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let all: Vec<_> = orientations_with_max_outdegree(&g, 1).collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].arcs(), &[(0, 1)]);
        assert_eq!(all[1].arcs(), &[(1, 0)]);
    }

    #[test]
    fn triangle_bound_one_gives_two_cycles() {
        let g = Graph::cycle(3);
        // oracle: all 8 direction vectors filtered by outdegree
        let mut expected = HashSet::new();
        for mask in 0..8u32 {
            let rev: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
            let o = Orientation::from_directions(&g, &rev);
            if o.outdegrees().iter().all(|&d| d <= 1) {
                expected.insert(o);
            }
        }
        let got: HashSet<_> = orientations_with_max_outdegree(&g, 1).collect();
        assert_eq!(expected.len(), 2);
        assert_eq!(got, expected);
    }

    #[test]
    fn triangle_bound_zero_is_empty() {
        assert_eq!(orientations_with_max_outdegree(&Graph::cycle(3), 0).count(), 0);
    }

    #[test]
    fn edgeless_graph_has_one_orientation() {
        assert_eq!(orientations_with_max_outdegree(&Graph::empty(3), 0).count(), 1);
    }

    #[test]
    fn vacuous_bound_gives_all() {
        let g = Graph::complete(5);
        let all: HashSet<_> = orientations_with_max_outdegree(&g, 5).collect();
        assert_eq!(all.len(), 1 << 10);
    }

    #[test]
    fn from_arcs_rejects_antiparallel() {
        assert!(Orientation::from_arcs(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn degree_sums() {
        let o = Orientation::from_arcs(3, &[(0, 1), (2, 1), (2, 0)]).unwrap();
        assert_eq!(o.outdegrees(), vec![1, 0, 2]);
        assert_eq!(o.indegrees(), vec![1, 2, 0]);
    }
}
