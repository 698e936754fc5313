//! Fixed configurations excluded from a minimal counterexample, matched as
//! (non-induced) subgraphs with degree constraints evaluated in the host.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FixedConfig {
    /// A trio with `d(x) <= 5` and the other four vertices of degree 4.
    H,
    /// A trio whose vertex `u` has degree 5, all others degree 4.
    TrioHeavyCorner,
    /// Two 4-cycles sharing an edge, all six vertices of degree 4.
    Domino,
    /// A 4-cycle and a triangle sharing an edge; the shared vertex on the
    /// square's far side has degree 5, all others degree 4.
    HouseWithDegreeFive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConstraint {
    Exactly(usize),
    AtMost(usize),
}

impl DegreeConstraint {
    pub fn admits(self, d: usize) -> bool {
        match self {
            DegreeConstraint::Exactly(k) => d == k,
            DegreeConstraint::AtMost(k) => d <= k,
        }
    }
}

pub struct Pattern {
    pub config: FixedConfig,
    pub labels: &'static [&'static str],
    pub edges: &'static [(usize, usize)],
    pub degrees: Vec<DegreeConstraint>,
}

/// Trio edges over labels x=0, y=1, u=2, v=3, w=4.
pub const TRIO_EDGES: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (3, 4)];
pub const TRIO_LABELS: &[&str] = &["x", "y", "u", "v", "w"];

/// Domino over a=0 .. f=5: bottom row a-e-f, top row b-c-d.
pub const DOMINO_EDGES: &[(usize, usize)] = &[(0, 1), (0, 4), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)];
pub const DOMINO_LABELS: &[&str] = &["a", "b", "c", "d", "e", "f"];

/// House over p=0, q=1, r=2, s=3, t=4: square p-q-r-s, triangle r-s-t.
pub const HOUSE_EDGES: &[(usize, usize)] = &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)];
pub const HOUSE_LABELS: &[&str] = &["p", "q", "r", "s", "t"];

impl FixedConfig {
    pub const ALL: [FixedConfig; 4] = [
        FixedConfig::H,
        FixedConfig::TrioHeavyCorner,
        FixedConfig::Domino,
        FixedConfig::HouseWithDegreeFive,
    ];

    pub fn pattern(self) -> Pattern {
        use DegreeConstraint::*;
        match self {
            FixedConfig::H => Pattern {
                config: self,
                labels: TRIO_LABELS,
                edges: TRIO_EDGES,
                degrees: vec![AtMost(5), Exactly(4), Exactly(4), Exactly(4), Exactly(4)],
            },
            FixedConfig::TrioHeavyCorner => Pattern {
                config: self,
                labels: TRIO_LABELS,
                edges: TRIO_EDGES,
                degrees: vec![Exactly(4), Exactly(4), Exactly(5), Exactly(4), Exactly(4)],
            },
            FixedConfig::Domino => Pattern {
                config: self,
                labels: DOMINO_LABELS,
                edges: DOMINO_EDGES,
                degrees: vec![Exactly(4); 6],
            },
            FixedConfig::HouseWithDegreeFive => Pattern {
                config: self,
                labels: HOUSE_LABELS,
                edges: HOUSE_EDGES,
                degrees: vec![Exactly(4), Exactly(4), Exactly(5), Exactly(4), Exactly(4)],
            },
        }
    }
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        Graph::new(self.labels.len(), self.edges).expect("pattern graphs are simple")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigMatch {
    pub config: FixedConfig,
    /// Host vertex for each pattern vertex, in pattern label order.
    pub mapping: Vec<usize>,
    pub labels: Vec<String>,
}

/// All embeddings of `pattern` into `host`; embeddings with the same image
/// edge set are reported once (the lexicographically least mapping).
pub fn match_pattern(host: &Graph, pattern: &Pattern) -> Vec<ConfigMatch> {
    let pg = pattern.graph();
    let k = pg.vertex_count();
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut mapping = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    search(host, pattern, &pg, 0, &mut mapping, &mut used, &mut |m| {
        let mut image: Vec<_> = pattern
            .edges
            .iter()
            .map(|&(a, b)| (m[a].min(m[b]), m[a].max(m[b])))
            .collect();
        image.sort_unstable();
        if seen.insert(image) {
            out.push(ConfigMatch {
                config: pattern.config,
                mapping: m.to_vec(),
                labels: pattern.labels.iter().map(|s| s.to_string()).collect(),
            });
        }
    });
    out
}

fn search(
    host: &Graph,
    pattern: &Pattern,
    pg: &Graph,
    i: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if i == pg.vertex_count() {
        emit(mapping);
        return;
    }
    for h in 0..host.vertex_count() {
        if used[h] || !pattern.degrees[i].admits(host.degree(h)) {
            continue;
        }
        let fits = pg
            .neighbors(i)
            .iter()
            .filter(|&&j| j < i)
            .all(|&j| host.has_edge(h, mapping[j]));
        if !fits {
            continue;
        }
        mapping[i] = h;
        used[h] = true;
        search(host, pattern, pg, i + 1, mapping, used, emit);
        used[h] = false;
    }
    mapping[i] = usize::MAX;
}

/// Matches of every fixed configuration, grouped in `FixedConfig::ALL` order.
pub fn find_fixed_configs(host: &Graph) -> Vec<ConfigMatch> {
    FixedConfig::ALL
        .iter()
        .flat_map(|c| match_pattern(host, &c.pattern()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_matches_nothing() {
        assert!(find_fixed_configs(&Graph::cycle(5)).is_empty());
    }

    #[test]
    fn bare_trio_fails_degree_constraints() {
        let g = Graph::new(5, TRIO_EDGES).unwrap();
        assert!(find_fixed_configs(&g).is_empty());
    }

    #[test]
    fn degree_constraint() {
        assert!(DegreeConstraint::AtMost(5).admits(4));
        assert!(!DegreeConstraint::Exactly(4).admits(5));
    }
}
