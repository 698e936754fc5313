//! Trios and the good/bad/worse/worst roles of vertices on 3-cycles.
//!
//! A trio is five distinct vertices `x, y, u, v, w` with edges
//! `xy, xu, xv, yv, yw, uv, vw`: three triangles `{x,u,v}`, `{x,y,v}`,
//! `{y,v,w}` fanned around the center `v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TrioOccurrence {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl TrioOccurrence {
    /// The three triangles, each as a sorted vertex triple.
    pub fn triangles(&self) -> [[usize; 3]; 3] {
        [
            sorted([self.x, self.u, self.v]),
            sorted([self.x, self.y, self.v]),
            sorted([self.y, self.v, self.w]),
        ]
    }

    pub fn contains_triangle(&self, t: [usize; 3]) -> bool {
        self.triangles().contains(&sorted(t))
    }

    pub fn vertices(&self) -> [usize; 5] {
        [self.x, self.y, self.u, self.v, self.w]
    }

    /// Number of the trio's triangles containing `s`.
    pub fn triangles_containing(&self, s: usize) -> usize {
        self.triangles().iter().filter(|t| t.contains(&s)).count()
    }
}

pub(crate) fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexRole {
    Good,
    Bad,
    Worse,
    Worst,
}

/// Every trio of `graph` (non-induced). Mirror images (`x <-> y`,
/// `u <-> w`) are reported once, with `x < y`; sorted by center first.
pub fn find_trios(graph: &Graph) -> Vec<TrioOccurrence> {
    let mut out = Vec::new();
    for v in 0..graph.vertex_count() {
        let link = graph.neighbors(v);
        for &x in link {
            for &y in link {
                if x >= y || !graph.has_edge(x, y) {
                    continue;
                }
                for &u in link {
                    if u == x || u == y || !graph.has_edge(u, x) {
                        continue;
                    }
                    for &w in link {
                        if w == x || w == y || w == u || !graph.has_edge(w, y) {
                            continue;
                        }
                        out.push(TrioOccurrence { x, y, u, v, w });
                    }
                }
            }
        }
    }
    out
}

/// Role of `s` on the 3-cycle `t`, aggregated over the given trios.
pub fn classify_role_among(trios: &[TrioOccurrence], s: usize, t: [usize; 3]) -> Result<VertexRole> {
    if !t.contains(&s) {
        return Err(Error::VertexNotOnCycle { vertex: s, cycle: t });
    }
    let containing: Vec<&TrioOccurrence> = trios.iter().filter(|o| o.contains_triangle(t)).collect();
    if containing.is_empty() {
        return Ok(VertexRole::Good);
    }
    if containing.iter().any(|o| o.v == s) {
        return Ok(VertexRole::Worst);
    }
    if containing.iter().all(|o| o.triangles_containing(s) == 1) {
        return Ok(VertexRole::Bad);
    }
    Ok(VertexRole::Worse)
}

/// Role of `s` on the 3-cycle `t` of `graph`.
pub fn classify_role(graph: &Graph, s: usize, t: [usize; 3]) -> Result<VertexRole> {
    let [a, b, c] = t;
    if !(graph.has_edge(a, b) && graph.has_edge(b, c) && graph.has_edge(a, c)) {
        return Err(Error::InvalidInput(format!("{t:?} is not a 3-cycle")));
    }
    classify_role_among(&find_trios(graph), s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    // x=0, y=1, u=2, v=3, w=4
    fn trio_graph() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn single_trio() {
        let trios = find_trios(&trio_graph());
        assert_eq!(trios, vec![TrioOccurrence { x: 0, y: 1, u: 2, v: 3, w: 4 }]);
    }

    #[test]
    fn roles_on_trio() {
        let g = trio_graph();
        assert_eq!(classify_role(&g, 3, [0, 2, 3]).unwrap(), VertexRole::Worst);
        assert_eq!(classify_role(&g, 2, [0, 2, 3]).unwrap(), VertexRole::Bad);
        assert_eq!(classify_role(&g, 0, [0, 2, 3]).unwrap(), VertexRole::Worse);
        assert_eq!(classify_role(&g, 1, [1, 3, 4]).unwrap(), VertexRole::Worse);
        assert_eq!(classify_role(&g, 4, [1, 3, 4]).unwrap(), VertexRole::Bad);
    }

    #[test]
    fn vertex_not_on_cycle() {
        assert!(matches!(
            classify_role(&trio_graph(), 4, [0, 2, 3]),
            Err(Error::VertexNotOnCycle { vertex: 4, .. })
        ));
    }

    #[test]
    fn k4_minus_edge_is_all_good() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_trios(&g).is_empty());
        for t in [[0, 1, 2], [1, 2, 3]] {
            for s in t {
                assert_eq!(classify_role(&g, s, t).unwrap(), VertexRole::Good);
            }
        }
    }

    #[test]
    fn no_triangles_no_trios() {
        assert!(find_trios(&Graph::cycle(5)).is_empty());
    }
}
