//! Hypotheses on 5-cycles. Two cycles are adjacent when they share at least
//! one edge.

use serde::{Deserialize, Serialize};

use super::cycles::{cycle_edges, enumerate_cycles, shared_edges};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditionId {
    /// No 5-cycle lies in a 5-wheel or shares exactly one edge with a 3-cycle.
    Thm1,
    /// No 5-cycle is adjacent to two 3-cycles or to a 4-cycle with a chord.
    Thm2,
    /// No 5-cycle is adjacent to a 3-cycle.
    Corollary,
}

impl ConditionId {
    pub const ALL: [ConditionId; 3] = [ConditionId::Thm1, ConditionId::Thm2, ConditionId::Corollary];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::Thm1 => "Thm1",
            ConditionId::Thm2 => "Thm2",
            ConditionId::Corollary => "Corollary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub holds: bool,
    /// Offending 5-cycles, canonical form.
    pub witnesses: Vec<Vec<usize>>,
}

struct CycleData {
    pentagons: Vec<Vec<usize>>,
    triangles: Vec<Vec<(usize, usize)>>,
    chorded_squares: Vec<Vec<(usize, usize)>>,
}

impl CycleData {
    fn new(g: &Graph) -> Self {
        let pentagons = enumerate_cycles(g, 5).expect("length 5 supported");
        let triangles = enumerate_cycles(g, 3)
            .expect("length 3 supported")
            .iter()
            .map(|c| cycle_edges(c))
            .collect();
        let chorded_squares = enumerate_cycles(g, 4)
            .expect("length 4 supported")
            .iter()
            .filter(|c| g.has_edge(c[0], c[2]) || g.has_edge(c[1], c[3]))
            .map(|c| cycle_edges(c))
            .collect();
        CycleData {
            pentagons,
            triangles,
            chorded_squares,
        }
    }
}

fn in_five_wheel(g: &Graph, c: &[usize]) -> bool {
    (0..g.vertex_count()).any(|h| !c.contains(&h) && c.iter().all(|&v| g.has_edge(h, v)))
}

fn violates(g: &Graph, data: &CycleData, which: ConditionId, c: &[usize]) -> bool {
    let edges = cycle_edges(c);
    let tri_shared = || data.triangles.iter().map(|t| shared_edges(&edges, t));
    match which {
        ConditionId::Thm1 => in_five_wheel(g, c) || tri_shared().any(|k| k == 1),
        ConditionId::Thm2 => {
            tri_shared().filter(|&k| k >= 1).count() >= 2
                || data
                    .chorded_squares
                    .iter()
                    .any(|q| shared_edges(&edges, q) >= 1)
        }
        ConditionId::Corollary => tri_shared().any(|k| k >= 1),
    }
}

pub fn check_condition(graph: &Graph, which: ConditionId) -> ConditionReport {
    let data = CycleData::new(graph);
    report(graph, &data, which)
}

/// Reports for all three conditions, sharing one cycle enumeration.
pub fn check_all_conditions(graph: &Graph) -> Vec<ConditionReport> {
    let data = CycleData::new(graph);
    ConditionId::ALL
        .iter()
        .map(|&which| report(graph, &data, which))
        .collect()
}

fn report(graph: &Graph, data: &CycleData, which: ConditionId) -> ConditionReport {
    let witnesses: Vec<Vec<usize>> = data
        .pentagons
        .iter()
        .filter(|c| violates(graph, data, which, c))
        .cloned()
        .collect();
    ConditionReport {
        condition: which.name().to_string(),
        holds: witnesses.is_empty(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_satisfies_everything() {
        for r in check_all_conditions(&Graph::cycle(5)) {
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn five_wheel_violates_thm1_with_rim() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::new(6, &edges).unwrap();
        let r = check_condition(&g, ConditionId::Thm1);
        assert!(!r.holds);
        assert!(r.witnesses.contains(&vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn glued_triangle() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(0, 5), (1, 5)]);
        let g = Graph::new(6, &edges).unwrap();
        assert!(!check_condition(&g, ConditionId::Corollary).holds);
        assert!(!check_condition(&g, ConditionId::Thm1).holds);
        assert!(check_condition(&g, ConditionId::Thm2).holds);
    }

    #[test]
    fn report_json_shape() {
        let r = check_condition(&Graph::cycle(5), ConditionId::Corollary);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"condition":"Corollary","holds":true,"witnesses":[]}"#
        );
    }
}
