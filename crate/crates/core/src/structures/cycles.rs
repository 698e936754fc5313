use crate::error::{Error, Result};
use crate::graph::Graph;

/// All cycles of the given length (3, 4 or 5), each once. A cycle is
/// reported starting at its least vertex, in the direction whose second
/// vertex is smaller than its last. The list is sorted.
pub fn enumerate_cycles(graph: &Graph, length: usize) -> Result<Vec<Vec<usize>>> {
    if !(3..=5).contains(&length) {
        return Err(Error::UnsupportedLength(length));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(length);
    for s in 0..graph.vertex_count() {
        path.push(s);
        extend(graph, length, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend(g: &Graph, length: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == length {
        if g.has_edge(last, s) && path[1] < path[length - 1] {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > s && !path.contains(&w) {
            path.push(w);
            extend(g, length, path, out);
            path.pop();
        }
    }
}

/// Canonical edges `(min, max)` of a closed vertex sequence.
pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let k = cycle.len();
    let mut e: Vec<_> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

pub(crate) fn shared_edges(a: &[(usize, usize)], b: &[(usize, usize)]) -> usize {
    a.iter().filter(|e| b.binary_search(e).is_ok()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_triangles_and_squares() {
        let g = Graph::complete(4);
        assert_eq!(enumerate_cycles(&g, 3).unwrap().len(), 4);
        assert_eq!(enumerate_cycles(&g, 4).unwrap().len(), 3);
    }

    #[test]
    fn c5_single_cycle() {
        assert_eq!(
            enumerate_cycles(&Graph::cycle(5), 5).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
    }

    #[test]
    fn unsupported_length() {
        assert!(matches!(
            enumerate_cycles(&Graph::cycle(6), 6),
            Err(Error::UnsupportedLength(6))
        ));
    }

    #[test]
    fn edges_of_cycle() {
        assert_eq!(cycle_edges(&[2, 0, 1]), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
