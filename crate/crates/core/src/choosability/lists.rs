use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A list of admissible colors for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ListsJson", into = "ListsJson")]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ListsJson {
    lists: Vec<Vec<usize>>,
}

impl TryFrom<ListsJson> for ListAssignment {
    type Error = Error;
    fn try_from(j: ListsJson) -> Result<Self> {
        ListAssignment::new(j.lists)
    }
}

impl From<ListAssignment> for ListsJson {
    fn from(l: ListAssignment) -> Self {
        ListsJson { lists: l.lists }
    }
}

impl ListAssignment {
    /// Sorts and deduplicates each list; every list must be nonempty.
    pub fn new(mut lists: Vec<Vec<usize>>) -> Result<Self> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::InvalidInput(format!("empty list at vertex {v}")));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `{0, .., k-1}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        assert!(k >= 1);
        ListAssignment {
            lists: vec![(0..k).collect(); n],
        }
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub(crate) fn from_bits(bits: &[u64]) -> Self {
        let lists = bits
            .iter()
            .map(|&b| (0..64).filter(|&c| b >> c & 1 == 1).collect())
            .collect();
        ListAssignment { lists }
    }
}

/// Colors `graph` from `lists` if possible. Exhaustive: `None` means no
/// proper list coloring exists.
pub fn l_color(graph: &Graph, lists: &ListAssignment) -> Result<Option<Vec<usize>>> {
    let n = graph.vertex_count();
    if lists.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} lists for {} vertices",
            lists.len(),
            n
        )));
    }
    // dense relabelling of the colors that occur
    let mut dense: BTreeMap<usize, usize> = BTreeMap::new();
    for l in lists.lists() {
        for &c in l {
            let next = dense.len();
            dense.entry(c).or_insert(next);
        }
    }
    let palette: Vec<usize> = {
        let mut p = vec![0; dense.len()];
        for (&c, &i) in &dense {
            p[i] = c;
        }
        p
    };
    if n <= 64 && dense.len() <= 64 {
        let bits: Vec<u64> = lists
            .lists()
            .iter()
            .map(|l| l.iter().fold(0u64, |m, c| m | 1 << dense[c]))
            .collect();
        let adj = graph.adjacency_masks();
        return Ok(color_bits(&adj, &bits).map(|col| col.iter().map(|&i| palette[i as usize]).collect()));
    }
    Ok(color_general(graph, lists))
}

/// Backtracking list coloring over bitset lists; picks the uncolored vertex
/// with the fewest remaining options first.
pub(crate) fn color_bits(adj: &[u64], lists: &[u64]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    if bits_rec(adj, lists, &mut color, 0, n) {
        Some(color)
    } else {
        None
    }
}

fn available(adj: &[u64], lists: &[u64], color: &[u8], v: usize) -> u64 {
    let mut avail = lists[v];
    let mut nb = adj[v];
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if color[w] != u8::MAX {
            avail &= !(1u64 << color[w]);
        }
    }
    avail
}

fn bits_rec(adj: &[u64], lists: &[u64], color: &mut [u8], done: usize, n: usize) -> bool {
    if done == n {
        return true;
    }
    let mut best = usize::MAX;
    let mut best_avail = 0u64;
    let mut best_count = u32::MAX;
    for v in 0..n {
        if color[v] != u8::MAX {
            continue;
        }
        let a = available(adj, lists, color, v);
        let c = a.count_ones();
        if c < best_count {
            best = v;
            best_avail = a;
            best_count = c;
            if c == 0 {
                return false;
            }
        }
    }
    let mut a = best_avail;
    while a != 0 {
        let c = a.trailing_zeros();
        a &= a - 1;
        color[best] = c as u8;
        if bits_rec(adj, lists, color, done + 1, n) {
            return true;
        }
    }
    color[best] = u8::MAX;
    false
}

fn color_general(graph: &Graph, lists: &ListAssignment) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    fn rec(g: &Graph, lists: &ListAssignment, color: &mut Vec<Option<usize>>, done: usize) -> bool {
        if done == color.len() {
            return true;
        }
        let opts = |v: usize, color: &[Option<usize>]| -> Vec<usize> {
            lists
                .list(v)
                .iter()
                .copied()
                .filter(|&c| g.neighbors(v).iter().all(|&w| color[w] != Some(c)))
                .collect()
        };
        let (v, options) = (0..color.len())
            .filter(|&v| color[v].is_none())
            .map(|v| (v, opts(v, color)))
            .min_by_key(|(_, o)| o.len())
            .expect("an uncolored vertex remains");
        for c in options {
            color[v] = Some(c);
            if rec(g, lists, color, done + 1) {
                return true;
            }
        }
        color[v] = None;
        false
    }
    if rec(graph, lists, &mut color, 0) {
        Some(color.into_iter().map(|c| c.expect("all colored")).collect())
    } else {
        None
    }
}

/// Checks that `coloring` is proper and respects `lists`.
pub fn is_proper_list_coloring(graph: &Graph, lists: &ListAssignment, coloring: &[usize]) -> bool {
    coloring.len() == graph.vertex_count()
        && coloring
            .iter()
            .enumerate()
            .all(|(v, c)| lists.list(v).binary_search(c).is_ok())
        && graph.edges().iter().all(|&(a, b)| coloring[a] != coloring[b])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(l: &[&[usize]]) -> ListAssignment {
        ListAssignment::new(l.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn edgeless_always_colorable() {
        let g = Graph::empty(3);
        let l = lists(&[&[7], &[7], &[1, 9]]);
        let c = l_color(&g, &l).unwrap().unwrap();
        assert!(is_proper_list_coloring(&g, &l, &c));
    }

    #[test]
    fn triangle_two_colors_fails() {
        let l = ListAssignment::uniform(3, 2);
        assert_eq!(l_color(&Graph::cycle(3), &l).unwrap(), None);
    }

    #[test]
    fn square_two_colors_alternates() {
        let g = Graph::cycle(4);
        let l = lists(&[&[1, 2], &[1, 2], &[1, 2], &[1, 2]]);
        let c = l_color(&g, &l).unwrap().unwrap();
        assert!(is_proper_list_coloring(&g, &l, &c));
        assert_ne!(c[0], c[1]);
    }

    #[test]
    fn large_palette_uses_general_solver() {
        let g = Graph::complete(3);
        let l = lists(&[&[1000, 1], &[1000], &[1]]);
        assert_eq!(l_color(&g, &l).unwrap(), None);
        let many: Vec<Vec<usize>> = (0..3).map(|v| (v * 40..v * 40 + 40).collect()).collect();
        let l = ListAssignment::new(many).unwrap();
        let c = l_color(&g, &l).unwrap().unwrap();
        assert!(is_proper_list_coloring(&g, &l, &c));
    }

    #[test]
    fn empty_list_rejected() {
        assert!(ListAssignment::new(vec![vec![]]).is_err());
        assert!(serde_json::from_str::<ListAssignment>(r#"{"lists":[[]]}"#).is_err());
    }

    #[test]
    fn wrong_length_rejected() {
        assert!(l_color(&Graph::empty(2), &ListAssignment::uniform(1, 1)).is_err());
    }
}
