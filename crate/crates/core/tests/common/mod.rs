// Shared random generators for integration tests.
#![allow(dead_code)]

use dischargekit::{Graph, Orientation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random orientation of a random simple graph with at most `max_arcs` arcs.
pub fn random_digraph<R: Rng>(rng: &mut R, max_arcs: usize) -> Orientation {
    let n = rng.gen_range(2..=7);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_arcs.min(pairs.len()));
    let arcs: Vec<_> = pairs[..m]
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    Orientation::from_arcs(n, &arcs).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Definitional count: every arc subset, keep the balanced ones.
pub fn eulerian_oracle(d: &Orientation) -> (u64, u64) {
    let arcs = d.arcs();
    let n = d.vertex_count();
    let (mut even, mut odd) = (0, 0);
    for mask in 0u32..1 << arcs.len() {
        let mut bal = vec![0i32; n];
        for (i, &(a, b)) in arcs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                bal[a] += 1;
                bal[b] -= 1;
            }
        }
        if bal.iter().all(|&x| x == 0) {
            if mask.count_ones() % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}

pub fn proper(g: &Graph, c: &[usize]) -> bool {
    g.edges().iter().all(|&(a, b)| c[a] != c[b])
}

/// Tries every element of the product of the lists.
pub fn colorable_oracle(g: &Graph, lists: &[Vec<usize>]) -> bool {
    let n = lists.len();
    let mut idx = vec![0usize; n];
    loop {
        let c: Vec<usize> = (0..n).map(|v| lists[v][idx[v]]).collect();
        if proper(g, &c) {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            idx[v] += 1;
            if idx[v] < lists[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}
