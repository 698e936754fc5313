//! Independent brute-force oracles against the fast implementations.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use dischargekit::choosability::{canonicalize, for_each_canonical};
use dischargekit::structures::enumerate_cycles;
use dischargekit::{count_eulerian, l_color, Graph, Limits, ListAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{colorable_oracle, eulerian_oracle, proper, random_digraph, random_graph};

#[test]
fn eulerian_counts_match_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = Limits::default();
    let mut mismatches = 0;
    for _ in 0..100 {
        let d = random_digraph(&mut rng, 14);
        let c = count_eulerian(&d, &limits).unwrap();
        if (c.even, c.odd) != eulerian_oracle(&d) {
            mismatches += 1;
        }
    }
    assert_eq!(mismatches, 0);
}

#[test]
fn l_color_matches_product_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut uncolorable = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let palette = rng.gen_range(2..=6);
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let size = rng.gen_range(1..=4.min(palette));
                let mut l: Vec<usize> = rand::seq::index::sample(&mut rng, palette, size).into_vec();
                l.sort_unstable();
                l
            })
            .collect();
        let la = ListAssignment::new(lists.clone()).unwrap();
        let got = l_color(&g, &la).unwrap();
        let expected = colorable_oracle(&g, &lists);
        assert_eq!(got.is_some(), expected, "graph {:?} lists {:?}", g.edges(), lists);
        if let Some(c) = got {
            assert!(proper(&g, &c));
            assert!((0..n).all(|v| lists[v].contains(&c[v])));
        } else {
            uncolorable += 1;
        }
    }
    // the sample must exercise both outcomes
    assert!(uncolorable > 0 && uncolorable < 100);
}

fn brute_cycles(g: &Graph, len: usize) -> BTreeSet<Vec<usize>> {
    fn extend(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if path.len() == len {
            if g.has_edge(path[0], path[len - 1]) && path[1] < path[len - 1] {
                out.insert(path.clone());
            }
            return;
        }
        for v in 0..g.vertex_count() {
            if v > path[0] && !path.contains(&v) && g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                extend(g, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.vertex_count() {
        extend(g, len, &mut vec![s], &mut out);
    }
    out
}

#[test]
fn cycles_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, 0.55);
        for len in 3..=5 {
            let got: BTreeSet<_> = enumerate_cycles(&g, len).unwrap().into_iter().collect();
            assert_eq!(got, brute_cycles(&g, len), "length {len} in {:?}", g.edges());
        }
    }
}

#[test]
fn complete_graph_cycle_counts() {
    // K_n has n!/(2(n-l)! l) cycles of length l
    let k6 = Graph::complete(6);
    assert_eq!(enumerate_cycles(&k6, 3).unwrap().len(), 20);
    assert_eq!(enumerate_cycles(&k6, 4).unwrap().len(), 45);
    assert_eq!(enumerate_cycles(&k6, 5).unwrap().len(), 72);
    assert!(enumerate_cycles(&k6, 6).is_err());
}

fn bits_to_lists(bits: &[u64]) -> Vec<Vec<usize>> {
    bits.iter()
        .map(|&b| (0..64).filter(|&c| b >> c & 1 == 1).collect())
        .collect()
}

fn canonical_set(sizes: &[usize]) -> BTreeSet<Vec<Vec<usize>>> {
    let mut set = BTreeSet::new();
    for_each_canonical(sizes, &mut |b| {
        set.insert(bits_to_lists(b));
        ControlFlow::Continue(())
    })
    .unwrap();
    set
}

/// Every raw assignment over a palette of `palette` colors, lists of size `k`,
/// with the first list optionally pinned.
fn for_each_raw(n: usize, k: usize, palette: usize, pin_first: Option<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
    let subsets: Vec<Vec<usize>> = (0u32..1 << palette)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..palette).filter(|&c| m >> c & 1 == 1).collect())
        .collect();
    let mut cur: Vec<Vec<usize>> = Vec::new();
    fn rec(
        n: usize,
        subsets: &[Vec<usize>],
        pin: &Option<Vec<usize>>,
        cur: &mut Vec<Vec<usize>>,
        f: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if cur.len() == n {
            f(cur);
            return;
        }
        if cur.is_empty() {
            if let Some(p) = pin {
                cur.push(p.clone());
                rec(n, subsets, pin, cur, f);
                cur.pop();
                return;
            }
        }
        for s in subsets {
            cur.push(s.clone());
            rec(n, subsets, pin, cur, f);
            cur.pop();
        }
    }
    rec(n, &subsets, &pin_first, &mut cur, f);
}

#[test]
fn canonical_enumeration_covers_every_raw_assignment() {
    for n in 1..=4 {
        for k in 1..=2 {
            let canon = canonical_set(&vec![k; n]);
            let mut raw = 0;
            for_each_raw(n, k, n * k, None, &mut |lists| {
                raw += 1;
                let c = canonicalize(&ListAssignment::new(lists.to_vec()).unwrap());
                assert!(canon.contains(c.lists()), "n={n} k={k}: {lists:?} -> {:?}", c.lists());
            });
            assert!(raw >= canon.len());
        }
    }
}

#[test]
fn canonical_enumeration_covers_pinned_five_vertex_assignments() {
    let canon = canonical_set(&[2; 5]);
    let mut count = 0u64;
    for_each_raw(5, 2, 10, Some(vec![0, 1]), &mut |lists| {
        count += 1;
        let c = canonicalize(&ListAssignment::new(lists.to_vec()).unwrap());
        assert!(canon.contains(c.lists()), "{lists:?}");
    });
    assert_eq!(count, 45u64.pow(4));
}

#[test]
fn canonical_verdict_agrees_with_raw_verdict() {
    // a raw uncolorable assignment exists iff a canonical one does
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..25 {
        let n = rng.gen_range(2..=4);
        let g = random_graph(&mut rng, n, 0.7);
        let mut raw_bad = false;
        for_each_raw(n, 2, 2 * n, None, &mut |lists| {
            if !raw_bad && !colorable_oracle(&g, lists) {
                raw_bad = true;
            }
        });
        let canon_bad = canonical_set(&vec![2; n]).iter().any(|l| !colorable_oracle(&g, l));
        assert_eq!(raw_bad, canon_bad, "{:?}", g.edges());
    }
}
