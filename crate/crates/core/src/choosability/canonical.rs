//! List assignments up to renaming of colors.
//!
//! Whether a graph is colorable from given lists depends only on which
//! vertices share which colors. A color is therefore described by its
//! signature, the set of vertices whose lists contain it, and an assignment
//! up to color renaming is a multiset of nonempty signatures covering each
//! vertex `v` exactly `sizes[v]` times. Canonical order lists signatures by
//! decreasing bitmask value and numbers the colors in that order.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::lists::ListAssignment;
use crate::error::{Error, Result};

const BATCH: usize = 1 << 12;

/// Canonical form of `lists` (vertex count at most 64).
pub fn canonicalize(lists: &ListAssignment) -> ListAssignment {
    let mut by_color: std::collections::BTreeMap<usize, u64> = Default::default();
    for (v, l) in lists.lists().iter().enumerate() {
        for &c in l {
            *by_color.entry(c).or_default() |= 1 << v;
        }
    }
    let mut sigs: Vec<u64> = by_color.into_values().collect();
    sigs.sort_unstable_by(|a, b| b.cmp(a));
    ListAssignment::from_bits(&signatures_to_lists(&sigs, lists.len()))
}

fn signatures_to_lists(sigs: &[u64], n: usize) -> Vec<u64> {
    let mut bits = vec![0u64; n];
    for (c, &s) in sigs.iter().enumerate() {
        for (v, b) in bits.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *b |= 1 << c;
            }
        }
    }
    bits
}

struct Walker<'a> {
    remaining: Vec<usize>,
    lists: Vec<u64>,
    colors: usize,
    visit: &'a mut dyn FnMut(&[u64]) -> ControlFlow<()>,
}

impl Walker<'_> {
    fn rec(&mut self, prev: u64) -> ControlFlow<()> {
        let Some(h) = (0..self.remaining.len()).rev().find(|&v| self.remaining[v] > 0) else {
            return (self.visit)(&self.lists);
        };
        let top = 1u64 << h;
        let avail = (0..h)
            .filter(|&v| self.remaining[v] > 0)
            .fold(0u64, |m, v| m | 1 << v);
        let c = self.colors;
        // subsets of `avail` in decreasing order, 0 last
        let mut sub = avail;
        loop {
            let mask = top | sub;
            if mask <= prev {
                self.apply(mask, c, true);
                let flow = self.rec(mask);
                self.apply(mask, c, false);
                flow?;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & avail;
        }
        ControlFlow::Continue(())
    }

    fn apply(&mut self, mask: u64, c: usize, on: bool) {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if on {
                self.remaining[v] -= 1;
                self.lists[v] |= 1 << c;
            } else {
                self.remaining[v] += 1;
                self.lists[v] &= !(1 << c);
            }
        }
        self.colors = if on { c + 1 } else { c };
    }
}

/// Visits every canonical assignment with the given list sizes, as per-vertex
/// color bitsets, in canonical order.
pub fn for_each_canonical(sizes: &[usize], visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>) -> Result<()> {
    check_sizes(sizes)?;
    let mut w = Walker {
        remaining: sizes.to_vec(),
        lists: vec![0; sizes.len()],
        colors: 0,
        visit,
    };
    let _ = w.rec(u64::MAX);
    Ok(())
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.len() > 64 {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual: sizes.len(),
            limit: 64,
        });
    }
    let total: usize = sizes.iter().sum();
    if total > 64 {
        return Err(Error::SizeLimitExceeded {
            what: "color universe",
            actual: total,
            limit: 64,
        });
    }
    Ok(())
}

/// First canonical assignment (in canonical order) for which `good` is
/// false. Batches are checked in parallel; the result is deterministic.
pub fn first_failure<F>(sizes: &[usize], budget: u64, good: F) -> Result<Option<Vec<u64>>>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    let mut batch: Vec<Vec<u64>> = Vec::with_capacity(BATCH);
    let mut seen = 0u64;
    let mut found = None;
    let mut over_budget = false;
    let flush = |batch: &mut Vec<Vec<u64>>, found: &mut Option<Vec<u64>>| {
        if let Some(i) = batch.par_iter().position_first(|l| !good(l)) {
            *found = Some(batch.swap_remove(i));
        }
        batch.clear();
    };
    for_each_canonical(sizes, &mut |lists| {
        seen += 1;
        if seen > budget {
            over_budget = true;
            return ControlFlow::Break(());
        }
        batch.push(lists.to_vec());
        if batch.len() == BATCH {
            flush(&mut batch, &mut found);
            if found.is_some() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if found.is_none() {
        flush(&mut batch, &mut found);
    }
    if found.is_none() && over_budget {
        return Err(Error::SizeLimitExceeded {
            what: "canonical list assignments",
            actual: seen as usize,
            limit: budget as usize,
        });
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(sizes: &[usize]) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for_each_canonical(sizes, &mut |l| {
            out.push(l.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        out
    }

    #[test]
    fn first_assignment_is_identical_lists() {
        let got = all(&[2, 2, 2]);
        assert_eq!(got[0], vec![0b11, 0b11, 0b11]);
    }

    #[test]
    fn two_vertices_size_one() {
        // same color or different colors
        assert_eq!(all(&[1, 1]).len(), 2);
    }

    #[test]
    fn two_vertices_size_two() {
        // shared colors: 2, 1 or 0
        assert_eq!(all(&[2, 2]).len(), 3);
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        let got = all(&[2, 1, 2]);
        let mut canon: Vec<_> = got
            .iter()
            .map(|b| canonicalize(&ListAssignment::from_bits(b)))
            .collect();
        for (b, c) in got.iter().zip(&canon) {
            assert_eq!(&ListAssignment::from_bits(b), c);
        }
        let len = canon.len();
        canon.sort_by(|a, b| a.lists().cmp(b.lists()));
        canon.dedup();
        assert_eq!(canon.len(), len);
    }

    #[test]
    fn canonicalize_relabels() {
        let l = ListAssignment::new(vec![vec![5, 9], vec![9, 11]]).unwrap();
        let c = canonicalize(&l);
        assert_eq!(c.lists(), &[vec![0, 2], vec![0, 1]]);
    }

    #[test]
    fn universe_guard() {
        assert!(for_each_canonical(&[40, 40], &mut |_| ControlFlow::Continue(())).is_err());
    }

    #[test]
    fn budget_guard() {
        let r = first_failure(&[2, 2, 2, 2], 3, |_| true);
        assert!(matches!(r, Err(Error::SizeLimitExceeded { .. })));
    }
}
