//! Even/odd Eulerian subdigraph counts and Alon–Tarsi certificates.
//!
//! If an orientation `D` has different numbers of even and odd spanning
//! Eulerian subdigraphs, then `G` is colorable from any lists with
//! `|L(v)| > outdeg_D(v)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::orientation::{orientations_with_outdegree_bounds, Orientation, OrientationJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EulerianCount {
    pub even: u64,
    pub odd: u64,
}

impl EulerianCount {
    pub fn differs(&self) -> bool {
        self.even != self.odd
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtCertificate {
    pub orientation: Orientation,
    pub counts: EulerianCount,
    /// `outdeg(v) + 1`, the list size the certificate guarantees suffices.
    pub list_size_bound: Vec<usize>,
}

#[derive(Serialize)]
pub struct CertificateReport {
    pub orientation: OrientationJson,
    pub even: u64,
    pub odd: u64,
    pub outdegrees: Vec<usize>,
    pub list_size_bound: Vec<usize>,
}

impl AtCertificate {
    pub fn report(&self) -> CertificateReport {
        CertificateReport {
            orientation: self.orientation.to_json(),
            even: self.counts.even,
            odd: self.counts.odd,
            outdegrees: self.orientation.outdegrees(),
            list_size_bound: self.list_size_bound.clone(),
        }
    }
}

/// Counts arc subsets with equal in- and outdegree at every vertex, split by
/// the parity of the subset size.
///
/// Arcs are processed in order while keeping a table of partial balance
/// vectors; a vertex's balance must be zero once its last arc is decided.
pub fn count_eulerian(d: &Orientation, limits: &Limits) -> Result<EulerianCount> {
    let arcs = d.arcs();
    if arcs.len() > limits.max_arcs {
        return Err(Error::SizeLimitExceeded {
            what: "arc count",
            actual: arcs.len(),
            limit: limits.max_arcs,
        });
    }
    let n = d.vertex_count();
    let mut remaining = vec![0usize; n];
    for &(t, h) in arcs {
        remaining[t] += 1;
        remaining[h] += 1;
    }
    let mut states: HashMap<Vec<i8>, [u64; 2]> = HashMap::new();
    states.insert(vec![0; n], [1, 0]);
    for &(t, h) in arcs {
        remaining[t] -= 1;
        remaining[h] -= 1;
        let mut next: HashMap<Vec<i8>, [u64; 2]> = HashMap::with_capacity(states.len() * 2);
        let feasible = |bal: &[i8]| {
            (bal[t].unsigned_abs() as usize) <= remaining[t]
                && (bal[h].unsigned_abs() as usize) <= remaining[h]
        };
        for (bal, [even, odd]) in states {
            if feasible(&bal) {
                let e = next.entry(bal.clone()).or_default();
                e[0] += even;
                e[1] += odd;
            }
            let mut taken = bal;
            taken[t] += 1;
            taken[h] -= 1;
            if feasible(&taken) {
                let e = next.entry(taken).or_default();
                e[0] += odd;
                e[1] += even;
            }
        }
        states = next;
    }
    let [even, odd] = states.get(&vec![0; n]).copied().unwrap_or([0, 0]);
    Ok(EulerianCount { even, odd })
}

/// True iff every list is larger than the outdegree and the Eulerian counts
/// differ.
pub fn verify_at_applicable(d: &Orientation, list_sizes: &[usize], limits: &Limits) -> Result<bool> {
    if list_sizes.len() != d.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "{} list sizes for {} vertices",
            list_sizes.len(),
            d.vertex_count()
        )));
    }
    let sizes_ok = d
        .outdegrees()
        .iter()
        .zip(list_sizes)
        .all(|(&out, &size)| size > out);
    if !sizes_ok {
        return Ok(false);
    }
    Ok(count_eulerian(d, limits)?.differs())
}

/// Returns the first orientation (in canonical enumeration order) with
/// `outdeg(v) < list_sizes[v]` and unequal Eulerian counts.
pub fn find_certificate(
    graph: &Graph,
    list_sizes: &[usize],
    limits: &Limits,
) -> Result<Option<AtCertificate>> {
    if let Some(v) = list_sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidInput(format!("list size of vertex {v} is 0")));
    }
    if graph.edge_count() > limits.max_arcs {
        return Err(Error::SizeLimitExceeded {
            what: "arc count",
            actual: graph.edge_count(),
            limit: limits.max_arcs,
        });
    }
    let bounds: Vec<usize> = list_sizes.iter().map(|&s| s - 1).collect();
    for d in orientations_with_outdegree_bounds(graph, &bounds)? {
        let counts = count_eulerian(&d, limits)?;
        if counts.differs() {
            let list_size_bound = d.outdegrees().iter().map(|&o| o + 1).collect();
            return Ok(Some(AtCertificate {
                orientation: d,
                counts,
                list_size_bound,
            }));
        }
    }
    Ok(None)
}
