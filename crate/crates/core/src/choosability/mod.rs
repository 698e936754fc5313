//! List colorability, k-choosability and reducibility of configurations.

mod canonical;
mod lists;

pub use canonical::{canonicalize, first_failure, for_each_canonical};
pub use lists::{is_proper_list_coloring, l_color, ListAssignment};

use serde::{Deserialize, Serialize};

use crate::alon_tarsi::find_certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use lists::color_bits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    /// An uncolorable k-assignment, in canonical form, when not choosable.
    pub witness: Option<ListAssignment>,
}

/// Vertices that survive repeatedly deleting vertices of degree below `k`.
/// Such deletions never change k-choosability.
pub fn choosability_core(graph: &Graph, k: usize) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut alive = vec![true; n];
    let mut deg = graph.degrees();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in graph.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] + 1 == k {
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn guard_vertices(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual: n,
            limit: limits.max_vertices,
        });
    }
    Ok(())
}

/// Decides whether every `k`-assignment of `graph` admits a list coloring.
///
/// Vertices of degree below `k` are peeled off first, then each component of
/// what remains is tried with an Alon–Tarsi certificate and, failing that,
/// with exhaustive canonical enumeration over a universe of `k * n` colors.
pub fn is_k_choosable(graph: &Graph, k: usize, limits: &Limits) -> Result<ChoosabilityVerdict> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let n = graph.vertex_count();
    guard_vertices(n, limits)?;
    let core = choosability_core(graph, k);
    let core_graph = graph.induced(&core);
    for comp in core_graph.components() {
        let sub = core_graph.induced(&comp);
        if sub.edge_count() <= limits.max_arcs
            && find_certificate(&sub, &vec![k; sub.vertex_count()], limits)?.is_some()
        {
            continue;
        }
        let adj = sub.adjacency_masks();
        let failure = first_failure(&vec![k; sub.vertex_count()], limits.max_assignments, |l| {
            color_bits(&adj, l).is_some()
        })?;
        if let Some(bits) = failure {
            // lift to the whole graph: other vertices get {0, .., k-1}
            let part = ListAssignment::from_bits(&bits);
            let mut full = vec![(0..k).collect::<Vec<_>>(); n];
            for (i, &c) in comp.iter().enumerate() {
                full[core[c]] = part.list(i).to_vec();
            }
            let witness = canonicalize(&ListAssignment::new(full)?);
            return Ok(ChoosabilityVerdict {
                choosable: false,
                witness: Some(witness),
            });
        }
    }
    Ok(ChoosabilityVerdict {
        choosable: true,
        witness: None,
    })
}

/// A boundary-listed configuration: every vertex of `inner` keeps
/// `residual_sizes[v]` colors after its outside neighbors are colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleConfig {
    inner: Graph,
    residual_sizes: Vec<usize>,
    choice_set: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReducibleConfigJson {
    #[serde(default)]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub sizes: Vec<usize>,
    #[serde(default)]
    pub choice_set: Vec<usize>,
}

impl ReducibleConfig {
    pub fn new(inner: Graph, residual_sizes: Vec<usize>, mut choice_set: Vec<usize>) -> Result<Self> {
        if residual_sizes.len() != inner.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} residual sizes for {} vertices",
                residual_sizes.len(),
                inner.vertex_count()
            )));
        }
        if let Some(v) = residual_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidInput(format!("residual size of vertex {v} is 0")));
        }
        choice_set.sort_unstable();
        choice_set.dedup();
        if let Some(&v) = choice_set.iter().find(|&&v| v >= inner.vertex_count()) {
            return Err(Error::DanglingVertexIndex {
                vertex: v,
                n: inner.vertex_count(),
            });
        }
        Ok(ReducibleConfig {
            inner,
            residual_sizes,
            choice_set,
        })
    }

    pub fn from_json(j: &ReducibleConfigJson) -> Result<Self> {
        Self::new(Graph::new(j.n, &j.edges)?, j.sizes.clone(), j.choice_set.clone())
    }

    pub fn inner(&self) -> &Graph {
        &self.inner
    }

    pub fn residual_sizes(&self) -> &[usize] {
        &self.residual_sizes
    }

    pub fn choice_set(&self) -> &[usize] {
        &self.choice_set
    }
}

/// First canonical assignment of the residual sizes from which the inner
/// graph cannot be colored.
pub fn extension_counterexample(config: &ReducibleConfig, limits: &Limits) -> Result<Option<ListAssignment>> {
    guard_vertices(config.inner.vertex_count(), limits)?;
    let adj = config.inner.adjacency_masks();
    let failure = first_failure(&config.residual_sizes, limits.max_assignments, |l| {
        color_bits(&adj, l).is_some()
    })?;
    Ok(failure.map(|b| ListAssignment::from_bits(&b)))
}

/// True iff every assignment with the residual list sizes extends to a
/// coloring of the inner graph. The choice set is ignored.
pub fn check_extension(config: &ReducibleConfig, limits: &Limits) -> Result<bool> {
    Ok(extension_counterexample(config, limits)?.is_none())
}

/// Like [`check_extension`], but the choice-set vertices are colored first:
/// for every assignment there must be a selection for them (proper among
/// adjacent choice vertices) after which the remaining vertices, with the
/// selected colors removed from their neighbors' lists, are colorable.
pub fn check_extension_with_rechoice(config: &ReducibleConfig, limits: &Limits) -> Result<bool> {
    if config.choice_set.is_empty() {
        return Err(Error::InvalidInput("choice set is empty".into()));
    }
    guard_vertices(config.inner.vertex_count(), limits)?;
    let adj = config.inner.adjacency_masks();
    let choice = &config.choice_set;
    let failure = first_failure(&config.residual_sizes, limits.max_assignments, |l| {
        let mut fixed = l.to_vec();
        some_selection_extends(&adj, l, choice, 0, &mut fixed)
    })?;
    Ok(failure.is_none())
}

fn some_selection_extends(adj: &[u64], lists: &[u64], choice: &[usize], i: usize, fixed: &mut [u64]) -> bool {
    if i == choice.len() {
        // selected colors are singleton lists; the solver removes them from
        // every neighbor's options
        return color_bits(adj, fixed).is_some();
    }
    let v = choice[i];
    let taken = choice[..i]
        .iter()
        .filter(|&&u| adj[v] >> u & 1 == 1)
        .fold(0u64, |m, &u| m | fixed[u]);
    let mut opts = lists[v] & !taken;
    while opts != 0 {
        let c = opts.trailing_zeros();
        opts &= opts - 1;
        fixed[v] = 1 << c;
        if some_selection_extends(adj, lists, choice, i + 1, fixed) {
            fixed[v] = lists[v];
            return true;
        }
    }
    fixed[v] = lists[v];
    false
}

/// Vertices of degree at most 3.
pub fn verify_min_degree(graph: &Graph) -> Vec<usize> {
    (0..graph.vertex_count())
        .filter(|&v| graph.degree(v) <= 3)
        .collect()
}
