//! Plane embeddings given by rotation systems, and face extraction.
//!
//! Faces are traced by the next-dart rule: arriving at `v` along the dart
//! `u -> v`, leave along `v -> w` where `w` follows `u` in the cyclic order
//! at `v`. Every dart lies on exactly one face.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with a cyclic order of neighbors at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    // position of each neighbor in the rotation at v
    slot: Vec<BTreeMap<usize, usize>>,
}

/// A face: its boundary walk (first vertex not repeated at the end).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Vertex degrees (in `g`) along the boundary, sorted ascending.
    pub fn degree_profile(&self, g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = self.boundary.iter().map(|&v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Validates a rotation system: each list holds distinct neighbors and
    /// adjacency is symmetric.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        let mut edges = Vec::new();
        let mut slot = Vec::with_capacity(n);
        for (v, around) in rotation.iter().enumerate() {
            let mut pos = BTreeMap::new();
            for (i, &w) in around.iter().enumerate() {
                if w >= n {
                    return Err(Error::DanglingVertexIndex { vertex: w, n });
                }
                if w == v {
                    return Err(Error::LoopEdge(v));
                }
                if pos.insert(w, i).is_some() {
                    return Err(Error::InvalidRotation(format!(
                        "neighbor {w} repeated in rotation of {v}"
                    )));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
            slot.push(pos);
        }
        for (v, around) in rotation.iter().enumerate() {
            for &w in around {
                if !slot[w].contains_key(&v) {
                    return Err(Error::InvalidRotation(format!(
                        "asymmetric adjacency: {w} in rotation of {v} but not vice versa"
                    )));
                }
            }
        }
        let graph = Graph::new(n, &edges)?;
        Ok(PlaneGraph {
            graph,
            rotation,
            slot,
        })
    }

    /// Builds an embedding from face boundary cycles. Faces may be listed in
    /// either orientation; they are reoriented so that every edge is used once
    /// in each direction.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut faces: Vec<Vec<usize>> = faces.to_vec();
        // undirected edge -> list of (face, forward?)
        let mut incidence: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                incidence
                    .entry((a.min(b), a.max(b)))
                    .or_default()
                    .push((fi, a < b));
            }
        }
        if let Some((e, _)) = incidence.iter().find(|(_, v)| v.len() != 2) {
            return Err(Error::InvalidRotation(format!(
                "edge {e:?} is not on exactly two face sides"
            )));
        }
        // flip[f]: whether face f must be reversed
        let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
        for start in 0..faces.len() {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for sides in incidence.values() {
                    let [(f1, d1), (f2, d2)] = [sides[0], sides[1]];
                    let (me, mine, other, theirs) = if f1 == f {
                        (f1, d1, f2, d2)
                    } else if f2 == f {
                        (f2, d2, f1, d1)
                    } else {
                        continue;
                    };
                    let my_dir = mine ^ flip[me].unwrap();
                    // neighbor must traverse the shared edge the other way
                    let need = theirs == my_dir;
                    match flip[other] {
                        None => {
                            flip[other] = Some(need);
                            queue.push_back(other);
                        }
                        Some(x) if x != need => {
                            return Err(Error::InvalidRotation(
                                "faces cannot be oriented consistently".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
        for (f, fl) in faces.iter_mut().zip(&flip) {
            if fl == &Some(true) {
                f.reverse();
            }
        }
        // succ_v(prev) = next for each corner prev -> v -> next
        let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
        for f in &faces {
            let k = f.len();
            for i in 0..k {
                let (prev, v, next) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                if v >= n {
                    return Err(Error::DanglingVertexIndex { vertex: v, n });
                }
                if succ[v].insert(prev, next).is_some() {
                    return Err(Error::InvalidRotation(format!(
                        "vertex {v} has two corners after {prev}"
                    )));
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, map) in succ.iter().enumerate() {
            let Some((&first, _)) = map.iter().next() else {
                rotation.push(Vec::new());
                continue;
            };
            let mut order = vec![first];
            let mut cur = map[&first];
            while cur != first {
                order.push(cur);
                cur = *map.get(&cur).ok_or_else(|| {
                    Error::InvalidRotation(format!("corners at {v} do not close up"))
                })?;
                if order.len() > map.len() {
                    break;
                }
            }
            if order.len() != map.len() {
                return Err(Error::InvalidRotation(format!(
                    "corners at {v} form more than one cycle"
                )));
            }
            rotation.push(order);
        }
        Self::new(rotation)
    }

    pub fn from_json(json: &EmbeddingJson) -> Result<Self> {
        if json.rotation.len() != json.n {
            return Err(Error::InvalidInput(format!(
                "n = {} but {} rotation lists",
                json.n,
                json.rotation.len()
            )));
        }
        Self::new(json.rotation.clone())
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            n: self.graph.vertex_count(),
            rotation: self.rotation.clone(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Neighbor following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        r[(self.slot[v][&u] + 1) % r.len()]
    }

    /// Removes edge `{a, b}` from the embedding; faces on both sides merge.
    pub fn without_edge(&self, a: usize, b: usize) -> Result<Self> {
        let mut rotation = self.rotation.clone();
        rotation[a].retain(|&w| w != b);
        rotation[b].retain(|&w| w != a);
        Self::new(rotation)
    }

    /// Traces all faces. Requires a connected embedding of genus zero.
    pub fn faces(&self) -> Result<Vec<Face>> {
        faces_of(self)
    }
}

/// Traces the faces of a connected embedding, in order of their first dart
/// (darts ordered by tail, then by rotation position).
pub fn faces_of(emb: &PlaneGraph) -> Result<Vec<Face>> {
    let g = emb.graph();
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::DisconnectedEmbedding);
    }
    if g.edge_count() == 0 {
        return Ok(vec![Face {
            boundary: vec![0],
        }]);
    }
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; emb.rotation[v].len()]).collect();
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..emb.rotation[u].len() {
            if used[u][i] {
                continue;
            }
            let mut boundary = Vec::new();
            let (mut a, mut b) = (u, emb.rotation[u][i]);
            loop {
                let slot = emb.slot[a][&b];
                if used[a][slot] {
                    break;
                }
                used[a][slot] = true;
                boundary.push(a);
                let next = emb.successor(b, a);
                a = b;
                b = next;
            }
            faces.push(Face { boundary });
        }
    }
    let euler = n as i64 - g.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NotPlanar(euler));
    }
    Ok(faces)
}
