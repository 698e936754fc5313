//! Built-in graphs: the drawn configurations, the Platonic solids and
//! seeded random plane graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::choosability::ReducibleConfig;
use crate::embedding::PlaneGraph;
use crate::graph::Graph;
use crate::orientation::Orientation;
use crate::structures::{check_condition, ConditionId, DOMINO_EDGES, HOUSE_EDGES, TRIO_EDGES};

/// An orientation drawn on a configuration, with the residual list size at
/// each vertex.
#[derive(Debug, Clone, Deserialize)]
pub struct DrawnOrientation {
    pub name: String,
    pub labels: Vec<String>,
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub residual_sizes: Vec<usize>,
}

impl DrawnOrientation {
    pub fn orientation(&self) -> Orientation {
        Orientation::from_arcs(self.n, &self.arcs).expect("bundled orientation is valid")
    }
}

const ORIENTED: [&str; 3] = [
    include_str!("../fixtures/oriented_g1.json"),
    include_str!("../fixtures/oriented_g2.json"),
    include_str!("../fixtures/oriented_g3.json"),
];

/// The three oriented configurations G1, G2, G3, transcribed arrow by arrow.
pub fn drawn_orientations() -> Vec<DrawnOrientation> {
    ORIENTED.iter()
        .map(|s| serde_json::from_str(s).expect("bundled fixture parses"))
        .collect()
}

/// The trio on x=0, y=1, u=2, v=3, w=4.
pub fn trio() -> Graph {
    Graph::new(5, TRIO_EDGES).expect("trio is simple")
}

pub fn domino() -> Graph {
    Graph::new(6, DOMINO_EDGES).expect("domino is simple")
}

pub fn house() -> Graph {
    Graph::new(5, HOUSE_EDGES).expect("house is simple")
}

/// The trio `H` with residual sizes x:2, y:3, u:2, v:4, w:2 and re-choice
/// of `x` and `u`.
pub fn h_config() -> ReducibleConfig {
    ReducibleConfig::new(trio(), vec![2, 3, 2, 4, 2], vec![0, 2]).expect("valid config")
}

/// A 4-face with all vertices of degree 4: each keeps two colors.
pub fn four_face_config() -> ReducibleConfig {
    ReducibleConfig::new(Graph::cycle(4), vec![2; 4], vec![]).expect("valid config")
}

/// The triangle `y, v, w` with two colors left at each vertex.
pub fn triangle_config() -> ReducibleConfig {
    ReducibleConfig::new(Graph::cycle(3), vec![2; 3], vec![]).expect("valid config")
}

/// `base` with `pendants[v]` extra leaves hung on vertex `v`.
pub fn with_pendants(base: &Graph, pendants: &[usize]) -> Graph {
    let mut edges = base.edges().to_vec();
    let mut next = base.vertex_count();
    for (v, &k) in pendants.iter().enumerate() {
        for _ in 0..k {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::new(next, &edges).expect("pendant leaves keep the graph simple")
}

pub fn five_wheel() -> Graph {
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, 5)));
    Graph::new(6, &edges).expect("wheel is simple")
}

/// A 5-cycle with a triangle glued along edge `{0, 1}`.
pub fn glued_triangle_pentagon() -> Graph {
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend([(0, 5), (1, 5)]);
    Graph::new(6, &edges).expect("simple")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).expect("Petersen graph is simple")
}

pub fn tetrahedron() -> PlaneGraph {
    PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
        .expect("tetrahedron faces")
}

pub fn cube() -> PlaneGraph {
    let mut faces = Vec::new();
    for axis in 0..3 {
        let (j, k) = match axis {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for b in 0..2usize {
            faces.push(
                [(0, 0), (0, 1), (1, 1), (1, 0)]
                    .iter()
                    .map(|&(x, y)| b << axis | x << j | y << k)
                    .collect(),
            );
        }
    }
    PlaneGraph::from_faces(8, &faces).expect("cube faces")
}

pub fn octahedron() -> PlaneGraph {
    let mut faces = Vec::new();
    for a in 0..2 {
        for b in 2..4 {
            for c in 4..6 {
                faces.push(vec![a, b, c]);
            }
        }
    }
    PlaneGraph::from_faces(6, &faces).expect("octahedron faces")
}

fn icosahedron_faces() -> Vec<[usize; 3]> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut pts = Vec::new();
    for s1 in [-1.0, 1.0] {
        for s2 in [-1.0, 1.0] {
            pts.push([0.0, s1, s2 * phi]);
            pts.push([s1, s2 * phi, 0.0]);
            pts.push([s2 * phi, 0.0, s1]);
        }
    }
    let adj = |a: usize, b: usize| {
        let d: f64 = (0..3).map(|i| (pts[a][i] - pts[b][i]).powi(2)).sum();
        (d - 4.0).abs() < 1e-9
    };
    let mut faces = Vec::new();
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                if adj(a, b) && adj(b, c) && adj(a, c) {
                    faces.push([a, b, c]);
                }
            }
        }
    }
    faces
}

pub fn icosahedron() -> PlaneGraph {
    let faces: Vec<Vec<usize>> = icosahedron_faces().iter().map(|f| f.to_vec()).collect();
    PlaneGraph::from_faces(12, &faces).expect("icosahedron faces")
}

/// The dual of the icosahedron.
pub fn dodecahedron() -> PlaneGraph {
    let tri = icosahedron_faces();
    let shares_edge = |a: &[usize; 3], b: &[usize; 3]| a.iter().filter(|v| b.contains(v)).count() == 2;
    let mut faces = Vec::new();
    for v in 0..12 {
        let around: Vec<usize> = (0..tri.len()).filter(|&f| tri[f].contains(&v)).collect();
        let mut cyc = vec![around[0]];
        while cyc.len() < around.len() {
            let last = *cyc.last().unwrap();
            let next = around
                .iter()
                .copied()
                .find(|&f| !cyc.contains(&f) && shares_edge(&tri[f], &tri[last]))
                .expect("faces around a vertex form a cycle");
            cyc.push(next);
        }
        faces.push(cyc);
    }
    PlaneGraph::from_faces(20, &faces).expect("dodecahedron faces")
}

pub fn platonic_solids() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("icosahedron", icosahedron()),
    ]
}

/// Face list of a random plane triangulation on `n >= 4` vertices: stacked
/// insertions into random faces followed by random edge flips.
fn random_triangulation_faces(rng: &mut ChaCha8Rng, n: usize) -> Vec<[usize; 3]> {
    let mut faces = vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let has_edge = |faces: &[[usize; 3]], a: usize, b: usize| {
        faces.iter().any(|f| f.contains(&a) && f.contains(&b))
    };
    for _ in 0..2 * n {
        let i = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let (a, b, c) = (faces[i][k], faces[i][(k + 1) % 3], faces[i][(k + 2) % 3]);
        // the face on the other side traverses b -> a
        let Some(j) = (0..faces.len()).find(|&j| {
            j != i && (0..3).any(|m| faces[j][m] == b && faces[j][(m + 1) % 3] == a)
        }) else {
            continue;
        };
        let d = *faces[j].iter().find(|&&x| x != a && x != b).unwrap();
        if d == c || has_edge(&faces, c, d) {
            continue;
        }
        let deg = |x: usize| faces.iter().filter(|f| f.contains(&x)).count();
        if deg(a) <= 3 || deg(b) <= 3 {
            continue;
        }
        faces[i] = [a, d, c];
        faces[j] = [b, c, d];
    }
    faces
}

/// A connected plane graph obtained from a random triangulation on `n`
/// vertices by deleting about `drop` of its edges (never disconnecting).
pub fn random_plane_graph(seed: u64, n: usize, drop: f64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces: Vec<Vec<usize>> = random_triangulation_faces(&mut rng, n.max(4))
        .iter()
        .map(|f| f.to_vec())
        .collect();
    let mut emb = PlaneGraph::from_faces(n.max(4), &faces).expect("triangulation faces are consistent");
    let mut edges = emb.graph().edges().to_vec();
    edges.shuffle(&mut rng);
    let target = (edges.len() as f64 * drop).round() as usize;
    let mut dropped = 0;
    for (a, b) in edges {
        if dropped == target {
            break;
        }
        let next = emb.without_edge(a, b).expect("deleting an edge keeps a valid rotation");
        if next.graph().is_connected() {
            emb = next;
            dropped += 1;
        }
    }
    emb
}

/// Twenty seeded non-triangulated connected plane graphs with 6 to 25
/// vertices.
pub fn random_plane_fixtures() -> Vec<PlaneGraph> {
    (0..20u64)
        .map(|i| random_plane_graph(1000 + i, 6 + i as usize, 0.2 + 0.02 * i as f64))
        .collect()
}

/// Planar graphs on at most 10 vertices in which no 5-cycle shares an edge
/// with a 3-cycle. Each starts from a random triangulation and loses edges
/// of offending triangles until the condition holds.
pub fn corollary_graphs(count: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let mut rng = ChaCha8Rng::seed_from_u64(5000 + seed);
        seed += 1;
        let n = 4 + (seed as usize % 7);
        let tri = random_triangulation_faces(&mut rng, n);
        let mut edges: Vec<(usize, usize)> = tri
            .iter()
            .flat_map(|f| (0..3).map(move |i| (f[i].min(f[(i + 1) % 3]), f[i].max(f[(i + 1) % 3]))))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        loop {
            let g = Graph::new(n, &edges).expect("subgraph of a simple graph");
            let report = check_condition(&g, ConditionId::Corollary);
            if report.holds {
                if !out.contains(&g) {
                    out.push(g);
                }
                break;
            }
            let cycle = &report.witnesses[0];
            let cyc_edges = crate::structures::cycle_edges(cycle);
            // an edge of a triangle that shares an edge with the cycle
            let candidates: Vec<(usize, usize)> = crate::structures::enumerate_cycles(&g, 3)
                .expect("length 3")
                .iter()
                .map(|t| crate::structures::cycle_edges(t))
                .filter(|t| t.iter().any(|e| cyc_edges.contains(e)))
                .flatten()
                .collect();
            let victim = *candidates.choose(&mut rng).expect("a witness has an adjacent triangle");
            edges.retain(|&e| e != victim);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_face_counts() {
        let expected = [(4, 6, 4, 3), (8, 12, 6, 4), (6, 12, 8, 3), (20, 30, 12, 5), (12, 30, 20, 3)];
        for ((name, emb), (v, e, f, d)) in platonic_solids().into_iter().zip(expected) {
            let faces = emb.faces().unwrap();
            assert_eq!(emb.graph().vertex_count(), v, "{name}");
            assert_eq!(emb.graph().edge_count(), e, "{name}");
            assert_eq!(faces.len(), f, "{name}");
            assert!(faces.iter().all(|x| x.degree() == d), "{name}");
        }
    }

    #[test]
    fn random_fixtures_are_plane_and_connected() {
        for emb in random_plane_fixtures() {
            assert!(emb.graph().is_connected());
            let faces = emb.faces().unwrap();
            assert!(faces.iter().any(|f| f.degree() > 3));
        }
    }

    #[test]
    fn drawn_orientations_match_their_configurations() {
        let d = drawn_orientations();
        assert_eq!(d[0].orientation().base(), &trio());
        assert_eq!(d[1].orientation().base(), &domino());
        assert_eq!(d[2].orientation().base(), &house());
    }

    #[test]
    fn corollary_graphs_hold() {
        for g in corollary_graphs(10) {
            assert!(g.vertex_count() <= 10);
            assert!(check_condition(&g, ConditionId::Corollary).holds);
        }
    }
}
