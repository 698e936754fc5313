//! Discharging with exact rational charges.
//!
//! Initial charges are `2d(v) - 6` on vertices and `d(f) - 6` on faces, which
//! sum to -12 on any connected plane graph. Rules R1 to R4 move charge from
//! vertices to incident faces; R5 then evens out the 3-faces of each trio.
//! Every transfer is recorded so the final ledger can be replayed.

pub mod rational;
mod rules;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

pub use rational::Charge;
pub use rules::{FourVertexSchedule, HighVertexSchedule, OverlapPolicy, RuleId, RuleSet};

use crate::embedding::{Face, PlaneGraph};
use crate::error::{Error, Result};
use crate::structures::{classify_role_among, find_trios, sorted_triple, TrioOccurrence, VertexRole};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub rule: RuleId,
    pub source: Element,
    /// Receiving face.
    pub sink: usize,
    #[serde(with = "rational")]
    pub amount: Charge,
}

/// Trios of the embedded graph, split by whether all three triangles are faces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TrioSummary {
    pub facial: Vec<TrioOccurrence>,
    pub abstract_only: Vec<TrioOccurrence>,
    /// 3-faces lying in more than one facial trio.
    pub multi_trio_faces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub vertex_degree: Vec<usize>,
    pub faces: Vec<Face>,
    #[serde(with = "rational::vec")]
    pub initial_vertex_charge: Vec<Charge>,
    #[serde(with = "rational::vec")]
    pub initial_face_charge: Vec<Charge>,
    #[serde(with = "rational::vec")]
    pub vertex_charge: Vec<Charge>,
    #[serde(with = "rational::vec")]
    pub face_charge: Vec<Charge>,
    pub trace: Vec<TransferRecord>,
    pub trios: TrioSummary,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        self.vertex_charge.iter().chain(&self.face_charge).copied().sum()
    }

    pub fn initial_total(&self) -> Charge {
        self.initial_vertex_charge
            .iter()
            .chain(&self.initial_face_charge)
            .copied()
            .sum()
    }

    pub fn charge(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex_charge[v],
            Element::Face(f) => self.face_charge[f],
        }
    }

    /// Recomputes the final charges from the initial ones and the trace.
    pub fn replay(&self) -> (Vec<Charge>, Vec<Charge>) {
        let mut vc = self.initial_vertex_charge.clone();
        let mut fc = self.initial_face_charge.clone();
        for t in &self.trace {
            match t.source {
                Element::Vertex(v) => vc[v] -= t.amount,
                Element::Face(f) => fc[f] -= t.amount,
            }
            fc[t.sink] += t.amount;
        }
        (vc, fc)
    }

    fn transfer(&mut self, rule: RuleId, source: Element, sink: usize, amount: Charge) {
        if amount.is_zero() {
            return;
        }
        match source {
            Element::Vertex(v) => self.vertex_charge[v] -= amount,
            Element::Face(f) => self.face_charge[f] -= amount,
        }
        self.face_charge[sink] += amount;
        self.trace.push(TransferRecord {
            rule,
            source,
            sink,
            amount,
        });
    }
}

/// Charges before any rule fires.
pub fn initial_charges(embedding: &PlaneGraph) -> Result<ChargeLedger> {
    let faces = embedding.faces()?;
    let g = embedding.graph();
    let vertex_degree = g.degrees();
    let vc: Vec<Charge> = vertex_degree
        .iter()
        .map(|&d| Charge::from_integer(2 * d as i64 - 6))
        .collect();
    let fc: Vec<Charge> = faces
        .iter()
        .map(|f| Charge::from_integer(f.degree() as i64 - 6))
        .collect();
    Ok(ChargeLedger {
        vertex_degree,
        faces,
        initial_vertex_charge: vc.clone(),
        initial_face_charge: fc.clone(),
        vertex_charge: vc,
        face_charge: fc,
        trace: Vec::new(),
        trios: TrioSummary::default(),
    })
}

/// Faces at each vertex, one entry per boundary occurrence, by face index.
fn corners(n: usize, faces: &[Face]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (f, face) in faces.iter().enumerate() {
        for &v in &face.boundary {
            out[v].push(f);
        }
    }
    out
}

struct TrioFaces {
    summary: TrioSummary,
    // face indices of each facial trio
    faces_of_trio: Vec<Vec<usize>>,
}

fn facial_trios(embedding: &PlaneGraph, faces: &[Face]) -> TrioFaces {
    let mut triangle_faces: BTreeMap<[usize; 3], Vec<usize>> = BTreeMap::new();
    for (f, face) in faces.iter().enumerate() {
        if let [a, b, c] = face.boundary[..] {
            triangle_faces.entry(sorted_triple([a, b, c])).or_default().push(f);
        }
    }
    let mut summary = TrioSummary::default();
    let mut faces_of_trio = Vec::new();
    for trio in find_trios(embedding.graph()) {
        let ids: Option<Vec<usize>> = trio
            .triangles()
            .iter()
            .map(|t| triangle_faces.get(t).map(|fs| fs[0]))
            .collect();
        match ids {
            Some(ids) => {
                summary.facial.push(trio);
                faces_of_trio.push(ids);
            }
            None => summary.abstract_only.push(trio),
        }
    }
    let mut uses: BTreeMap<usize, usize> = BTreeMap::new();
    for ids in &faces_of_trio {
        for &f in ids {
            *uses.entry(f).or_default() += 1;
        }
    }
    summary.multi_trio_faces = uses.into_iter().filter(|&(_, k)| k > 1).map(|(f, _)| f).collect();
    TrioFaces {
        summary,
        faces_of_trio,
    }
}

/// Runs R1 to R4 in order, then R5, starting from [`initial_charges`].
pub fn apply_rules(embedding: &PlaneGraph, rules: &RuleSet) -> Result<ChargeLedger> {
    rules.validate()?;
    let mut ledger = initial_charges(embedding)?;
    let faces = ledger.faces.clone();
    let g = embedding.graph();
    let n = g.vertex_count();
    let deg = ledger.vertex_degree.clone();
    let corners = corners(n, &faces);
    let trios = facial_trios(embedding, &faces);

    if rules.r5_equalize && rules.r5_overlap == OverlapPolicy::Error {
        if let Some(&face) = trios.summary.multi_trio_faces.first() {
            return Err(Error::OverlappingTrios { face });
        }
    }

    let role = |v: usize, f: usize| -> VertexRole {
        let b = &faces[f].boundary;
        classify_role_among(&trios.summary.facial, v, sorted_triple([b[0], b[1], b[2]]))
            .expect("vertex lies on its incident face")
    };
    let is_4445 = |f: usize| faces[f].degree_profile(g) == [4, 4, 4, 5];

    for (v, incident) in corners.iter().enumerate() {
        for &f in incident {
            if faces[f].degree() == 5 {
                ledger.transfer(RuleId::R1, Element::Vertex(v), f, rules.r1_five_face);
            }
        }
    }
    for v in (0..n).filter(|&v| deg[v] == 4) {
        for &f in &corners[v] {
            let amount = match faces[f].degree() {
                3 if role(v, f) == VertexRole::Worst => rules.r2.three_face_worst,
                3 => rules.r2.three_face,
                4 => rules.r2.four_face,
                _ => continue,
            };
            ledger.transfer(RuleId::R2, Element::Vertex(v), f, amount);
        }
    }
    for (rule, schedule, wanted) in [
        (RuleId::R3, &rules.r3, 5..=5),
        (RuleId::R4, &rules.r4, 6..=usize::MAX),
    ] {
        for v in (0..n).filter(|&v| wanted.contains(&deg[v])) {
            for &f in &corners[v] {
                let amount = match faces[f].degree() {
                    3 => match role(v, f) {
                        VertexRole::Good | VertexRole::Worst => schedule.three_face_good_or_worst,
                        VertexRole::Bad => schedule.three_face_bad,
                        VertexRole::Worse => schedule.three_face_worse,
                    },
                    4 if is_4445(f) => schedule.four_face_4445,
                    4 => schedule.four_face_other,
                    _ => continue,
                };
                ledger.transfer(rule, Element::Vertex(v), f, amount);
            }
        }
    }
    if rules.r5_equalize {
        for cluster in trio_clusters(&trios.faces_of_trio) {
            equalize(&mut ledger, &cluster);
        }
    }
    ledger.trios = trios.summary;
    Ok(ledger)
}

/// Face sets of connected clusters of trios (trios sharing a face are
/// connected), ordered by least face.
fn trio_clusters(faces_of_trio: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let k = faces_of_trio.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut i = i;
        while p[i] != r {
            let next = p[i];
            p[i] = r;
            i = next;
        }
        r
    }
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, ids) in faces_of_trio.iter().enumerate() {
        for &f in ids {
            if let Some(&j) = owner.get(&f) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            } else {
                owner.insert(f, i);
            }
        }
    }
    let mut clusters: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&f, &i) in &owner {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(f);
    }
    let mut out: Vec<Vec<usize>> = clusters.into_values().collect();
    out.sort();
    out
}

fn equalize(ledger: &mut ChargeLedger, faces: &[usize]) {
    let total: Charge = faces.iter().map(|&f| ledger.face_charge[f]).sum();
    let mean = total / Charge::from_integer(faces.len() as i64);
    let mut donors: Vec<(usize, Charge)> = faces
        .iter()
        .filter(|&&f| ledger.face_charge[f] > mean)
        .map(|&f| (f, ledger.face_charge[f] - mean))
        .collect();
    let mut takers: Vec<(usize, Charge)> = faces
        .iter()
        .filter(|&&f| ledger.face_charge[f] < mean)
        .map(|&f| (f, mean - ledger.face_charge[f]))
        .collect();
    let (mut i, mut j) = (0, 0);
    while i < donors.len() && j < takers.len() {
        let amount = donors[i].1.min(takers[j].1);
        ledger.transfer(RuleId::R5, Element::Face(donors[i].0), takers[j].0, amount);
        donors[i].1 -= amount;
        takers[j].1 -= amount;
        if donors[i].1.is_zero() {
            i += 1;
        }
        if takers[j].1.is_zero() {
            j += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeEntry {
    pub element: Element,
    #[serde(with = "rational")]
    pub charge: Charge,
    pub degree: usize,
    /// Incident faces of a vertex, or the boundary walk of a face.
    pub incident: Vec<usize>,
    /// Degrees of the boundary vertices (faces only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_degrees: Option<Vec<usize>>,
    /// Indices into the ledger trace of transfers touching this element.
    pub transfers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinalReport {
    #[serde(with = "rational")]
    pub initial_total: Charge,
    #[serde(with = "rational")]
    pub total: Charge,
    pub vertex_count: usize,
    pub face_count: usize,
    pub transfers: usize,
    pub negatives: Vec<NegativeEntry>,
    pub trios: TrioSummary,
}

impl FinalReport {
    pub fn all_nonnegative(&self) -> bool {
        self.negatives.is_empty()
    }
}

/// Every vertex and face whose final charge is negative, with context.
pub fn final_report(ledger: &ChargeLedger) -> FinalReport {
    let n = ledger.vertex_charge.len();
    let corners = corners(n, &ledger.faces);
    let touching = |e: Element| -> Vec<usize> {
        ledger
            .trace
            .iter()
            .enumerate()
            .filter(|(_, t)| t.source == e || Element::Face(t.sink) == e)
            .map(|(i, _)| i)
            .collect()
    };
    let mut negatives = Vec::new();
    for (v, &charge) in ledger.vertex_charge.iter().enumerate() {
        if charge < Charge::zero() {
            negatives.push(NegativeEntry {
                element: Element::Vertex(v),
                charge,
                degree: ledger.vertex_degree[v],
                incident: corners[v].clone(),
                boundary_degrees: None,
                transfers: touching(Element::Vertex(v)),
            });
        }
    }
    for (f, face) in ledger.faces.iter().enumerate() {
        if ledger.face_charge[f] < Charge::zero() {
            negatives.push(NegativeEntry {
                element: Element::Face(f),
                charge: ledger.face_charge[f],
                degree: face.degree(),
                incident: face.boundary.clone(),
                boundary_degrees: Some(face.boundary.iter().map(|&v| ledger.vertex_degree[v]).collect()),
                transfers: touching(Element::Face(f)),
            });
        }
    }
    FinalReport {
        initial_total: ledger.initial_total(),
        total: ledger.total(),
        vertex_count: n,
        face_count: ledger.faces.len(),
        transfers: ledger.trace.len(),
        negatives,
        trios: ledger.trios.clone(),
    }
}
