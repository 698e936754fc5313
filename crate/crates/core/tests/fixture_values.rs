//! Hand-derived values on the bundled fixtures.

use dischargekit::discharging::Element;
use dischargekit::fixtures::{self, with_pendants};
use dischargekit::structures::{enumerate_cycles, find_fixed_configs, FixedConfig};
use dischargekit::{apply_rules, final_report, initial_charges, Charge, RuleSet};

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

#[test]
fn petersen_cycle_counts() {
    let p = fixtures::petersen();
    assert_eq!(enumerate_cycles(&p, 3).unwrap().len(), 0);
    assert_eq!(enumerate_cycles(&p, 4).unwrap().len(), 0);
    assert_eq!(enumerate_cycles(&p, 5).unwrap().len(), 12);
}

#[test]
fn solid_face_counts() {
    let counts: Vec<(&str, usize, usize, usize)> = fixtures::platonic_solids()
        .iter()
        .map(|(name, e)| (*name, e.graph().vertex_count(), e.graph().edge_count(), e.faces().unwrap().len()))
        .collect();
    let expected = [
        ("tetrahedron", 4, 6, 4),
        ("cube", 8, 12, 6),
        ("octahedron", 6, 12, 8),
        ("dodecahedron", 20, 30, 12),
        ("icosahedron", 12, 30, 20),
    ];
    for e in expected {
        assert!(counts.contains(&e), "{e:?} not in {counts:?}");
    }
}

#[test]
fn initial_charges_on_solids() {
    let t = initial_charges(&fixtures::tetrahedron()).unwrap();
    assert!(t.vertex_charge.iter().all(|&c| c == q(0, 1)));
    assert!(t.face_charge.iter().all(|&c| c == q(-3, 1)));
    let c = initial_charges(&fixtures::cube()).unwrap();
    assert!(c.face_charge.iter().all(|&x| x == q(-2, 1)));
    let i = initial_charges(&fixtures::icosahedron()).unwrap();
    assert!(i.vertex_charge.iter().all(|&x| x == q(4, 1)));
    assert!(i.face_charge.iter().all(|&x| x == q(-3, 1)));
    assert_eq!(i.total(), q(-12, 1));
}

#[test]
fn no_rule_fires_on_tetrahedron_or_cube() {
    for emb in [fixtures::tetrahedron(), fixtures::cube()] {
        let l = apply_rules(&emb, &RuleSet::default()).unwrap();
        assert!(l.trace.is_empty());
        assert_eq!(l.vertex_charge, l.initial_vertex_charge);
        assert_eq!(l.face_charge, l.initial_face_charge);
    }
    let r = final_report(&apply_rules(&fixtures::cube(), &RuleSet::default()).unwrap());
    assert_eq!(r.negatives.len(), 6);
    assert!(r
        .negatives
        .iter()
        .all(|n| matches!(n.element, Element::Face(_)) && n.charge == q(-2, 1)));
}

#[test]
fn dodecahedron_after_rules() {
    let l = apply_rules(&fixtures::dodecahedron(), &RuleSet::default()).unwrap();
    // 20 vertices, each paying 1/5 to its 3 faces
    assert_eq!(l.trace.len(), 60);
    assert!(l.vertex_charge.iter().all(|&c| c == q(-3, 5)));
    assert!(l.face_charge.iter().all(|&c| c == q(0, 1)));
    let r = final_report(&l);
    assert_eq!(r.total, q(-12, 1));
    assert_eq!(r.negatives.len(), 20);
    assert!(r.negatives.iter().all(|n| n.degree == 3 && n.transfers.len() == 3));
}

#[test]
fn octahedron_faces_all_lie_in_trios() {
    // every 3-face of the octahedron sits in several facial trios
    let l = apply_rules(&fixtures::octahedron(), &RuleSet::default()).unwrap();
    assert!(!l.trios.facial.is_empty());
    assert_eq!(l.trios.multi_trio_faces.len(), 8);
    assert_eq!(l.total(), q(-12, 1));
    let strict = RuleSet {
        r5_overlap: dischargekit::discharging::OverlapPolicy::Error,
        ..RuleSet::default()
    };
    assert!(apply_rules(&fixtures::octahedron(), &strict).is_err());
}

fn configs(g: &dischargekit::Graph) -> Vec<FixedConfig> {
    find_fixed_configs(g).into_iter().map(|m| m.config).collect()
}

#[test]
fn fixed_configs_in_padded_hosts() {
    // pendant leaves raise every trio vertex to degree 4
    let h = with_pendants(&fixtures::trio(), &[1, 1, 2, 0, 2]);
    assert_eq!(configs(&h), vec![FixedConfig::H]);
    // u raised to 5 instead
    let heavy = with_pendants(&fixtures::trio(), &[1, 1, 3, 0, 2]);
    assert_eq!(configs(&heavy), vec![FixedConfig::TrioHeavyCorner]);
    let domino = with_pendants(&fixtures::domino(), &[2, 2, 1, 2, 1, 2]);
    assert_eq!(configs(&domino), vec![FixedConfig::Domino]);
    let house = with_pendants(&fixtures::house(), &[2, 2, 2, 1, 2]);
    assert_eq!(configs(&house), vec![FixedConfig::HouseWithDegreeFive]);
    // bare graphs have too small degrees
    assert!(configs(&fixtures::trio()).is_empty());
    assert!(configs(&fixtures::domino()).is_empty());
}

#[test]
fn h_match_maps_labels() {
    let h = with_pendants(&fixtures::trio(), &[1, 1, 2, 0, 2]);
    let m = &find_fixed_configs(&h)[0];
    assert_eq!(m.mapping, vec![0, 1, 2, 3, 4]);
    assert_eq!(m.labels, vec!["x", "y", "u", "v", "w"]);
}

#[test]
fn domino_orientations_have_no_odd_eulerian_subgraph() {
    use dischargekit::orientation::orientations_with_max_outdegree;
    use dischargekit::{count_eulerian, Limits};
    let g = fixtures::domino();
    let mut seen = 0;
    for d in orientations_with_max_outdegree(&g, g.vertex_count()) {
        assert_eq!(count_eulerian(&d, &Limits::default()).unwrap().odd, 0);
        seen += 1;
    }
    assert_eq!(seen, 1 << 7);
}

#[test]
fn drawn_orientations_as_transcribed() {
    use dischargekit::{count_eulerian, verify_at_applicable, Limits};
    let limits = Limits::default();
    let got: Vec<_> = fixtures::drawn_orientations()
        .iter()
        .map(|d| {
            let o = d.orientation();
            let c = count_eulerian(&o, &limits).unwrap();
            (d.name.clone(), c.even, c.odd, verify_at_applicable(&o, &d.residual_sizes, &limits).unwrap())
        })
        .collect();
    assert_eq!(
        got,
        vec![
            ("G1".to_string(), 2, 1, true),
            ("G2".to_string(), 2, 0, false),
            ("G3".to_string(), 2, 1, true),
        ]
    );
}
