//! The bundled reproduction checks, shared by the CLI and the bindings.

use serde::Serialize;

use crate::alon_tarsi::{count_eulerian, find_certificate, verify_at_applicable};
use crate::choosability::{check_extension, check_extension_with_rechoice, is_k_choosable, ListAssignment};
use crate::discharging::{apply_rules, initial_charges, Charge, RuleSet};
use crate::fixtures;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::structures::{check_condition, classify_role, find_trios, ConditionId, VertexRole};

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub group: &'static str,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn row(group: &'static str, check: impl Into<String>, expected: impl ToString, actual: impl ToString) -> CheckRow {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    CheckRow {
        group,
        check: check.into(),
        pass: expected == actual,
        expected,
        actual,
    }
}

fn show<T: ToString, E: ToString>(r: Result<T, E>) -> String {
    match r {
        Ok(t) => t.to_string(),
        Err(e) => format!("error: {}", e.to_string()),
    }
}

pub fn eulerian_rows(limits: &Limits) -> Vec<CheckRow> {
    let expected = [(2, 1), (3, 1), (2, 1)];
    let mut rows = Vec::new();
    for (d, (ee, eo)) in fixtures::drawn_orientations().iter().zip(expected) {
        let o = d.orientation();
        let counts = show(count_eulerian(&o, limits).map(|c| format!("({}, {})", c.even, c.odd)));
        rows.push(row("eulerian", format!("{} (EE, EO)", d.name), format!("({ee}, {eo})"), counts));
        rows.push(row(
            "eulerian",
            format!("{} drawn orientation fits residual sizes", d.name),
            true,
            show(verify_at_applicable(&o, &d.residual_sizes, limits)),
        ));
        rows.push(row(
            "eulerian",
            format!("{} has some certificate for residual sizes", d.name),
            true,
            show(find_certificate(o.base(), &d.residual_sizes, limits).map(|c| c.is_some())),
        ));
    }
    rows
}

pub fn conservation_rows() -> Vec<CheckRow> {
    let minus12 = Charge::from_integer(-12);
    let mut cases: Vec<(String, crate::embedding::PlaneGraph)> = fixtures::platonic_solids()
        .into_iter()
        .map(|(n, e)| (n.to_string(), e))
        .collect();
    cases.extend(
        fixtures::random_plane_fixtures()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (format!("random-{i:02}"), e)),
    );
    cases
        .iter()
        .map(|(name, emb)| {
            let before = initial_charges(emb).map(|l| l.total());
            let after = apply_rules(emb, &RuleSet::default()).map(|l| l.total());
            let actual = match (before, after) {
                (Ok(b), Ok(a)) => format!("{b} -> {a}"),
                (Err(e), _) | (_, Err(e)) => format!("error: {e}"),
            };
            row("conservation", format!("{name} total charge"), format!("{minus12} -> {minus12}"), actual)
        })
        .collect()
}

pub fn choosability_rows(limits: &Limits) -> Vec<CheckRow> {
    let cases = [
        ("C4", Graph::cycle(4), 2, true),
        ("C3", Graph::cycle(3), 2, false),
        ("K4", Graph::complete(4), 3, false),
        ("K4", Graph::complete(4), 4, true),
        ("K5", Graph::complete(5), 4, false),
    ];
    let mut rows = Vec::new();
    for (name, g, k, expected) in cases {
        let verdict = is_k_choosable(&g, k, limits);
        rows.push(row(
            "choosability",
            format!("{name} is {k}-choosable"),
            expected,
            show(verdict.as_ref().map(|v| v.choosable)),
        ));
        if name == "C3" {
            let w = verdict.ok().and_then(|v| v.witness);
            rows.push(row(
                "choosability",
                "C3 witness is all lists {0,1}",
                true,
                w == Some(ListAssignment::uniform(3, 2)),
            ));
        }
    }
    rows
}

pub fn reducibility_rows(limits: &Limits) -> Vec<CheckRow> {
    vec![
        row(
            "reducibility",
            "C4 sizes (2,2,2,2) extends",
            true,
            show(check_extension(&fixtures::four_face_config(), limits)),
        ),
        row(
            "reducibility",
            "C3 sizes (2,2,2) extends",
            false,
            show(check_extension(&fixtures::triangle_config(), limits)),
        ),
        row(
            "reducibility",
            "H sizes (x2,y3,u2,v4,w2) extends with re-choice of {x,u}",
            true,
            show(check_extension_with_rechoice(&fixtures::h_config(), limits)),
        ),
    ]
}

pub fn structure_rows() -> Vec<CheckRow> {
    let trio = fixtures::trio();
    let trios = find_trios(&trio);
    let mut rows = vec![row("structures", "trio graph occurrences", 1, trios.len())];
    // x=0, y=1, u=2, v=3, w=4
    let expect = [
        ("v", 3, [0, 2, 3], VertexRole::Worst),
        ("x", 0, [0, 2, 3], VertexRole::Worse),
        ("y", 1, [1, 3, 4], VertexRole::Worse),
        ("u", 2, [0, 2, 3], VertexRole::Bad),
        ("w", 4, [1, 3, 4], VertexRole::Bad),
    ];
    for (label, s, t, role) in expect {
        rows.push(row(
            "structures",
            format!("role of {label} on {t:?}"),
            format!("{role:?}"),
            show(classify_role(&trio, s, t).map(|r| format!("{r:?}"))),
        ));
    }
    let holds = |g: &Graph, c: ConditionId| check_condition(g, c).holds;
    rows.push(row("structures", "5-wheel under Thm1", false, holds(&fixtures::five_wheel(), ConditionId::Thm1)));
    rows.push(row(
        "structures",
        "glued triangle-pentagon under Corollary",
        false,
        holds(&fixtures::glued_triangle_pentagon(), ConditionId::Corollary),
    ));
    for c in ConditionId::ALL {
        rows.push(row("structures", format!("C5 under {}", c.name()), true, holds(&Graph::cycle(5), c)));
    }
    rows
}

pub fn corollary_rows(limits: &Limits, count: usize) -> Vec<CheckRow> {
    fixtures::corollary_graphs(count)
        .iter()
        .enumerate()
        .map(|(i, g)| {
            row(
                "corollary-demo",
                format!("graph {i:02} ({})", crate::graph6::to_graph6(g)),
                true,
                show(is_k_choosable(g, 4, limits).map(|v| v.choosable)),
            )
        })
        .collect()
}

/// Every bundled check.
pub fn run_all(limits: &Limits) -> Vec<CheckRow> {
    let mut rows = eulerian_rows(limits);
    rows.extend(conservation_rows());
    rows.extend(choosability_rows(limits));
    rows.extend(reducibility_rows(limits));
    rows.extend(structure_rows());
    rows.extend(corollary_rows(limits, 50));
    rows
}
