use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use dischargekit::choosability::{extension_counterexample, ReducibleConfigJson};
use dischargekit::embedding::EmbeddingJson;
use dischargekit::graph6::{read_graph6, to_graph6};
use dischargekit::orientation::OrientationJson;
use dischargekit::structures::{
    check_all_conditions, classify_role_among, enumerate_cycles, find_fixed_configs, find_trios,
};
use dischargekit::{
    apply_rules, check_extension, check_extension_with_rechoice, count_eulerian, final_report, find_certificate,
    fixtures, is_k_choosable, repro, Graph, Orientation, PlaneGraph, ReducibleConfig, RuleSet,
};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::config::{CommandKind, Format, RunConfig};

type Failure = String;

/// Exit status when every check passes.
pub const OK: i32 = 0;
/// Exit status when a check found a violation or witness.
pub const FOUND: i32 = 1;

fn fail(e: impl std::fmt::Display) -> Failure {
    e.to_string()
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(fail)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// A JSON file holding either one object or an array of them.
fn read_json_items<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, Failure> {
    let v: Value = serde_json::from_str(text).map_err(fail)?;
    match v {
        Value::Array(items) => items
            .into_iter()
            .map(|i| serde_json::from_value(i).map_err(fail))
            .collect(),
        other => Ok(vec![serde_json::from_value(other).map_err(fail)?]),
    }
}

fn load_embeddings(cfg: &RunConfig) -> Result<Vec<PlaneGraph>, Failure> {
    let mut out = Vec::new();
    for p in &cfg.inputs {
        for j in read_json_items::<EmbeddingJson>(&read_text(p)?)? {
            out.push(PlaneGraph::from_json(&j).map_err(fail)?);
        }
    }
    Ok(out)
}

fn load_orientations(cfg: &RunConfig) -> Result<Vec<Orientation>, Failure> {
    let mut out = Vec::new();
    for p in &cfg.inputs {
        for j in read_json_items::<OrientationJson>(&read_text(p)?)? {
            out.push(Orientation::from_json(&j).map_err(fail)?);
        }
    }
    Ok(out)
}

fn load_graphs(cfg: &RunConfig) -> Result<Vec<Graph>, Failure> {
    match cfg.format {
        Format::Graph6 => {
            let mut out = Vec::new();
            for p in &cfg.inputs {
                out.extend(read_graph6(&read_text(p)?).map_err(fail)?);
            }
            Ok(out)
        }
        Format::EmbeddingJson => Ok(load_embeddings(cfg)?.into_iter().map(|e| e.graph().clone()).collect()),
        Format::OrientationJson => Ok(load_orientations(cfg)?.into_iter().map(|o| o.base().clone()).collect()),
    }
}

/// A report plus the rows of its human-readable table.
struct Outcome {
    status: i32,
    report: Value,
    table: Vec<Vec<String>>,
}

pub fn run(cfg: &RunConfig) -> Result<i32, Failure> {
    let outcome = match cfg.command {
        CommandKind::Detect => detect(cfg)?,
        CommandKind::Choosable => choosable(cfg)?,
        CommandKind::AlonTarsi => alon_tarsi(cfg)?,
        CommandKind::Reduce => reduce(cfg)?,
        CommandKind::Discharge => discharge(cfg)?,
        CommandKind::ReproPaper => repro_all(cfg)?,
    };
    let text = serde_json::to_string_pretty(&outcome.report).map_err(fail)? + "\n";
    match &cfg.output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?,
        None if !cfg.summary => io::stdout().write_all(text.as_bytes()).map_err(fail)?,
        None => {}
    }
    if cfg.summary {
        print_table(&outcome.table);
    }
    Ok(outcome.status)
}

fn print_table(rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter(|r| r.len() > 1).filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
}

fn detect(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let graphs = load_graphs(cfg)?;
    let mut status = OK;
    let mut results = Vec::new();
    let mut table = vec![vec!["#".into(), "graph6".into(), "Thm1".into(), "Thm2".into(), "Corollary".into(), "trios".into(), "configs".into()]];
    for (i, g) in graphs.iter().enumerate() {
        let conditions = check_all_conditions(g);
        if conditions.iter().any(|c| !c.holds) {
            status = FOUND;
        }
        let trios = find_trios(g);
        let triangles = enumerate_cycles(g, 3).map_err(fail)?;
        let mut roles = Vec::new();
        for t in &triangles {
            let t = [t[0], t[1], t[2]];
            let in_trios = trios.iter().filter(|o| o.contains_triangle(t)).count();
            if in_trios == 0 {
                continue;
            }
            let mut per_vertex = Vec::new();
            for s in t {
                let role = classify_role_among(&trios, s, t).map_err(fail)?;
                per_vertex.push(json!({"vertex": s, "role": role}));
            }
            roles.push(json!({
                "triangle": t,
                "trio_count": in_trios,
                "multi_trio": in_trios > 1,
                "roles": per_vertex,
            }));
        }
        let configs = find_fixed_configs(g);
        let mark = |b: bool| if b { "holds" } else { "FAILS" }.to_string();
        let mut row = vec![i.to_string(), to_graph6(g)];
        row.extend(conditions.iter().map(|c| mark(c.holds)));
        row.push(trios.len().to_string());
        row.push(configs.len().to_string());
        table.push(row);
        results.push(json!({
            "index": i,
            "graph6": to_graph6(g),
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "conditions": conditions,
            "trios": trios,
            "triangle_roles": roles,
            "fixed_configs": configs,
        }));
    }
    Ok(Outcome {
        status,
        report: json!({ "results": results }),
        table,
    })
}

fn choosable(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let graphs = load_graphs(cfg)?;
    let mut status = OK;
    let mut results = Vec::new();
    let mut table = vec![vec!["#".into(), "graph6".into(), format!("{}-choosable", cfg.k)]];
    for (i, g) in graphs.iter().enumerate() {
        let verdict = is_k_choosable(g, cfg.k, &cfg.limits).map_err(fail)?;
        if !verdict.choosable {
            status = FOUND;
        }
        table.push(vec![i.to_string(), to_graph6(g), verdict.choosable.to_string()]);
        results.push(json!({
            "index": i,
            "graph6": to_graph6(g),
            "choosable": verdict.choosable,
            "witness": verdict.witness,
        }));
    }
    Ok(Outcome {
        status,
        report: json!({ "k": cfg.k, "results": results }),
        table,
    })
}

fn alon_tarsi(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let mut status = OK;
    let mut results = Vec::new();
    if cfg.format == Format::OrientationJson {
        let mut table = vec![vec!["#".into(), "arcs".into(), "EE".into(), "EO".into(), "differs".into()]];
        for (i, d) in load_orientations(cfg)?.iter().enumerate() {
            let c = count_eulerian(d, &cfg.limits).map_err(fail)?;
            if !c.differs() {
                status = FOUND;
            }
            table.push(vec![
                i.to_string(),
                d.arcs().len().to_string(),
                c.even.to_string(),
                c.odd.to_string(),
                c.differs().to_string(),
            ]);
            results.push(json!({
                "index": i,
                "orientation": d.to_json(),
                "even": c.even,
                "odd": c.odd,
                "differs": c.differs(),
                "outdegrees": d.outdegrees(),
            }));
        }
        return Ok(Outcome {
            status,
            report: json!({ "results": results }),
            table,
        });
    }
    let mut table = vec![vec!["#".into(), "graph6".into(), "certificate".into()]];
    for (i, g) in load_graphs(cfg)?.iter().enumerate() {
        let cert = find_certificate(g, &vec![cfg.k; g.vertex_count()], &cfg.limits).map_err(fail)?;
        if cert.is_none() {
            status = FOUND;
        }
        table.push(vec![i.to_string(), to_graph6(g), cert.is_some().to_string()]);
        results.push(json!({
            "index": i,
            "graph6": to_graph6(g),
            "certificate": cert.map(|c| c.report()),
        }));
    }
    Ok(Outcome {
        status,
        report: json!({ "k": cfg.k, "results": results }),
        table,
    })
}

fn builtin_configs() -> Vec<(String, ReducibleConfig)> {
    let mut out = vec![
        ("C4".to_string(), fixtures::four_face_config()),
        ("C3".to_string(), fixtures::triangle_config()),
        ("H".to_string(), fixtures::h_config()),
    ];
    for d in fixtures::drawn_orientations() {
        let g = d.orientation().base().clone();
        let c = ReducibleConfig::new(g, d.residual_sizes.clone(), vec![]).expect("bundled sizes are valid");
        out.push((d.name.clone(), c));
    }
    out
}

fn reduce(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let configs = if cfg.inputs.is_empty() {
        builtin_configs()
    } else {
        let mut out = Vec::new();
        for p in &cfg.inputs {
            for j in read_json_items::<ReducibleConfigJson>(&read_text(p)?)? {
                let name = j.name.clone().unwrap_or_else(|| format!("config-{}", out.len()));
                out.push((name, ReducibleConfig::from_json(&j).map_err(fail)?));
            }
        }
        out
    };
    let mut status = OK;
    let mut results = Vec::new();
    let mut table = vec![vec!["name".into(), "sizes".into(), "extends".into(), "re-choice".into()]];
    for (name, c) in &configs {
        let counterexample = extension_counterexample(c, &cfg.limits).map_err(fail)?;
        let extends = counterexample.is_none();
        debug_assert_eq!(check_extension(c, &cfg.limits).ok(), Some(extends));
        let rechoice = if c.choice_set().is_empty() {
            None
        } else {
            Some(check_extension_with_rechoice(c, &cfg.limits).map_err(fail)?)
        };
        if !rechoice.unwrap_or(extends) {
            status = FOUND;
        }
        table.push(vec![
            name.clone(),
            format!("{:?}", c.residual_sizes()),
            extends.to_string(),
            rechoice.map_or("-".into(), |b| b.to_string()),
        ]);
        results.push(json!({
            "name": name,
            "n": c.inner().vertex_count(),
            "edges": c.inner().edges(),
            "sizes": c.residual_sizes(),
            "choice_set": c.choice_set(),
            "extends": extends,
            "counterexample": counterexample,
            "extends_with_rechoice": rechoice,
        }));
    }
    Ok(Outcome {
        status,
        report: json!({ "results": results }),
        table,
    })
}

fn discharge(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let rules = match &cfg.rules {
        Some(p) => RuleSet::from_json(&read_text(p)?).map_err(fail)?,
        None => RuleSet::default(),
    };
    let mut status = OK;
    let mut results = Vec::new();
    let mut table = vec![vec!["#".into(), "n".into(), "faces".into(), "total".into(), "transfers".into(), "negatives".into()]];
    for (i, emb) in load_embeddings(cfg)?.iter().enumerate() {
        let ledger = apply_rules(emb, &rules).map_err(fail)?;
        let report = final_report(&ledger);
        if !report.all_nonnegative() {
            status = FOUND;
        }
        table.push(vec![
            i.to_string(),
            report.vertex_count.to_string(),
            report.face_count.to_string(),
            report.total.to_string(),
            report.transfers.to_string(),
            report.negatives.len().to_string(),
        ]);
        results.push(json!({ "index": i, "ledger": ledger, "report": report }));
    }
    Ok(Outcome {
        status,
        report: json!({ "results": results }),
        table,
    })
}

fn repro_all(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let rows = repro::run_all(&cfg.limits);
    let passed = rows.iter().filter(|r| r.pass).count();
    let failed = rows.len() - passed;
    let mut table = vec![vec!["".into(), "group".into(), "check".into(), "expected".into(), "actual".into()]];
    table.extend(rows.iter().map(|r| {
        vec![
            if r.pass { "PASS" } else { "FAIL" }.into(),
            r.group.into(),
            r.check.clone(),
            r.expected.clone(),
            r.actual.clone(),
        ]
    }));
    table.push(vec![format!("{passed} passed, {failed} failed")]);
    Ok(Outcome {
        status: if failed == 0 { OK } else { FOUND },
        report: json!({ "rows": rows, "passed": passed, "failed": failed }),
        table,
    })
}
