//! Text and JSON rendering shared by the subcommands.

use serde_json::{json, Map, Value};

use crate::class::WordClass;
use crate::engine::{ExistenceReport, UCycle};
use crate::verifier::{Defect, VerificationResult};

/// Keys common to every JSON document: class, n, k, params.
pub fn header(class: &WordClass) -> Map<String, Value> {
    let mut params = Map::new();
    if let Some(p) = class.partition() {
        if class.kind() == crate::ClassKind::Alternating {
            params.insert("kv".into(), json!(p.sizes()[0]));
            params.insert("kc".into(), json!(p.sizes()[1]));
        } else {
            params.insert("categories".into(), json!(p.sizes()));
        }
    }
    let mut m = Map::new();
    m.insert("class".into(), json!(class.name()));
    m.insert("n".into(), json!(class.n()));
    m.insert("k".into(), json!(class.k()));
    m.insert("params".into(), Value::Object(params));
    m
}

pub fn report_fields(class: &WordClass, report: &ExistenceReport, m: &mut Map<String, Value>) {
    let render = |w: &[crate::Letter]| class.render(w);
    m.insert("verdict".into(), json!(report.verdict));
    m.insert(
        "reasons".into(),
        json!(report
            .reasons
            .iter()
            .map(|r| r.as_str())
            .collect::<Vec<_>>()),
    );
    m.insert(
        "degree_violations".into(),
        Value::Array(
            report
                .degree_violations
                .iter()
                .map(|v| json!({"vertex": render(&v.vertex), "in": v.in_degree, "out": v.out_degree}))
                .collect(),
        ),
    );
    m.insert(
        "components".into(),
        Value::Array(
            report
                .components
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "vertices": c.vertex_count,
                        "edges": c.edge_count,
                        "labels": c.edges.iter().map(|w| render(w)).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        ),
    );
    m.insert("edge_count".into(), json!(report.edge_count));
}

pub fn cycle_json(class: &WordClass, cycle: &UCycle, report: &ExistenceReport) -> String {
    let mut m = header(class);
    m.insert("length".into(), json!(cycle.len()));
    m.insert("cycle".into(), json!(class.render(&cycle.letters)));
    m.insert(
        "start_vertex".into(),
        json!(class.render(&cycle.start_vertex)),
    );
    report_fields(class, report, &mut m);
    to_line(m)
}

pub fn report_json(class: &WordClass, report: &ExistenceReport) -> String {
    let mut m = header(class);
    report_fields(class, report, &mut m);
    to_line(m)
}

/// Counts are JSON numbers when they fit in `u64`, decimal strings beyond.
pub fn big(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

pub fn to_line(m: Map<String, Value>) -> String {
    let mut s = serde_json::to_string(&Value::Object(m)).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn report_text(class: &WordClass, report: &ExistenceReport) -> String {
    let mut s = format!("no U-cycle for {}\n", class.label());
    let reasons: Vec<&str> = report.reasons.iter().map(|r| r.as_str()).collect();
    s.push_str(&format!("reasons: {}\n", reasons.join(", ")));
    s.push_str(&format!("edges: {}\n", report.edge_count));
    s.push_str(&format!(
        "nontrivial components: {}\n",
        report.nontrivial_component_count
    ));
    for v in &report.degree_violations {
        s.push_str(&format!(
            "degree violation: {} in={} out={}\n",
            class.render(&v.vertex),
            v.in_degree,
            v.out_degree
        ));
    }
    for c in &report.components {
        let labels: Vec<String> = c.edges.iter().map(|w| class.render(w)).collect();
        let more = if c.is_complete() { "" } else { " ..." };
        s.push_str(&format!(
            "component {}: {} vertices, {} edges: {}{more}\n",
            c.id,
            c.vertex_count,
            c.edge_count,
            labels.join(" ")
        ));
    }
    s
}

pub fn defect_json(class: &WordClass, defect: &Defect) -> Value {
    match defect {
        Defect::LengthMismatch { expected, actual } => {
            json!({"kind": defect.kind(), "expected": expected.to_string(), "actual": actual})
        }
        Defect::NonMemberWindow { index, window } => {
            json!({"kind": defect.kind(), "index": index, "window": class.render(window)})
        }
        Defect::DuplicateWindow {
            first,
            second,
            window,
        } => json!({
            "kind": defect.kind(),
            "index": second,
            "first": first,
            "window": class.render(window),
        }),
        Defect::Incomplete { missing } => {
            json!({"kind": defect.kind(), "missing": missing.to_string()})
        }
    }
}

pub fn defect_text(class: &WordClass, defect: &Defect) -> String {
    match defect {
        Defect::LengthMismatch { expected, actual } => {
            format!("LengthMismatch expected={expected} actual={actual}")
        }
        Defect::NonMemberWindow { index, window } => {
            format!(
                "NonMemberWindow index={index} window={}",
                class.render(window)
            )
        }
        Defect::DuplicateWindow {
            first,
            second,
            window,
        } => format!(
            "DuplicateWindow index={second} first={first} window={}",
            class.render(window)
        ),
        Defect::Incomplete { missing } => format!("Incomplete missing={missing}"),
    }
}

pub fn verification_json(class: &WordClass, result: &VerificationResult) -> String {
    let mut m = header(class);
    m.insert("valid".into(), json!(result.valid));
    m.insert(
        "defect".into(),
        result
            .defect
            .as_ref()
            .map_or(Value::Null, |d| defect_json(class, d)),
    );
    m.insert("expected_size".into(), big(result.expected_size));
    m.insert("actual_size".into(), json!(result.actual_size));
    to_line(m)
}
