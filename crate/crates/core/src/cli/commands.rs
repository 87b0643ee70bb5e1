use serde_json::json;

use crate::class::{for_each_member, make_class, WordClass};
use crate::classes::Verdict;
use crate::engine::{build_digraph, eulerian_check, generate, to_dot, Generation};
use crate::verifier::verify_ucycle;

use super::report::{
    big, cycle_json, defect_text, header, report_json, report_text, to_line, verification_json,
};
use super::{CliOutput, ExitCode, OutputFormat, RunConfig};

/// Binds the class and refuses runs whose word space exceeds the cap.
fn bind(cfg: &RunConfig) -> Result<WordClass, CliOutput> {
    let class = make_class(&cfg.spec).map_err(|e| CliOutput::error(ExitCode::Usage, e))?;
    class
        .check_cap()
        .map_err(|e| CliOutput::error(ExitCode::Usage, e))?;
    Ok(class)
}

fn need_digraph(class: &WordClass) -> Result<(), CliOutput> {
    if class.n() < 2 {
        let v = class.theorem_verdict();
        return Err(CliOutput::error(
            ExitCode::Usage,
            format!(
                "the digraph engine needs n >= 2; for n = 1 the known verdict is {} ({})",
                v.verdict, v.citation
            ),
        ));
    }
    Ok(())
}

pub fn cmd_generate(cfg: &RunConfig) -> CliOutput {
    let class = match bind(cfg).and_then(|c| need_digraph(&c).map(|_| c)) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let generation = match generate(&class) {
        Ok(g) => g,
        Err(e) => return CliOutput::error(ExitCode::Usage, e),
    };
    match generation {
        Generation::NoCycle(report) => CliOutput::with(
            ExitCode::Negative,
            match cfg.format {
                OutputFormat::Json => report_json(&class, &report),
                OutputFormat::Text => report_text(&class, &report),
            },
        ),
        Generation::Cycle(mut cycle, report) => {
            if cfg.canonical {
                cycle.canonicalize();
            }
            match verify_ucycle(&cycle.letters, &class) {
                Ok(r) if r.valid => {}
                Ok(r) => {
                    let defect = r
                        .defect
                        .map(|d| defect_text(&class, &d))
                        .unwrap_or_default();
                    return CliOutput::error(
                        ExitCode::Internal,
                        format!("generated cycle failed verification: {defect}"),
                    );
                }
                Err(e) => return CliOutput::error(ExitCode::Internal, e),
            }
            CliOutput::ok(match cfg.format {
                OutputFormat::Json => cycle_json(&class, &cycle, &report),
                OutputFormat::Text => format!("{}\n", class.render(&cycle.letters)),
            })
        }
    }
}

pub fn cmd_verify(cfg: &RunConfig, candidate: &str) -> CliOutput {
    let class = match bind(cfg) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let letters = match class.alphabet().parse(candidate) {
        Ok(w) => w,
        Err(e) => return CliOutput::error(ExitCode::Usage, e),
    };
    let result = match verify_ucycle(&letters, &class) {
        Ok(r) => r,
        Err(e) => return CliOutput::error(ExitCode::Usage, e),
    };
    let code = if result.valid {
        ExitCode::Ok
    } else {
        ExitCode::Negative
    };
    let text = match (cfg.format, &result.defect) {
        (OutputFormat::Json, _) => verification_json(&class, &result),
        (OutputFormat::Text, None) => "valid\n".to_string(),
        (OutputFormat::Text, Some(d)) => format!("invalid: {}\n", defect_text(&class, d)),
    };
    CliOutput::with(code, text)
}

pub fn cmd_count(cfg: &RunConfig) -> CliOutput {
    let class = match make_class(&cfg.spec) {
        Ok(c) => c,
        Err(e) => return CliOutput::error(ExitCode::Usage, e),
    };
    let formula = class.closed_count();
    let enumerated = if class.check_cap().is_ok() {
        let mut count = 0u128;
        if let Err(e) = for_each_member(&class, |_, _| count += 1) {
            return CliOutput::error(ExitCode::Usage, e);
        }
        Some(count)
    } else {
        None
    };
    let count = match (formula, enumerated) {
        (Some(f), Some(e)) if f != e => {
            return CliOutput::error(
                ExitCode::Internal,
                format!("closed count {f} disagrees with enumeration {e}"),
            )
        }
        (Some(c), _) | (None, Some(c)) => c,
        (None, None) => {
            return CliOutput::error(
                ExitCode::Usage,
                class.check_cap().expect_err("cap was exceeded"),
            )
        }
    };
    CliOutput::ok(match cfg.format {
        OutputFormat::Json => {
            let mut m = header(&class);
            m.insert("count".into(), big(count));
            m.insert(
                "formula".into(),
                formula.map_or(serde_json::Value::Null, big),
            );
            m.insert(
                "enumerated".into(),
                enumerated.map_or(serde_json::Value::Null, big),
            );
            to_line(m)
        }
        OutputFormat::Text => format!("{count}\n"),
    })
}

pub fn cmd_exists(cfg: &RunConfig) -> CliOutput {
    let class = match bind(cfg) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let theorem = class.theorem_verdict();
    let report = if class.n() >= 2 {
        match build_digraph(&class) {
            Ok(g) => Some(eulerian_check(&g)),
            Err(e) => return CliOutput::error(ExitCode::Usage, e),
        }
    } else {
        None
    };
    let engine = report.as_ref().map(|r| r.verdict);
    let contradiction = matches!(
        (theorem.verdict.settled(), engine),
        (Some(t), Some(e)) if t != e
    );
    let code = if contradiction {
        ExitCode::Contradiction
    } else {
        ExitCode::Ok
    };
    let engine_word = |e: Option<bool>| match e {
        Some(true) => Verdict::Exists.as_str(),
        Some(false) => Verdict::NotExists.as_str(),
        None => "n/a",
    };

    let text = match cfg.format {
        OutputFormat::Json => {
            let mut m = header(&class);
            m.insert("theorem".into(), json!(theorem.verdict.as_str()));
            m.insert("citation".into(), json!(theorem.citation));
            m.insert("engine".into(), json!(engine_word(engine)));
            m.insert("consistent".into(), json!(!contradiction));
            if let Some(r) = &report {
                super::report::report_fields(&class, r, &mut m);
            }
            to_line(m)
        }
        OutputFormat::Text => {
            let mut s = format!("class: {}\n", class.label());
            s.push_str(&format!(
                "theorem: {} ({})\n",
                theorem.verdict, theorem.citation
            ));
            match &report {
                Some(r) => {
                    let reasons: Vec<&str> = r.reasons.iter().map(|x| x.as_str()).collect();
                    s.push_str(&format!(
                        "engine: {} (edges={}, components={}, violations={}{})\n",
                        engine_word(engine),
                        r.edge_count,
                        r.nontrivial_component_count,
                        r.degree_violations.len(),
                        if reasons.is_empty() {
                            String::new()
                        } else {
                            format!(", reasons={}", reasons.join(","))
                        }
                    ));
                }
                None => s.push_str("engine: n/a (n = 1)\n"),
            }
            s.push_str(if contradiction {
                "CONTRADICTION\n"
            } else {
                "consistent\n"
            });
            s
        }
    };
    CliOutput::with(code, text)
}

pub fn cmd_graph(cfg: &RunConfig) -> CliOutput {
    let class = match bind(cfg).and_then(|c| need_digraph(&c).map(|_| c)) {
        Ok(c) => c,
        Err(out) => return out,
    };
    match build_digraph(&class) {
        Ok(g) => CliOutput::ok(to_dot(&g)),
        Err(e) => CliOutput::error(ExitCode::Usage, e),
    }
}
