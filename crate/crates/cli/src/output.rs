//! One function per subcommand, each producing both renderings.

use egdiff_core::classes::{is_split, is_threshold, is_weakly_threshold, splittance};
use egdiff_core::complement::{complement_sequence, shared_differences};
use egdiff_core::matrix::{difference_matrix, ferrers, sigma_all};
use egdiff_core::posets::{dominates, muirhead_chain, rao_leq};
use egdiff_core::realize::{enumerate_labeled_realizations, forcible_pairs, havel_hakimi, ForcedKind, Graph};
use egdiff_core::{is_graphical_li, max_difference, modified_durfee, principal_differences, DegreeSequence};
use serde_json::{json, Value};

use crate::Failure;

pub struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json }
    }

    pub fn empty() -> Self {
        Report { text: String::new(), json: Value::Null }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn json(&self) -> &Value {
        &self.json
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            if !self.json.is_null() {
                println!("{}", self.json);
            }
        } else if !self.text.is_empty() {
            println!("{}", self.text.trim_end_matches('\n'));
        }
    }
}

pub fn commas<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    json!({ "n": g.order(), "edges": edges })
}

pub fn delta(d: &DegreeSequence) -> Report {
    let m = modified_durfee(d);
    let diffs = principal_differences(d);
    let star = max_difference(d).ok();
    let graphical = is_graphical_li(d);
    let star_text = star.map_or_else(|| "none".to_string(), |s| s.to_string());
    Report::new(
        format!("m={m} Δ={diffs} Δ*={star_text} graphical={graphical}"),
        json!({ "m": m, "delta": diffs.values(), "delta_star": star, "graphical": graphical }),
    )
}

pub fn classify(d: &DegreeSequence) -> Result<Report, Failure> {
    let split = is_split(d)?;
    let threshold = is_threshold(d)?;
    let weak = is_weakly_threshold(d)?;
    let s = splittance(d)?;
    Ok(Report::new(
        format!("split={split} threshold={threshold} weakly_threshold={weak} splittance={s}"),
        json!({ "split": split, "threshold": threshold, "weakly_threshold": weak, "splittance": s }),
    ))
}

pub fn matrix(d: &DegreeSequence, want_ferrers: bool) -> Result<Report, Failure> {
    let (which, text, rows) = if want_ferrers {
        let f = ferrers(d)?;
        ("F", f.to_string(), f.as_matrix().to_rows())
    } else {
        let m = difference_matrix(d)?;
        ("M", m.to_string(), m.as_matrix().to_rows())
    };
    Ok(Report::new(text, json!({ "which": which, "n": d.len(), "rows": rows })))
}

pub fn sigma(d: &DegreeSequence) -> Result<Report, Failure> {
    let s = sigma_all(d)?;
    Ok(Report::new(commas(&s), json!({ "sigma": s })))
}

pub fn complement(d: &DegreeSequence) -> Result<Report, Failure> {
    let bar = complement_sequence(d)?;
    Ok(Report::new(commas(bar.terms()), json!({ "complement": bar.terms() })))
}

pub fn shared(d: &DegreeSequence) -> Result<Report, Failure> {
    let shared = shared_differences(d)?;
    let text = shared
        .iter()
        .map(|s| {
            let condition = serde_json::to_value(s.condition).unwrap();
            format!("k={} value={} condition={}", s.k, s.value, condition.as_str().unwrap())
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::new(text, json!({ "shared": shared })))
}

pub fn dominance(d: &DegreeSequence, e: &DegreeSequence) -> Result<Report, Failure> {
    let holds = dominates(d, e)?;
    Ok(Report::new(holds.to_string(), json!({ "dominates": holds })))
}

pub fn rao(e: &DegreeSequence, d: &DegreeSequence, limit: usize) -> Result<Report, Failure> {
    let holds = rao_leq(e, d, limit)?;
    Ok(Report::new(holds.to_string(), json!({ "rao_leq": holds })))
}

pub fn chain(d: &DegreeSequence, e: &DegreeSequence) -> Result<Report, Failure> {
    let chain = muirhead_chain(d, e)?;
    let text = chain.iter().map(|s| commas(s.terms())).collect::<Vec<_>>().join("\n");
    let steps: Vec<&[u32]> = chain.iter().map(DegreeSequence::terms).collect();
    Ok(Report::new(text, json!({ "chain": steps })))
}

pub fn realize(d: &DegreeSequence) -> Result<Report, Failure> {
    let g = havel_hakimi(d)?;
    Ok(Report::new(g.to_string(), graph_json(&g)))
}

pub fn enumerate(d: &DegreeSequence, limit: usize) -> Result<Report, Failure> {
    let graphs = enumerate_labeled_realizations(d, limit)?;
    let mut text = graphs.len().to_string();
    for g in &graphs {
        text.push_str("\n\n");
        text.push_str(g.to_string().trim_end());
    }
    let all: Vec<Value> = graphs.iter().map(graph_json).collect();
    Ok(Report::new(text, json!({ "count": graphs.len(), "graphs": all })))
}

pub fn forcible(d: &DegreeSequence, limit: usize) -> Result<Report, Failure> {
    let pairs = forcible_pairs(d, limit)?;
    let text = pairs
        .iter()
        .map(|p| {
            let kind = match p.kind {
                ForcedKind::Adjacent => "adjacent",
                ForcedKind::Nonadjacent => "nonadjacent",
            };
            let trivial = if p.trivial { " trivial" } else { "" };
            format!("{} {} {kind}{trivial}", p.i, p.j)
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::new(text, json!({ "pairs": pairs })))
}
