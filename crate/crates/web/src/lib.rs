//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes sequence text and returns a JSON string, either the
//! result or `{"error": "..."}`, so the page never has to catch.

use egdiff_core::classes::{is_split, is_threshold, is_weakly_threshold, splittance};
use egdiff_core::complement::complement_sequence;
use egdiff_core::matrix::{difference_matrix, sigma_all};
use egdiff_core::posets::{dominates, muirhead_chain};
use egdiff_core::realize::havel_hakimi;
use egdiff_core::{is_graphical_li, max_difference, modified_durfee, principal_differences, DegreeSequence};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Classes {
    split: bool,
    threshold: bool,
    weakly_threshold: bool,
    splittance: u64,
}

#[derive(Serialize)]
struct Analysis {
    sequence: Vec<u32>,
    m: usize,
    delta: Vec<i64>,
    delta_star: Option<i64>,
    graphical: bool,
    /// Present when every term is below the length.
    sigma: Option<Vec<i64>>,
    matrix: Option<Vec<Vec<i64>>>,
    complement: Option<Vec<u32>>,
    complement_delta: Option<Vec<i64>>,
    /// Present for graphical input only.
    classes: Option<Classes>,
}

#[derive(Serialize)]
struct Step {
    sequence: Vec<u32>,
    delta: Vec<i64>,
}

#[derive(Serialize)]
struct Chain {
    dominates: bool,
    steps: Vec<Step>,
}

#[derive(Serialize)]
struct Realization {
    n: usize,
    /// 1-based, as in the CLI edge-list format.
    edges: Vec<[usize; 2]>,
}

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v).unwrap(),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

fn parse(text: &str) -> Result<DegreeSequence, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn analysis(d: &DegreeSequence) -> Analysis {
    let fits = d.fits();
    let bar = fits.then(|| complement_sequence(d).unwrap());
    let classes = is_graphical_li(d).then(|| Classes {
        split: is_split(d).unwrap(),
        threshold: is_threshold(d).unwrap(),
        weakly_threshold: is_weakly_threshold(d).unwrap(),
        splittance: splittance(d).unwrap(),
    });
    Analysis {
        sequence: d.terms().to_vec(),
        m: modified_durfee(d),
        delta: principal_differences(d).values().to_vec(),
        delta_star: max_difference(d).ok(),
        graphical: is_graphical_li(d),
        sigma: fits.then(|| sigma_all(d).unwrap()),
        matrix: fits.then(|| difference_matrix(d).unwrap().as_matrix().to_rows()),
        complement_delta: bar.as_ref().map(|b| principal_differences(b).values().to_vec()),
        complement: bar.map(DegreeSequence::into_terms),
        classes,
    }
}

/// Δ(d), σ, M(d), the complement and the class flags in one call.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    respond(parse(text).map(|d| analysis(&d)))
}

/// A chain of unit transformations from `upper` down to `lower`, each step
/// with its difference list.
#[wasm_bindgen]
pub fn dominance_chain(upper: &str, lower: &str) -> String {
    respond((|| {
        let (d, e) = (parse(upper)?, parse(lower)?);
        if !dominates(&d, &e).map_err(|e| e.to_string())? {
            return Ok(Chain { dominates: false, steps: Vec::new() });
        }
        let chain = muirhead_chain(&d, &e).map_err(|e| e.to_string())?;
        let steps = chain
            .into_iter()
            .map(|s| Step { delta: principal_differences(&s).values().to_vec(), sequence: s.into_terms() })
            .collect();
        Ok(Chain { dominates: true, steps })
    })())
}

/// One realization by Havel–Hakimi; vertex `i` has degree `d_i`.
#[wasm_bindgen]
pub fn realize(text: &str) -> String {
    respond((|| {
        let g = havel_hakimi(&parse(text)?).map_err(|e| e.to_string())?;
        let edges = g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
        Ok(Realization { n: g.order(), edges })
    })())
}
