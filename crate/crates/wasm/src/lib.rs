//! JSON entry points for the browser demo.
//!
//! Every operation takes a ring source, either ring-file text or a catalog spec such
//! as `triangular(3,2)`, and returns a JSON document. The plain functions are what the
//! tests call; the `#[wasm_bindgen]` wrappers only convert errors to `JsError`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ringcomm::commutators::{center, commutator_subgroup, pr_spectrum};
use ringcomm::graph::{build_graph, verify_edge_identity, EdgeCase, MAX_GRAPH_ORDER};
use ringcomm::isoclinism::{find_isoclinism, verify_invariance, IsoclinismOutcome};
use ringcomm::probability::format_fraction;
use ringcomm::ringfile::parse_ring_file;
use ringcomm::{catalog, FiniteRing};

/// Graphs above this order are refused; the page draws every vertex.
pub const MAX_DRAWN_ORDER: usize = 256;

pub fn load(source: &str) -> Result<FiniteRing, String> {
    let looks_like_file = source
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("moduli"));
    let ring = if looks_like_file {
        parse_ring_file(source)
    } else {
        catalog::from_spec(source)
    };
    ring.map_err(|e| e.to_string())
}

fn summary(ring: &FiniteRing) -> Value {
    json!({
        "order": ring.order(),
        "moduli": ring.shape().moduli(),
        "commutative": ring.is_commutative(),
        "center": center(ring).len(),
        "derived": commutator_subgroup(ring).len(),
    })
}

/// `Pr_r` for every `r`.
pub fn spectrum_json(source: &str) -> Result<String, String> {
    let ring = load(source)?;
    let spectrum = pr_spectrum(&ring).map_err(|e| e.to_string())?;
    let entries: Vec<Value> = spectrum
        .entries()
        .iter()
        .map(|(r, p)| {
            json!({
                "r": r.to_string(),
                "num": p.numerator(),
                "den": p.denominator(),
                "text": p.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "ring": summary(&ring),
        "spectrum": entries,
        "sum": format_fraction(&spectrum.sum()),
    })
    .to_string())
}

/// The r-noncommuting graph with its edge-count identity.
pub fn graph_json(source: &str, r: &str) -> Result<String, String> {
    let ring = load(source)?;
    if ring.order() > MAX_DRAWN_ORDER.min(MAX_GRAPH_ORDER) {
        return Err(format!(
            "ring of order {} is too large to draw (limit {MAX_DRAWN_ORDER})",
            ring.order()
        ));
    }
    let r = ring.parse_element(r).map_err(|e| e.to_string())?;
    let graph = build_graph(&ring, &r).map_err(|e| e.to_string())?;
    let report = verify_edge_identity(&ring, &r).map_err(|e| e.to_string())?;
    let case = match report.case {
        EdgeCase::Zero => "r = 0",
        EdgeCase::Involutive => "2r = 0, r != 0",
        EdgeCase::Generic => "2r != 0",
    };
    Ok(json!({
        "ring": summary(&ring),
        "r": r.to_string(),
        "vertices": graph.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "edges": graph.edges(),
        "edge_count": graph.edge_count(),
        "case": case,
        "pr_r": report.pr_r.to_string(),
        "from_edges": format_fraction(&report.from_edges),
        "holds": report.holds,
    })
    .to_string())
}

/// Searches for an isoclinism and, if found, checks that it preserves every `Pr_r`.
pub fn isoclinism_json(first: &str, second: &str) -> Result<String, String> {
    let (r1, r2) = (load(first)?, load(second)?);
    let witness = match find_isoclinism(&r1, &r2).map_err(|e| e.to_string())? {
        IsoclinismOutcome::NotIsoclinic(reason) => {
            return Ok(json!({ "isoclinic": false, "reason": reason.to_string() }).to_string())
        }
        IsoclinismOutcome::Isoclinic(w) => w,
    };
    let report = verify_invariance(&r1, &r2, &witness).map_err(|e| e.to_string())?;
    let pairs = |m: &[(ringcomm::RingElement, ringcomm::RingElement)]| {
        m.iter()
            .map(|(a, b)| json!([a.to_string(), b.to_string()]))
            .collect::<Vec<_>>()
    };
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "r": e.r.to_string(),
                "left": e.left.to_string(),
                "beta_r": e.beta_r.to_string(),
                "right": e.right.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "isoclinic": true,
        "alpha": pairs(&witness.alpha),
        "beta": pairs(&witness.beta),
        "invariance": entries,
        "central_indices": [report.central_indices.0, report.central_indices.1],
        "holds": report.holds(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn spectrum(source: &str) -> Result<String, JsError> {
    spectrum_json(source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn graph(source: &str, r: &str) -> Result<String, JsError> {
    graph_json(source, r).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn isoclinism(first: &str, second: &str) -> Result<String, JsError> {
    isoclinism_json(first, second).map_err(|e| JsError::new(&e))
}
