//! Browser bindings: build a family, analyse a graph6 string, and tabulate
//! the extremal families' spectral radii against their bounds.

use serde::Serialize;
use spectra_core::forbidden::{contains_subgraph, parse_patterns};
use spectra_core::spectral::{
    closed_q_friendship, closed_q_splitstar2, closed_q_splitstarplus1, das_bound,
    max_degree_pressure, q_cone_over_triangles,
};
use spectra_core::table::bounds_table;
use spectra_core::{graph6, q_max, Family, FamilySpec, Graph};
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

#[derive(Serialize)]
struct Summary {
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    q: f64,
    residual: f64,
    pressure: Option<f64>,
    das: Option<f64>,
    closed: Option<f64>,
    contains: Vec<String>,
}

fn summarise(g: &Graph, closed: Option<f64>, free: &str) -> Result<Summary, JsValue> {
    let r = q_max(g);
    let patterns = parse_patterns(free).map_err(js_err)?;
    Ok(Summary {
        graph6: graph6::encode(g),
        n: g.order(),
        m: g.size(),
        edges: g.edges().collect(),
        q: r.q,
        residual: r.residual,
        pressure: max_degree_pressure(g).ok().map(|(_, p)| p),
        das: das_bound(g).ok(),
        closed,
        contains: patterns
            .iter()
            .filter(|p| contains_subgraph(g, p).is_some())
            .map(|p| p.name().to_string())
            .collect(),
    })
}

fn closed_form(family: Family, params: &[usize]) -> Option<f64> {
    match (family, params) {
        (Family::Friendship, &[n]) => closed_q_friendship(n).ok(),
        (Family::SplitStar, &[n, 2]) => closed_q_splitstar2(n).ok(),
        (Family::SplitStarPlus, &[n, 1]) => closed_q_splitstarplus1(n).ok(),
        (Family::ConeOverTriangles, &[n]) => q_cone_over_triangles(n).ok(),
        _ => None,
    }
}

/// JSON summary of a named family. `params` is a comma-separated list in the
/// family's parameter order (`n`, `n,k` or path lengths).
#[wasm_bindgen]
pub fn family_summary(family: &str, params: &str, free: &str) -> Result<String, JsValue> {
    let family: Family = family.parse().map_err(js_err)?;
    let params = params
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(js_err))
        .collect::<Result<Vec<_>, _>>()?;
    let g = FamilySpec::new(family, params.clone())
        .build()
        .map_err(js_err)?;
    let s = summarise(&g, closed_form(family, &params), free)?;
    serde_json::to_string(&s).map_err(js_err)
}

/// JSON summary of one graph6 line.
#[wasm_bindgen]
pub fn analyze_graph6(line: &str, free: &str) -> Result<String, JsValue> {
    let g = graph6::decode(line).map_err(js_err)?;
    serde_json::to_string(&summarise(&g, None, free)?).map_err(js_err)
}

/// JSON array of bounds-table rows for `n_min..=n_max`.
#[wasm_bindgen]
pub fn bounds_curves(n_min: usize, n_max: usize) -> Result<String, JsValue> {
    let rows = bounds_table(n_min, n_max).map_err(js_err)?;
    serde_json::to_string(&rows).map_err(js_err)
}
