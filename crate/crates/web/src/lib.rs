//! Browser bindings: each operation takes plain strings and numbers and
//! returns a JSON document for the page to render.

use serde::Serialize;
use spectral_extremal::bounds::{
    evaluate_all_with, spectral_mantel_classify_with, BoundReport, MantelClass,
};
use spectral_extremal::cycles::{cycle_spectrum, CycleSpectrum};
use spectral_extremal::formats::{from_graph6, to_graph6};
use spectral_extremal::generators::{
    complete, complete_bipartite, cycle, gnp, path, petersen, star,
};
use spectral_extremal::graph::{is_connected, Graph};
use spectral_extremal::spectrum::{eigendecompose, DEFAULT_TOL};
use spectral_extremal::walks::walk_counts;
use wasm_bindgen::prelude::*;

/// Largest order whose full cycle spectrum is searched in the page.
const CYCLE_CAP: usize = 12;

#[derive(Debug, Serialize)]
pub struct GraphView {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    pub bounds: Vec<BoundReport>,
    pub mantel: MantelClass,
    pub cycles: CycleSpectrum,
}

#[derive(Debug, Serialize)]
pub struct WalkPoint {
    pub k: usize,
    /// `w_k / w_(k-2)` in floating point.
    pub ratio: f64,
}

#[derive(Debug, Serialize)]
pub struct WalkSeries {
    pub lambda1_squared: f64,
    pub points: Vec<WalkPoint>,
}

fn parse(graph6: &str) -> Result<Graph, String> {
    let g = from_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    if g.n() == 0 {
        return Err("the graph has no vertices".into());
    }
    Ok(g)
}

/// graph6 for a named family; `params` is a comma separated list.
pub fn generate_graph6(family: &str, params: &str, seed: u64) -> Result<String, String> {
    let nums: Vec<f64> = params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("bad parameter {s:?}")))
        .collect::<Result<_, _>>()?;
    let int = |x: f64| {
        if x >= 0.0 && x.fract() == 0.0 {
            Ok(x as usize)
        } else {
            Err(format!("{x} is not a size"))
        }
    };
    let g = match (family, nums.as_slice()) {
        ("complete", &[n]) => complete(int(n)?),
        ("bipartite", &[a, b]) => complete_bipartite(int(a)?, int(b)?),
        ("cycle", &[n]) => cycle(int(n)?).map_err(|e| e.to_string())?,
        ("path", &[n]) => path(int(n)?),
        ("star", &[n]) => star(int(n)?),
        ("petersen", &[]) => petersen(),
        ("gnp", &[n, p]) => gnp(int(n)?, p, seed).map_err(|e| e.to_string())?,
        _ => {
            return Err(format!(
                "unknown family {family:?} or wrong number of parameters"
            ))
        }
    };
    to_graph6(&g).map_err(|e| e.to_string())
}

/// Spectrum, every bound, the spectral Mantel class and short cycles.
pub fn analyze_json(graph6: &str) -> Result<String, String> {
    let g = parse(graph6)?;
    let s = eigendecompose(&g, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let lambda1 = s.lambda1();
    let view = GraphView {
        graph6: to_graph6(&g).map_err(|e| e.to_string())?,
        n: g.n(),
        m: g.m(),
        edges: g.edges(),
        connected: is_connected(&g),
        bounds: evaluate_all_with(&g, lambda1),
        mantel: spectral_mantel_classify_with(&g, lambda1),
        cycles: cycle_spectrum(&g, g.n().min(CYCLE_CAP)),
        eigenvalues: s.eigenvalues,
        lambda1,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// Ratios `w_k / w_(k-2)` for `k = 2..=max_len`, which approach λ₁².
pub fn walk_ratios_json(graph6: &str, max_len: usize) -> Result<String, String> {
    let g = parse(graph6)?;
    let max_len = max_len.clamp(2, 200);
    let table = walk_counts(&g, max_len).map_err(|e| e.to_string())?;
    let lambda1 = eigendecompose(&g, DEFAULT_TOL)
        .map_err(|e| e.to_string())?
        .lambda1();
    let points = (2..=max_len)
        .map(|k| WalkPoint {
            k,
            ratio: table.total_f64(k) / table.total_f64(k - 2),
        })
        .collect();
    let series = WalkSeries {
        lambda1_squared: lambda1 * lambda1,
        points,
    };
    serde_json::to_string(&series).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn generate(family: &str, params: &str, seed: u64) -> Result<String, JsError> {
    generate_graph6(family, params, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(graph6: &str) -> Result<String, JsError> {
    analyze_json(graph6).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn walk_ratios(graph6: &str, max_len: usize) -> Result<String, JsError> {
    walk_ratios_json(graph6, max_len).map_err(|e| JsError::new(&e))
}
