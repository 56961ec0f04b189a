//! WebAssembly bindings for the static page in `www/`.
//!
//! Each export wraps a plain Rust function of the same name with a `_impl`
//! suffix so the logic is testable natively.

use std::f64::consts::TAU;

use pants_core::lattice::SubsetK;
use pants_core::pants::{coamoeba_classify, pearl_degree as degree, CoamoebaRegion};
use pants_core::rnc::{crossing_positivity, curve_eval, solve_nodes};
use pants_core::Rational;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Region codes of a `resolution × resolution` grid over (θ_1, θ_2) ∈ [0, 2π)²,
/// with the remaining angles fixed to `rest`. Row-major in θ_2, cell centres.
/// 0 = outside, 1 = boundary, 2 = interior.
pub fn coamoeba_grid_impl(resolution: usize, rest: &[f64], tol: f64) -> Vec<u8> {
    let step = TAU / resolution as f64;
    let mut theta = vec![0.0; 2 + rest.len()];
    theta[2..].copy_from_slice(rest);
    let mut out = Vec::with_capacity(resolution * resolution);
    for row in 0..resolution {
        theta[1] = (row as f64 + 0.5) * step;
        for col in 0..resolution {
            theta[0] = (col as f64 + 0.5) * step;
            out.push(match coamoeba_classify(&theta, tol) {
                CoamoebaRegion::Outside => 0,
                CoamoebaRegion::Boundary => 1,
                CoamoebaRegion::Interior => 2,
            });
        }
    }
    out
}

#[wasm_bindgen]
pub fn coamoeba_grid(resolution: usize, rest: Vec<f64>, tol: f64) -> Vec<u8> {
    coamoeba_grid_impl(resolution, &rest, tol)
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|t| t.trim().parse::<Rational>().map_err(|e| format!("{t:?}: {e}"))).collect()
}

fn parse_subset(s: &str, n: usize) -> Result<SubsetK, String> {
    let idx = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    SubsetK::from_indices(&idx, n).map_err(|e| e.to_string())
}

/// Nodes, crossing data and `samples` points of the curve through the vertices
/// and the target `pphi` (comma-separated rationals summing to zero), as JSON.
/// Sample points are taken at z ∈ [−2, 2] and scaled to unit max-norm.
pub fn rational_normal_curve_impl(n: usize, pphi: &str, samples: usize) -> Result<String, String> {
    let target = parse_rationals(pphi)?;
    let c = solve_nodes(n, &target).map_err(|e| e.to_string())?;
    let crossings = crossing_positivity(&c).map_err(|e| e.to_string())?;
    let points: Vec<Vec<f64>> = (0..samples)
        .map(|i| {
            let z = Rational::new(4 * i as i64 - 2 * (samples as i64 - 1), samples.max(2) as i64 - 1);
            let p: Vec<f64> = curve_eval(&c, &z).iter().map(Rational::to_f64).collect();
            let m = p.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            p.iter().map(|x| if m > 0.0 { x / m } else { *x }).collect()
        })
        .collect();
    let v = json!({
        "nodes": c.nodes.iter().map(Rational::to_fraction_string).collect::<Vec<_>>(),
        "degree": c.cleared_degree(),
        "crossings": crossings,
        "samples": points,
    });
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn rational_normal_curve(n: usize, pphi: &str, samples: usize) -> Result<String, JsError> {
    rational_normal_curve_impl(n, pphi, samples).map_err(|e| JsError::new(&e))
}

/// Degree of a pearl; `inputs` lists the input labels separated by `;`,
/// each a comma-separated set of 1-based indices (empty for ∅).
pub fn pearl_degree_impl(n: usize, k0: &str, inputs: &str) -> Result<String, String> {
    let out = parse_subset(k0, n)?;
    let ins = inputs.split(';').map(|s| parse_subset(s, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(degree(out, &ins, n).to_fraction_string())
}

#[wasm_bindgen]
pub fn pearl_degree(n: usize, k0: &str, inputs: &str) -> Result<String, JsError> {
    pearl_degree_impl(n, k0, inputs).map_err(|e| JsError::new(&e))
}
