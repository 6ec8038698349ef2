//! wasm-bindgen surface for the static demo page in `www/`.
//!
//! Results cross the boundary as flat `Float64Array`s; the layout of each is
//! documented on the exported function. The `*_values` functions hold the
//! logic and are plain Rust so they can be tested off the browser.

use hyperball::{find_optimal_p, lob, simplex_density, tetra_geometry, Error};
use wasm_bindgen::prelude::*;

const MAX_SAMPLES: usize = 20_000;

fn sample_grid(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, Error> {
    if from >= to || !from.is_finite() || !to.is_finite() {
        return Err(Error::InvalidInput(format!("empty range [{from}, {to}]")));
    }
    if !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(Error::InvalidInput(format!(
            "samples must be in 2..={MAX_SAMPLES}, got {samples}"
        )));
    }
    let last = (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| if i == samples - 1 { to } else { from + (to - from) * i as f64 / last })
        .collect())
}

/// Interleaved `[p0, δ0, p1, δ1, ...]`.
pub fn density_curve_values(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, Error> {
    let mut out = Vec::with_capacity(2 * samples);
    for p in sample_grid(from, to, samples)? {
        out.push(p);
        out.push(simplex_density(p)?.delta);
    }
    Ok(out)
}

/// `[h, vol_orthoscheme, vol_tetra, vol_piece, delta, tri_area, surface_area, omega]`.
pub fn geometry_values(p: f64) -> Result<Vec<f64>, Error> {
    let g = tetra_geometry(p)?;
    let row = simplex_density(p)?;
    Ok(vec![
        g.h,
        g.vol_orthoscheme,
        g.vol_tetra,
        row.vol_piece,
        row.delta,
        g.tri_area,
        g.surface_area,
        g.omega,
    ])
}

/// `[p_opt, delta_opt, iterations]`.
pub fn optimum_values(tol: f64) -> Result<Vec<f64>, Error> {
    let r = find_optimal_p(tol)?;
    Ok(vec![r.p_opt, r.delta_opt, r.iterations as f64])
}

/// Interleaved `[x0, Λ(x0), x1, Λ(x1), ...]`.
pub fn lobachevsky_values(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, Error> {
    let mut out = Vec::with_capacity(2 * samples);
    for x in sample_grid(from, to, samples)? {
        out.push(x);
        out.push(lob(x)?);
    }
    Ok(out)
}

fn to_js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = densityCurve)]
pub fn density_curve(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    density_curve_values(from, to, samples).map_err(to_js)
}

#[wasm_bindgen]
pub fn geometry(p: f64) -> Result<Vec<f64>, JsError> {
    geometry_values(p).map_err(to_js)
}

#[wasm_bindgen]
pub fn optimum(tol: f64) -> Result<Vec<f64>, JsError> {
    optimum_values(tol).map_err(to_js)
}

#[wasm_bindgen(js_name = lobachevskyCurve)]
pub fn lobachevsky_curve(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    lobachevsky_values(from, to, samples).map_err(to_js)
}
