//! Hyperball volumes and local packing densities.
//!
//! Lengths are in the natural unit of curvature `-1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::orthoscheme::{
    hyperball_height, orthoscheme_volume, truncation_triangle, OrthoschemeAngles,
    ORTHOSCHEMES_PER_TETRAHEDRON,
};

/// Volume of the part of a hyperball of height `h` lying over a base region
/// of area `area`, inside the prism orthogonal to the base plane:
/// `area · (sinh 2h + 2h) / 4`.
pub fn hyperball_piece_volume(area: f64, h: f64) -> Result<f64> {
    if !(area >= 0.0) || !(h >= 0.0) {
        return Err(Error::Domain(format!(
            "hyperball piece needs non-negative area and height, got area = {area}, h = {h}"
        )));
    }
    Ok(0.25 * area * ((2.0 * h).sinh() + 2.0 * h))
}

/// Per-orthoscheme data of the densest hyperball packing for one `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityRow {
    pub p: f64,
    pub h: f64,
    pub vol_orthoscheme: f64,
    /// Hyperball volume contained in one orthoscheme.
    pub vol_piece: f64,
    pub delta: f64,
}

impl DensityRow {
    pub fn vol_tetra(&self) -> f64 {
        ORTHOSCHEMES_PER_TETRAHEDRON * self.vol_orthoscheme
    }

    /// Total hyperball volume inside the truncated tetrahedron.
    pub fn vol_hyperballs_tetra(&self) -> f64 {
        ORTHOSCHEMES_PER_TETRAHEDRON * self.vol_piece
    }
}

/// Local density of the congruent hyperball packing in the regular truncated
/// tetrahedron with parameter `p > 6`.
///
/// The hyperball piece in one orthoscheme is the prism of height `h(p)` over
/// the truncation triangle; the tetrahedron-level ratio is the same since
/// numerator and denominator both scale by 24.
pub fn simplex_density(p: f64) -> Result<DensityRow> {
    let angles = OrthoschemeAngles::regular(p)?;
    let h = hyperball_height(p)?;
    let vol_orthoscheme = orthoscheme_volume(&angles)?;
    let area = truncation_triangle(p)?.area;
    let vol_piece = hyperball_piece_volume(area, h)?;
    Ok(DensityRow { p, h, vol_orthoscheme, vol_piece, delta: vol_piece / vol_orthoscheme })
}

/// Density of the three hypercycle domains of width `h` in a regular
/// right-angled hexagon whose alternate sides are at distance `2h`:
/// `6 sinh(h) asinh(1 / (2 sinh h)) / π`. Increases towards `3/π`.
pub fn vermes_hexagon_density(h: f64) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain(format!(
            "hexagon density needs a positive finite width, got {h}"
        )));
    }
    let s = h.sinh();
    Ok(6.0 * s * (0.5 / s).asinh() / PI)
}
