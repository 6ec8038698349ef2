//! Simple frustum orthoschemes of the `[3, 3, p]` family.
//!
//! A regular truncated tetrahedron with dihedral parameter `p > 6` splits into
//! 24 congruent orthoschemes with essential angles `(π/p, π/3, π/3)`. Vertex 3
//! of the orthoscheme is outer and is cut off by its polar plane, which
//! carries the truncation triangle `Q0 Q1 Q2`; vertex 2 is the midpoint of the
//! common perpendicular between two truncation planes.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::error::{Error, Result};
use crate::lobachevsky::lob_unchecked;
use crate::lorentz::{gram_distance, invert_sym4, project_to_polar, projected_inner, SymMatrix4};

/// Index of the outer principal vertex.
pub const OUTER_VERTEX: usize = 3;
/// Index of the proper vertex lying on the common perpendicular.
pub const PERPENDICULAR_VERTEX: usize = 2;
/// Number of congruent orthoschemes in one truncated tetrahedron.
pub const ORTHOSCHEMES_PER_TETRAHEDRON: f64 = 24.0;

const DEGENERATE_SIDE: f64 = 1e-12;

/// Essential dihedral angles of a three-dimensional orthoscheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoschemeAngles {
    pub alpha01: f64,
    pub alpha12: f64,
    pub alpha23: f64,
}

impl OrthoschemeAngles {
    pub fn new(alpha01: f64, alpha12: f64, alpha23: f64) -> Result<Self> {
        for (name, a) in [("alpha01", alpha01), ("alpha12", alpha12), ("alpha23", alpha23)] {
            if !(0.0..=FRAC_PI_2).contains(&a) {
                return Err(Error::Domain(format!("{name} = {a} is outside [0, π/2]")));
            }
        }
        Ok(Self { alpha01, alpha12, alpha23 })
    }

    /// Angles `(π/p, π/3, π/3)` of the `[3, 3, p]` orthoscheme.
    pub fn regular(p: f64) -> Result<Self> {
        check_truncatable(p)?;
        Self::new(PI / p, FRAC_PI_3, FRAC_PI_3)
    }

    /// The `p → ∞` member of the family, with `α01 = 0`.
    pub fn regular_limit() -> Self {
        Self { alpha01: 0.0, alpha12: FRAC_PI_3, alpha23: FRAC_PI_3 }
    }
}

fn check_truncatable(p: f64) -> Result<()> {
    if p.is_nan() || p <= 6.0 {
        return Err(Error::Domain(format!(
            "p must exceed 6 for an outer vertex to exist, got {p}"
        )));
    }
    Ok(())
}

/// Coxeter-Schläfli matrix of the `[3, 3, p]` orthoscheme.
pub fn coxeter_matrix(p: f64) -> Result<SymMatrix4> {
    if p.is_nan() || p <= 2.0 {
        return Err(Error::Domain(format!("Coxeter parameter p must exceed 2, got {p}")));
    }
    let half = -FRAC_PI_3.cos();
    Ok(SymMatrix4::from_upper([
        [1.0, -(PI / p).cos(), 0.0, 0.0],
        [0.0, 1.0, half, 0.0],
        [0.0, 0.0, 1.0, half],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

/// Vertex Gram matrix `H = C^-1`, checked to have an outer vertex 3.
pub fn vertex_gram(p: f64) -> Result<SymMatrix4> {
    check_truncatable(p)?;
    let h = invert_sym4(&coxeter_matrix(p)?)?;
    let h33 = h.get(OUTER_VERTEX, OUTER_VERTEX);
    if !(h33 > 0.0) {
        return Err(Error::NotTruncatable { vertex: OUTER_VERTEX, gram: h33 });
    }
    Ok(h)
}

/// Auxiliary angle `θ ∈ [0, π/2)` of the volume formula,
/// `tan θ = sqrt(cos²α12 - sin²α01 sin²α23) / (cos α01 cos α23)`.
pub fn kellerhals_theta(angles: &OrthoschemeAngles) -> Result<f64> {
    let OrthoschemeAngles { alpha01, alpha12, alpha23 } = *angles;
    let radicand = alpha12.cos().powi(2) - (alpha01.sin() * alpha23.sin()).powi(2);
    if radicand < 0.0 {
        return Err(Error::Domain(format!(
            "cos²α12 - sin²α01·sin²α23 = {radicand:e} < 0: orthoscheme is not hyperbolic"
        )));
    }
    if alpha01 >= FRAC_PI_2 || alpha23 >= FRAC_PI_2 {
        return Err(Error::Domain(
            "cos α01 and cos α23 must both be positive".into(),
        ));
    }
    Ok(radicand.sqrt().atan2(alpha01.cos() * alpha23.cos()))
}

/// Volume of a complete orthoscheme of degree at most one from its
/// essential angles, as a sum of Lobachevsky function values.
pub fn orthoscheme_volume(angles: &OrthoschemeAngles) -> Result<f64> {
    let theta = kellerhals_theta(angles)?;
    let OrthoschemeAngles { alpha01: a, alpha12: b, alpha23: c } = *angles;
    let l = lob_unchecked;
    Ok(0.25
        * (l(a + theta) - l(a - theta)
            + l(FRAC_PI_2 + b - theta)
            + l(FRAC_PI_2 - b - theta)
            + l(c + theta)
            - l(c - theta)
            + 2.0 * l(FRAC_PI_2 - theta)))
}

/// Height `h(p)` of the congruent hyperballs: the distance from the
/// perpendicular vertex to the truncation plane, half the distance between
/// two base planes.
///
/// Evaluated as `asinh(|H23| / sqrt(-H22·H33))`, which is the same quantity
/// as `arccosh sqrt((H22·H33 - H23²) / (H22·H33))` but stays accurate as
/// `h → 0` for large `p`.
pub fn hyperball_height(p: f64) -> Result<f64> {
    let h = vertex_gram(p)?;
    let (h22, h33, h23) = (
        h.get(PERPENDICULAR_VERTEX, PERPENDICULAR_VERTEX),
        h.get(OUTER_VERTEX, OUTER_VERTEX),
        h.get(PERPENDICULAR_VERTEX, OUTER_VERTEX),
    );
    if !(h22 < 0.0) {
        return Err(Error::Domain(format!(
            "vertex {PERPENDICULAR_VERTEX} is not proper (Gram entry {h22:e})"
        )));
    }
    Ok((h23.abs() / (-h22 * h33).sqrt()).asinh())
}

/// The triangle `Q0 Q1 Q2` cut from the truncation plane by one orthoscheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationTriangle {
    pub area: f64,
    pub angle_q0: f64,
    pub angle_q1: f64,
    pub angle_q2: f64,
    /// Side lengths opposite `Q0`, `Q1`, `Q2`.
    pub sides: [f64; 3],
}

/// Angle opposite side `c` in a hyperbolic triangle with sides `a, b, c`.
fn opposite_angle(a: f64, b: f64, c: f64) -> Result<f64> {
    for side in [a, b, c] {
        if side < DEGENERATE_SIDE {
            return Err(Error::DegenerateTriangle { side });
        }
    }
    let cos_gamma = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
    Ok(cos_gamma.clamp(-1.0, 1.0).acos())
}

/// Projects the three proper vertices onto the truncation plane, measures the
/// resulting triangle by its Gram matrix and returns its angles and area
/// (angle defect).
pub fn truncation_triangle(p: f64) -> Result<TruncationTriangle> {
    let h = vertex_gram(p)?;
    let mut self_inner = [0.0; 3];
    for (j, g) in self_inner.iter_mut().enumerate() {
        *g = project_to_polar(&h, j, OUTER_VERTEX)?.0;
    }
    let side = |i: usize, j: usize| {
        gram_distance(self_inner[i], self_inner[j], projected_inner(&h, i, j, OUTER_VERTEX))
    };
    let sides = [side(1, 2)?, side(0, 2)?, side(0, 1)?];
    let [s0, s1, s2] = sides;
    let angle_q0 = opposite_angle(s1, s2, s0)?;
    let angle_q1 = opposite_angle(s0, s2, s1)?;
    let angle_q2 = opposite_angle(s0, s1, s2)?;
    Ok(TruncationTriangle {
        area: polygon_area(&[angle_q0, angle_q1, angle_q2]),
        angle_q0,
        angle_q1,
        angle_q2,
        sides,
    })
}

/// Area of a hyperbolic polygon from its interior angles (Gauss-Bonnet).
pub fn polygon_area(angles: &[f64]) -> f64 {
    (angles.len() as f64 - 2.0) * PI - angles.iter().sum::<f64>()
}

/// Geometric summary of the regular truncated tetrahedron for one `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedTetraGeometry {
    pub p: f64,
    pub h: f64,
    pub vol_orthoscheme: f64,
    pub vol_tetra: f64,
    /// Area of the truncation triangle of one orthoscheme.
    pub tri_area: f64,
    /// Area of one right-angled hexagonal face.
    pub hexagon_area: f64,
    pub surface_area: f64,
    /// Sum of the six dihedral angles along the hexagon-hexagon edges.
    pub omega: f64,
}

impl TruncatedTetraGeometry {
    /// Area of one triangular truncation face (six orthoscheme triangles).
    pub fn triangle_face_area(&self) -> f64 {
        6.0 * self.tri_area
    }

    /// Common distance `e_ij = 2h` between two base planes.
    pub fn base_plane_distance(&self) -> f64 {
        2.0 * self.h
    }
}

pub fn tetra_geometry(p: f64) -> Result<TruncatedTetraGeometry> {
    let angles = OrthoschemeAngles::regular(p)?;
    let h = hyperball_height(p)?;
    let vol_orthoscheme = orthoscheme_volume(&angles)?;
    let tri = truncation_triangle(p)?;
    // each solid edge angle is bisected by an orthoscheme wall
    let omega = 6.0 * 2.0 * angles.alpha01;
    let hexagon_area = polygon_area(&[FRAC_PI_2; 6]);
    let surface_area = 4.0 * hexagon_area + 4.0 * 6.0 * tri.area;
    Ok(TruncatedTetraGeometry {
        p,
        h,
        vol_orthoscheme,
        vol_tetra: ORTHOSCHEMES_PER_TETRAHEDRON * vol_orthoscheme,
        tri_area: tri.area,
        hexagon_area,
        surface_area,
        omega,
    })
}
