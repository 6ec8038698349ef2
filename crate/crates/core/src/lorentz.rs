//! Metric kernel of the projective model of hyperbolic 3-space.
//!
//! Vectors of `R^4` carry the bilinear form of signature `(1, 3)`,
//! `<x, y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3`. A homogeneous vector is a
//! proper point when `<x, x> < 0`, an ideal point when `<x, x> = 0` and an
//! outer point otherwise.
//!
//! Everything downstream works on Gram matrices of vertex vectors: if `C` is
//! the Coxeter matrix of a simplex, its inverse `H` is the Gram matrix of the
//! vertex poles and distances, projections and angles can be expanded purely
//! in entries of `H`.

use crate::error::{Error, Result};

/// Default relative tolerance under which `<x, x>` counts as zero.
pub const IDEAL_TOLERANCE: f64 = 1e-10;

/// Default `|det|` threshold below which a matrix is treated as singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e-12;

/// Slack allowed below 1 for a cosh argument before it is rejected.
const COSH_SLACK: f64 = 1e-12;

/// Homogeneous coordinates `(x0, x1, x2, x3)` of a projective point or plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzVector(pub [f64; 4]);

impl LorentzVector {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self([x0, x1, x2, x3])
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|c| c * s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    /// Sum of squared components (Euclidean, not Lorentzian).
    pub fn euclidean_norm_sq(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn inner(&self, other: &Self) -> f64 {
        bilinear_form(self, other)
    }
}

impl From<[f64; 4]> for LorentzVector {
    fn from(c: [f64; 4]) -> Self {
        Self(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// Interior point of hyperbolic space.
    Proper,
    /// Point on the absolute quadric.
    Ideal,
    /// Point outside the absolute; its polar plane meets hyperbolic space.
    Outer,
}

pub fn bilinear_form(x: &LorentzVector, y: &LorentzVector) -> f64 {
    let (a, b) = (x.0, y.0);
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Classifies `x` by the sign of `<x, x>`; values with
/// `|<x, x>| <= tol * |x|^2` are reported as [`PointClass::Ideal`].
pub fn classify_point(x: &LorentzVector, tol: f64) -> Result<PointClass> {
    if !(tol >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "classification tolerance must be non-negative, got {tol}"
        )));
    }
    if x.is_zero() {
        return Err(Error::InvalidInput(
            "the zero vector does not represent a projective point".into(),
        ));
    }
    let q = bilinear_form(x, x);
    Ok(if q.abs() <= tol * x.euclidean_norm_sq() {
        PointClass::Ideal
    } else if q < 0.0 {
        PointClass::Proper
    } else {
        PointClass::Outer
    })
}

/// Symmetric 4x4 matrix stored as its upper triangle.
///
/// Symmetry is structural: `get(i, j)` and `get(j, i)` read the same slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMatrix4 {
    packed: [f64; 10],
}

#[inline]
const fn packed_index(i: usize, j: usize) -> usize {
    let (r, c) = if i <= j { (i, j) } else { (j, i) };
    // rows of the upper triangle hold 4, 3, 2, 1 entries: offsets 0, 4, 7, 9
    r * (9 - r) / 2 + (c - r)
}

impl SymMatrix4 {
    pub fn zeros() -> Self {
        Self { packed: [0.0; 10] }
    }

    pub fn identity() -> Self {
        Self::diagonal([1.0; 4])
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::zeros();
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Builds the matrix from `f(i, j)` evaluated on the upper triangle `i <= j`.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in i..4 {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Takes the upper triangle of a full 4x4 array; the lower triangle is ignored.
    pub fn from_upper(rows: [[f64; 4]; 4]) -> Self {
        Self::from_fn(|i, j| rows[i][j])
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < 4 && j < 4, "index ({i}, {j}) out of range");
        self.packed[packed_index(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(i < 4 && j < 4, "index ({i}, {j}) out of range");
        self.packed[packed_index(i, j)] = value;
    }

    pub fn to_array(&self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.get(i, j);
            }
        }
        out
    }

    /// Full (generally non-symmetric) product `self * other`.
    pub fn mul(&self, other: &Self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.get(i, k) * other.get(k, j)).sum();
            }
        }
        out
    }

    /// Signed cofactor `(-1)^(i+j) * det(minor without row i, column j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> f64 {
        let rows: Vec<usize> = (0..4).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
        let m = |a: usize, b: usize| self.get(rows[a], cols[b]);
        let minor = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        if (i + j).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn determinant(&self) -> f64 {
        (0..4).map(|j| self.get(0, j) * self.cofactor(0, j)).sum()
    }
}

impl Default for SymMatrix4 {
    fn default() -> Self {
        Self::zeros()
    }
}

/// Inverse through the adjugate, with the default singularity threshold.
pub fn invert_sym4(c: &SymMatrix4) -> Result<SymMatrix4> {
    invert_sym4_with_threshold(c, SINGULARITY_THRESHOLD)
}

pub fn invert_sym4_with_threshold(c: &SymMatrix4, threshold: f64) -> Result<SymMatrix4> {
    let det = c.determinant();
    if !det.is_finite() || det.abs() <= threshold {
        return Err(Error::SingularMatrix { det });
    }
    // the adjugate of a symmetric matrix is symmetric, so only the upper
    // triangle of cofactors is needed
    Ok(SymMatrix4::from_fn(|i, j| c.cofactor(i, j) / det))
}

/// Hyperbolic distance between two proper points given their Gram entries,
/// `cosh d = -g_xy / sqrt(g_xx * g_yy)`.
pub fn gram_distance(g_xx: f64, g_yy: f64, g_xy: f64) -> Result<f64> {
    if !(g_xx < 0.0 && g_yy < 0.0) {
        return Err(Error::Domain(format!(
            "distance needs two proper points, got <x,x> = {g_xx:e}, <y,y> = {g_yy:e}"
        )));
    }
    let cosh_d = -g_xy / (g_xx * g_yy).sqrt();
    if !(cosh_d >= 1.0 - COSH_SLACK) {
        return Err(Error::Domain(format!(
            "cosh argument {cosh_d} is below 1; points are not on one sheet"
        )));
    }
    Ok(cosh_d.max(1.0).acosh())
}

/// Inner product `<q_i, q_j>` of two vertex vectors after projection onto
/// the polar plane of vertex `u`, where `q_k ~ a_k * H(u,u) - a_u * H(k,u)`.
pub fn projected_inner(h: &SymMatrix4, i: usize, j: usize, u: usize) -> f64 {
    let huu = h.get(u, u);
    huu * (huu * h.get(i, j) - h.get(i, u) * h.get(j, u))
}

/// Inner product of the projection `q_j` with the polar form of vertex `u`.
/// It vanishes identically, which is the incidence of `q_j` with `pol(a_u)`.
pub fn polar_incidence(h: &SymMatrix4, j: usize, u: usize) -> f64 {
    let huu = h.get(u, u);
    huu * h.get(j, u) - h.get(j, u) * huu
}

/// Projects vertex `j` from the outer vertex `u` onto the polar plane of `u`.
///
/// Returns `(<q_j, q_j>, <q_j, a_j>)` where
/// `q_j ~ a_j * H(u,u) - a_u * H(j,u)`, both expanded from Gram entries.
pub fn project_to_polar(h: &SymMatrix4, j: usize, u: usize) -> Result<(f64, f64)> {
    if j == u || j > 3 || u > 3 {
        return Err(Error::InvalidInput(format!(
            "projection needs distinct vertex indices in 0..4, got j = {j}, u = {u}"
        )));
    }
    let huu = h.get(u, u);
    if !(huu > 0.0) {
        return Err(Error::NotTruncatable { vertex: u, gram: huu });
    }
    let hju = h.get(j, u);
    let g_qa = huu * h.get(j, j) - hju * hju;
    let g_qq = projected_inner(h, j, j, u);
    Ok((g_qq, g_qa))
}
