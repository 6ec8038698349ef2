//! Hyperball packings in regular truncated tetrahedra of hyperbolic 3-space.
//!
//! The crate evaluates, for the one-parameter family of frustum orthoschemes
//! with Coxeter diagram `[3, 3, p]` (`p > 6`), the height of the congruent
//! hyperballs centred on the truncation planes, the orthoscheme volume, the
//! hyperball volume it contains and the resulting local packing density.
//!
//! All geometry is derived from Gram matrices in the projective (Lorentz)
//! model; no vertex coordinates are ever built.
//!
//! ```
//! let row = hyperball::simplex_density(7.0).unwrap();
//! assert!((row.delta - 0.82251).abs() < 1e-4);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod density;
pub mod error;
pub mod lobachevsky;
pub mod lorentz;
pub mod optimize;
pub mod orthoscheme;

pub use density::{hyperball_piece_volume, simplex_density, vermes_hexagon_density, DensityRow};
pub use error::{Error, Result};
pub use lobachevsky::{lob, lob_quadrature_oracle};
pub use lorentz::{
    bilinear_form, classify_point, gram_distance, invert_sym4, project_to_polar, LorentzVector,
    PointClass, SymMatrix4,
};
pub use optimize::{find_optimal_p, maximize_unimodal, OptimizationResult};
pub use orthoscheme::{
    coxeter_matrix, hyperball_height, kellerhals_theta, orthoscheme_volume, tetra_geometry,
    truncation_triangle, OrthoschemeAngles, TruncatedTetraGeometry, TruncationTriangle,
};
