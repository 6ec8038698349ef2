//! Golden-section maximization of the packing density over `p`.

use crate::density::simplex_density;
use crate::error::{Error, Result};

/// `1/φ`, the bracket shrink factor per golden-section step.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Left edge offset from the ideal-vertex configuration at `p = 6`.
pub const LEFT_EDGE_OFFSET: f64 = 1e-6;
pub const INITIAL_RIGHT_EDGE: f64 = 12.0;
pub const DEFAULT_TOL: f64 = 1e-7;
const MAX_EXPANSIONS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub p_opt: f64,
    pub delta_opt: f64,
    pub iterations: usize,
    /// Final bracket; its width is at most `tol`.
    pub bracket: (f64, f64),
    pub tol: f64,
}

/// Iterations golden-section search needs to shrink `[lo, hi]` below `tol`.
pub fn golden_iteration_bound(lo: f64, hi: f64, tol: f64) -> usize {
    (((hi - lo) / tol).ln() / (1.0 / INV_PHI).ln()).ceil().max(0.0) as usize + 2
}

/// Maximizes a unimodal `f` on `[lo, hi]` by golden-section search.
///
/// Stops once the bracket is no wider than `tol`; the reported maximizer is
/// the bracket midpoint and `delta_opt` is `f` evaluated there.
pub fn maximize_unimodal<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<OptimizationResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInput(format!("empty bracket [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }

    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut iterations = 0;

    while b - a > tol {
        if iterations == max_iter {
            return Err(Error::Convergence { iterations, lo: a, hi: b });
        }
        iterations += 1;
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }

    let p_opt = 0.5 * (a + b);
    Ok(OptimizationResult { p_opt, delta_opt: f(p_opt)?, iterations, bracket: (a, b), tol })
}

fn density_at(p: f64) -> Result<f64> {
    simplex_density(p).map(|row| row.delta)
}

/// Locates the `p` of maximal density in the regular truncated tetrahedron.
pub fn find_optimal_p(tol: f64) -> Result<OptimizationResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let lo = 6.0 + LEFT_EDGE_OFFSET;
    let mut hi = INITIAL_RIGHT_EDGE;
    // widen only while the density still rises at the right edge
    let mut expansions = 0;
    loop {
        let step = 1e-3 * (hi - lo);
        if density_at(hi)? <= density_at(hi - step)? {
            break;
        }
        expansions += 1;
        if expansions > MAX_EXPANSIONS {
            return Err(Error::Convergence { iterations: expansions, lo, hi });
        }
        hi = lo + 2.0 * (hi - lo);
    }
    let max_iter = golden_iteration_bound(lo, hi, tol);
    maximize_unimodal(density_at, lo, hi, tol, max_iter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn parabola() {
        let r = maximize_unimodal(|x| Ok(-(x - 2.0) * (x - 2.0)), 0.0, 5.0, 1e-8, 200).unwrap();
        assert_abs_diff_eq!(r.p_opt, 2.0, epsilon = 1e-8);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-8);
        assert!(r.bracket.0 < r.p_opt && r.p_opt < r.bracket.1);
        assert!(r.iterations <= golden_iteration_bound(0.0, 5.0, 1e-8));
    }

    #[test]
    fn sine() {
        let r = maximize_unimodal(|x| Ok(x.sin()), 0.0, PI, 1e-8, 200).unwrap();
        assert_abs_diff_eq!(r.p_opt, FRAC_PI_2, epsilon = 1e-8);
        assert_abs_diff_eq!(r.delta_opt, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn exhausted_iterations() {
        let err = maximize_unimodal(|x| Ok(-x * x), -1.0, 1.0, 1e-12, 5).unwrap_err();
        match err {
            Error::Convergence { iterations, lo, hi } => {
                assert_eq!(iterations, 5);
                assert!(lo < hi && lo <= 0.0 && hi >= 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_arguments() {
        assert!(maximize_unimodal(Ok, 1.0, 1.0, 1e-3, 10).is_err());
        assert!(maximize_unimodal(Ok, 0.0, 1.0, 0.0, 10).is_err());
        assert!(find_optimal_p(-1.0).is_err());
    }

    #[test]
    fn evaluation_error_propagates() {
        let r = maximize_unimodal(|_| Err(Error::Domain("boom".into())), 0.0, 1.0, 1e-3, 10);
        assert_eq!(r.unwrap_err(), Error::Domain("boom".into()));
    }

    #[test]
    fn optimal_p_coarse() {
        let r = find_optimal_p(1e-3).unwrap();
        assert!((r.p_opt - 6.13499).abs() <= 1e-3);
    }
}
