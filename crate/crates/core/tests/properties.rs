use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

use hyperball::lorentz::{polar_incidence, projected_inner};
use hyperball::orthoscheme::vertex_gram;
use hyperball::*;
use proptest::prelude::*;

fn vector() -> impl Strategy<Value = LorentzVector> {
    prop::array::uniform4(-10.0..10.0f64).prop_map(LorentzVector)
}

/// Symmetric matrix with a dominant diagonal, hence well conditioned.
fn well_conditioned() -> impl Strategy<Value = SymMatrix4> {
    (prop::array::uniform10(-1.0..1.0f64), prop::array::uniform4(3.5..6.0f64), any::<[bool; 4]>())
        .prop_map(|(off, diag, signs)| {
            let mut k = 0;
            SymMatrix4::from_fn(|i, j| {
                if i == j {
                    if signs[i] { diag[i] } else { -diag[i] }
                } else {
                    k += 1;
                    off[k - 1]
                }
            })
        })
}

proptest! {
    #[test]
    fn bilinear_form_is_symmetric_and_bilinear(
        x in vector(), y in vector(), z in vector(), a in -5.0..5.0f64, b in -5.0..5.0f64,
    ) {
        prop_assert_eq!(bilinear_form(&x, &y), bilinear_form(&y, &x));
        let combo = LorentzVector(std::array::from_fn(|i| a * x.0[i] + b * y.0[i]));
        let lhs = bilinear_form(&combo, &z);
        let rhs = a * bilinear_form(&x, &z) + b * bilinear_form(&y, &z);
        let scale = 1.0 + (a.abs() + b.abs()) * 400.0;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
    }

    #[test]
    fn classification_is_scale_invariant(x in vector(), s in prop_oneof![-50.0..-0.01f64, 0.01..50.0f64]) {
        prop_assume!(!x.is_zero());
        let t = hyperball::lorentz::IDEAL_TOLERANCE;
        prop_assert_eq!(classify_point(&x, t).unwrap(), classify_point(&x.scale(s), t).unwrap());
    }

    #[test]
    fn inversion_round_trip(c in well_conditioned()) {
        let h = invert_sym4(&c).unwrap();
        let prod = c.mul(&h);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                prop_assert!((v - target).abs() <= 1e-12, "residual {} at ({}, {})", v - target, i, j);
            }
        }
        let back = invert_sym4(&h).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!((back.get(i, j) - c.get(i, j)).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn lob_odd_and_periodic(x in 0.0..10.0 * PI) {
        prop_assert!((lob(-x).unwrap() + lob(x).unwrap()).abs() <= 1e-13);
        prop_assert!((lob(x + PI).unwrap() - lob(x).unwrap()).abs() <= 1e-13);
    }

    #[test]
    fn lob_duplication(x in 0.0..FRAC_PI_2) {
        let lhs = lob(2.0 * x).unwrap();
        let rhs = 2.0 * lob(x).unwrap() + 2.0 * lob(x + FRAC_PI_2).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn golden_section_finds_parabola_vertex(
        centre in -50.0..50.0f64, width in 0.5..20.0f64, curvature in 0.01..100.0f64, skew in 0.05..0.95f64,
    ) {
        let lo = centre - skew * width;
        let hi = centre + (1.0 - skew) * width;
        let tol = 1e-8;
        let r = maximize_unimodal(|x| Ok(-curvature * (x - centre).powi(2)), lo, hi, tol, 500).unwrap();
        prop_assert!((r.p_opt - centre).abs() <= tol);
        prop_assert!(r.iterations <= hyperball::optimize::golden_iteration_bound(lo, hi, tol));
    }

    #[test]
    fn polar_incidence_vanishes(p in 6.0001..100.0f64) {
        let h = vertex_gram(p).unwrap();
        for j in 0..3 {
            prop_assert!(polar_incidence(&h, j, 3).abs() <= 1e-12);
        }
    }

    #[test]
    fn projected_points_are_proper(p in 6.01..1e4f64) {
        let h = vertex_gram(p).unwrap();
        for j in 0..3 {
            let (g_qq, _) = project_to_polar(&h, j, 3).unwrap();
            prop_assert!(g_qq < 0.0);
            prop_assert_eq!(g_qq, projected_inner(&h, j, j, 3));
        }
    }

    #[test]
    fn density_is_a_proper_fraction(p in 6.001..1e5f64) {
        let row = simplex_density(p).unwrap();
        prop_assert!(row.delta > 0.0 && row.delta < 1.0);
        let closed = 0.25 * (PI / 6.0 - PI / p) * ((2.0 * row.h).sinh() + 2.0 * row.h);
        prop_assert!((row.vol_piece - closed).abs() <= 1e-9);
    }
}

#[test]
fn oracle_agreement_grid() {
    for i in 0..50 {
        let x = PI * i as f64 / 49.0;
        let series = lob(x).unwrap();
        let oracle = lob_quadrature_oracle(x, 1e-12).unwrap();
        assert!((series - oracle).abs() <= 1e-10, "x = {x}: {series} vs {oracle}");
    }
}

#[test]
fn lob_maximum_at_pi_over_six() {
    let n = 1000;
    let best = (0..=n)
        .map(|i| FRAC_PI_2 * i as f64 / n as f64)
        .max_by(|a, b| lob(*a).unwrap().total_cmp(&lob(*b).unwrap()))
        .unwrap();
    let step = FRAC_PI_2 / n as f64;
    let r = maximize_unimodal(lob, best - step, best + step, 1e-9, 200).unwrap();
    assert!((r.p_opt - FRAC_PI_6).abs() < 1e-6, "maximizer {}", r.p_opt);
}

#[test]
fn gram_sign_pattern() {
    for p in [6.01, 6.5, 7.0, 10.0, 50.0, 1e4] {
        let h = vertex_gram(p).unwrap();
        assert!(h.get(3, 3) > 0.0, "p = {p}");
        for i in 0..3 {
            assert!(h.get(i, i) < 0.0, "p = {p}, i = {i}");
        }
    }
}

#[test]
fn height_and_volume_monotone() {
    let grid = [6.01, 6.5, 7.0, 8.0, 10.0, 20.0, 50.0, 100.0, 1e3, 1e5];
    let rows: Vec<_> = grid.iter().map(|&p| simplex_density(p).unwrap()).collect();
    for w in rows.windows(2) {
        assert!(w[1].h < w[0].h, "h not decreasing at p = {}", w[1].p);
        assert!(w[1].vol_orthoscheme > w[0].vol_orthoscheme, "vol not increasing at p = {}", w[1].p);
    }
    let last = rows.last().unwrap();
    assert!(last.h < 1e-4);
    assert!((last.vol_orthoscheme - 0.15266).abs() < 1e-3);
}

#[test]
fn vermes_increasing_to_three_over_pi() {
    let values: Vec<f64> = (1..=100)
        .map(|i| 0.01 + (10.0 - 0.01) * i as f64 / 100.0)
        .map(|h| vermes_hexagon_density(h).unwrap())
        .collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]));
    assert!(values.iter().all(|&v| v < 3.0 / PI));
}

#[test]
fn optimum_is_a_local_maximum() {
    let tol = 1e-5;
    let r = find_optimal_p(tol).unwrap();
    let d = |p: f64| simplex_density(p).unwrap().delta;
    assert!(r.delta_opt >= d(r.p_opt - 10.0 * tol));
    assert!(r.delta_opt >= d(r.p_opt + 10.0 * tol));
    assert!(r.bracket.0 < r.p_opt && r.p_opt < r.bracket.1);
    assert!(r.bracket.1 - r.bracket.0 <= tol);
    assert_eq!(r.delta_opt, d(r.p_opt));
}
