//! Direct integration of the radial equation against the closed forms.

use std::f64::consts::{FRAC_PI_4, PI};

use anomalab::invsq::{cutoff_for_level, repulsive_phase_shift, RegulatedSystem};
use anomalab::numerov::{
    integrate_radial, oracle_bound_state, oracle_bound_states, oracle_phase_shift, reduce_phase,
    shooting_grid, RadialGrid,
};
use anomalab::specfun::{bessel_j, bessel_n, gamma_arg};
use anomalab::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Log grid from cutoff a out to 60 wavelengths with k·r·h ≤ 0.05 at the end.
fn scattering_grid(a: f64, k: f64) -> RadialGrid {
    let r_max = 60.0 / k;
    let steps = ((r_max / a).ln() * 60.0 / 0.05).ceil() as usize;
    RadialGrid::logarithmic(a, r_max, steps).unwrap()
}

fn phase_distance(a: f64, b: f64) -> f64 {
    reduce_phase(a - b).abs()
}

#[test]
fn repulsive_channels_match_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = 1e-30;
    for _ in 0..6 {
        let g = rng.gen_range(-0.24..5.0);
        let l = rng.gen_range(0..=4u32);
        let want = repulsive_phase_shift(l, g).unwrap();
        let mut seen = Vec::new();
        for _ in 0..3 {
            let k = rng.gen_range(0.3..3.0);
            let m = oracle_phase_shift(g, l, k, &scattering_grid(a, k)).unwrap();
            assert!(m.fit_residual < 1e-4);
            assert!(
                phase_distance(m.delta, want) < 1e-3,
                "g={g} l={l} k={k}: {} vs {want}",
                m.delta
            );
            seen.push(m.delta);
        }
        for d in &seen {
            assert!(phase_distance(*d, seen[0]) < 1e-3);
        }
    }
}

#[test]
fn strong_repulsion_s_wave() {
    let m = oracle_phase_shift(2.0, 0, 1.0, &scattering_grid(1e-20, 1.0)).unwrap();
    assert!(phase_distance(m.delta, -PI / 2.0) < 1e-3, "{}", m.delta);
}

#[test]
fn node_count_matches_bessel_solution() {
    // u ∝ √r [J_ν(kr) N_ν(ka) − N_ν(kr) J_ν(ka)], ν = √(¼ + g)
    let (g, k, a, r_max) = (2.0f64, 1.0, 0.05, 40.0);
    let nu = (0.25 + g).sqrt();
    let grid = RadialGrid::uniform(a, r_max, 40_000).unwrap();
    let sol = integrate_radial(g, 0, k * k, &grid).unwrap();
    let (ja, na) = (bessel_j(nu, k * a).unwrap(), bessel_n(nu, k * a).unwrap());
    let exact = |r: f64| bessel_j(nu, k * r).unwrap() * na - bessel_n(nu, k * r).unwrap() * ja;
    let mut zeros = 0;
    let mut prev = exact(a * 1.01);
    for i in 1..=4000 {
        let r = a * 1.01 + (r_max - a * 1.01) * i as f64 / 4000.0;
        let v = exact(r);
        if v.signum() != prev.signum() {
            zeros += 1;
        }
        prev = v;
    }
    assert_eq!(sol.nodes, zeros);
    assert!(zeros > 5);
}

#[test]
fn numerov_error_is_fourth_order() {
    // grids coarse enough that truncation, not round-off, dominates
    let richardson = |grid: &dyn Fn(usize) -> RadialGrid, k: f64, steps: [usize; 3]| {
        let d: Vec<f64> = steps
            .iter()
            .map(|&n| oracle_phase_shift(2.0, 0, k, &grid(n)).unwrap().delta)
            .collect();
        (d[0] - d[1]) / (d[1] - d[2])
    };
    let uniform = |n| RadialGrid::uniform(0.1, 30.0, n).unwrap();
    let ratio = richardson(&uniform, 3.0, [2_000, 4_000, 8_000]);
    assert!((12.0..=20.0).contains(&ratio), "Richardson ratio {ratio}");

    let log = |n| RadialGrid::logarithmic(1e-6, 50.0, n).unwrap();
    let ratio = richardson(&log, 1.0, [4_000, 8_000, 16_000]);
    assert!(
        (12.0..=20.0).contains(&ratio),
        "log-grid Richardson ratio {ratio}"
    );
}

/// tan(δ₀ − π/4) = tanh(πΞ/2) · cot(Ξ ln(ka/2) − arg Γ(1+iΞ)): the s-wave
/// phase for a hard wall at a, at any Ξ, to leading order in ka.
fn hard_wall_swave(xi: f64, k: f64, a: f64) -> f64 {
    let phi = xi * (0.5 * k * a).ln() - gamma_arg(xi);
    FRAC_PI_4 + ((0.5 * PI * xi).tanh() / phi.tan()).atan()
}

#[test]
fn anomalous_s_wave_tracks_closed_forms() {
    let sys = RegulatedSystem::new(-0.26, 1.0).unwrap();
    let xi = sys.xi();
    let a = sys.cutoff_for_xi(xi).unwrap();
    for &k in &[0.3, 0.7, 1.6, 4.0] {
        let m = oracle_phase_shift(-0.26, 0, k, &scattering_grid(a, k)).unwrap();
        let exact = hard_wall_swave(xi, k, a);
        assert!(
            phase_distance(m.delta, exact) < 1e-4,
            "k={k}: {} vs {exact}",
            m.delta
        );
        let scaling = sys.swave_phase_shift(k).unwrap();
        assert!(
            phase_distance(m.delta, scaling) < 0.02,
            "k={k}: {} vs {scaling}",
            m.delta
        );
    }
}

fn bound_grid(a: f64, mu: f64) -> RadialGrid {
    let r_max = 100.0 / mu;
    let steps = ((r_max / a).ln() * 800.0).ceil() as usize;
    RadialGrid::logarithmic(a, r_max, steps).unwrap()
}

#[test]
fn shooting_reproduces_zero_locator() {
    for &xi in &[0.1, 0.5, 1.0] {
        let g = -0.25 - xi * xi;
        let a = cutoff_for_level(1.0, xi, 1).unwrap();
        let mu = oracle_bound_state(g, &bound_grid(a, 1.0)).unwrap();
        assert!((mu - 1.0).abs() < 1e-3, "Ξ={xi}: μ = {mu}");
    }
}

#[test]
fn level_ratio_and_node_theorem() {
    let xi: f64 = 1.0;
    let g = -0.25 - xi * xi;
    let a = cutoff_for_level(1.0, xi, 1).unwrap();
    let grid = bound_grid(a, 1e-3);
    let levels = oracle_bound_states(g, &grid, 3).unwrap();
    let ratio = (levels[1] / levels[0]).powi(2);
    let want = (-2.0 * PI / xi).exp();
    assert!((ratio / want - 1.0).abs() < 0.01, "{ratio} vs {want}");

    // nodes inside 5/μ; near 40/μ the residual growing solution, at the
    // bisection precision, takes over and may cross zero
    let nodes: Vec<usize> = levels
        .iter()
        .map(|&mu| {
            let sub = shooting_grid(&grid, mu).unwrap();
            let sol = integrate_radial(g, 0, -mu * mu, &sub).unwrap();
            sol.node_positions()
                .iter()
                .filter(|&&r| r < 5.0 / mu)
                .count()
        })
        .collect();
    assert_eq!(nodes, vec![0, 1, 2], "{levels:?}");
}

#[test]
fn critical_coupling_has_no_bound_state() {
    let grid = bound_grid(1e-6, 1.0);
    assert!(matches!(
        oracle_bound_state(-0.25, &grid),
        Err(Error::NoBoundState { .. })
    ));
}

#[test]
fn shooting_scale_is_cutoff_invariant() {
    // μ from Numerov with Ξ(a) from the scaling law, a ∈ [1e-12, 1e-9]/μ
    let sys = RegulatedSystem::new(-0.3, 1.0).unwrap();
    let mus: Vec<f64> = [1e-12, 1e-11, 1e-10, 1e-9]
        .iter()
        .map(|&a| {
            let xi = sys.xi_flow(a).unwrap();
            oracle_bound_state(-0.25 - xi * xi, &bound_grid(a, 1.0)).unwrap()
        })
        .collect();
    let drift = (mus[3] / mus[0]).ln().abs() / 3.0;
    assert!(drift < 0.02, "μ drift {drift} per decade: {mus:?}");
}
