use std::f64::consts::{FRAC_PI_2, PI};

use hyperpack::optimize::{golden_section_max, linspace};
use hyperpack::{lobachevsky, lobachevsky_oracle, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn l(x: f64) -> f64 {
    lobachevsky(x).unwrap()
}

fn random_points(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect()
}

#[test]
fn odd() {
    for x in random_points(1, 1000) {
        assert!((l(-x) + l(x)).abs() <= 1e-12, "x = {x}");
    }
}

#[test]
fn pi_periodic() {
    for x in random_points(2, 1000) {
        assert!((l(x + PI) - l(x)).abs() <= 1e-12, "x = {x}");
    }
}

#[test]
fn duplication() {
    for x in random_points(3, 1000) {
        let lhs = l(2.0 * x);
        let rhs = 2.0 * l(x) + 2.0 * l(x + FRAC_PI_2);
        assert!((lhs - rhs).abs() <= 1e-11, "x = {x}: {lhs} vs {rhs}");
    }
}

#[test]
fn agrees_with_quadrature_oracle() {
    let mut worst = 0.0f64;
    for x in linspace(-PI, PI, 200) {
        let oracle = lobachevsky_oracle(x, 1e-13).unwrap();
        worst = worst.max((l(x) - oracle).abs());
    }
    assert!(worst <= 1e-12, "max deviation {worst:e}");
}

#[test]
fn oracle_period_and_shift() {
    for x in [0.3, 1.1, -2.0] {
        let a = lobachevsky_oracle(x, 1e-13).unwrap();
        let b = lobachevsky_oracle(x + PI, 1e-13).unwrap();
        assert!((a - b).abs() <= 1e-12);
    }
}

#[test]
fn maximum_at_pi_over_six() {
    let grid = linspace(0.0, PI, 1001);
    let coarse = grid
        .iter()
        .copied()
        .max_by(|a, b| l(*a).total_cmp(&l(*b)))
        .unwrap();
    let step = PI / 1000.0;
    let refined = golden_section_max(lobachevsky, coarse - step, coarse + step, 1e-9).unwrap();
    assert!((refined.x - PI / 6.0).abs() < 1e-6, "argmax {}", refined.x);
    // bounded by its maximum everywhere
    for x in random_points(4, 200) {
        assert!(l(x).abs() <= refined.value + 1e-15);
    }
}

#[test]
fn rejects_non_finite() {
    assert!(matches!(
        lobachevsky(f64::INFINITY),
        Err(Error::NonFinite(_))
    ));
    assert!(matches!(
        lobachevsky_oracle(f64::NAN, 1e-9),
        Err(Error::NonFinite(_))
    ));
}
