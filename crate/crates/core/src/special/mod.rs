//! The Lobachevsky function
//!
//! ```text
//! L(x) = −∫₀ˣ log|2 sin t| dt = ½ Σ_{n≥1} sin(2nx) / n²
//! ```
//!
//! `L` is odd and π-periodic, with its maximum `L(π/6) ≈ 0.50747` on
//! `[0, π]`. [`lobachevsky`] reduces the argument to `[−π/2, π/2]` and sums a
//! rapidly converging power series; [`lobachevsky_oracle`] integrates the
//! definition directly and shares no code with it.

mod oracle;

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use oracle::lobachevsky_oracle;

/// Low part of π for two-step argument reduction (`π ≈ PI + PI_LO`).
const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

const MAX_TERMS: usize = 48;

/// Lobachevsky function `L(x)`, absolute error below `1e-12` (in practice a
/// few ulps) for moderate `|x|`.
pub fn lobachevsky(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    Ok(lobachevsky_reduced(reduce_mod_pi(x)))
}

/// `x − kπ` with `k = round(x/π)`, so the result lies in `[−π/2, π/2]`.
fn reduce_mod_pi(x: f64) -> f64 {
    let k = (x / PI).round();
    (x - k * PI) - k * PI_LO
}

/// `L(r)` for `|r| ≤ π/2`.
///
/// With the singular part split off,
///
/// ```text
/// L(r) = r(1 − log|2r|) + r Σ_{k≥1} ζ(2k) / (k(2k+1)) · (r/π)^{2k}
/// ```
///
/// and the ratio of successive terms is at most `(r/π)² ≤ 1/4`.
fn lobachevsky_reduced(r: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let coeffs = series_coefficients();
    let u = (r / PI) * (r / PI);
    let mut power = u;
    let mut sum = 0.0;
    for &c in coeffs {
        let term = c * power;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        power *= u;
    }
    r * (1.0 - (2.0 * r).abs().ln()) + r * sum
}

/// `ζ(2k) / (k(2k+1))` for `k = 1..=MAX_TERMS`.
fn series_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        (1..=MAX_TERMS)
            .map(|k| {
                let kf = k as f64;
                zeta_even(k) / (kf * (2.0 * kf + 1.0))
            })
            .collect()
    })
}

/// `ζ(2k)` for `k ≥ 1`.
fn zeta_even(k: usize) -> f64 {
    match k {
        1 => PI.powi(2) / 6.0,
        2 => PI.powi(4) / 90.0,
        3 => PI.powi(6) / 945.0,
        4 => PI.powi(8) / 9450.0,
        _ => {
            // Direct sum plus an Euler–Maclaurin tail; for s ≥ 10 the first
            // omitted correction is below 1e-17.
            const N: usize = 16;
            let s = (2 * k) as f64;
            let head: f64 = (1..N).rev().map(|n| (n as f64).powf(-s)).sum();
            let n = N as f64;
            let tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0
                - s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0;
            head + tail
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zeros() {
        assert_eq!(lobachevsky(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(lobachevsky(FRAC_PI_2).unwrap(), 0.0, epsilon = 1e-15);
        // f64 π sits 1.2e-16 below π where L' = −log|2 sin x| ≈ 36.7
        assert_abs_diff_eq!(lobachevsky(PI).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn value_at_pi_over_six() {
        // Frozen from lobachevsky_oracle(π/6, 1e-14); agrees with ½·Cl₂(π/3).
        let oracle = lobachevsky_oracle(PI / 6.0, 1e-14).unwrap();
        assert_abs_diff_eq!(oracle, 0.507_470_803_204_826_8, epsilon = 1e-13);
        assert_abs_diff_eq!(lobachevsky(PI / 6.0).unwrap(), oracle, epsilon = 1e-13);
    }

    #[test]
    fn even_zeta_values() {
        // ζ(10) = π¹⁰/93555, ζ(12) = 691π¹²/638512875
        assert_abs_diff_eq!(zeta_even(5), PI.powi(10) / 93555.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            zeta_even(6),
            691.0 * PI.powi(12) / 638_512_875.0,
            epsilon = 1e-15
        );
        assert_eq!(zeta_even(MAX_TERMS), 1.0);
    }

    #[test]
    fn reduction_lands_in_half_period() {
        for x in [-10.0, -3.2, -1.6, 0.0, 1.6, 3.2, 4.71238898, 10.0] {
            let r = reduce_mod_pi(x);
            assert!(r.abs() <= FRAC_PI_2 + 1e-15, "{x} -> {r}");
        }
    }

    #[test]
    fn rejects_non_finite() {
        assert!(lobachevsky(f64::NAN).is_err());
        assert!(lobachevsky(f64::INFINITY).is_err());
    }
}
