//! Maximizing `δ(S(p))` over `p ∈ (6, ∞)`.
//!
//! The density rises on `(6, p_opt)` and falls on `(p_opt, ∞)`, so a
//! golden-section search on any bracket around the peak converges to it.
//! [`monotonicity_scan`] checks that shape on an explicit grid.

use crate::error::{Error, Result};
use crate::tetra::{density, DensityPoint};

/// `(√5 − 1)/2`
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Default search bracket.
pub const DEFAULT_BRACKET: (f64, f64) = (6.01, 8.0);

/// Default tolerance on `p`.
pub const DEFAULT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub p_opt: f64,
    pub delta_opt: f64,
    pub iterations: usize,
    /// Final bracket; `p_opt` is its midpoint.
    pub bracket: (f64, f64),
}

/// Location of the maximum of a unimodal function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
    pub bracket: (f64, f64),
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`, stopping when
/// the bracket is narrower than `tol`.
pub fn golden_section_max<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Maximum, E>
where
    E: From<Error>,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi && tol > 0.0) {
        return Err(Error::InvalidBracket { lo, hi, tol }.into());
    }
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut iterations = 0;

    while b - a > tol {
        iterations += 1;
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        }
        // interior points can no longer be separated
        if !(a < x1 && x1 <= x2 && x2 < b) {
            break;
        }
    }
    let x = 0.5 * (a + b);
    Ok(Maximum {
        x,
        value: f(x)?,
        iterations,
        bracket: (a, b),
    })
}

/// Maximize `δ(S(p))` over `[lo, hi]` with `6 < lo < hi`.
pub fn maximize(lo: f64, hi: f64, tol: f64) -> Result<OptimizationResult> {
    if !(lo > 6.0) {
        return Err(Error::InvalidBracket { lo, hi, tol });
    }
    let best = golden_section_max(|p| density(p).map(|d| d.delta), lo, hi, tol)?;
    Ok(OptimizationResult {
        p_opt: best.x,
        delta_opt: best.value,
        iterations: best.iterations,
        bracket: best.bracket,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Rising,
    Falling,
    Flat,
}

/// Densities on a sorted grid and the signs of their successive differences.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub points: Vec<DensityPoint>,
    /// `trends[i]` compares `points[i]` and `points[i + 1]`.
    pub trends: Vec<Trend>,
}

impl ScanReport {
    /// Indices `i` where the trend changes between cell `i − 1` and cell `i`.
    pub fn sign_changes(&self) -> Vec<usize> {
        let signed: Vec<(usize, Trend)> = self
            .trends
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, t)| *t != Trend::Flat)
            .collect();
        signed
            .windows(2)
            .filter(|w| w[0].1 != w[1].1)
            .map(|w| w[1].0)
            .collect()
    }

    /// For a single rise-to-fall change, the grid point at the peak and the
    /// interval `[p_{i−1}, p_{i+1}]` that must contain the true maximum.
    pub fn unimodal_peak(&self) -> Option<Peak> {
        match self.sign_changes()[..] {
            [i] if self.trends[i - 1] == Trend::Rising && self.trends[i] == Trend::Falling => {
                Some(Peak {
                    index: i,
                    p: self.points[i].p,
                    bracket: (self.points[i - 1].p, self.points[i + 1].p),
                })
            }
            _ => None,
        }
    }

    pub fn argmax(&self) -> Option<&DensityPoint> {
        self.points
            .iter()
            .max_by(|a, b| a.delta.total_cmp(&b.delta))
    }

    /// Two grid points where the larger height comes with the larger density,
    /// and two where it comes with the smaller one.
    pub fn height_density_pairs(&self) -> HeightDensityPairs {
        let mut pairs = HeightDensityPairs::default();
        for w in self.points.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let (higher, lower) = if a.height > b.height { (a, b) } else { (b, a) };
            if higher.height == lower.height {
                continue;
            }
            if higher.delta > lower.delta {
                pairs.same_direction.get_or_insert((higher.p, lower.p));
            } else if higher.delta < lower.delta {
                pairs.opposite_direction.get_or_insert((higher.p, lower.p));
            }
        }
        pairs
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub index: usize,
    pub p: f64,
    pub bracket: (f64, f64),
}

/// Pairs `(p of larger height, p of smaller height)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HeightDensityPairs {
    pub same_direction: Option<(f64, f64)>,
    pub opposite_direction: Option<(f64, f64)>,
}

/// Evaluate `δ` on `grid` (sorted, every entry above 6).
pub fn monotonicity_scan(grid: &[f64]) -> Result<ScanReport> {
    if let Some(w) = grid.windows(2).find(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidBracket {
            lo: w[0],
            hi: w[1],
            tol: 0.0,
        });
    }
    let points = grid
        .iter()
        .map(|&p| density(p))
        .collect::<Result<Vec<_>>>()?;
    let trends = points
        .windows(2)
        .map(|w| match w[1].delta.total_cmp(&w[0].delta) {
            std::cmp::Ordering::Greater => Trend::Rising,
            std::cmp::Ordering::Less => Trend::Falling,
            std::cmp::Ordering::Equal => Trend::Flat,
        })
        .collect();
    Ok(ScanReport { points, trends })
}

/// `steps` evenly spaced values from `from` to `to` inclusive.
pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![from],
        _ => {
            let h = (to - from) / (steps - 1) as f64;
            (0..steps)
                .map(|i| {
                    if i + 1 == steps {
                        to
                    } else {
                        from + h * i as f64
                    }
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quadratic_vertex() {
        let f = |x: f64| Ok::<_, Error>(-(x - 1.234_567).powi(2));
        let m = golden_section_max(f, -4.0, 9.0, 1e-9).unwrap();
        assert!((m.x - 1.234_567).abs() <= 1e-9);
        assert!(m.bracket.0 < m.x && m.x < m.bracket.1);
        assert!(m.bracket.1 - m.bracket.0 <= 1e-9);
    }

    #[test]
    fn vertex_at_bracket_edge() {
        let f = |x: f64| Ok::<_, Error>(-x);
        let m = golden_section_max(f, 2.0, 3.0, 1e-8).unwrap();
        assert!((m.x - 2.0).abs() <= 1e-8);
    }

    #[test]
    fn invalid_brackets() {
        let f = |x: f64| Ok::<_, Error>(x);
        assert!(golden_section_max(f, 1.0, 1.0, 1e-3).is_err());
        assert!(golden_section_max(f, 0.0, 1.0, 0.0).is_err());
        assert!(maximize(5.0, 8.0, 1e-6).is_err());
        assert!(maximize(7.0, 6.5, 1e-6).is_err());
    }

    #[test]
    fn optimum_of_density() {
        let r = maximize(6.01, 8.0, 1e-6).unwrap();
        assert_abs_diff_eq!(r.p_opt, 6.13499, epsilon = 1e-5);
        assert_abs_diff_eq!(r.delta_opt, 0.86338, epsilon = 1e-5);
        assert!(r.bracket.0 < r.p_opt && r.p_opt < r.bracket.1);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-6);
        assert!(r.delta_opt > crate::BOROCZKY_FLORIAN_DENSITY);
    }

    #[test]
    fn optimum_does_not_depend_on_bracket() {
        let wide = maximize(6.01, 8.0, 1e-8).unwrap();
        let narrow = maximize(6.05, 6.3, 1e-8).unwrap();
        assert!((wide.p_opt - narrow.p_opt).abs() < 1e-6);
    }

    #[test]
    fn small_grid_pattern() {
        let report = monotonicity_scan(&[6.05, 6.13, 6.2, 7.0, 8.0, 9.0]).unwrap();
        use Trend::*;
        assert_eq!(
            report.trends,
            vec![Rising, Falling, Falling, Falling, Falling]
        );
        let peak = report.unimodal_peak().unwrap();
        assert_eq!(peak.p, 6.13);
        assert!(peak.bracket.0 < 6.13499 && 6.13499 < peak.bracket.1);
    }

    #[test]
    fn two_point_grid() {
        let report = monotonicity_scan(&[7.0, 8.0]).unwrap();
        assert_eq!(report.trends, vec![Trend::Falling]);
        assert!(report.sign_changes().is_empty());
        assert!(report.unimodal_peak().is_none());
    }

    #[test]
    fn unsorted_grid_rejected() {
        assert!(monotonicity_scan(&[7.0, 6.5]).is_err());
        assert!(monotonicity_scan(&[5.0, 7.0]).is_err());
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(6.01, 10.0, 400);
        assert_eq!(g.len(), 400);
        assert_eq!(g[0], 6.01);
        assert_eq!(g[399], 10.0);
        assert_eq!(linspace(1.0, 2.0, 2), vec![1.0, 2.0]);
    }
}
