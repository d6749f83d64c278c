//! The simply truncated orthoscheme `O = Q₀Q₁Q₂P₀P₁P₂` of `S(p)`.
//!
//! Its bounding planes `b⁰..b³` have Coxeter–Schläfli (Gram) matrix
//!
//! ```text
//!       ⎛   1      −cos(π/p)     0          0     ⎞
//! c  =  ⎜ −cos(π/p)    1      −cos(π/3)     0     ⎟
//!       ⎜   0      −cos(π/3)     1      −cos(π/3) ⎟
//!       ⎝   0          0      −cos(π/3)     1     ⎠
//! ```
//!
//! and the inverse `h = c⁻¹` is the Gram matrix of the dual vertex basis
//! `A₀..A₃`. For `p > 6` the vertex `A₃` is outer and gets cut off by its
//! polar plane. `A₂` is the midpoint `P₂` of an edge of `S(p)` and the cut
//! meets the edge `A₂A₃` in `Q₂`, so
//!
//! ```text
//! cosh h(p) = cosh P₂Q₂ = √((h₂₂h₃₃ − h₂₃²) / (h₂₂h₃₃))
//! ```
//!
//! with 0-based indices into `h`. Volumes come from Kellerhals' formula in
//! the Lobachevsky function.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::error::{Error, Result};
use crate::lorentz::{invert4, Mat4};
use crate::special::lobachevsky;

/// Essential dihedral angles `(α₀₁, α₁₂, α₂₃)` of an orthoscheme, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoschemeAngles {
    pub alpha01: f64,
    pub alpha12: f64,
    pub alpha23: f64,
}

impl OrthoschemeAngles {
    pub fn new(alpha01: f64, alpha12: f64, alpha23: f64) -> Result<Self> {
        for a in [alpha01, alpha12, alpha23] {
            if !a.is_finite() {
                return Err(Error::NonFinite(a));
            }
            if !(0.0..=FRAC_PI_2).contains(&a) {
                return Err(Error::AngleOutOfRange(a));
            }
        }
        Ok(Self {
            alpha01,
            alpha12,
            alpha23,
        })
    }

    /// `(π/p, π/3, π/3)`, the orthoscheme of `S(p)`.
    pub fn for_parameter(p: f64) -> Result<Self> {
        check_parameter(p)?;
        Self::new(PI / p, FRAC_PI_3, FRAC_PI_3)
    }

    /// The `p → ∞` member of the family, `(0, π/3, π/3)`.
    pub fn limit() -> Self {
        Self {
            alpha01: 0.0,
            alpha12: FRAC_PI_3,
            alpha23: FRAC_PI_3,
        }
    }
}

pub(crate) fn check_parameter(p: f64) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::NonFinite(p));
    }
    if p <= 6.0 {
        return Err(Error::ParameterOutOfRange(p));
    }
    Ok(())
}

/// Coxeter–Schläfli matrix `c` of the orthoscheme for parameter `p`, and its
/// inverse `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchlafliData {
    pub p: f64,
    pub c: Mat4,
    pub h: Mat4,
}

impl SchlafliData {
    /// `‖c·h − I‖_max`.
    pub fn residual(&self) -> f64 {
        (self.c * self.h).max_abs_diff(&Mat4::identity())
    }

    /// Hyperball height `h(p) = P₂Q₂` from the inverse matrix.
    pub fn height(&self) -> Result<f64> {
        let h = &self.h;
        let (h22, h33, h23) = (h.get(2, 2), h.get(3, 3), h.get(2, 3));
        let quotient = (h22 * h33 - h23 * h23) / (h22 * h33);
        if !(quotient >= 1.0) {
            return Err(Error::HeightQuotient(quotient));
        }
        // cosh²h − 1 = −h₂₃² / (h₂₂h₃₃), taken without the cancellation
        let sinh_sq = -h23 * h23 / (h22 * h33);
        Ok(sinh_sq.sqrt().asinh())
    }
}

pub fn schlafli_matrix(p: f64) -> Result<SchlafliData> {
    check_parameter(p)?;
    let a = -(PI / p).cos();
    let b = -0.5; // −cos(π/3)
    let c = Mat4([
        [1.0, a, 0.0, 0.0],
        [a, 1.0, b, 0.0],
        [0.0, b, 1.0, b],
        [0.0, 0.0, b, 1.0],
    ]);
    let h = invert4(&c)?;
    Ok(SchlafliData { p, c, h })
}

/// Auxiliary angle `θ ∈ [0, π/2)` of Kellerhals' volume formula:
///
/// ```text
/// tan θ = √(cos²α₁₂ − sin²α₀₁·sin²α₂₃) / (cos α₀₁ · cos α₂₃)
/// ```
pub fn theta(angles: &OrthoschemeAngles) -> Result<f64> {
    let OrthoschemeAngles {
        alpha01,
        alpha12,
        alpha23,
    } = *angles;
    let radicand = alpha12.cos().powi(2) - (alpha01.sin() * alpha23.sin()).powi(2);
    if radicand < -1e-15 {
        return Err(Error::NegativeRadicand(radicand));
    }
    let radicand = radicand.max(0.0);
    let denominator = alpha01.cos() * alpha23.cos();
    if !(denominator > 1e-15) {
        return Err(Error::ZeroDenominator);
    }
    Ok((radicand.sqrt() / denominator).atan())
}

/// Volume of the orthoscheme with the given essential angles.
pub fn volume_kellerhals(angles: &OrthoschemeAngles) -> Result<f64> {
    let t = theta(angles)?;
    let OrthoschemeAngles {
        alpha01,
        alpha12,
        alpha23,
    } = *angles;
    let l = lobachevsky;
    let sum = l(alpha01 + t)? - l(alpha01 - t)?
        + l(FRAC_PI_2 + alpha12 - t)?
        + l(FRAC_PI_2 - alpha12 - t)?
        + l(alpha23 + t)?
        - l(alpha23 - t)?
        + 2.0 * l(FRAC_PI_2 - t)?;
    Ok(0.25 * sum)
}

/// Hyperball height `h(p)`, half the distance between two base planes of
/// `S(p)`.
pub fn height(p: f64) -> Result<f64> {
    schlafli_matrix(p)?.height()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoschemeMetrics {
    pub p: f64,
    pub theta: f64,
    pub volume: f64,
    pub height: f64,
}

pub fn metrics(p: f64) -> Result<OrthoschemeMetrics> {
    let angles = OrthoschemeAngles::for_parameter(p)?;
    Ok(OrthoschemeMetrics {
        p,
        theta: theta(&angles)?,
        volume: volume_kellerhals(&angles)?,
        height: height(p)?,
    })
}
