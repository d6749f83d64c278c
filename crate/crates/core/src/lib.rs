//! Hyperball packings in regular truncated tetrahedra of hyperbolic 3-space.
//!
//! The crate works in the projective (Lorentz) model of `H³` with curvature
//! `-1`. Starting from a real parameter `p > 6` it builds the regular
//! truncated tetrahedron `S(p)` whose side faces meet at dihedral angle
//! `2π/p`, measures the largest congruent hyperballs that fit around its four
//! truncation faces, and evaluates the packing density
//!
//! ```text
//! δ(S(p)) = 4 · Vol(hyperball ∩ S(p)) / Vol(S(p))
//! ```
//!
//! Everything reduces to one of the 24 congruent simply truncated
//! orthoschemes of `S(p)`, so the density is the hyperball piece over one
//! orthoscheme triangle divided by that orthoscheme's volume.
//!
//! ```
//! let point = hyperpack::density(7.0).unwrap();
//! assert!((point.delta - 0.82251).abs() < 1e-5);
//!
//! let best = hyperpack::maximize(6.01, 8.0, 1e-7).unwrap();
//! assert!((best.p_opt - 6.13499).abs() < 1e-4);
//! ```
//!
//! Module map:
//!
//! * [`lorentz`]: bilinear form, polarity, distances and a 4×4 inverse.
//! * [`special`]: the Lobachevsky function and an independent quadrature oracle.
//! * [`orthoscheme`]: Coxeter–Schläfli data, orthoscheme volume, hyperball height.
//! * [`tetra`]: coordinates of `S(p)`, face triangle, hyperball piece, density.
//! * [`optimize`]: golden-section maximization and monotonicity scans.

// `!(x > y)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod lorentz;
pub mod optimize;
pub mod orthoscheme;
pub mod special;
pub mod tetra;

pub use error::{Error, Result};
pub use lorentz::{LorentzVec, Mat4, PlaneForm, PointClass};
pub use optimize::{maximize, monotonicity_scan, OptimizationResult, ScanReport};
pub use orthoscheme::{height, schlafli_matrix, volume_kellerhals, OrthoschemeAngles};
pub use special::{lobachevsky, lobachevsky_oracle};
pub use tetra::{density, face_triangle, hyperball_piece_volume, DensityPoint, TruncatedTetra};

/// Böröczky–Florian density bound for ball and horoball packings of `H³`,
/// to five decimals. `δ(S(p))` tends to it as `p → 6`.
pub const BOROCZKY_FLORIAN_DENSITY: f64 = 0.85328;

// The guide's code listings are compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lorentz.md")]
    mod lorentz {}
    #[doc = include_str!("../../../book/src/lobachevsky.md")]
    mod lobachevsky {}
    #[doc = include_str!("../../../book/src/orthoscheme.md")]
    mod orthoscheme {}
    #[doc = include_str!("../../../book/src/density.md")]
    mod density {}
    #[doc = include_str!("../../../book/src/optimization.md")]
    mod optimization {}
}
