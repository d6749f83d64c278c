//! Projective model of `H³` inside the Lorentz space `E^{1,3}`.
//!
//! Points are vectors `x ∈ V⁴` up to a nonzero real factor. The bilinear form
//!
//! ```text
//! ⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + x²y² + x³y³
//! ```
//!
//! splits projective space into proper points (`⟨x,x⟩ < 0`, the interior of
//! the absolute quadric), ideal points (`⟨x,x⟩ = 0`) and outer points
//! (`⟨x,x⟩ > 0`). Planes are linear forms [`PlaneForm`] on `V⁴`; a point `x`
//! lies on a plane `a` when `x·a = 0`. The form induces the polarity
//! `x ↦ pol(x)` sending a point to the plane `{y : ⟨x,y⟩ = 0}`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance used to decide that a point lies on the absolute quadric.
pub const CLASSIFY_TOL: f64 = 1e-10;

/// Quotients `cosh d` below `1 - COSH_SLACK` are treated as inconsistent.
const COSH_SLACK: f64 = 1e-9;

/// Homogeneous coordinates `(x⁰, x¹, x², x³)` of a projective point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzVec(pub [f64; 4]);

/// Coordinates `(a₀, a₁, a₂, a₃)` of a plane, i.e. a linear form on `V⁴`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneForm(pub [f64; 4]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// Inside the absolute: a point of `H³`.
    Proper,
    /// On the absolute: a point at infinity.
    Ideal,
    /// Outside the absolute.
    Outer,
}

impl LorentzVec {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self([x0, x1, x2, x3])
    }

    /// The time axis `(1, 0, 0, 0)`.
    pub const fn origin() -> Self {
        Self([1.0, 0.0, 0.0, 0.0])
    }

    pub fn dot(&self, other: &Self) -> f64 {
        bilinear_form(self, other)
    }

    pub fn self_form(&self) -> f64 {
        bilinear_form(self, self)
    }

    /// Squared Euclidean norm of the coordinates.
    pub fn euclidean_norm_sq(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    /// Representative with `⟨x,x⟩ = −1` and `x⁰ > 0` of a proper point.
    pub fn normalized_proper(&self) -> Result<Self> {
        let q = self.self_form();
        if !(q < 0.0) {
            return Err(Error::NotProper { self_form: q });
        }
        let scale = (-q).sqrt().recip().copysign(self.0[0]);
        Ok(*self * scale)
    }

    /// Representative with `⟨x,x⟩ = +1` of an outer point.
    pub fn normalized_outer(&self) -> Option<Self> {
        let q = self.self_form();
        (q > 0.0).then(|| *self * q.sqrt().recip())
    }

    /// Projection of `self` onto the polar plane of the non-null point `pole`:
    /// `x − (⟨x,b⟩/⟨b,b⟩) b`.
    pub fn project_onto_polar(&self, pole: &Self) -> Self {
        let t = self.dot(pole) / pole.self_form();
        *self - *pole * t
    }
}

impl PlaneForm {
    pub const fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Self([a0, a1, a2, a3])
    }

    /// Value of the form on a point; zero means incidence.
    pub fn eval(&self, x: &LorentzVec) -> f64 {
        incidence(x, self)
    }

    /// The form induced on planes, `⟨a, b⟩ = ⟨pole(a), pole(b)⟩`.
    pub fn dot(&self, other: &Self) -> f64 {
        pole(self).dot(&pole(other))
    }

    /// Rescale so that `⟨a,a⟩ = 1`; planes of `H³` have spacelike poles.
    pub fn normalized(&self) -> Option<Self> {
        let q = self.dot(self);
        (q > 0.0).then(|| Self(self.0.map(|c| c / q.sqrt())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }
}

macro_rules! impl_vector_ops {
    ($t:ident) => {
        impl Add for $t {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
            }
        }

        impl Sub for $t {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
            }
        }

        impl Mul<f64> for $t {
            type Output = Self;
            fn mul(self, rhs: f64) -> Self {
                Self(self.0.map(|c| c * rhs))
            }
        }

        impl Neg for $t {
            type Output = Self;
            fn neg(self) -> Self {
                Self(self.0.map(|c| -c))
            }
        }

        impl Index<usize> for $t {
            type Output = f64;
            fn index(&self, i: usize) -> &f64 {
                &self.0[i]
            }
        }
    };
}

impl_vector_ops!(LorentzVec);
impl_vector_ops!(PlaneForm);

/// `⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + x²y² + x³y³`.
pub fn bilinear_form(x: &LorentzVec, y: &LorentzVec) -> f64 {
    -x.0[0] * y.0[0] + x.0[1] * y.0[1] + x.0[2] * y.0[2] + x.0[3] * y.0[3]
}

/// The pairing `x·a` of a point with a plane form.
pub fn incidence(x: &LorentzVec, a: &PlaneForm) -> f64 {
    x.0.iter().zip(a.0.iter()).map(|(x, a)| x * a).sum()
}

/// Classify `x` against the absolute quadric. `|⟨x,x⟩| ≤ tol·‖x‖²` counts as
/// ideal.
pub fn classify(x: &LorentzVec, tol: f64) -> Result<PointClass> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    if let Some(&c) = x.0.iter().find(|c| !c.is_finite()) {
        return Err(Error::NonFinite(c));
    }
    let q = x.self_form();
    Ok(if q.abs() <= tol * x.euclidean_norm_sq() {
        PointClass::Ideal
    } else if q < 0.0 {
        PointClass::Proper
    } else {
        PointClass::Outer
    })
}

/// The polar plane `pol(x) = {y : ⟨x, y⟩ = 0}` as a linear form.
pub fn polar_plane(x: &LorentzVec) -> Result<PlaneForm> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let [x0, x1, x2, x3] = x.0;
    Ok(PlaneForm([-x0, x1, x2, x3]))
}

/// Inverse of [`polar_plane`]: the point whose polar is `a`.
pub fn pole(a: &PlaneForm) -> LorentzVec {
    let [a0, a1, a2, a3] = a.0;
    LorentzVec([-a0, a1, a2, a3])
}

/// The plane through three projectively independent points, as the
/// generalized cross product of their coordinates.
pub fn plane_through(x: &LorentzVec, y: &LorentzVec, z: &LorentzVec) -> Result<PlaneForm> {
    let rows = [x.0, y.0, z.0];
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m = |r: usize, c: usize| rows[r][cols[c]];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let a = PlaneForm(std::array::from_fn(|i| {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sign * minor(i)
    }));
    let scale: f64 = [x, y, z]
        .iter()
        .map(|v| v.euclidean_norm_sq().sqrt())
        .product();
    if a.0.iter().all(|c| c.abs() <= 1e-13 * scale) {
        return Err(Error::ZeroVector);
    }
    Ok(a)
}

/// Hyperbolic distance between two proper points.
///
/// `cosh d = −⟨x,y⟩ / √(⟨x,x⟩⟨y,y⟩)` after orienting both representatives
/// into the same sheet. The value is evaluated as `2·asinh(‖x̂ − ŷ‖/2)` on
/// normalized representatives so that short distances keep full relative
/// precision.
pub fn distance_proper(x: &LorentzVec, y: &LorentzVec) -> Result<f64> {
    for v in [x, y] {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
    }
    let xn = x.normalized_proper()?;
    let yn = y.normalized_proper()?;
    let quotient = -xn.dot(&yn);
    if quotient < 1.0 - COSH_SLACK {
        return Err(Error::InconsistentRepresentatives { quotient });
    }
    let chord_sq = (xn - yn).self_form().max(0.0);
    Ok(2.0 * (0.5 * chord_sq.sqrt()).asinh())
}

/// Distance between two ultraparallel planes: the length of their common
/// perpendicular, `cosh d = |⟨a,b⟩| / √(⟨a,a⟩⟨b,b⟩)`.
pub fn plane_distance(a: &PlaneForm, b: &PlaneForm) -> Result<f64> {
    let (an, bn) = normalized_pair(a, b)?;
    let cosine = an.dot(&bn).abs();
    if cosine <= 1.0 {
        return Err(Error::NotUltraparallel { cosine });
    }
    Ok(cosine.acosh())
}

/// Interior dihedral angle of the wedge `{a·x ≤ 0} ∩ {b·x ≤ 0}` for two
/// intersecting planes.
pub fn dihedral_angle(a: &PlaneForm, b: &PlaneForm) -> Result<f64> {
    let (an, bn) = normalized_pair(a, b)?;
    let cosine = an.dot(&bn);
    if cosine.abs() >= 1.0 {
        return Err(Error::NotIntersecting {
            cosine: cosine.abs(),
        });
    }
    Ok((-cosine).acos())
}

fn normalized_pair(a: &PlaneForm, b: &PlaneForm) -> Result<(PlaneForm, PlaneForm)> {
    let norm = |p: &PlaneForm| {
        if p.is_zero() {
            Err(Error::ZeroVector)
        } else {
            p.normalized().ok_or(Error::NotProper {
                self_form: -p.dot(p),
            })
        }
    };
    Ok((norm(a)?, norm(b)?))
}

/// Angle at the proper point `vertex` between the geodesics towards `a` and
/// `b`.
pub fn angle_at(vertex: &LorentzVec, a: &LorentzVec, b: &LorentzVec) -> Result<f64> {
    let v = vertex.normalized_proper()?;
    let tangent = |w: &LorentzVec| -> Result<LorentzVec> {
        let t = w.project_onto_polar(&v);
        let n = t.self_form();
        if !(n > 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(t * n.sqrt().recip())
    };
    let (ta, tb) = (tangent(a)?, tangent(b)?);
    // The tangent space at a proper point is spacelike, so ⟨,⟩ is a Euclidean
    // metric there; half-angle form stays accurate near 0 and π.
    let diff = (ta - tb).self_form().max(0.0).sqrt();
    let sum = (ta + tb).self_form().max(0.0).sqrt();
    Ok(2.0 * diff.atan2(sum))
}

/// A real 4×4 matrix, indexed `[row][column]` from 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub const fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        let mut i = 0;
        while i < 4 {
            m[i][i] = 1.0;
            i += 1;
        }
        Self(m)
    }

    pub fn from_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self([[0.0; 4]; 4]);
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn transpose(&self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..4).all(|i| (0..4).all(|j| (self.0[i][j] - self.0[j][i]).abs() <= tol))
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn inverse(&self) -> Result<Self> {
        invert4(self)
    }
}

impl Mul for Mat4 {
    type Output = Mat4;

    fn mul(self, rhs: Mat4) -> Mat4 {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

/// Inverse of a 4×4 matrix by Gauss–Jordan elimination with partial pivoting.
pub fn invert4(m: &Mat4) -> Result<Mat4> {
    let scale =
        m.0.iter()
            .flatten()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if !scale.is_finite() {
        return Err(Error::NonFinite(scale));
    }
    if scale == 0.0 {
        return Err(Error::SingularMatrix);
    }
    let mut a = m.0;
    let mut inv = Mat4::identity().0;

    for col in 0..4 {
        let pivot_row = (col..4)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .unwrap();
        if a[pivot_row][col].abs() <= 1e-14 * scale {
            return Err(Error::SingularMatrix);
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let pivot = a[col][col];
        for j in 0..4 {
            a[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for row in (0..4).filter(|&r| r != col) {
            let factor = a[row][col];
            if factor == 0.0 {
                continue;
            }
            for j in 0..4 {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    Ok(Mat4(inv))
}
