//! The regular truncated tetrahedron `S(p)` and its hyperball packing density.
//!
//! Four side planes with tetrahedral symmetry about the origin `(1,0,0,0)`
//! meet pairwise at dihedral angle `2π/p`. For `p > 6` their triple
//! intersections `B₁..B₄` are outer points. Each polar plane `pol(Bᵢ)` is
//! orthogonal to the three side planes through `Bᵢ` and cuts that vertex off,
//! leaving a compact polyhedron with four hexagonal and four triangular
//! faces. The polar planes are the base planes of four congruent hyperballs of
//! height `h(p)`; any two of them are `2h(p)` apart.
//!
//! `S(p)` splits into 24 congruent orthoschemes `Q₀Q₁Q₂P₀P₁P₂`. Each carries
//! one sixth of a triangular face, the right triangle `Q₀Q₁Q₂`, and the
//! hyperball piece over that triangle.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::lorentz::{
    angle_at, dihedral_angle, plane_distance, polar_plane, LorentzVec, PlaneForm,
};
use crate::orthoscheme::{check_parameter, height, volume_kellerhals, OrthoschemeAngles};

/// Number of congruent orthoschemes in `S(p)`.
pub const ORTHOSCHEMES_PER_POLYHEDRON: f64 = 24.0;

/// Number of orthoscheme triangles on one triangular face.
pub const TRIANGLES_PER_FACE: f64 = 6.0;

/// Unit directions of the four side-plane normals.
fn tetrahedral_directions() -> [[f64; 3]; 4] {
    let s = 1.0 / 3f64.sqrt();
    [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]]
}

/// Vertices of one representative orthoscheme of `S(p)`.
///
/// `P₀` is the centre, `P₁` the centre of a hexagonal face, `P₂` the midpoint
/// of one of its edges along `B₁B₂`; `Q₀` is the centre of the triangular face
/// cut at `B₁`, `Q₁` the midpoint of its edge on the hexagon's plane and `Q₂`
/// the endpoint of that edge on `B₁B₂`. All six are normalized proper points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoschemeVertices {
    pub q0: LorentzVec,
    pub q1: LorentzVec,
    pub q2: LorentzVec,
    pub p0: LorentzVec,
    pub p1: LorentzVec,
    pub p2: LorentzVec,
}

/// A coordinate realization of `S(p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedTetra {
    pub p: f64,
    /// Planes of the hexagonal faces; side `i` is opposite vertex `Bᵢ`. The
    /// interior is where every form is negative.
    pub side_planes: [PlaneForm; 4],
    /// Outer vertices `Bᵢ`, triple intersections of side planes.
    pub outer_vertices: [LorentzVec; 4],
    /// Polar planes `pol(Bᵢ)`: the truncating triangular faces and the
    /// hyperball base planes.
    pub trunc_planes: [PlaneForm; 4],
    pub orthoscheme: OrthoschemeVertices,
}

impl TruncatedTetra {
    pub fn build(p: f64) -> Result<Self> {
        check_parameter(p)?;

        // A side plane −a·x⁰ + b·(n·x) = 0 with b² − a² = 1 makes
        // cos(interior angle) = a² + b²/3; solve for cos(2π/p).
        let cos_dihedral = (TAU / p).cos();
        let a = ((3.0 * cos_dihedral - 1.0) / 4.0).sqrt();
        let b = (1.0 + a * a).sqrt();
        let dirs = tetrahedral_directions();

        let side_planes = dirs.map(|n| PlaneForm::new(-a, b * n[0], b * n[1], b * n[2]));
        // On every side plane but its own: −a + b·t/3 = 0.
        let t = 3.0 * a / b;
        let outer_vertices = dirs.map(|n| LorentzVec::new(1.0, -t * n[0], -t * n[1], -t * n[2]));
        if outer_vertices.iter().any(|v| v.self_form() <= 0.0) {
            return Err(Error::ParameterOutOfRange(p));
        }
        let mut trunc_planes = [PlaneForm::new(0.0, 0.0, 0.0, 0.0); 4];
        for (plane, vertex) in trunc_planes.iter_mut().zip(&outer_vertices) {
            *plane = polar_plane(vertex)?;
        }

        let orthoscheme = representative_orthoscheme(&side_planes, &outer_vertices)?;
        Ok(Self {
            p,
            side_planes,
            outer_vertices,
            trunc_planes,
            orthoscheme,
        })
    }

    /// Distance between the base planes `pol(Bᵢ)` and `pol(Bⱼ)`.
    pub fn base_plane_distance(&self, i: usize, j: usize) -> Result<f64> {
        plane_distance(&self.trunc_planes[i], &self.trunc_planes[j])
    }

    /// Interior dihedral angle between side planes `i` and `j`.
    pub fn side_dihedral_angle(&self, i: usize, j: usize) -> Result<f64> {
        dihedral_angle(&self.side_planes[i], &self.side_planes[j])
    }

    pub fn face_triangle(&self) -> Result<FaceTriangle> {
        let o = &self.orthoscheme;
        let vertices = [o.q0, o.q1, o.q2];
        let angles = [
            angle_at(&o.q0, &o.q1, &o.q2)?,
            angle_at(&o.q1, &o.q0, &o.q2)?,
            angle_at(&o.q2, &o.q0, &o.q1)?,
        ];
        let area = PI - angles.iter().sum::<f64>();
        Ok(FaceTriangle {
            vertices,
            angles,
            area,
        })
    }
}

fn representative_orthoscheme(
    side_planes: &[PlaneForm; 4],
    outer: &[LorentzVec; 4],
) -> Result<OrthoschemeVertices> {
    let p0 = LorentzVec::origin();
    // hexagon on side 3, which carries B₀, B₁, B₂
    let side_pole = crate::lorentz::pole(&side_planes[3]);
    let p1 = p0.project_onto_polar(&side_pole).normalized_proper()?;

    let (b0, b1) = match (outer[0].normalized_outer(), outer[1].normalized_outer()) {
        (Some(b0), Some(b1)) => (b0, b1),
        _ => return Err(Error::ZeroVector),
    };
    // The swap B₀ ↔ B₁ fixes P₀, so the symmetric point of the edge is its
    // midpoint.
    let p2 = (b0 + b1).normalized_proper()?;

    let q2 = outer[1].project_onto_polar(&outer[0]).normalized_proper()?;
    let q2_next = outer[2].project_onto_polar(&outer[0]).normalized_proper()?;
    let q1 = (q2 + q2_next).normalized_proper()?;
    let q0 = p0.project_onto_polar(&outer[0]).normalized_proper()?;

    Ok(OrthoschemeVertices {
        q0,
        q1,
        q2,
        p0,
        p1,
        p2,
    })
}

pub fn build(p: f64) -> Result<TruncatedTetra> {
    TruncatedTetra::build(p)
}

/// The right triangle `Q₀Q₁Q₂`, one sixth of a triangular face of `S(p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceTriangle {
    pub vertices: [LorentzVec; 3],
    /// Interior angles at `Q₀`, `Q₁`, `Q₂`.
    pub angles: [f64; 3],
    /// Angle defect `π − Σ angles`.
    pub area: f64,
}

pub fn face_triangle(p: f64) -> Result<FaceTriangle> {
    TruncatedTetra::build(p)?.face_triangle()
}

/// Volume of the hyperball piece of height `h` over a base region of the
/// given area: `¼·area·(sinh 2h + 2h)`.
pub fn hyperball_piece_volume(area: f64, h: f64) -> Result<f64> {
    for (name, value) in [("area", area), ("h", h)] {
        if !value.is_finite() {
            return Err(Error::NonFinite(value));
        }
        if value < 0.0 {
            return Err(Error::NegativeInput { name, value });
        }
    }
    Ok(0.25 * area * ((2.0 * h).sinh() + 2.0 * h))
}

/// One evaluated point of the density function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityPoint {
    pub p: f64,
    pub height: f64,
    pub vol_orthoscheme: f64,
    /// Hyperball piece over the orthoscheme triangle `Q₀Q₁Q₂`.
    pub vol_hyperball_piece: f64,
    pub delta: f64,
}

impl DensityPoint {
    /// `Vol(S(p)) = 24·Vol(O)`.
    pub fn polyhedron_volume(&self) -> f64 {
        ORTHOSCHEMES_PER_POLYHEDRON * self.vol_orthoscheme
    }

    /// Volume of one hyperball inside `S(p)`: the piece over a whole
    /// triangular face.
    pub fn hyperball_volume_in_polyhedron(&self) -> f64 {
        TRIANGLES_PER_FACE * self.vol_hyperball_piece
    }

    /// `4·Vol(hyperball ∩ S(p)) / Vol(S(p))`, equal to `delta`.
    pub fn polyhedron_density(&self) -> f64 {
        4.0 * self.hyperball_volume_in_polyhedron() / self.polyhedron_volume()
    }

    /// The `p → ∞` limit: zero height and density, orthoscheme volume at
    /// `α₀₁ = 0`.
    pub fn asymptotic() -> Result<Self> {
        Ok(Self {
            p: f64::INFINITY,
            height: 0.0,
            vol_orthoscheme: volume_kellerhals(&OrthoschemeAngles::limit())?,
            vol_hyperball_piece: 0.0,
            delta: 0.0,
        })
    }
}

/// Packing density `δ(S(p))` together with the quantities it is built from.
pub fn density(p: f64) -> Result<DensityPoint> {
    let h = height(p)?;
    let vol_orthoscheme = volume_kellerhals(&OrthoschemeAngles::for_parameter(p)?)?;
    let triangle = face_triangle(p)?;
    let vol_hyperball_piece = hyperball_piece_volume(triangle.area, h)?;
    Ok(DensityPoint {
        p,
        height: h,
        vol_orthoscheme,
        vol_hyperball_piece,
        delta: vol_hyperball_piece / vol_orthoscheme,
    })
}
