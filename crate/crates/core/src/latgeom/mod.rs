//! Lattice polytopes, saturated affine semigroups and the graded cone over a
//! polytope.
//!
//! A semigroup is stored through the rational cone it spans and its ambient
//! lattice. For the cone over `P ⊂ V` the ambient space is `ℝ × V` with the
//! degree as the first coordinate, and the cone is spanned by `(1, v)` for the
//! vertices `v` of `P`.

mod semigroup;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::charring::CharError;
use crate::exactnum::{integer_kernel_basis, rank, ExactError, Rational, RationalMatrix, RationalVector};
use crate::rootsys::{convex_hull_contains, Lattice, RootDatum, RootError};
use crate::weylgroup::Group;

pub(crate) use semigroup::box_points;
pub use semigroup::{
    check_saturated, restriction_check, restriction_support, GradedSemigroup, Presentation, RestrictionCheck,
    SaturationReport, DEFAULT_SATURATION_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("a polytope needs at least one vertex")]
    Empty,
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a lattice point")]
    NotLatticePoint(RationalVector),
    #[error("vertex {0} lies in the convex hull of the other vertices")]
    NotExtreme(RationalVector),
    #[error("{0} is not in the semigroup")]
    NotInSemigroup(RationalVector),
    #[error("simple reflection {generator} does not preserve the semigroup (image of {point} leaves it)")]
    NotStable { generator: usize, point: RationalVector },
    #[error("lattice coordinate does not fit in 64 bits")]
    Overflow,
}

/// Integer coordinates of a lattice point, failing off the lattice.
pub(crate) fn int_coords(lattice: &Lattice, v: &RationalVector) -> Result<Vec<i64>, GeomError> {
    lattice
        .coordinates(v)
        .iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(GeomError::NotLatticePoint(v.clone()));
            }
            q.to_integer().to_i64().ok_or(GeomError::Overflow)
        })
        .collect()
}

pub(crate) fn from_int_coords(lattice: &Lattice, c: &[i64]) -> RationalVector {
    let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
    lattice.from_coordinates(&big)
}

pub(crate) fn int_vector(c: &[i64]) -> RationalVector {
    RationalVector::from_ints(c)
}

/// Convex hull of finitely many lattice points whose listed vertices are all extreme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<RationalVector>,
    lattice: Lattice,
    /// Vertices in lattice coordinates.
    coords: Vec<Vec<i64>>,
    full_dimensional: bool,
}

impl LatticePolytope {
    pub fn new(vertices: Vec<RationalVector>, lattice: Lattice) -> Result<Self, GeomError> {
        if vertices.is_empty() {
            return Err(GeomError::Empty);
        }
        let dim = lattice.dim();
        if let Some(v) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, found: v.dim() });
        }
        let coords = vertices.iter().map(|v| int_coords(&lattice, v)).collect::<Result<Vec<_>, _>>()?;
        for (k, v) in vertices.iter().enumerate() {
            let others: Vec<RationalVector> =
                vertices.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, w)| w.clone()).collect();
            if convex_hull_contains(&others, v) {
                return Err(GeomError::NotExtreme(v.clone()));
            }
        }
        let diffs: Vec<Vec<Rational>> = vertices.iter().map(|v| (v - &vertices[0]).into_coords()).collect();
        let full_dimensional = rank(&RationalMatrix::from_rows(diffs)?) == dim;
        Ok(Self { vertices, lattice, coords, full_dimensional })
    }

    /// Vertices given in lattice coordinates.
    pub fn from_lattice_coords(coords: &[Vec<i64>], lattice: Lattice) -> Result<Self, GeomError> {
        let vertices = coords.iter().map(|c| from_int_coords(&lattice, c)).collect();
        Self::new(vertices, lattice)
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.full_dimensional
    }

    /// `x ∈ P`, decided by LP over convex coefficients.
    pub fn member(&self, x: &RationalVector) -> bool {
        x.dim() == self.dim() && convex_hull_contains(&self.vertices, x)
    }

    /// `x ∈ tP`, with `0P = {0}`.
    pub fn member_dilate(&self, t: u64, x: &RationalVector) -> bool {
        if t == 0 {
            return x.is_zero();
        }
        self.member(&x.scale(&Rational::new(BigInt::from(1), BigInt::from(t))))
    }

    /// Integer equations `n·c = t·(n·c₀)` cutting out the affine hull in lattice coordinates.
    fn affine_equations(&self) -> Vec<(Vec<i64>, i64)> {
        let rows: Vec<Vec<BigInt>> = self
            .coords
            .iter()
            .map(|c| c.iter().zip(&self.coords[0]).map(|(a, b)| BigInt::from(a - b)).collect())
            .collect();
        integer_kernel_basis(&rows, self.dim())
            .into_iter()
            .map(|n| {
                let n: Vec<i64> = n.iter().map(|x| x.to_i64().expect("small kernel entries")).collect();
                let rhs = n.iter().zip(&self.coords[0]).map(|(a, b)| a * b).sum();
                (n, rhs)
            })
            .collect()
    }

    /// `tP ∩ M`, sorted.
    ///
    /// Scans the bounding box of `tP` in lattice coordinates, drops points off
    /// the affine hull, and decides the rest by LP.
    pub fn lattice_points(&self, t: u64) -> Vec<RationalVector> {
        let mut out: Vec<RationalVector> =
            self.lattice_coords(t).iter().map(|c| from_int_coords(&self.lattice, c)).collect();
        out.sort();
        out
    }

    /// `tP ∩ M` in lattice coordinates, in scan order.
    pub fn lattice_coords(&self, t: u64) -> Vec<Vec<i64>> {
        let dim = self.dim();
        if t == 0 {
            return vec![vec![0; dim]];
        }
        let t = t as i64;
        let scaled: Vec<RationalVector> = self.coords.iter().map(|c| int_vector(&c.iter().map(|x| x * t).collect::<Vec<_>>())).collect();
        let lo: Vec<i64> = (0..dim).map(|j| scaled.iter().map(|c| c[j].to_integer().to_i64().unwrap()).min().unwrap()).collect();
        let hi: Vec<i64> = (0..dim).map(|j| scaled.iter().map(|c| c[j].to_integer().to_i64().unwrap()).max().unwrap()).collect();
        let equations: Vec<(Vec<i64>, i64)> = self.affine_equations().into_iter().map(|(n, r)| (n, r * t)).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if equations.iter().all(|(n, r)| n.iter().zip(&cur).map(|(a, b)| a * b).sum::<i64>() == *r)
                && convex_hull_contains(&scaled, &int_vector(&cur))
            {
                out.push(cur.clone());
            }
            let mut j = 0;
            loop {
                if j == dim {
                    return out;
                }
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    break;
                }
                cur[j] = lo[j];
                j += 1;
            }
        }
    }
}

/// The points lying in the closed fundamental domain.
pub fn slice_by_domain(datum: &RootDatum, points: &[RationalVector]) -> Vec<RationalVector> {
    points.iter().filter(|p| datum.in_fundamental_domain(p)).cloned().collect()
}

/// Number of `W`-orbits met by `points`, by direct orbit enumeration.
pub fn orbit_count(group: &Group, points: &[RationalVector]) -> usize {
    let mut seen: BTreeSet<RationalVector> = BTreeSet::new();
    let mut count = 0;
    for p in points {
        if seen.contains(p) {
            continue;
        }
        count += 1;
        seen.extend(group.orbit(p));
    }
    count
}

/// Whether every group element permutes `points`.
pub fn is_permuted_by(group: &Group, points: &[RationalVector]) -> bool {
    let set: BTreeSet<&RationalVector> = points.iter().collect();
    group.generators().iter().all(|g| points.iter().all(|p| set.contains(&g.apply(p))))
}

pub(crate) fn is_zero_coords(c: &[i64]) -> bool {
    c.iter().all(|x| x.is_zero())
}
