//! Bundled scenarios. Type `A_{n−1}` acts on `ℤⁿ` by permuting coordinates.

use crate::exactnum::RationalVector;
use crate::latgeom::{GradedSemigroup, LatticePolytope};
use crate::rootsys::{CartanType, Lattice, RootDatum};

pub const NAMES: &[&str] = &[
    "figure1",
    "orthant-a2",
    "orthant-a3",
    "b2-lattice",
    "square",
    "simplex3",
    "b2-diamond",
    "permutohedron-a3",
];

#[derive(Debug, Clone)]
pub enum FixtureObject {
    Semigroup(GradedSemigroup),
    Polytope(LatticePolytope),
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub datum: RootDatum,
    pub object: FixtureObject,
}

fn v(xs: &[i64]) -> RationalVector {
    RationalVector::from_ints(xs)
}

fn datum(ty: CartanType) -> RootDatum {
    RootDatum::named(ty).expect("named types are valid")
}

fn polytope(vertices: Vec<RationalVector>) -> LatticePolytope {
    let dim = vertices[0].dim();
    LatticePolytope::new(vertices, Lattice::standard(dim)).expect("fixture vertices are extreme lattice points")
}

/// `A₁` on `ℤ²` with `S = ℤ≥0²`.
pub fn figure1() -> (RootDatum, GradedSemigroup) {
    orthant(2)
}

/// `A_{n−1}` on `ℤⁿ` with `S = ℤ≥0ⁿ`.
pub fn orthant(n: usize) -> (RootDatum, GradedSemigroup) {
    assert!(n >= 2, "orthant fixtures start at rank one");
    (datum(CartanType::A(n - 1)), GradedSemigroup::orthant(n))
}

/// `B₂` on `ℤ²` with `S = ℤ²` (no proper pointed cone is stable under `B₂`).
pub fn b2_lattice() -> (RootDatum, GradedSemigroup) {
    let gens = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])];
    let s = GradedSemigroup::generated(Lattice::standard(2), gens).expect("lattice points");
    (datum(CartanType::B(2)), s)
}

/// `[0,1]²` under the swap of coordinates.
pub fn square() -> (RootDatum, LatticePolytope) {
    (datum(CartanType::A(1)), polytope(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]))
}

/// `conv(e₁, e₂, e₃)` under `S₃`.
pub fn simplex3() -> (RootDatum, LatticePolytope) {
    (datum(CartanType::A(2)), polytope(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]))
}

/// `conv(±e₁, ±e₂)` under `B₂`.
pub fn b2_diamond() -> (RootDatum, LatticePolytope) {
    (datum(CartanType::B(2)), polytope(vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])]))
}

/// `conv(S₄ · (1,2,3,4))` under `S₄`.
pub fn permutohedron_a3() -> (RootDatum, LatticePolytope) {
    let mut perm = [1i64, 2, 3, 4];
    let mut vertices = vec![v(&perm)];
    while let Some(i) = (0..3).rev().find(|&i| perm[i] < perm[i + 1]) {
        let j = (i + 1..4).rev().find(|&j| perm[i] < perm[j]).expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
        vertices.push(v(&perm));
    }
    (datum(CartanType::A(3)), polytope(vertices))
}

pub fn by_name(name: &str) -> Option<Fixture> {
    let name: &'static str = NAMES.iter().find(|n| n.eq_ignore_ascii_case(name))?;
    let semigroup = |(datum, s): (RootDatum, GradedSemigroup)| (datum, FixtureObject::Semigroup(s));
    let poly = |(datum, p): (RootDatum, LatticePolytope)| (datum, FixtureObject::Polytope(p));
    let (datum, object) = match name {
        "figure1" => semigroup(figure1()),
        "orthant-a2" => semigroup(orthant(3)),
        "orthant-a3" => semigroup(orthant(4)),
        "b2-lattice" => semigroup(b2_lattice()),
        "square" => poly(square()),
        "simplex3" => poly(simplex3()),
        "b2-diamond" => poly(b2_diamond()),
        "permutohedron-a3" => poly(permutohedron_a3()),
        _ => unreachable!("NAMES is exhaustive"),
    };
    Some(Fixture { name, datum, object })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroup::{Group, Target};

    #[test]
    fn every_name_resolves() {
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn polytopes_are_stable() {
        for (d, p) in [square(), simplex3(), b2_diamond(), permutohedron_a3()] {
            let g = Group::generate(&d, 1000).unwrap();
            assert!(g.preserves(&Target::VertexSet(p.vertices())));
        }
        assert_eq!(permutohedron_a3().1.vertices().len(), 24);
        assert!(square().1.is_full_dimensional());
        assert!(!permutohedron_a3().1.is_full_dimensional());
    }
}
