use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use super::{from_int_coords, int_coords, int_vector, is_zero_coords, GeomError, LatticePolytope};
use crate::charring::CharacterRing;
use crate::exactnum::{lp_feasible, Constraint, Rational, RationalVector};
use crate::rootsys::Lattice;
use crate::weylgroup::Group;

/// Box half-width (in lattice coordinates) used by [`check_saturated`] unless told otherwise.
pub const DEFAULT_SATURATION_BOUND: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    /// `{(t, p) : t ∈ ℤ≥0, p ∈ tP} ∩ (ℤ × M)`, graded by `t`.
    ConeOverPolytope(LatticePolytope),
    /// The semigroup generated by finitely many lattice points.
    Generators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSemigroup {
    presentation: Presentation,
    lattice: Lattice,
    generators: Vec<RationalVector>,
    gen_coords: Vec<Vec<i64>>,
}

impl GradedSemigroup {
    pub fn cone_over(polytope: LatticePolytope) -> Self {
        let dim = polytope.dim();
        let lift = |t: i64, v: &RationalVector| RationalVector::from_ints(&[t]).concat(v);
        let mut basis = vec![lift(1, &RationalVector::zeros(dim))];
        basis.extend(polytope.lattice().basis().iter().map(|b| lift(0, b)));
        let lattice = Lattice::new(basis).expect("product of full-rank lattices");
        let generators: Vec<RationalVector> = polytope.vertices().iter().map(|v| lift(1, v)).collect();
        let gen_coords = generators.iter().map(|g| int_coords(&lattice, g).expect("vertices are lattice points")).collect();
        Self { presentation: Presentation::ConeOverPolytope(polytope), lattice, generators, gen_coords }
    }

    pub fn generated(lattice: Lattice, generators: Vec<RationalVector>) -> Result<Self, GeomError> {
        let dim = lattice.dim();
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, found: g.dim() });
        }
        let gen_coords = generators.iter().map(|g| int_coords(&lattice, g)).collect::<Result<_, _>>()?;
        Ok(Self { presentation: Presentation::Generators, lattice, generators, gen_coords })
    }

    /// `ℤ≥0ⁿ ⊂ ℤⁿ`.
    pub fn orthant(dim: usize) -> Self {
        let gens = (0..dim).map(|i| RationalVector::unit(dim, i)).collect();
        Self::generated(Lattice::standard(dim), gens).expect("unit vectors")
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn polytope(&self) -> Option<&LatticePolytope> {
        match &self.presentation {
            Presentation::ConeOverPolytope(p) => Some(p),
            Presentation::Generators => None,
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Generators of the cone `C`; for a cone over `P` these are `(1, v)`.
    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    /// `deg(t, p) = t` for a cone over a polytope.
    pub fn degree(&self, x: &RationalVector) -> Option<Rational> {
        self.polytope().map(|_| x[0].clone())
    }

    /// `x ∈ C = ℝ≥0⟨generators⟩`.
    pub fn in_cone(&self, x: &RationalVector) -> bool {
        if x.dim() != self.dim() {
            return false;
        }
        if x.is_zero() {
            return true;
        }
        cone_contains(&self.generators, x)
    }

    /// `x ∈ C ∩ M`, which is the semigroup whenever it is saturated.
    pub fn contains(&self, x: &RationalVector) -> bool {
        x.dim() == self.dim() && self.lattice.contains(x) && self.in_cone(x)
    }

    /// Degree-`t` piece `{t} × (tP ∩ M)` of a cone over a polytope.
    pub fn graded_piece(&self, t: u64) -> Option<Vec<RationalVector>> {
        let p = self.polytope()?;
        let head = RationalVector::from_ints(&[t as i64]);
        Some(p.lattice_points(t).iter().map(|x| head.concat(x)).collect())
    }

    /// A functional, in lattice coordinates, that is at least 1 on every generator.
    pub fn positive_functional(&self) -> Option<Vec<Rational>> {
        let dim = self.dim();
        let constraints: Vec<Constraint> =
            self.gen_coords.iter().map(|c| Constraint::ge(int_vector(c), Rational::one())).collect();
        lp_feasible(dim, &constraints).ok()?.witness().map(|w| w.coords().to_vec())
    }

    /// Exact membership in the semigroup generated by the generators (not its
    /// saturation) when the cone is pointed; otherwise a search over sums that
    /// stay inside a box of half-width `reach`.
    pub fn generated_contains(&self, x: &RationalVector, reach: i64) -> bool {
        let Ok(c) = int_coords(&self.lattice, x) else {
            return false;
        };
        match self.positive_functional() {
            Some(l) => Decomposer::new(&self.gen_coords, l).contains(&c),
            None => reachable_in_box(&self.gen_coords, reach.max(max_abs(&c))).contains(&c),
        }
    }

    /// Stability of `C ∩ M` under the simple reflections of `group`.
    pub fn require_stable(&self, group: &Group) -> Result<(), GeomError> {
        if group.dim() != self.dim() {
            return Err(GeomError::DimensionMismatch { expected: self.dim(), found: group.dim() });
        }
        for (i, s) in group.generators().iter().enumerate() {
            if let Some(b) = self.lattice.basis().iter().find(|b| !self.lattice.contains(&s.apply(b))) {
                return Err(GeomError::NotStable { generator: i, point: b.clone() });
            }
            if let Some(g) = self.generators.iter().find(|g| !self.in_cone(&s.apply(g))) {
                return Err(GeomError::NotStable { generator: i, point: g.clone() });
            }
        }
        Ok(())
    }
}

fn cone_contains(generators: &[RationalVector], x: &RationalVector) -> bool {
    let n = generators.len();
    if n == 0 {
        return x.is_zero();
    }
    let mut constraints: Vec<Constraint> = (0..x.dim())
        .map(|k| Constraint::eq(generators.iter().map(|g| g[k].clone()).collect(), x[k].clone()))
        .collect();
    constraints.extend((0..n).map(|i| Constraint::nonnegative(n, i)));
    lp_feasible(n, &constraints).expect("consistent dimensions").is_feasible()
}

fn max_abs(c: &[i64]) -> i64 {
    c.iter().map(|x| x.abs()).max().unwrap_or(0)
}

/// Depth-first decomposition into generators, guided by a functional that is
/// at least 1 on each generator, so every branch is finite.
struct Decomposer<'a> {
    gens: &'a [Vec<i64>],
    functional: Vec<Rational>,
    failed: HashSet<Vec<i64>>,
}

impl<'a> Decomposer<'a> {
    fn new(gens: &'a [Vec<i64>], functional: Vec<Rational>) -> Self {
        Self { gens, functional, failed: HashSet::new() }
    }

    fn value(&self, c: &[i64]) -> Rational {
        self.functional.iter().zip(c).map(|(l, &x)| l * Rational::from_integer(BigInt::from(x))).sum()
    }

    fn contains(&mut self, c: &[i64]) -> bool {
        if is_zero_coords(c) {
            return true;
        }
        if !self.value(c).is_positive() || self.failed.contains(c) {
            return false;
        }
        for g in self.gens {
            let rest: Vec<i64> = c.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.contains(&rest) {
                return true;
            }
        }
        self.failed.insert(c.to_vec());
        false
    }
}

fn reachable_in_box(gens: &[Vec<i64>], reach: i64) -> HashSet<Vec<i64>> {
    let dim = gens.first().map_or(0, Vec::len);
    let start = vec![0; dim];
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if max_abs(&y) <= reach && seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// Outcome of a bounded saturation scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub saturated: bool,
    /// Half-width of the scanned box in lattice coordinates; 0 when not scanned.
    pub bound: i64,
    pub points_checked: usize,
    /// Whether semigroup membership was decided exactly (pointed cone).
    pub exact_membership: bool,
    pub by_construction: bool,
    pub counterexample: Option<RationalVector>,
}

/// Compares semigroup membership with `C ∩ M` membership on every lattice point
/// whose coordinates lie in `[−bound, bound]`.
///
/// Cones over polytopes are saturated by construction and are not scanned.
pub fn check_saturated(s: &GradedSemigroup, bound: i64) -> SaturationReport {
    if s.polytope().is_some() {
        return SaturationReport {
            saturated: true,
            bound: 0,
            points_checked: 0,
            exact_membership: true,
            by_construction: true,
            counterexample: None,
        };
    }
    let dim = s.dim();
    let functional = s.positive_functional();
    let generated: HashSet<Vec<i64>> = match &functional {
        Some(l) => generated_below(&s.gen_coords, l, &box_functional_max(l, bound)),
        None => reachable_in_box(&s.gen_coords, 2 * bound + s.gen_coords.iter().map(|g| max_abs(g)).max().unwrap_or(0)),
    };
    let points = box_points(dim, bound);
    let counterexample = points
        .par_iter()
        .find_first(|c| !generated.contains(*c) && s.in_cone(&from_int_coords(&s.lattice, c)))
        .map(|c| from_int_coords(&s.lattice, c));
    SaturationReport {
        saturated: counterexample.is_none(),
        bound,
        points_checked: points.len(),
        exact_membership: functional.is_some(),
        by_construction: false,
        counterexample,
    }
}

fn box_functional_max(l: &[Rational], bound: i64) -> Rational {
    l.iter().map(|x| x.abs() * Rational::from_integer(BigInt::from(bound))).sum()
}

/// Every generated point whose functional value is at most `cap`.
fn generated_below(gens: &[Vec<i64>], l: &[Rational], cap: &Rational) -> HashSet<Vec<i64>> {
    let dim = l.len();
    let value = |c: &[i64]| -> Rational { l.iter().zip(c).map(|(a, &x)| a * Rational::from_integer(BigInt::from(x))).sum() };
    let start = vec![0; dim];
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if &value(&y) <= cap && seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

pub(crate) fn box_points(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Outcome of checking `supp Ψ(χ^u) ⊂ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionCheck {
    pub passed: bool,
    pub support_size: usize,
    pub outside: Option<RationalVector>,
}

/// `supp Ψ(χ^u) ⊂ C ∩ M`, assuming the preconditions already hold.
pub fn restriction_support(ring: &CharacterRing<'_>, s: &GradedSemigroup, u: &RationalVector) -> Result<RestrictionCheck, GeomError> {
    let wp = ring.weight(u)?;
    let psi = ring.psi(&wp)?;
    let datum = ring.datum();
    let mut cache: HashMap<RationalVector, bool> = HashMap::new();
    let mut outside = None;
    for p in psi.support() {
        let v = p.reconstruct(datum);
        let inside = *cache.entry(v.clone()).or_insert_with(|| s.contains(&v));
        if !inside {
            outside = Some(v);
            break;
        }
    }
    Ok(RestrictionCheck { passed: outside.is_none(), support_size: psi.len(), outside })
}

/// Checks the preconditions (`u ∈ D ∩ S`, `S` stable under `W`) and then
/// that every support point of `Ψ(χ^u)` lies in `S`.
pub fn restriction_check(ring: &CharacterRing<'_>, s: &GradedSemigroup, u: &RationalVector) -> Result<RestrictionCheck, GeomError> {
    if u.dim() != s.dim() {
        return Err(GeomError::DimensionMismatch { expected: s.dim(), found: u.dim() });
    }
    ring.datum().require_dominant(u)?;
    if !s.contains(u) {
        return Err(GeomError::NotInSemigroup(u.clone()));
    }
    s.require_stable(ring.group())?;
    restriction_support(ring, s, u)
}
