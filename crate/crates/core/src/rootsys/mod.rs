//! Root data adapted to a lattice: simple roots, fundamental weights, the
//! weight decomposition, the fundamental domain and the dominance order.

mod cartan;
mod lattice;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{
    integer_kernel_basis, lp_feasible, rank, solve_linear, BilinearForm, Constraint, ExactError, LinearSolution,
    Rational, RationalMatrix, RationalVector,
};
use crate::weylgroup::Group;

pub use cartan::CartanType;
pub use lattice::Lattice;

/// Upper bound on the number of roots produced by the closure of Δ.
const MAX_ROOTS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("reflection in the zero vector")]
    ZeroRoot,
    #[error("simple roots are linearly dependent")]
    DependentRoots,
    #[error("lattice basis does not span the ambient space")]
    DegenerateLattice,
    #[error("vector {0} is not in the lattice")]
    NotInLattice(RationalVector),
    #[error("lattice vector {vector} pairs non-integrally with simple root {root}: M is not contained in the weight group")]
    LatticeNotInWeights { vector: RationalVector, root: RationalVector },
    #[error("root system axiom violated: {0}")]
    RootAxiom(String),
    #[error("root closure exceeded {0} roots; the generated group is not finite")]
    TooManyRoots(usize),
    #[error("point {point} is not in the fundamental domain: <v, alpha_{}> = {pairing} < 0", index + 1)]
    NotDominant { point: RationalVector, index: usize, pairing: Rational },
    #[error("invalid Cartan type {0:?}")]
    InvalidType(String),
    #[error("serialized datum is inconsistent: {0}")]
    Inconsistent(String),
}

/// `s_α(v) = v − 2⟨v,α⟩/⟨α,α⟩ · α`
pub fn reflect(form: &BilinearForm, alpha: &RationalVector, v: &RationalVector) -> Result<RationalVector, RootError> {
    let aa = form.inner(alpha, alpha)?;
    if aa.is_zero() {
        return Err(RootError::ZeroRoot);
    }
    let va = form.inner(v, alpha)?;
    let c = -(va * Rational::from_integer(2.into()) / aa);
    Ok(v.add_scaled(&c, alpha))
}

/// A point of the weight group `Λ = Z ⊕ ℤ⟨λ₁,…,λ_r⟩`.
///
/// Ordering is lexicographic on `(z_part, lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightPoint {
    #[serde(rename = "z")]
    pub z_part: RationalVector,
    #[serde(rename = "lambda")]
    pub lambda: Vec<i64>,
}

impl fmt::Display for WeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z = {}, lambda = {:?}", self.z_part, self.lambda)
    }
}

impl WeightPoint {
    pub fn new(z_part: RationalVector, lambda: Vec<i64>) -> Self {
        Self { z_part, lambda }
    }

    pub fn zero(dim: usize, rank: usize) -> Self {
        Self { z_part: RationalVector::zeros(dim), lambda: vec![0; rank] }
    }

    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&b| b >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            z_part: &self.z_part + &other.z_part,
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a + b).collect(),
        }
    }

    /// `z_part + Σ bᵢλᵢ` in ambient coordinates.
    pub fn reconstruct(&self, datum: &RootDatum) -> RationalVector {
        self.lambda
            .iter()
            .zip(&datum.fundamental_weights)
            .fold(self.z_part.clone(), |acc, (&b, l)| acc.add_scaled(&Rational::from_integer(b.into()), l))
    }
}

/// Simple roots adapted to a lattice `M`, with everything derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    label: Option<String>,
    form: BilinearForm,
    lattice: Lattice,
    simple_roots: Vec<RationalVector>,
    all_roots: Vec<RationalVector>,
    fundamental_weights: Vec<RationalVector>,
    z_basis: Vec<RationalVector>,
    /// `cartan[i][j] = 2⟨αᵢ,αⱼ⟩/⟨αⱼ,αⱼ⟩`, i.e. row `i` is αᵢ in λ-coordinates.
    cartan: Vec<Vec<i64>>,
    rho: RationalVector,
    simple_norms: Vec<Rational>,
}

/// Replaces each raw root by the primitive lattice vector on its ray and
/// derives weights, `Z ∩ M`, the root closure and the Cartan matrix.
pub fn adapt_simple_system(
    form: BilinearForm,
    lattice: Lattice,
    raw_simple_roots: &[RationalVector],
) -> Result<RootDatum, RootError> {
    let dim = form.dim();
    if lattice.dim() != dim {
        return Err(ExactError::DimensionMismatch { expected: dim, found: lattice.dim() }.into());
    }
    for a in raw_simple_roots {
        if a.dim() != dim {
            return Err(ExactError::DimensionMismatch { expected: dim, found: a.dim() }.into());
        }
        if a.is_zero() {
            return Err(RootError::ZeroRoot);
        }
    }
    let r = raw_simple_roots.len();
    if r > 0 && rank(&RationalMatrix::from_columns(raw_simple_roots, dim)) < r {
        return Err(RootError::DependentRoots);
    }

    let simple_roots: Vec<RationalVector> =
        raw_simple_roots.iter().map(|a| lattice.primitive_on_ray(a)).collect();
    let simple_norms: Vec<Rational> = simple_roots.iter().map(|a| form.norm_sq(a)).collect();

    let two = Rational::from_integer(2.into());
    let pairing = |v: &RationalVector, j: usize| &two * form.pair(v, &simple_roots[j]) / &simple_norms[j];

    // M ⊆ Λ: every lattice basis vector pairs integrally with every coroot.
    for m in lattice.basis() {
        for (j, a) in simple_roots.iter().enumerate() {
            if !pairing(m, j).is_integer() {
                return Err(RootError::LatticeNotInWeights { vector: m.clone(), root: a.clone() });
            }
        }
    }

    let cartan: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| pairing(&simple_roots[i], j).to_integer().to_i64().expect("Cartan entry fits in i64"))
                .collect()
        })
        .collect();

    // λᵢ = Σₖ cᵢₖ αₖ with Σₖ cᵢₖ C[k][j] = δᵢⱼ.
    let cartan_t = RationalMatrix::from_rows(
        (0..r).map(|j| (0..r).map(|k| Rational::from_integer(cartan[k][j].into())).collect()).collect(),
    )?;
    let mut fundamental_weights = Vec::with_capacity(r);
    for i in 0..r {
        let rhs = RationalVector::unit(r, i);
        let LinearSolution::Unique(c) = solve_linear(&cartan_t, &rhs)? else {
            return Err(RootError::DependentRoots);
        };
        let lambda = c
            .iter()
            .zip(&simple_roots)
            .fold(RationalVector::zeros(dim), |acc, (ck, ak)| acc.add_scaled(ck, ak));
        fundamental_weights.push(lambda);
    }

    // Z ∩ M: integer kernel of the pairings ⟨B e_j, αᵢ⟩ in lattice coordinates.
    let rows: Vec<Vec<BigInt>> = simple_roots
        .iter()
        .map(|a| {
            let row: Vec<Rational> = lattice.basis().iter().map(|b| form.pair(b, a)).collect();
            let denom = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| (q * Rational::from_integer(denom.clone())).to_integer()).collect()
        })
        .collect();
    let z_basis: Vec<RationalVector> = integer_kernel_basis(&rows, dim)
        .into_iter()
        .map(|c| {
            lattice.basis().iter().zip(&c).fold(RationalVector::zeros(dim), |acc, (b, ci)| {
                acc.add_scaled(&Rational::from_integer(ci.clone()), b)
            })
        })
        .collect();

    let all_roots = root_closure(&form, &simple_roots)?;
    let rho = fundamental_weights.iter().fold(RationalVector::zeros(dim), |acc, l| &acc + l);

    Ok(RootDatum {
        label: None,
        form,
        lattice,
        simple_roots,
        all_roots,
        fundamental_weights,
        z_basis,
        cartan,
        rho,
        simple_norms,
    })
}

/// Orbit of Δ under the simple reflections, then the `Φ ∩ ℝα = {±α}` check.
fn root_closure(form: &BilinearForm, simple: &[RationalVector]) -> Result<Vec<RationalVector>, RootError> {
    let mut seen: BTreeSet<RationalVector> = simple.iter().cloned().collect();
    let mut frontier: Vec<RationalVector> = simple.to_vec();
    while let Some(v) = frontier.pop() {
        for a in simple {
            let w = reflect(form, a, &v)?;
            if seen.insert(w.clone()) {
                if seen.len() > MAX_ROOTS {
                    return Err(RootError::TooManyRoots(MAX_ROOTS));
                }
                frontier.push(w);
            }
        }
    }
    let roots: Vec<RationalVector> = seen.into_iter().collect();
    for (i, a) in roots.iter().enumerate() {
        if !roots.contains(&-a) {
            return Err(RootError::RootAxiom(format!("-{a} is not a root")));
        }
        for b in &roots[i + 1..] {
            if b != &-a && rank(&RationalMatrix::from_columns(&[a.clone(), b.clone()], a.dim())) < 2 {
                return Err(RootError::RootAxiom(format!("{a} and {b} are proportional")));
            }
        }
    }
    Ok(roots)
}

impl RootDatum {
    /// Datum of a named Cartan type in its standard lattice realization.
    pub fn named(ty: CartanType) -> Result<Self, RootError> {
        let (form, lattice, roots) = ty.realization()?;
        let mut datum = adapt_simple_system(form, lattice, &roots)?;
        datum.label = Some(ty.to_string());
        Ok(datum)
    }

    /// Trivial reflection group on `ℤⁿ`: no roots, `D = V`.
    pub fn trivial(dim: usize) -> Self {
        adapt_simple_system(BilinearForm::standard(dim), Lattice::standard(dim), &[])
            .expect("trivial datum is always valid")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.simple_roots
    }

    pub fn all_roots(&self) -> &[RationalVector] {
        &self.all_roots
    }

    pub fn fundamental_weights(&self) -> &[RationalVector] {
        &self.fundamental_weights
    }

    pub fn z_basis(&self) -> &[RationalVector] {
        &self.z_basis
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rho(&self) -> &RationalVector {
        &self.rho
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// `2⟨v,αᵢ⟩/⟨αᵢ,αᵢ⟩`
    pub fn coroot_pairing(&self, v: &RationalVector, i: usize) -> Rational {
        Rational::from_integer(2.into()) * self.form.pair(v, &self.simple_roots[i]) / &self.simple_norms[i]
    }

    /// Splits `v` as `z + Σ bᵢλᵢ`; `None` when `v ∉ Λ`.
    pub fn decompose(&self, v: &RationalVector) -> Option<WeightPoint> {
        assert_eq!(v.dim(), self.dim(), "decompose: dimension mismatch");
        let mut lambda = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let b = self.coroot_pairing(v, i);
            if !b.is_integer() {
                return None;
            }
            lambda.push(b.to_integer().to_i64()?);
        }
        let mut z = v.clone();
        for (b, l) in lambda.iter().zip(&self.fundamental_weights) {
            z = z.add_scaled(&-Rational::from_integer((*b).into()), l);
        }
        Some(WeightPoint { z_part: z, lambda })
    }

    pub fn in_fundamental_domain(&self, v: &RationalVector) -> bool {
        self.first_wall_violation(v).is_none()
    }

    /// Smallest `i` with `⟨v,αᵢ⟩ < 0`.
    pub fn first_wall_violation(&self, v: &RationalVector) -> Option<(usize, Rational)> {
        self.simple_roots.iter().enumerate().find_map(|(i, a)| {
            let p = self.form.pair(v, a);
            p.is_negative().then_some((i, p))
        })
    }

    pub fn require_dominant(&self, v: &RationalVector) -> Result<(), RootError> {
        match self.first_wall_violation(v) {
            None => Ok(()),
            Some((index, pairing)) => Err(RootError::NotDominant { point: v.clone(), index, pairing }),
        }
    }

    /// Decides `lower ≤ upper`, i.e. `upper − lower ∈ ℝ≥0⟨Δ⟩`, by LP feasibility.
    pub fn dominance_leq(&self, lower: &RationalVector, upper: &RationalVector) -> bool {
        let diff = upper - lower;
        let r = self.rank();
        let mut constraints: Vec<Constraint> = (0..self.dim())
            .map(|k| {
                let coeffs: RationalVector = self.simple_roots.iter().map(|a| a[k].clone()).collect();
                Constraint::eq(coeffs, diff[k].clone())
            })
            .collect();
        constraints.extend((0..r).map(|i| Constraint::nonnegative(r, i)));
        lp_feasible(r, &constraints).expect("dimensions are consistent").is_feasible()
    }

    /// Exact coordinates of `v` in the basis Δ of its span, or `None` if `v ∉ ℝ⟨Δ⟩`.
    pub fn delta_coordinates(&self, v: &RationalVector) -> Option<Vec<Rational>> {
        if self.rank() == 0 {
            return v.is_zero().then(Vec::new);
        }
        let a = RationalMatrix::from_columns(&self.simple_roots, self.dim());
        match solve_linear(&a, v).expect("dimensions are consistent") {
            LinearSolution::Unique(c) => Some(c.into_coords()),
            LinearSolution::NonUnique { .. } => unreachable!("simple roots are independent"),
            LinearSolution::NoSolution => None,
        }
    }

    /// `v ∈ ℤ≥0⟨α₁,…,α_r⟩`
    pub fn in_positive_root_cone_integral(&self, v: &RationalVector) -> bool {
        self.delta_coordinates(v)
            .is_some_and(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// `⟨v, ρ⟩` with `ρ = Σλᵢ`; strictly increases along the dominance order.
    pub fn height(&self, v: &RationalVector) -> Rational {
        self.form.pair(v, &self.rho)
    }

    /// Heights `⟨λᵢ, ρ⟩` of the fundamental weights.
    pub fn fundamental_heights(&self) -> Vec<Rational> {
        self.fundamental_weights.iter().map(|l| self.height(l)).collect()
    }

    /// Decides `v ∈ conv(W u)` for `u, v ∈ D` by LP over the orbit of `u`.
    pub fn hull_membership(&self, group: &Group, u: &RationalVector, v: &RationalVector) -> Result<bool, RootError> {
        self.require_dominant(u)?;
        self.require_dominant(v)?;
        let orbit = group.orbit(u);
        Ok(convex_hull_contains(&orbit, v))
    }

    /// The datum for `ℝ × V` with lattice `ℤ × M`, roots `(0, αᵢ)` and the
    /// extra coordinate orthogonal to everything; used for graded cones.
    pub fn graded_lift(&self) -> Result<Self, RootError> {
        let dim = self.dim();
        let mut gram = RationalMatrix::zeros(dim + 1, dim + 1);
        gram[(0, 0)] = Rational::one();
        for i in 0..dim {
            for j in 0..dim {
                gram[(i + 1, j + 1)] = self.form.gram()[(i, j)].clone();
            }
        }
        let e0 = RationalVector::unit(1, 0);
        let lift = |v: &RationalVector| RationalVector::zeros(1).concat(v);
        let mut basis = vec![e0.concat(&RationalVector::zeros(dim))];
        basis.extend(self.lattice.basis().iter().map(lift));
        let roots: Vec<RationalVector> = self.simple_roots.iter().map(lift).collect();
        let mut datum = adapt_simple_system(BilinearForm::new(gram)?, Lattice::new(basis)?, &roots)?;
        datum.label = self.label.as_ref().map(|l| format!("{l} (graded)"));
        Ok(datum)
    }

    pub fn to_doc(&self) -> RootDatumDoc {
        RootDatumDoc {
            label: self.label.clone(),
            form: self.form.gram().clone(),
            lattice: self.lattice.basis().to_vec(),
            simple_roots: self.simple_roots.clone(),
            fundamental_weights: Some(self.fundamental_weights.clone()),
            z_basis: Some(self.z_basis.clone()),
        }
    }

    /// Rebuilds from a document; derived fields, when present, must match.
    pub fn from_doc(doc: &RootDatumDoc) -> Result<Self, RootError> {
        let form = BilinearForm::new(doc.form.clone())?;
        let lattice = Lattice::new(doc.lattice.clone())?;
        let mut datum = adapt_simple_system(form, lattice, &doc.simple_roots)?;
        datum.label = doc.label.clone();
        if doc.simple_roots != datum.simple_roots {
            return Err(RootError::Inconsistent("simple roots are not primitive in the lattice".into()));
        }
        if let Some(w) = &doc.fundamental_weights {
            if *w != datum.fundamental_weights {
                return Err(RootError::Inconsistent("fundamental weights do not match".into()));
            }
        }
        Ok(datum)
    }
}

/// `v ∈ conv(points)` by exact LP over convex coefficients.
pub(crate) fn convex_hull_contains(points: &[RationalVector], v: &RationalVector) -> bool {
    let n = points.len();
    if n == 0 {
        return false;
    }
    let dim = v.dim();
    let mut constraints: Vec<Constraint> = (0..dim)
        .map(|k| Constraint::eq(points.iter().map(|p| p[k].clone()).collect(), v[k].clone()))
        .collect();
    constraints.push(Constraint::eq(vec![Rational::one(); n].into(), Rational::one()));
    constraints.extend((0..n).map(|i| Constraint::nonnegative(n, i)));
    lp_feasible(n, &constraints).expect("dimensions are consistent").is_feasible()
}

/// Explicit serialized form of a root datum; rationals are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatumDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub form: RationalMatrix,
    pub lattice: Vec<RationalVector>,
    pub simple_roots: Vec<RationalVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fundamental_weights: Option<Vec<RationalVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_basis: Option<Vec<RationalVector>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_ints(xs)
    }

    fn a1() -> RootDatum {
        adapt_simple_system(BilinearForm::standard(2), Lattice::standard(2), &[v(&[-1, 1])]).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let f = BilinearForm::standard(2);
        let a = v(&[-1, 1]);
        assert_eq!(reflect(&f, &a, &v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(reflect(&f, &a, &v(&[-1, 1])).unwrap(), v(&[1, -1]));
        assert_eq!(reflect(&f, &a, &v(&[1, 3])).unwrap(), v(&[3, 1]));
        assert_eq!(reflect(&f, &v(&[0, 0]), &v(&[1, 3])), Err(RootError::ZeroRoot));
    }

    #[test]
    fn adapt_rescales_to_primitive() {
        let d = adapt_simple_system(BilinearForm::standard(2), Lattice::standard(2), &[v(&[-2, 2])]).unwrap();
        assert_eq!(d.simple_roots(), &[v(&[-1, 1])]);
        let d = adapt_simple_system(
            BilinearForm::standard(2),
            Lattice::standard(2),
            &[RationalVector::new(vec![ratio(-1, 3), ratio(1, 3)])],
        )
        .unwrap();
        assert_eq!(d.simple_roots(), &[v(&[-1, 1])]);
    }

    #[test]
    fn a1_weights_and_center() {
        let d = a1();
        assert_eq!(d.fundamental_weights(), &[RationalVector::new(vec![ratio(-1, 2), ratio(1, 2)])]);
        assert_eq!(d.z_basis().len(), 1);
        let z = &d.z_basis()[0];
        assert!(z == &v(&[1, 1]) || z == &v(&[-1, -1]));
        assert_eq!(d.all_roots().len(), 2);
        assert_eq!(d.cartan(), &[vec![2]]);
    }

    #[test]
    fn a2_weights() {
        let d = adapt_simple_system(
            BilinearForm::standard(3),
            Lattice::standard(3),
            &[v(&[-1, 1, 0]), v(&[0, -1, 1])],
        )
        .unwrap();
        // Frozen from solving 2<λi,αj>/<αj,αj> = δij inside span(α) by hand.
        assert_eq!(
            d.fundamental_weights()[0],
            RationalVector::new(vec![ratio(-2, 3), ratio(1, 3), ratio(1, 3)])
        );
        assert_eq!(
            d.fundamental_weights()[1],
            RationalVector::new(vec![ratio(-1, 3), ratio(-1, 3), ratio(2, 3)])
        );
        assert_eq!(d.all_roots().len(), 6);
    }

    #[test]
    fn decompose_examples() {
        let d = a1();
        let wp = d.decompose(&v(&[1, 3])).unwrap();
        assert_eq!(wp.z_part, v(&[2, 2]));
        assert_eq!(wp.lambda, vec![2]);
        assert_eq!(wp.reconstruct(&d), v(&[1, 3]));
        let zero = d.decompose(&v(&[0, 0])).unwrap();
        assert_eq!(zero, WeightPoint::zero(2, 1));
        assert!(d.decompose(&RationalVector::new(vec![ratio(1, 3), rat(0)])).is_none());
    }

    #[test]
    fn dominance_examples() {
        let d = a1();
        // (1,3) ≥ (2,2) since the difference is α.
        assert!(d.dominance_leq(&v(&[2, 2]), &v(&[1, 3])));
        assert!(d.dominance_leq(&v(&[1, 3]), &v(&[1, 3])));
        // (1,3) − (0,4) = −α.
        assert!(!d.dominance_leq(&v(&[0, 4]), &v(&[1, 3])));
    }

    #[test]
    fn fundamental_domain_examples() {
        let d = a1();
        assert!(d.in_fundamental_domain(&v(&[1, 3])));
        assert!(!d.in_fundamental_domain(&v(&[3, 1])));
        assert!(d.in_fundamental_domain(&v(&[0, 0])));
        match d.require_dominant(&v(&[3, 1])) {
            Err(RootError::NotDominant { index: 0, pairing, .. }) => assert_eq!(pairing, rat(-2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn height_examples() {
        let d = a1();
        assert_eq!(d.height(&v(&[-1, 1])), rat(1));
        assert_eq!(d.height(&v(&[0, 0])), rat(0));
        assert_eq!(d.height(&v(&[1, 3])), rat(1));
    }

    #[test]
    fn lattice_not_in_weights_is_rejected() {
        // Root (2,0) on the lattice generated by (1,0),(0,1) but with the root
        // forced long via a lattice where the primitive vector is (2,0):
        // basis (2,0),(1,1) has M ∩ ℝe₁ = ℤ(2,0); (1,1) pairs to 2·2/4 = 1, fine.
        let lat = Lattice::new(vec![v(&[2, 0]), v(&[1, 1])]).unwrap();
        assert!(adapt_simple_system(BilinearForm::standard(2), lat, &[v(&[1, 0])]).is_ok());
        // With basis (4,0),(1,1) the primitive root is (4,0); (1,1) pairs to 2·4/16 = 1/2.
        let lat = Lattice::new(vec![v(&[4, 0]), v(&[1, 1])]).unwrap();
        let err = adapt_simple_system(BilinearForm::standard(2), lat, &[v(&[1, 0])]).unwrap_err();
        assert!(matches!(err, RootError::LatticeNotInWeights { .. }));
    }

    #[test]
    fn dependent_roots_rejected() {
        let err = adapt_simple_system(
            BilinearForm::standard(2),
            Lattice::standard(2),
            &[v(&[-1, 1]), v(&[1, -1])],
        )
        .unwrap_err();
        assert_eq!(err, RootError::DependentRoots);
    }

    #[test]
    fn trivial_datum() {
        let d = RootDatum::trivial(2);
        assert_eq!(d.rank(), 0);
        assert!(d.in_fundamental_domain(&v(&[-5, 3])));
        assert_eq!(d.z_basis().len(), 2);
        assert!(d.dominance_leq(&v(&[1, 1]), &v(&[1, 1])));
        assert!(!d.dominance_leq(&v(&[1, 1]), &v(&[1, 2])));
    }

    #[test]
    fn doc_round_trip() {
        let d = RootDatum::named("B3".parse().unwrap()).unwrap();
        let json = serde_json::to_string(&d.to_doc()).unwrap();
        let doc: RootDatumDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(RootDatum::from_doc(&doc).unwrap(), d);
    }

    #[test]
    fn graded_lift_keeps_weights() {
        let d = a1().graded_lift().unwrap();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.fundamental_weights()[0], RationalVector::new(vec![rat(0), ratio(-1, 2), ratio(1, 2)]));
        assert_eq!(d.z_basis().len(), 2);
    }
}
