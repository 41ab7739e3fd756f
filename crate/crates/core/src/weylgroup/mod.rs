//! The finite reflection group generated by the simple reflections of a root
//! datum, its orbits, and dominant representatives.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::exactnum::{BilinearForm, Rational, RationalMatrix, RationalVector};
use crate::rootsys::{Lattice, RootDatum};

pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("max_order must be at least 1")]
    InvalidMaxOrder,
    #[error("group order exceeds the cap of {0}; the group is infinite or too large")]
    OrderCapExceeded(usize),
    #[error("simple reflection {0} does not preserve the lattice")]
    LatticeNotPreserved(usize),
}

/// A group element acting on ambient coordinates, `v ↦ matrix · v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    matrix: RationalMatrix,
    /// A word in the simple reflections (rightmost applied first); diagnostic only.
    word: Vec<usize>,
}

impl GroupElement {
    pub fn identity(dim: usize) -> Self {
        Self { matrix: RationalMatrix::identity(dim), word: Vec::new() }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self { matrix: self.matrix.mul(&other.matrix), word }
    }

    /// `⟨g u, g v⟩ = ⟨u, v⟩` for all `u, v`.
    pub fn is_orthogonal(&self, form: &BilinearForm) -> bool {
        self.matrix.transpose().mul(form.gram()).mul(&self.matrix) == *form.gram()
    }

    pub fn preserves(&self, target: &Target<'_>) -> bool {
        target.is_preserved_by(std::slice::from_ref(self))
    }
}

/// Objects whose stability under the group can be tested.
pub enum Target<'a> {
    /// Basis vectors must map into the lattice.
    Lattice(&'a Lattice),
    /// The vertex set must be permuted.
    VertexSet(&'a [RationalVector]),
    /// Each point must map to a point accepted by `member`.
    Points { points: &'a [RationalVector], member: &'a dyn Fn(&RationalVector) -> bool },
}

impl Target<'_> {
    fn is_preserved_by(&self, elements: &[GroupElement]) -> bool {
        match self {
            Target::Lattice(lattice) => elements.iter().all(|g| lattice.is_preserved_by(g.matrix())),
            Target::VertexSet(vertices) => {
                let set: BTreeSet<&RationalVector> = vertices.iter().collect();
                elements.iter().all(|g| {
                    let image: BTreeSet<RationalVector> = vertices.iter().map(|v| g.apply(v)).collect();
                    image.len() == set.len() && image.iter().all(|w| set.contains(w))
                })
            }
            Target::Points { points, member } => {
                elements.iter().all(|g| points.iter().all(|p| member(&g.apply(p))))
            }
        }
    }
}

/// A finite group of lattice automorphisms generated by simple reflections.
#[derive(Debug, Clone)]
pub struct Group {
    dim: usize,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<RationalMatrix, usize>,
}

/// Matrix of `s_α` in ambient coordinates: `I − (2/⟨α,α⟩) α (Gα)ᵀ`.
pub fn reflection_matrix(form: &BilinearForm, alpha: &RationalVector) -> RationalMatrix {
    let dim = form.dim();
    let g_alpha = form.gram().mul_vec(alpha);
    let c = Rational::from_integer(2.into()) / form.norm_sq(alpha);
    let mut m = RationalMatrix::identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] -= &c * &alpha[i] * &g_alpha[j];
        }
    }
    m
}

impl Group {
    /// Breadth-first closure of the simple reflections of `datum`.
    pub fn generate(datum: &RootDatum, max_order: usize) -> Result<Self, GroupError> {
        if max_order == 0 {
            return Err(GroupError::InvalidMaxOrder);
        }
        let dim = datum.dim();
        let generators: Vec<GroupElement> = datum
            .simple_roots()
            .iter()
            .enumerate()
            .map(|(i, a)| GroupElement { matrix: reflection_matrix(datum.form(), a), word: vec![i] })
            .collect();
        for (i, g) in generators.iter().enumerate() {
            if !datum.lattice().is_preserved_by(g.matrix()) {
                return Err(GroupError::LatticeNotPreserved(i));
            }
        }

        let identity = GroupElement::identity(dim);
        let mut index = HashMap::from([(identity.matrix.clone(), 0)]);
        let mut elements = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[k]);
                if index.contains_key(&next.matrix) {
                    continue;
                }
                if elements.len() == max_order {
                    return Err(GroupError::OrderCapExceeded(max_order));
                }
                index.insert(next.matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        Ok(Self { dim, generators, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn find(&self, matrix: &RationalMatrix) -> Option<&GroupElement> {
        self.index.get(matrix).map(|&k| &self.elements[k])
    }

    /// The orbit `W v`, sorted.
    pub fn orbit(&self, v: &RationalVector) -> Vec<RationalVector> {
        let mut seen = BTreeSet::from([v.clone()]);
        let mut frontier = vec![v.clone()];
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                let y = g.apply(&x);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The unique point of `W v` in `D`, with an element carrying `v` there.
    ///
    /// Applies `s_αᵢ` for the first `i` with `⟨v,αᵢ⟩ < 0` until none is left.
    pub fn dominant_representative(&self, datum: &RootDatum, v: &RationalVector) -> (RationalVector, GroupElement) {
        let mut rep = v.clone();
        let mut witness = GroupElement::identity(self.dim);
        while let Some((i, _)) = datum.first_wall_violation(&rep) {
            let s = &self.generators[i];
            rep = s.apply(&rep);
            witness = s.compose(&witness);
        }
        let canonical = self.find(&witness.matrix).cloned().unwrap_or(witness);
        (rep, canonical)
    }

    /// `⟨u, v⟩' = Σ_w ⟨w u, w v⟩`.
    pub fn average_form(&self, form: &BilinearForm) -> BilinearForm {
        let gram = self
            .elements
            .iter()
            .map(|g| g.matrix.transpose().mul(form.gram()).mul(&g.matrix))
            .reduce(|a, b| a.add(&b))
            .expect("group contains the identity");
        BilinearForm::new(gram).expect("average of a positive definite form is positive definite")
    }

    /// Stability of `target` under every generator (hence under the group).
    pub fn preserves(&self, target: &Target<'_>) -> bool {
        target.is_preserved_by(&self.generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use crate::rootsys::CartanType;

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_ints(xs)
    }

    fn named(t: CartanType) -> (RootDatum, Group) {
        let d = RootDatum::named(t).unwrap();
        let g = Group::generate(&d, DEFAULT_MAX_ORDER).unwrap();
        (d, g)
    }

    #[test]
    fn group_orders() {
        assert_eq!(named(CartanType::A(1)).1.order(), 2);
        assert_eq!(named(CartanType::A(2)).1.order(), 6);
        assert_eq!(named(CartanType::B(2)).1.order(), 8);
        assert_eq!(named(CartanType::B(3)).1.order(), 48);
        assert_eq!(named(CartanType::C(3)).1.order(), 48);
        assert_eq!(named(CartanType::A(3)).1.order(), 24);
        assert_eq!(named(CartanType::D(4)).1.order(), 192);
        assert_eq!(named(CartanType::G2).1.order(), 12);
        let trivial = Group::generate(&RootDatum::trivial(3), 1).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn b2_matches_signed_permutations() {
        // Independent count: signed permutation matrices of size 2 are 2²·2! = 8,
        // and every group element must be one of them.
        let (_, g) = named(CartanType::B(2));
        for e in g.elements() {
            let m = e.matrix();
            for i in 0..2 {
                let nz: Vec<_> = (0..2).filter(|&j| m[(i, j)] != rat(0)).collect();
                assert_eq!(nz.len(), 1);
                assert!(m[(i, nz[0])] == rat(1) || m[(i, nz[0])] == rat(-1));
            }
        }
    }

    #[test]
    fn order_cap() {
        let d = RootDatum::named(CartanType::B(3)).unwrap();
        assert_eq!(Group::generate(&d, 10).unwrap_err(), GroupError::OrderCapExceeded(10));
        assert_eq!(Group::generate(&d, 0).unwrap_err(), GroupError::InvalidMaxOrder);
    }

    #[test]
    fn orbit_examples() {
        let (d, g) = named(CartanType::A(1));
        let lambda = d.fundamental_weights()[0].clone();
        assert_eq!(
            g.orbit(&lambda),
            vec![
                RationalVector::new(vec![ratio(-1, 2), ratio(1, 2)]),
                RationalVector::new(vec![ratio(1, 2), ratio(-1, 2)])
            ]
        );
        assert_eq!(g.orbit(&v(&[0, 0])), vec![v(&[0, 0])]);
        let (d2, g2) = named(CartanType::A(2));
        assert_eq!(g2.orbit(&d2.fundamental_weights()[0]).len(), 3);
    }

    #[test]
    fn dominant_representative_examples() {
        let (d, g) = named(CartanType::A(1));
        let (rep, w) = g.dominant_representative(&d, &v(&[3, 1]));
        assert_eq!(rep, v(&[1, 3]));
        assert_eq!(w.apply(&v(&[3, 1])), rep);
        let (rep, w) = g.dominant_representative(&d, &v(&[1, 3]));
        assert_eq!(rep, v(&[1, 3]));
        assert_eq!(w.matrix(), &RationalMatrix::identity(2));
        let (d2, g2) = named(CartanType::A(2));
        assert_eq!(g2.dominant_representative(&d2, &v(&[1, 0, 0])).0, v(&[0, 0, 1]));
    }

    #[test]
    fn average_form_examples() {
        let (_, g) = named(CartanType::A(1));
        let std = BilinearForm::standard(2);
        assert_eq!(g.average_form(&std).gram(), &std.gram().scale(&rat(2)));
        let skew = BilinearForm::new(RationalMatrix::from_int_rows(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(g.average_form(&skew).gram(), &RationalMatrix::from_int_rows(&[&[3, 0], &[0, 3]]));
        let trivial = Group::generate(&RootDatum::trivial(2), 1).unwrap();
        assert_eq!(trivial.average_form(&skew), skew);
    }

    #[test]
    fn preserves_examples() {
        let (d, g) = named(CartanType::A(1));
        assert!(g.preserves(&Target::Lattice(d.lattice())));
        let square = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert!(g.preserves(&Target::VertexSet(&square)));
        let segment = [v(&[0, 0]), v(&[1, 0])];
        assert!(!g.preserves(&Target::VertexSet(&segment)));
        let orthant = |x: &RationalVector| x.iter().all(|c| *c >= rat(0));
        assert!(g.preserves(&Target::Points { points: &[v(&[1, 0]), v(&[0, 1])], member: &orthant }));
        assert!(g.generators()[0].preserves(&Target::VertexSet(&square)));
    }

    #[test]
    fn elements_are_orthogonal_and_integral() {
        for t in [CartanType::A(3), CartanType::B(3), CartanType::C(3), CartanType::G2] {
            let (d, g) = named(t);
            for e in g.elements() {
                assert!(e.is_orthogonal(d.form()));
                assert!(d.lattice().is_preserved_by(e.matrix()));
            }
        }
    }
}
