//! The character algebra `ℤ[Λ]`, its invariant subring in the orbit-sum
//! basis, the map Ψ and its triangular inverse.
//!
//! Weight points are kept as `z + Σ bᵢλᵢ` with integer `bᵢ`, so products of
//! characters reduce to adding λ-coordinates and the `Z` parts ride along as
//! exact labels. The Weyl group acts on λ-coordinates through the Cartan
//! matrix: `s_i(b) = b − bᵢ · C[i]`.

mod display;
mod doc;

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{Rational, RationalVector};
use crate::rootsys::{RootDatum, WeightPoint};
use crate::weylgroup::Group;

pub use doc::{CharacterDoc, DocError, TermDoc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("weight {0} is not dominant")]
    NotDominant(WeightPoint),
    #[error("character is not W-invariant: coefficient mismatch at {0}")]
    NotInvariant(WeightPoint),
    #[error("point {0} is not in the weight group")]
    NotAWeight(RationalVector),
    #[error("weight {point} has shape ({dim}, {rank}) but the datum expects ({expected_dim}, {expected_rank})")]
    Shape { point: WeightPoint, dim: usize, rank: usize, expected_dim: usize, expected_rank: usize },
    #[error("elimination stalled at {0}: leading coefficient of Psi is not 1")]
    Stalled(WeightPoint),
}

/// A finite integer combination of symbols `χ^p`, `p ∈ Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<WeightPoint, BigInt>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(p: WeightPoint) -> Self {
        Self { terms: BTreeMap::from([(p, BigInt::one())]) }
    }

    pub fn from_terms<I: IntoIterator<Item = (WeightPoint, BigInt)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (p, a) in terms {
            c.add_term(p, a);
        }
        c
    }

    pub fn add_term(&mut self, p: WeightPoint, a: BigInt) {
        add_into(&mut self.terms, p, a);
    }

    pub fn terms(&self) -> &BTreeMap<WeightPoint, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &WeightPoint) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &WeightPoint> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, a) in &other.terms {
            out.add_term(p.clone(), a.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect() }
    }

    /// Product in the group algebra: `χ^s χ^t = χ^{s+t}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.add(q), a * b);
            }
        }
        out
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, BigInt>, k: K, a: BigInt) {
    if a.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(a);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += a;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of `ℤ[Λ]^W` written as `Σ a_u χ̲^u` over dominant `u`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvariantCharacter {
    terms: BTreeMap<WeightPoint, BigInt>,
}

impl InvariantCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (WeightPoint, BigInt)>>(terms: I) -> Result<Self, CharError> {
        let mut g = Self::zero();
        for (p, a) in terms {
            if !p.is_dominant() {
                return Err(CharError::NotDominant(p));
            }
            add_into(&mut g.terms, p, a);
        }
        Ok(g)
    }

    pub fn terms(&self) -> &BTreeMap<WeightPoint, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, u: &WeightPoint) -> BigInt {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `supp(f) = {u : a_u ≠ 0}`
    pub fn support(&self) -> impl Iterator<Item = &WeightPoint> {
        self.terms.keys()
    }
}

/// Outcome of the support lemma checks for one dominant weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportCheck {
    /// `χ̲^u` has coefficient 1 in `Ψ(χ^u)`.
    pub max_coeff_one: bool,
    /// Every support point `v` satisfies `v ≤ u` (LP route).
    pub all_below: bool,
    /// Every `u − v` has non-negative integer Δ-coordinates (linear solve route).
    pub delta_integrality: bool,
    /// Support of `Ψ(χ^u)` in the orbit basis.
    pub orbit_support: Vec<WeightPoint>,
    pub counterexample: Option<WeightPoint>,
}

impl SupportCheck {
    pub fn passed(&self) -> bool {
        self.max_coeff_one && self.all_below && self.delta_integrality
    }
}

type LambdaPoly = HashMap<Vec<i64>, BigInt>;

/// Ψ and friends for one root datum and its Weyl group.
#[derive(Debug, Clone)]
pub struct CharacterRing<'a> {
    datum: &'a RootDatum,
    group: &'a Group,
    /// `W λᵢ` in λ-coordinates.
    fundamental_orbits: Vec<Vec<Vec<i64>>>,
    heights: Vec<Rational>,
}

impl<'a> CharacterRing<'a> {
    pub fn new(datum: &'a RootDatum, group: &'a Group) -> Self {
        let fundamental_orbits = datum
            .fundamental_weights()
            .iter()
            .map(|l| {
                group
                    .orbit(l)
                    .iter()
                    .map(|v| {
                        let wp = datum.decompose(v).expect("W preserves the weight group");
                        debug_assert!(wp.z_part.is_zero());
                        wp.lambda
                    })
                    .collect()
            })
            .collect();
        Self { datum, group, fundamental_orbits, heights: datum.fundamental_heights() }
    }

    pub fn datum(&self) -> &RootDatum {
        self.datum
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    fn check_shape(&self, p: &WeightPoint) -> Result<(), CharError> {
        let (dim, rank) = (self.datum.dim(), self.datum.rank());
        if p.z_part.dim() != dim || p.lambda.len() != rank {
            return Err(CharError::Shape {
                point: p.clone(),
                dim: p.z_part.dim(),
                rank: p.lambda.len(),
                expected_dim: dim,
                expected_rank: rank,
            });
        }
        Ok(())
    }

    fn require_dominant(&self, p: &WeightPoint) -> Result<(), CharError> {
        self.check_shape(p)?;
        if p.is_dominant() {
            Ok(())
        } else {
            Err(CharError::NotDominant(p.clone()))
        }
    }

    /// Decomposes an ambient point, failing when it is not in `Λ`.
    pub fn weight(&self, v: &RationalVector) -> Result<WeightPoint, CharError> {
        self.datum.decompose(v).ok_or_else(|| CharError::NotAWeight(v.clone()))
    }

    /// `⟨p, ρ⟩ = Σ bᵢ ⟨λᵢ, ρ⟩` (the `Z` part is orthogonal to ρ).
    pub fn height(&self, p: &WeightPoint) -> Rational {
        p.lambda
            .iter()
            .zip(&self.heights)
            .fold(Rational::zero(), |acc, (&b, h)| acc + Rational::from_integer(b.into()) * h)
    }

    fn reflect_lambda(&self, b: &mut [i64], i: usize) {
        let bi = b[i];
        for (x, c) in b.iter_mut().zip(&self.datum.cartan()[i]) {
            *x -= bi * c;
        }
    }

    /// Dominant representative of `W b` in λ-coordinates.
    pub fn dominant_lambda(&self, b: &[i64]) -> Vec<i64> {
        let mut b = b.to_vec();
        while let Some(i) = b.iter().position(|&x| x < 0) {
            self.reflect_lambda(&mut b, i);
        }
        b
    }

    /// `W b` in λ-coordinates.
    pub fn orbit_lambda(&self, b: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::from([b.to_vec()]);
        let mut frontier = vec![b.to_vec()];
        while let Some(x) = frontier.pop() {
            for i in 0..self.datum.rank() {
                if x[i] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect_lambda(&mut y, i);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// `χ̲^u = Σ_{v ∈ Wu} χ^v`
    pub fn orbit_sum(&self, u: &WeightPoint) -> Result<Character, CharError> {
        self.require_dominant(u)?;
        Ok(Character {
            terms: self
                .orbit_lambda(&u.lambda)
                .into_iter()
                .map(|b| (WeightPoint::new(u.z_part.clone(), b), BigInt::one()))
                .collect(),
        })
    }

    /// Rewrites an invariant character in the orbit-sum basis.
    pub fn to_orbit_basis(&self, f: &Character) -> Result<InvariantCharacter, CharError> {
        let mut reps: BTreeMap<WeightPoint, BigInt> = BTreeMap::new();
        for (p, a) in &f.terms {
            self.check_shape(p)?;
            let rep = WeightPoint::new(p.z_part.clone(), self.dominant_lambda(&p.lambda));
            match reps.get(&rep) {
                Some(b) if b != a => return Err(CharError::NotInvariant(p.clone())),
                Some(_) => {}
                None => {
                    reps.insert(rep, a.clone());
                }
            }
        }
        let mut covered = 0;
        for (u, a) in &reps {
            for b in self.orbit_lambda(&u.lambda) {
                let p = WeightPoint::new(u.z_part.clone(), b);
                if f.terms.get(&p) != Some(a) {
                    return Err(CharError::NotInvariant(p));
                }
                covered += 1;
            }
        }
        debug_assert_eq!(covered, f.len());
        Ok(InvariantCharacter { terms: reps })
    }

    /// Expands `Σ a_u χ̲^u` into monomials.
    pub fn expand(&self, g: &InvariantCharacter) -> Result<Character, CharError> {
        let mut out = Character::zero();
        for (u, a) in &g.terms {
            for (p, _) in self.orbit_sum(u)?.terms {
                out.add_term(p, a.clone());
            }
        }
        Ok(out)
    }

    fn psi_lambda(&self, b: &[i64]) -> LambdaPoly {
        let rank = self.datum.rank();
        let mut acc: LambdaPoly = HashMap::from([(vec![0; rank], BigInt::one())]);
        for (i, &bi) in b.iter().enumerate() {
            for _ in 0..bi {
                let mut next: LambdaPoly = HashMap::with_capacity(acc.len() * 2);
                for (p, a) in &acc {
                    for q in &self.fundamental_orbits[i] {
                        let s: Vec<i64> = p.iter().zip(q).map(|(x, y)| x + y).collect();
                        *next.entry(s).or_default() += a;
                    }
                }
                next.retain(|_, a| !a.is_zero());
                acc = next;
            }
        }
        acc
    }

    /// `Ψ(χ^u) = χ^z · Πᵢ (Σ_{v ∈ Wλᵢ} χ^v)^{bᵢ}`
    pub fn psi(&self, u: &WeightPoint) -> Result<Character, CharError> {
        self.require_dominant(u)?;
        Ok(Character {
            terms: self
                .psi_lambda(&u.lambda)
                .into_iter()
                .map(|(b, a)| (WeightPoint::new(u.z_part.clone(), b), a))
                .collect(),
        })
    }

    /// `Ψ(χ^u)` in the orbit basis: its dominant terms.
    pub fn psi_orbit(&self, u: &WeightPoint) -> Result<InvariantCharacter, CharError> {
        self.require_dominant(u)?;
        Ok(InvariantCharacter {
            terms: self
                .psi_lambda(&u.lambda)
                .into_iter()
                .filter(|(b, _)| b.iter().all(|&x| x >= 0))
                .map(|(b, a)| (WeightPoint::new(u.z_part.clone(), b), a))
                .collect(),
        })
    }

    /// Linear extension of Ψ to `ℤ[D ∩ Λ]`.
    pub fn psi_linear(&self, f: &Character) -> Result<Character, CharError> {
        let mut out = Character::zero();
        for (u, a) in &f.terms {
            for (p, c) in self.psi(u)?.terms {
                out.add_term(p, c * a);
            }
        }
        Ok(out)
    }

    /// The unique `f` supported on `D ∩ Λ` with `Ψ(f) = g`.
    ///
    /// Peels off the highest term (by height, then by `(z, λ)` order) and
    /// subtracts its Ψ-image until nothing is left.
    pub fn psi_inverse(&self, g: &InvariantCharacter) -> Result<Character, CharError> {
        for u in g.terms.keys() {
            self.require_dominant(u)?;
        }
        let mut rest = g.terms.clone();
        let mut out = Character::zero();
        while let Some(u) = rest.keys().max_by(|a, b| (self.height(a), *a).cmp(&(self.height(b), *b))).cloned() {
            let a = rest[&u].clone();
            for (v, c) in self.psi_orbit(&u)?.terms {
                add_into(&mut rest, v, -(&a * c));
            }
            if rest.contains_key(&u) {
                return Err(CharError::Stalled(u));
            }
            out.add_term(u, a);
        }
        Ok(out)
    }

    /// Checks that `χ̲^u` has coefficient 1 in `Ψ(χ^u)` and that every
    /// orbit-basis support point `v` lies below `u` with `u − v ∈ ℤ≥0⟨Δ⟩`.
    pub fn support_check(&self, u: &WeightPoint) -> Result<SupportCheck, CharError> {
        let psi = self.psi(u)?;
        let orbit = self.to_orbit_basis(&psi)?;
        let max_coeff_one = orbit.coeff(u).is_one();
        let top = u.reconstruct(self.datum);
        let mut all_below = true;
        let mut delta_integrality = true;
        let mut counterexample = (!max_coeff_one).then(|| u.clone());
        for v in orbit.support() {
            let low = v.reconstruct(self.datum);
            let below = self.datum.dominance_leq(&low, &top);
            let integral = self.datum.in_positive_root_cone_integral(&(&top - &low));
            if (!below || !integral) && counterexample.is_none() {
                counterexample = Some(v.clone());
            }
            all_below &= below;
            delta_integrality &= integral;
        }
        Ok(SupportCheck {
            max_coeff_one,
            all_below,
            delta_integrality,
            orbit_support: orbit.support().cloned().collect(),
            counterexample,
        })
    }

    /// Orbit-basis coefficient matrix of `{Ψ(χ^u)}_{u ∈ U}`: one column per `u`,
    /// rows indexed by the union of supports (sorted by descending height).
    pub fn psi_matrix(&self, weights: &[WeightPoint]) -> Result<(Vec<WeightPoint>, Vec<Vec<BigInt>>), CharError> {
        let images: Vec<InvariantCharacter> = weights.iter().map(|u| self.psi_orbit(u)).collect::<Result<_, _>>()?;
        let mut rows: Vec<WeightPoint> = images
            .iter()
            .flat_map(|g| g.support().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        rows.sort_by(|a, b| (self.height(b), b).cmp(&(self.height(a), a)));
        let matrix = rows.iter().map(|r| images.iter().map(|g| g.coeff(r)).collect()).collect();
        Ok((rows, matrix))
    }

    /// All dominant `Σ bᵢλᵢ` (zero `Z` part) with height at most `bound`.
    pub fn dominant_weights_up_to(&self, bound: &Rational) -> Vec<WeightPoint> {
        let rank = self.datum.rank();
        let mut out = Vec::new();
        let mut current = vec![0i64; rank];
        self.enumerate_dominant(0, Rational::zero(), bound, &mut current, &mut out);
        out.sort_by(|a, b| (self.height(a), a).cmp(&(self.height(b), b)));
        out
    }

    fn enumerate_dominant(
        &self,
        i: usize,
        used: Rational,
        bound: &Rational,
        current: &mut Vec<i64>,
        out: &mut Vec<WeightPoint>,
    ) {
        if i == current.len() {
            out.push(WeightPoint::new(RationalVector::zeros(self.datum.dim()), current.clone()));
            return;
        }
        let h = &self.heights[i];
        assert!(h.is_positive(), "fundamental weights have positive height");
        let mut b = 0i64;
        let mut total = used.clone();
        while &total <= bound {
            current[i] = b;
            self.enumerate_dominant(i + 1, total.clone(), bound, current, out);
            b += 1;
            total += h;
        }
        current[i] = 0;
    }
}

#[cfg(test)]
mod tests;
