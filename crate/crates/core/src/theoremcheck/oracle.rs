use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::VerifyError;
use crate::exactnum::RationalVector;
use crate::weylgroup::Group;

/// A character keyed by ambient coordinates.
pub type AmbientCharacter = BTreeMap<RationalVector, BigInt>;

/// Basis of the invariant span of `{χ^p : p ∈ points}` for a `W`-stable set.
///
/// Each `χ^p` is summed over all group elements and divided by the gcd of
/// its coefficients; distinct results are returned in sorted order. Nothing
/// here goes through weight coordinates or the fundamental domain.
pub fn brute_force_invariants(group: &Group, points: &[RationalVector]) -> Result<Vec<AmbientCharacter>, VerifyError> {
    let set: BTreeSet<&RationalVector> = points.iter().collect();
    let mut basis: BTreeSet<AmbientCharacter> = BTreeSet::new();
    for p in points {
        let mut sym = AmbientCharacter::new();
        for w in group.elements() {
            let image = w.apply(p);
            if !set.contains(&image) {
                return Err(VerifyError::Precondition(format!("point set is not W-stable: {p} maps to {image}")));
            }
            *sym.entry(image).or_insert_with(BigInt::zero) += BigInt::one();
        }
        let g = sym.values().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        for a in sym.values_mut() {
            *a = &*a / &g;
        }
        basis.insert(sym);
    }
    Ok(basis.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, RootDatum};

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_ints(xs)
    }

    #[test]
    fn rank_one_examples() {
        let d = RootDatum::named(CartanType::A(1)).unwrap();
        let g = Group::generate(&d, 10).unwrap();
        let basis = brute_force_invariants(&g, &[v(&[1, 3]), v(&[3, 1]), v(&[2, 2])]).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|b| b.values().all(|a| a.is_one())));
        assert_eq!(brute_force_invariants(&g, &[v(&[2, 2])]).unwrap().len(), 1);
        let square = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(brute_force_invariants(&g, &square).unwrap().len(), 3);
        assert!(brute_force_invariants(&g, &[v(&[1, 3])]).is_err());
    }
}
