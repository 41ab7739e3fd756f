use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::RootError;
use crate::exactnum::{inverse, Rational, RationalMatrix, RationalVector};

/// Full-rank lattice `M ⊂ V` given by a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<RationalVector>,
    /// Inverse of the matrix with the basis as columns.
    to_coords: RationalMatrix,
}

impl Lattice {
    pub fn new(basis: Vec<RationalVector>) -> Result<Self, RootError> {
        let dim = basis.len();
        if basis.iter().any(|b| b.dim() != dim) {
            return Err(RootError::DegenerateLattice);
        }
        let m = RationalMatrix::from_columns(&basis, dim);
        let to_coords = inverse(&m).ok_or(RootError::DegenerateLattice)?;
        Ok(Self { basis, to_coords })
    }

    /// `ℤⁿ` with the standard basis.
    pub fn standard(dim: usize) -> Self {
        Self::new((0..dim).map(|i| RationalVector::unit(dim, i)).collect()).expect("standard basis")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RationalVector] {
        &self.basis
    }

    /// Coordinates of `v` in the lattice basis.
    pub fn coordinates(&self, v: &RationalVector) -> RationalVector {
        self.to_coords.mul_vec(v)
    }

    pub fn contains(&self, v: &RationalVector) -> bool {
        self.coordinates(v).is_integral()
    }

    /// `Σ cᵢ bᵢ`
    pub fn from_coordinates(&self, c: &[BigInt]) -> RationalVector {
        self.basis.iter().zip(c).fold(RationalVector::zeros(self.dim()), |acc, (b, ci)| {
            if ci.is_zero() {
                acc
            } else {
                acc.add_scaled(&Rational::from_integer(ci.clone()), b)
            }
        })
    }

    /// The generator of `M ∩ ℝ⟨a⟩` on the same side as `a`.
    pub fn primitive_on_ray(&self, a: &RationalVector) -> RationalVector {
        let c = self.coordinates(a);
        let denom = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = c.iter().map(|q| (q * Rational::from_integer(denom.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        assert!(!g.is_zero(), "primitive vector of the zero ray");
        let prim: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
        self.from_coordinates(&prim)
    }

    /// Whether the linear map `x ↦ m x` sends every basis vector into the lattice.
    pub fn is_preserved_by(&self, m: &RationalMatrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }
}
