use std::fmt;
use std::str::FromStr;

use super::{Lattice, RootError};
use crate::exactnum::{BilinearForm, RationalVector};

/// Named crystallographic types with fixed lattice realizations.
///
/// * `A_n`: `ℤⁿ⁺¹`, αᵢ = e_{i+1} − e_i, so `D` is the cone of ascending coordinates.
/// * `B_n`: `ℤⁿ`, αᵢ = eᵢ − e_{i+1}, αₙ = eₙ.
/// * `C_n`: lattice `{x ∈ ℤⁿ : Σx even}`, αᵢ = eᵢ − e_{i+1}, αₙ = 2eₙ.
/// * `D_n`: `ℤⁿ`, αᵢ = eᵢ − e_{i+1}, αₙ = e_{n−1} + eₙ.
/// * `G₂`: `ℝ³`, α₁ = e₁ − e₂, α₂ = −2e₁ + e₂ + e₃, lattice = root lattice ⊕ ℤ(1,1,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match *self {
            Self::A(n) | Self::B(n) | Self::C(n) | Self::D(n) => n,
            Self::G2 => 2,
        }
    }

    pub(super) fn realization(&self) -> Result<(BilinearForm, Lattice, Vec<RationalVector>), RootError> {
        let e = |dim: usize, i: usize| RationalVector::unit(dim, i);
        let chain = |dim: usize, len: usize| -> Vec<RationalVector> { (0..len).map(|i| &e(dim, i) - &e(dim, i + 1)).collect() };
        match *self {
            Self::A(n) if n >= 1 => {
                let dim = n + 1;
                let roots = (0..n).map(|i| &e(dim, i + 1) - &e(dim, i)).collect();
                Ok((BilinearForm::standard(dim), Lattice::standard(dim), roots))
            }
            Self::B(n) if n >= 1 => {
                let mut roots = chain(n, n - 1);
                roots.push(e(n, n - 1));
                Ok((BilinearForm::standard(n), Lattice::standard(n), roots))
            }
            Self::C(n) if n >= 1 => {
                let mut roots = chain(n, n - 1);
                roots.push(e(n, n - 1).scale(&crate::exactnum::rat(2)));
                let lattice = Lattice::new(roots.clone())?;
                Ok((BilinearForm::standard(n), lattice, roots))
            }
            Self::D(n) if n >= 2 => {
                let mut roots = chain(n, n - 1);
                roots.push(&e(n, n - 2) + &e(n, n - 1));
                Ok((BilinearForm::standard(n), Lattice::standard(n), roots))
            }
            Self::G2 => {
                let roots = vec![RationalVector::from_ints(&[1, -1, 0]), RationalVector::from_ints(&[-2, 1, 1])];
                let mut basis = roots.clone();
                basis.push(RationalVector::from_ints(&[1, 1, 1]));
                Ok((BilinearForm::standard(3), Lattice::new(basis)?, roots))
            }
            _ => Err(RootError::InvalidType(self.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(n) => write!(f, "A{n}"),
            Self::B(n) => write!(f, "B{n}"),
            Self::C(n) => write!(f, "C{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        let t = s.trim();
        let bad = || RootError::InvalidType(s.to_string());
        let (letter, digits) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = digits.parse().map_err(|_| bad())?;
        let ty = match letter.to_ascii_uppercase().as_str() {
            "A" => Self::A(n),
            "B" => Self::B(n),
            "C" => Self::C(n),
            "D" => Self::D(n),
            "G" if n == 2 => Self::G2,
            _ => return Err(bad()),
        };
        if n == 0 {
            return Err(bad());
        }
        Ok(ty)
    }
}
