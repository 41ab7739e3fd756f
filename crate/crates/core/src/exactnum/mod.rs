//! Exact rational arithmetic, dense linear algebra and LP feasibility.
//!
//! Nothing in this crate touches floating point. Rationals are
//! [`num_rational::BigRational`], which is always kept in lowest terms with a
//! positive denominator, so structural equality and hashing agree with
//! numerical equality.

mod linalg;
mod lp;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use linalg::{determinant, integer_kernel_basis, inverse, kernel_basis, rank, solve_linear, LinearSolution};
pub use lp::{lp_feasible, Constraint, LpOutcome, Relation};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix rows")]
    Ragged,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| ExactError::Parse(s.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| ExactError::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(ExactError::Parse(s.to_string()));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(t.parse().map_err(|_| ExactError::Parse(s.to_string()))?),
    };
    Ok(parsed)
}

/// Returns the integer value if `q` has denominator one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Serde adapter for a single rational stored as a `"p/q"` string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(D::Error::custom)
    }
}

/// Vector of exact coordinates in the ambient space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// Euclidean dot product of coordinates (not the bilinear form).
    pub fn dot(&self, other: &Self) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot of vectors with different dimension");
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut coords = self.0.clone();
        coords.extend(other.0.iter().cloned());
        Self(coords)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, ExactError> {
        items.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>, _>>().map(Self)
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(v: Vec<Rational>) -> Self {
        Self(v)
    }
}

impl FromIterator<Rational> for RationalVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RationalVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), rhs.dim(), "adding vectors of different dimension");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), rhs.dim(), "subtracting vectors of different dimension");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        Self::from_strings(&raw).map_err(D::Error::custom)
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds from rows; an empty row list gives a `0 x cols` matrix only
    /// through [`RationalMatrix::zeros`].
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(ExactError::Ragged);
        }
        let nrows = rows.len();
        Ok(Self { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("ragged integer matrix literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[RationalVector], dim: usize) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), dim);
            for i in 0..dim {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> RationalVector {
        RationalVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> RationalVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).into_coords()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v.iter()).fold(Rational::zero(), |acc, (a, b)| {
                    if a.is_zero() {
                        acc
                    } else {
                        acc + a * b
                    }
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).to_strings()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self, ExactError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(parsed)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        Self::from_strings(&raw).map_err(D::Error::custom)
    }
}

/// Symmetric positive definite bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: RationalMatrix,
}

impl BilinearForm {
    pub fn new(gram: RationalMatrix) -> Result<Self, ExactError> {
        if !gram.is_square() {
            return Err(ExactError::NotSquare { rows: gram.nrows(), cols: gram.ncols() });
        }
        if !gram.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        if !is_positive_definite(&gram) {
            return Err(ExactError::NotPositiveDefinite);
        }
        Ok(Self { gram })
    }

    /// The standard dot product on `dim` coordinates.
    pub fn standard(dim: usize) -> Self {
        Self { gram: RationalMatrix::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// `uᵀ · gram · v`.
    pub fn inner(&self, u: &RationalVector, v: &RationalVector) -> Result<Rational, ExactError> {
        for w in [u, v] {
            if w.dim() != self.dim() {
                return Err(ExactError::DimensionMismatch { expected: self.dim(), found: w.dim() });
            }
        }
        Ok(self.pair(u, v))
    }

    /// Same as [`BilinearForm::inner`] for callers that already know the dimensions agree.
    pub(crate) fn pair(&self, u: &RationalVector, v: &RationalVector) -> Rational {
        u.dot(&self.gram.mul_vec(v))
    }

    pub fn norm_sq(&self, v: &RationalVector) -> Rational {
        self.pair(v, v)
    }
}

/// Sylvester's criterion: every leading principal minor is positive.
pub fn is_positive_definite(gram: &RationalMatrix) -> bool {
    if !gram.is_square() || !gram.is_symmetric() {
        return false;
    }
    (1..=gram.nrows()).all(|k| {
        let minor = RationalMatrix::from_rows(
            (0..k).map(|i| (0..k).map(|j| gram[(i, j)].clone()).collect()).collect(),
        )
        .expect("square minor");
        determinant(&minor).is_positive()
    })
}
