use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, RationalMatrix, RationalVector};

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(RationalVector),
    /// Positive-dimensional solution space: `particular + span(kernel)`.
    NonUnique { particular: RationalVector, kernel: Vec<RationalVector> },
    NoSolution,
}

impl LinearSolution {
    /// Any solution, if one exists.
    pub fn solution(&self) -> Option<&RationalVector> {
        match self {
            Self::Unique(x) | Self::NonUnique { particular: x, .. } => Some(x),
            Self::NoSolution => None,
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..m[i].len() {
                    if !m[r][j].is_zero() {
                        let delta = &f * &m[r][j];
                        m[i][j] -= delta;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(m: &[Vec<Rational>], pivots: &[usize], ncols: usize) -> Vec<RationalVector> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = RationalVector::zeros(ncols);
            v[fc] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b` exactly by Gauss-Jordan elimination.
pub fn solve_linear(a: &RationalMatrix, b: &RationalVector) -> Result<LinearSolution, ExactError> {
    if a.nrows() != b.dim() {
        return Err(ExactError::DimensionMismatch { expected: a.nrows(), found: b.dim() });
    }
    let n = a.ncols();
    let mut aug: Vec<Vec<Rational>> = (0..a.nrows())
        .map(|i| {
            let mut row = a.row(i).into_coords();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::NoSolution);
    }
    let mut particular = RationalVector::zeros(n);
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug[row][n].clone();
    }
    if pivots.len() == n {
        Ok(LinearSolution::Unique(particular))
    } else {
        let kernel = kernel_from_rref(&aug, &pivots, n);
        Ok(LinearSolution::NonUnique { particular, kernel })
    }
}

pub fn rank(a: &RationalMatrix) -> usize {
    let mut rows = a.rows_vec();
    rref(&mut rows, a.ncols()).len()
}

/// Basis of the rational null space `{x : A x = 0}`.
pub fn kernel_basis(a: &RationalMatrix) -> Vec<RationalVector> {
    let mut rows = a.rows_vec();
    let pivots = rref(&mut rows, a.ncols());
    kernel_from_rref(&rows, &pivots, a.ncols())
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &RationalMatrix) -> Option<RationalMatrix> {
    assert!(a.is_square(), "inverse of a non-square matrix");
    let n = a.nrows();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).into_coords();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    RationalMatrix::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect()).ok()
}

pub fn determinant(a: &RationalMatrix) -> Rational {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.nrows();
    let mut m = a.rows_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (top, rest) = m.split_at_mut(i);
            for (x, y) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// A ℤ-basis of the integer kernel `{x ∈ ℤⁿ : A x = 0}` of an integer matrix
/// with `ncols` columns.
///
/// Column-style Hermite reduction: unimodular column operations bring `A` to
/// `[H | 0]`; the columns of the accumulated transform under the zero block
/// span the kernel lattice.
pub fn integer_kernel_basis(a: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    assert!(m.iter().all(|r| r.len() == ncols), "ragged integer matrix");
    // u[j] is column j of the transform.
    let mut u: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| (0..ncols).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_axpy = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, q: &BigInt, src: usize| {
        for row in m.iter_mut() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
        let delta: Vec<BigInt> = u[src].iter().map(|x| q * x).collect();
        for (x, d) in u[dst].iter_mut().zip(delta) {
            *x -= d;
        }
    };
    let col_swap = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        u.swap(a, b);
    };

    let mut k = 0;
    for i in 0..m.len() {
        if k == ncols {
            break;
        }
        let Some(p) = (k..ncols).find(|&j| !m[i][j].is_zero()) else {
            continue;
        };
        col_swap(&mut m, &mut u, k, p);
        for j in k + 1..ncols {
            while !m[i][j].is_zero() {
                let q = m[i][k].div_floor(&m[i][j]);
                col_axpy(&mut m, &mut u, k, &q, j);
                col_swap(&mut m, &mut u, k, j);
            }
        }
        if m[i][k].is_negative() {
            for row in m.iter_mut() {
                row[k] = -row[k].clone();
            }
            for x in u[k].iter_mut() {
                *x = -x.clone();
            }
        }
        k += 1;
    }
    u.split_off(k)
}
