//! Exact LP feasibility: phase-I simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, RationalVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a·x ≥ b`
    Ge,
    /// `a·x = b`
    Eq,
}

/// One linear constraint `coeffs · x (relation) rhs` over free variables `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: RationalVector,
    pub rhs: Rational,
    pub relation: Relation,
}

impl Constraint {
    pub fn ge(coeffs: RationalVector, rhs: Rational) -> Self {
        Self { coeffs, rhs, relation: Relation::Ge }
    }

    pub fn eq(coeffs: RationalVector, rhs: Rational) -> Self {
        Self { coeffs, rhs, relation: Relation::Eq }
    }

    pub fn is_satisfied_by(&self, x: &RationalVector) -> bool {
        let lhs = self.coeffs.dot(x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }

    /// `x_j ≥ 0` written as a constraint; recognised by the presolve.
    pub fn nonnegative(dim: usize, j: usize) -> Self {
        Self::ge(RationalVector::unit(dim, j), Rational::zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(RationalVector),
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(_))
    }

    pub fn witness(&self) -> Option<&RationalVector> {
        match self {
            Self::Feasible(w) => Some(w),
            Self::Infeasible => None,
        }
    }
}

/// Decides whether the system has a real solution in `dim` free variables.
///
/// Single-variable constraints `x_j ≥ 0` are turned into sign restrictions
/// instead of rows; every other variable is split into positive and negative
/// parts. The returned witness is checked against every input constraint.
pub fn lp_feasible(dim: usize, constraints: &[Constraint]) -> Result<LpOutcome, ExactError> {
    if let Some(c) = constraints.iter().find(|c| c.coeffs.dim() != dim) {
        return Err(ExactError::DimensionMismatch { expected: dim, found: c.coeffs.dim() });
    }

    let mut nonneg = vec![false; dim];
    let mut rows: Vec<&Constraint> = Vec::new();
    for c in constraints {
        let mut nz = c.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero());
        let single = match (nz.next(), nz.next()) {
            (Some((j, a)), None) => Some((j, a)),
            _ => None,
        };
        match single {
            Some((j, a)) if c.relation == Relation::Ge && c.rhs.is_zero() && a.is_positive() => {
                nonneg[j] = true;
            }
            _ => rows.push(c),
        }
    }

    // Column layout: structural columns, then surplus columns, then artificials.
    let mut plus_col = vec![0usize; dim];
    let mut minus_col: Vec<Option<usize>> = vec![None; dim];
    let mut ncols = 0;
    for j in 0..dim {
        plus_col[j] = ncols;
        ncols += 1;
        if !nonneg[j] {
            minus_col[j] = Some(ncols);
            ncols += 1;
        }
    }
    let surplus_start = ncols;
    let nsurplus = rows.iter().filter(|c| c.relation == Relation::Ge).count();
    let nstruct = surplus_start + nsurplus;
    let m = rows.len();
    let width = nstruct + m + 1;
    let rhs_col = width - 1;

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut next_surplus = surplus_start;
    for (k, c) in rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for j in 0..dim {
            let a = &c.coeffs[j];
            if a.is_zero() {
                continue;
            }
            row[plus_col[j]] = a.clone();
            if let Some(mc) = minus_col[j] {
                row[mc] = -a.clone();
            }
        }
        if c.relation == Relation::Ge {
            row[next_surplus] = -Rational::one();
            next_surplus += 1;
        }
        row[rhs_col] = c.rhs.clone();
        if row[rhs_col].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[nstruct + k] = Rational::one();
        tab.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|k| nstruct + k).collect();

    // Reduced costs of the phase-I objective (sum of artificials).
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..nstruct {
            cost[j] -= &row[j];
        }
        cost[rhs_col] -= &row[rhs_col];
    }

    while let Some(enter) = (0..nstruct + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for k in 0..m {
            let a = &tab[k][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = &tab[k][rhs_col] / a;
            let better = match &leave {
                None => true,
                Some((best_k, best)) => ratio < *best || (ratio == *best && basis[k] < basis[*best_k]),
            };
            if better {
                leave = Some((k, ratio));
            }
        }
        let (pivot_row, _) = leave.expect("phase-I objective is bounded below");
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    if !cost[rhs_col].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }

    let mut values = vec![Rational::zero(); nstruct + m];
    for (k, &b) in basis.iter().enumerate() {
        values[b] = tab[k][rhs_col].clone();
    }
    let witness: RationalVector = (0..dim)
        .map(|j| {
            let p = values[plus_col[j]].clone();
            match minus_col[j] {
                Some(mc) => p - &values[mc],
                None => p,
            }
        })
        .collect();
    assert!(
        constraints.iter().all(|c| c.is_satisfied_by(&witness)),
        "simplex produced a witness violating its constraints"
    );
    Ok(LpOutcome::Feasible(witness))
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for x in tab[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let pivot_row = tab[r].clone();
    let eliminate = |row: &mut [Rational]| {
        let f = row[c].clone();
        if f.is_zero() {
            return;
        }
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    };
    for (k, row) in tab.iter_mut().enumerate() {
        if k != r {
            eliminate(row);
        }
    }
    eliminate(cost);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_ints(xs)
    }

    #[test]
    fn interval_feasible() {
        let cs = [Constraint::ge(v(&[1]), rat(0)), Constraint::ge(v(&[-1]), rat(-1))];
        let out = lp_feasible(1, &cs).unwrap();
        let w = out.witness().unwrap();
        assert!(w[0] >= rat(0) && w[0] <= rat(1));
    }

    #[test]
    fn empty_interval_infeasible() {
        let cs = [Constraint::ge(v(&[1]), rat(1)), Constraint::ge(v(&[-1]), rat(0))];
        assert_eq!(lp_feasible(1, &cs).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn midpoint_convex_combination() {
        // c1 (1,3) + c2 (3,1) = (2,2), c1 + c2 = 1, c >= 0
        let cs = [
            Constraint::eq(v(&[1, 3]), rat(2)),
            Constraint::eq(v(&[3, 1]), rat(2)),
            Constraint::eq(v(&[1, 1]), rat(1)),
            Constraint::nonnegative(2, 0),
            Constraint::nonnegative(2, 1),
        ];
        let out = lp_feasible(2, &cs).unwrap();
        assert_eq!(out.witness().unwrap(), &RationalVector::new(vec![ratio(1, 2), ratio(1, 2)]));
    }

    #[test]
    fn negative_values_for_free_variables() {
        let cs = [Constraint::eq(v(&[1, 1]), rat(-3)), Constraint::ge(v(&[1, -1]), rat(5))];
        let w = lp_feasible(2, &cs).unwrap();
        assert!(w.is_feasible());
    }

    #[test]
    fn no_constraints() {
        assert_eq!(lp_feasible(2, &[]).unwrap(), LpOutcome::Feasible(v(&[0, 0])));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(lp_feasible(2, &[Constraint::ge(v(&[1]), rat(0))]).is_err());
    }

    #[test]
    fn degenerate_cycling_candidate_terminates() {
        // Beale-style degenerate system; Bland's rule must not cycle.
        let cs = [
            Constraint::eq(RationalVector::new(vec![ratio(1, 4), rat(-8), rat(-1), rat(9)]), rat(0)),
            Constraint::eq(RationalVector::new(vec![ratio(1, 2), rat(-12), ratio(-1, 2), rat(3)]), rat(0)),
            Constraint::ge(v(&[0, 0, -1, 0]), rat(-1)),
            Constraint::ge(v(&[-3, 4, -2, 1]), rat(1)),
            Constraint::nonnegative(4, 0),
            Constraint::nonnegative(4, 1),
            Constraint::nonnegative(4, 2),
            Constraint::nonnegative(4, 3),
        ];
        let a = lp_feasible(4, &cs).unwrap();
        let b = lp_feasible(4, &cs).unwrap();
        assert_eq!(a, b);
    }
}
