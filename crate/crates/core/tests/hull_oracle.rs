//! `LatticePolytope::member` against inequality descriptions built without LP.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use reflquot::exactnum::{ratio, Rational, RationalVector};
use reflquot::latgeom::LatticePolytope;
use reflquot::rootsys::Lattice;

/// Row `(a, c)` meaning `a·(x, λ) + c ≥ 0`.
type Row = Vec<Rational>;

fn normalize(mut row: Row) -> Row {
    if let Some(p) = row.iter().find(|q| !q.is_zero()).map(|q| q.abs()) {
        for q in &mut row {
            *q = &*q / &p;
        }
    }
    row
}

/// Eliminates the convex coefficients from
/// `x = Σ λⱼ vⱼ, Σ λⱼ = 1, λ ≥ 0`, leaving inequalities in `x` alone.
fn fourier_motzkin(vertices: &[RationalVector]) -> Vec<Row> {
    let d = vertices[0].dim();
    let n = vertices.len();
    let width = d + n + 1;
    let mut rows: Vec<Row> = Vec::new();
    let mut both = |row: Row| {
        rows.push(row.iter().map(|q| -q).collect());
        rows.push(row);
    };
    for k in 0..d {
        let mut row = vec![Rational::zero(); width];
        row[k] = ratio(1, 1);
        for (j, v) in vertices.iter().enumerate() {
            row[d + j] = -v[k].clone();
        }
        both(row);
    }
    let mut sum = vec![Rational::zero(); width];
    for j in 0..n {
        sum[d + j] = ratio(1, 1);
    }
    sum[width - 1] = ratio(-1, 1);
    both(sum);
    for j in 0..n {
        let mut row = vec![Rational::zero(); width];
        row[d + j] = ratio(1, 1);
        rows.push(row);
    }
    for j in 0..n {
        let col = d + j;
        let (mut pos, mut neg, mut keep) = (vec![], vec![], vec![]);
        for r in rows {
            if r[col].is_positive() {
                pos.push(r);
            } else if r[col].is_negative() {
                neg.push(r);
            } else {
                keep.push(r);
            }
        }
        let mut next: BTreeSet<Row> = keep.into_iter().map(normalize).collect();
        for p in &pos {
            for q in &neg {
                let (a, b) = (-q[col].clone(), p[col].clone());
                let combo: Row = p.iter().zip(q).map(|(x, y)| x * &a + y * &b).collect();
                next.insert(normalize(combo));
            }
        }
        rows = next.into_iter().collect();
    }
    rows
}

fn satisfies(rows: &[Row], x: &RationalVector) -> bool {
    let d = x.dim();
    rows.iter().all(|r| {
        let value: Rational = (0..d).map(|k| &r[k] * &x[k]).sum::<Rational>() + r.last().unwrap();
        !value.is_negative()
    })
}

fn v(xs: &[i64]) -> RationalVector {
    RationalVector::from_ints(xs)
}

fn samples(dim: usize, lo: i64, hi: i64, denom: i64) -> Vec<RationalVector> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                (lo * denom..=hi * denom).map(move |k| {
                    let mut q = p.clone();
                    q.push(ratio(k, denom));
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(RationalVector::new).collect()
}

fn compare(vertices: Vec<RationalVector>, lo: i64, hi: i64, denom: i64) -> usize {
    let dim = vertices[0].dim();
    let rows = fourier_motzkin(&vertices);
    let p = LatticePolytope::new(vertices, Lattice::standard(dim)).unwrap();
    let mut inside = 0;
    for x in samples(dim, lo, hi, denom) {
        let expected = satisfies(&rows, &x);
        assert_eq!(p.member(&x), expected, "disagreement at {x}");
        inside += expected as usize;
    }
    inside
}

#[test]
fn square_agrees() {
    assert!(compare(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], -1, 2, 2) > 0);
}

#[test]
fn diamond_agrees() {
    assert!(compare(vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])], -2, 2, 3) > 0);
}

#[test]
fn simplex_agrees() {
    assert!(compare(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], -1, 1, 2) > 0);
}

#[test]
fn segment_agrees() {
    assert!(compare(vec![v(&[0, 0]), v(&[1, 1])], -1, 2, 4) > 0);
}

/// The permutohedron has too many vertices for elimination; it is compared
/// with its subset-sum description instead.
#[test]
fn permutohedron_agrees_with_subset_sums() {
    let mut vertices = Vec::new();
    let base = [1i64, 2, 3, 4];
    let mut perm = [0usize, 1, 2, 3];
    loop {
        vertices.push(v(&perm.map(|i| base[i])));
        let Some(i) = (0..3).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..4).rev().find(|&j| perm[i] < perm[j]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    assert_eq!(vertices.len(), 24);
    let p = LatticePolytope::new(vertices, Lattice::standard(4)).unwrap();
    let subset_sums = |x: &RationalVector| {
        let total: Rational = x.iter().sum();
        total == ratio(10, 1)
            && (1u32..15).all(|mask| {
                let k = mask.count_ones() as i64;
                let s: Rational = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| x[i].clone()).sum();
                s >= ratio(k * (k + 1) / 2, 1)
            })
    };
    let mut inside = 0;
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for half in [0, 1] {
                    let d = 10 - a - b - c;
                    let x = RationalVector::new(vec![
                        ratio(2 * a + half, 2),
                        ratio(2 * b - half, 2),
                        ratio(c, 1),
                        ratio(d, 1),
                    ]);
                    let expected = subset_sums(&x);
                    assert_eq!(p.member(&x), expected, "{x}");
                    inside += expected as usize;
                }
            }
        }
    }
    assert!(inside > 0);
}
