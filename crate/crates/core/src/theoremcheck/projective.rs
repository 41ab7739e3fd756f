use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::affine::rng_for;
use super::oracle::brute_force_invariants;
use super::report::{CheckResult, GradedCount, GroupSummary, VerificationReport};
use super::VerifyError;
use crate::charring::CharacterRing;
use crate::exactnum::{lp_feasible, rat, Constraint, Rational, RationalVector};
use crate::latgeom::{orbit_count, slice_by_domain, GradedSemigroup, LatticePolytope};
use crate::rootsys::{RootDatum, WeightPoint};
use crate::weylgroup::{Group, Target, DEFAULT_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveConfig {
    pub t_max: u64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for ProjectiveConfig {
    fn default() -> Self {
        Self { t_max: 3, samples: 50, seed: 0 }
    }
}

/// `t(P ∩ D) ∩ M`, computed as the lattice points `x` of the bounding box of
/// `tP` for which some `y ∈ P` with `⟨y, αᵢ⟩ ≥ 0` has `x = t·y`.
pub fn cone_identity_slice(datum: &RootDatum, p: &LatticePolytope, t: u64) -> Vec<RationalVector> {
    let dim = p.dim();
    if t == 0 {
        return vec![RationalVector::zeros(dim)];
    }
    let n = p.vertices().len();
    let tq = rat(t as i64);
    let coords: Vec<RationalVector> = p.vertices().iter().map(|v| p.lattice().coordinates(v)).collect();
    let bound = |pick: fn(i64, i64) -> i64, j: usize| {
        coords.iter().map(|c| (&c[j] * &tq).to_integer().to_i64().expect("small")).reduce(pick).unwrap()
    };
    let lo: Vec<i64> = (0..dim).map(|j| bound(i64::min, j)).collect();
    let hi: Vec<i64> = (0..dim).map(|j| bound(i64::max, j)).collect();
    let pairings: Vec<Vec<Rational>> =
        (0..datum.rank()).map(|i| p.vertices().iter().map(|v| datum.coroot_pairing(v, i)).collect()).collect();

    let mut candidates = Vec::new();
    let mut cur = lo.clone();
    'scan: loop {
        let big: Vec<_> = cur.iter().map(|&x| x.into()).collect();
        let x = p.lattice().from_coordinates(&big);
        if datum.in_fundamental_domain(&x) {
            candidates.push(x);
        }
        let mut j = 0;
        loop {
            if j == dim {
                break 'scan;
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j];
            j += 1;
        }
    }
    let mut out: Vec<RationalVector> = candidates
        .into_par_iter()
        .filter(|x| {
            let mut cs: Vec<Constraint> = (0..dim)
                .map(|k| Constraint::eq(p.vertices().iter().map(|v| &v[k] * &tq).collect(), x[k].clone()))
                .collect();
            cs.push(Constraint::eq(vec![rat(1); n].into(), rat(1)));
            cs.extend(pairings.iter().map(|row| Constraint::ge(row.clone().into(), rat(0))));
            cs.extend((0..n).map(|j| Constraint::nonnegative(n, j)));
            lp_feasible(n, &cs).expect("consistent dimensions").is_feasible()
        })
        .collect();
    out.sort();
    out
}

/// Checks the graded isomorphism behind the projective quotient for `P`.
pub fn verify_projective(
    datum: &RootDatum,
    group: &Group,
    p: &LatticePolytope,
    cfg: &ProjectiveConfig,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if p.dim() != datum.dim() || group.dim() != datum.dim() {
        return Err(VerifyError::Precondition("polytope, datum and group dimensions differ".into()));
    }
    if let Some(b) = p.lattice().basis().iter().find(|b| datum.decompose(b).is_none()) {
        return Err(VerifyError::Precondition(format!("polytope lattice vector {b} is not in the weight group")));
    }
    if !group.preserves(&Target::Lattice(p.lattice())) {
        return Err(VerifyError::Precondition("the group does not preserve the polytope lattice".into()));
    }
    if !group.preserves(&Target::VertexSet(p.vertices())) {
        return Err(VerifyError::Precondition("the polytope is not stable under the group".into()));
    }
    let lifted = datum.graded_lift()?;
    let lifted_group = Group::generate(&lifted, DEFAULT_MAX_ORDER.max(group.order()))?;
    let ring = CharacterRing::new(&lifted, &lifted_group);
    let s = GradedSemigroup::cone_over(p.clone());

    let mut report = VerificationReport::new("projective", super::affine::describe(&s));
    report.group = Some(GroupSummary::new(datum, group));
    report.seed = Some(cfg.seed);
    report.full_dimensional = Some(p.is_full_dimensional());

    let all_points: Vec<Vec<RationalVector>> = (0..=cfg.t_max).map(|t| p.lattice_points(t)).collect();
    let piece_sets: Vec<BTreeSet<&RationalVector>> = all_points.iter().map(|pts| pts.iter().collect()).collect();
    // (t, x) ∈ S exactly when x ∈ tP ∩ M; the pieces were enumerated above.
    let in_piece = |t: u64, x: &RationalVector| -> bool {
        let tail = RationalVector::new(x.coords()[1..].to_vec());
        x[0] == rat(t as i64) && piece_sets.get(t as usize).is_some_and(|set| set.contains(&tail))
    };
    let mut pieces: Vec<Vec<WeightPoint>> = Vec::new();
    for t in 0..=cfg.t_max {
        let pts = &all_points[t as usize];
        let orbits = orbit_count(group, pts);
        let slice = slice_by_domain(datum, pts);
        let span = brute_force_invariants(group, pts)?.len();
        let row = GradedCount { t, total_points: pts.len(), orbit_count: orbits, domain_slice_count: slice.len(), invariant_span: span };
        let params = json!({ "t": t });
        report.push(CheckResult::decide(
            format!("graded_count/t={t:02}"),
            params.clone(),
            (orbits != slice.len() || span != slice.len()).then(|| serde_json::to_value(&row).unwrap()),
            Some(json!({ "dimension": slice.len() })),
        ));
        report.graded_counts.push(row);

        let other = cone_identity_slice(datum, p, t);
        let a: BTreeSet<&RationalVector> = slice.iter().collect();
        let b: BTreeSet<&RationalVector> = other.iter().collect();
        let diff = a.symmetric_difference(&b).next().map(|x| json!({ "point": x.to_strings() }));
        report.push(CheckResult::decide(format!("cone_identity/t={t:02}"), params.clone(), diff, Some(json!({ "points": slice.len() }))));

        let head = RationalVector::from_ints(&[t as i64]);
        let dominant: Vec<WeightPoint> =
            slice.iter().map(|x| ring.weight(&head.concat(x))).collect::<Result<_, _>>()?;
        let bad = dominant.par_iter().find_first(|u| {
            ring.psi(u).unwrap().support().any(|q| !in_piece(t, &q.reconstruct(&lifted)))
        });
        report.push(CheckResult::decide(
            format!("graded_restriction/t={t:02}"),
            params,
            bad.map(|u| json!({ "u": u.reconstruct(&lifted).to_strings() })),
            Some(json!({ "dominant_points": dominant.len() })),
        ));
        pieces.push(dominant);
    }

    let mut rng = rng_for(cfg.seed, 7);
    let mut pairs = Vec::new();
    for _ in 0..cfg.samples {
        let t1 = rng.random_range(0..=cfg.t_max);
        let t2 = rng.random_range(0..=cfg.t_max - t1);
        let (Some(u), Some(v)) = (pieces[t1 as usize].choose(&mut rng), pieces[t2 as usize].choose(&mut rng)) else {
            continue;
        };
        pairs.push((t1 + t2, u.clone(), v.clone()));
    }
    let bad = pairs.par_iter().find_first(|(t, u, v)| {
        let w = u.add(v);
        let product = ring.psi(u).unwrap().mul(&ring.psi(v).unwrap());
        let direct = ring.psi(&w).unwrap();
        product != direct
            || direct.support().any(|q| !in_piece(*t, &q.reconstruct(&lifted)))
    });
    report.push(CheckResult::decide(
        "graded_multiplicativity",
        json!({ "samples": cfg.samples, "seed": cfg.seed, "t_max": cfg.t_max }),
        bad.map(|(_, u, v)| json!({ "u": u.reconstruct(&lifted).to_strings(), "v": v.reconstruct(&lifted).to_strings() })),
        Some(json!({ "pairs": pairs.len() })),
    ));

    Ok(report.finalize(started))
}
