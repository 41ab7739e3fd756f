use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::affine::rng_for;
use super::fixtures;
use super::report::{CheckResult, GroupSummary, VerificationReport};
use super::VerifyError;
use crate::charring::{Character, CharacterRing};
use crate::exactnum::{rat, ratio, RationalVector};
use crate::latgeom::{box_points, from_int_coords};
use crate::rootsys::{Lattice, RootDatum, WeightPoint};
use crate::weylgroup::Group;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceConfig {
    pub pairs: usize,
    pub height_bound: i64,
    pub seed: u64,
}

impl Default for DominanceConfig {
    fn default() -> Self {
        Self { pairs: 500, height_bound: 8, seed: 0 }
    }
}

/// For dominant `u, v`, compares `v ≤ u` decided three ways: LP over the
/// simple-root cone, exact Δ-coordinates, and LP over `conv(W u)`.
///
/// Half of the pairs take `v` from the support of `Ψ(χ^u)` so that both
/// outcomes are well represented.
pub fn verify_dominance(datum: &RootDatum, group: &Group, cfg: &DominanceConfig) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let ring = CharacterRing::new(datum, group);
    let pool = ring.dominant_weights_up_to(&rat(cfg.height_bound));
    let mut rng = rng_for(cfg.seed, 11);
    let mut pairs: Vec<(WeightPoint, WeightPoint)> = Vec::with_capacity(cfg.pairs);
    for k in 0..cfg.pairs {
        let u = pool.choose(&mut rng).expect("zero weight is always present").clone();
        let v = if k % 2 == 0 {
            pool.choose(&mut rng).unwrap().clone()
        } else {
            let below: Vec<WeightPoint> = ring.psi_orbit(&u)?.support().cloned().collect();
            below.choose(&mut rng).unwrap().clone()
        };
        pairs.push((u, v));
    }
    let outcomes: Vec<(bool, bool, bool)> = pairs
        .par_iter()
        .map(|(u, v)| {
            let (ua, va) = (u.reconstruct(datum), v.reconstruct(datum));
            let by_lp = datum.dominance_leq(&va, &ua);
            let by_coords = datum
                .delta_coordinates(&(&ua - &va))
                .is_some_and(|c| c.iter().all(|x| *x >= rat(0)));
            let by_hull = datum.hull_membership(group, &ua, &va).expect("dominant inputs");
            (by_lp, by_coords, by_hull)
        })
        .collect();
    let bad = pairs.iter().zip(&outcomes).find(|(_, (a, b, c))| a != b || a != c);
    let comparable = outcomes.iter().filter(|o| o.0).count();
    let mut report = VerificationReport::new("dominance", "random dominant pairs");
    report.group = Some(GroupSummary::new(datum, group));
    report.seed = Some(cfg.seed);
    report.push(CheckResult::decide(
        "dominance_vs_hull",
        json!({ "pairs": cfg.pairs, "height_bound": cfg.height_bound, "seed": cfg.seed }),
        bad.map(|((u, v), (a, b, c))| {
            json!({
                "u": u.reconstruct(datum).to_strings(),
                "v": v.reconstruct(datum).to_strings(),
                "root_cone_lp": a, "delta_coordinates": b, "hull_lp": c,
            })
        }),
        Some(json!({ "pairs": pairs.len(), "comparable": comparable })),
    ));
    Ok(report.finalize(started))
}

/// For each dominant point `v` of `lattice` with coordinates and height at
/// most `height_bound`, checks `v − w v ∈ ℤ≥0⟨Δ⟩` for every group element `w`.
pub fn verify_reflection_differences(
    datum: &RootDatum,
    group: &Group,
    lattice: &Lattice,
    height_bound: i64,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if lattice.dim() != datum.dim() {
        return Err(VerifyError::Precondition("lattice dimension differs from the datum".into()));
    }
    let limit = rat(height_bound);
    let points: Vec<RationalVector> = box_points(lattice.dim(), height_bound)
        .into_iter()
        .map(|c| from_int_coords(lattice, &c))
        .filter(|p| datum.in_fundamental_domain(p) && datum.height(p) <= limit)
        .collect();
    let checks: Vec<CheckResult> = points
        .par_iter()
        .map(|v| {
            let bad = group.elements().iter().find(|w| !datum.in_positive_root_cone_integral(&(v - &w.apply(v))));
            CheckResult::decide(
                format!("reflection_difference/{v}"),
                json!({ "v": v.to_strings() }),
                bad.map(|w| json!({ "word": w.word(), "image": w.apply(v).to_strings() })),
                Some(json!({ "elements": group.order() })),
            )
        })
        .collect();
    let mut report = VerificationReport::new("reflection_differences", format!("{} dominant lattice points", points.len()));
    report.group = Some(GroupSummary::new(datum, group));
    report.extend(checks);
    Ok(report.finalize(started))
}

/// The rank-one example on `ℤ²`: `Ψ(χ^{e₁+3e₂}) = χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}`.
pub fn figure1_fixture() -> VerificationReport {
    let started = Instant::now();
    let (datum, _) = fixtures::figure1();
    let group = Group::generate(&datum, 16).expect("order 2");
    let ring = CharacterRing::new(&datum, &group);
    let mut report = VerificationReport::new("figure1", "A1 acting on Z^2 by swapping coordinates");
    report.group = Some(GroupSummary::new(&datum, &group));

    let v = |xs: &[i64]| RationalVector::from_ints(xs);
    let lambda = RationalVector::new(vec![ratio(-1, 2), ratio(1, 2)]);
    let z = RationalVector::new(vec![ratio(1, 2), ratio(1, 2)]);
    let found = datum.fundamental_weights()[0].clone();
    report.push(CheckResult::decide(
        "figure1/fundamental_weight",
        json!({}),
        (found != lambda).then(|| json!({ "found": found.to_strings() })),
        Some(json!({ "lambda": lambda.to_strings() })),
    ));

    let u = v(&[1, 3]);
    let wp = datum.decompose(&u);
    let expected_wp = WeightPoint::new(z.scale(&rat(4)), vec![2]);
    report.push(CheckResult::decide(
        "figure1/decomposition",
        json!({ "u": u.to_strings() }),
        (wp.as_ref() != Some(&expected_wp)).then(|| json!({ "found": wp.as_ref().map(|w| (w.z_part.to_strings(), w.lambda.clone())) })),
        Some(json!({ "z": z.to_strings(), "u": "4z+2λ" })),
    ));

    let expected = Character::from_terms(
        [(v(&[1, 3]), 1), (v(&[2, 2]), 2), (v(&[3, 1]), 1)]
            .into_iter()
            .map(|(p, a)| (datum.decompose(&p).unwrap(), BigInt::from(a))),
    );
    let psi = ring.psi(&expected_wp).expect("dominant");
    let terms: Vec<_> = {
        let mut t: Vec<(RationalVector, BigInt)> = psi.terms().iter().map(|(p, a)| (p.reconstruct(&datum), a.clone())).collect();
        t.sort();
        t.into_iter().map(|(p, a)| json!({ "point": p.to_strings(), "coeff": a.to_string() })).collect()
    };
    report.push(CheckResult::decide(
        "figure1/expansion",
        json!({ "u": u.to_strings() }),
        (psi != expected).then(|| json!({ "found": psi.display_with(&datum) })),
        Some(json!({ "display": psi.display_with(&datum), "terms": terms })),
    ));

    let orbit = ring.to_orbit_basis(&psi).expect("invariant");
    let support: Vec<WeightPoint> = orbit.support().cloned().collect();
    let expected_support = vec![WeightPoint::new(z.scale(&rat(4)), vec![0]), expected_wp.clone()];
    report.push(CheckResult::decide(
        "figure1/orbit_support",
        json!({}),
        (support != expected_support).then(|| json!({ "found": orbit.display_with(&datum) })),
        Some(json!({ "orbit_basis": orbit.display_with(&datum) })),
    ));

    let check = ring.support_check(&expected_wp).expect("dominant");
    report.push(CheckResult::decide(
        "figure1/support_lemma",
        json!({}),
        (!check.passed()).then(|| json!({ "check": format!("{check:?}") })),
        None,
    ));
    report.finalize(started)
}
