use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::report::{CheckResult, GroupSummary, VerificationReport};
use super::VerifyError;
use crate::charring::{Character, CharacterRing, InvariantCharacter};
use crate::exactnum::{rat, RationalVector};
use crate::latgeom::{box_points, check_saturated, from_int_coords, restriction_support, GradedSemigroup, Presentation};
use crate::rootsys::{RootDatum, WeightPoint};
use crate::weylgroup::Group;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineConfig {
    /// Bound on `⟨u, ρ⟩` and on the lattice coordinates of enumerated points.
    pub height_bound: i64,
    pub samples: usize,
    pub seed: u64,
    pub saturation_bound: i64,
}

impl Default for AffineConfig {
    fn default() -> Self {
        Self { height_bound: 6, samples: 200, seed: 0, saturation_bound: crate::latgeom::DEFAULT_SATURATION_BOUND }
    }
}

pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Dominant points of `S` (as `C ∩ M`) with height and lattice coordinates bounded by `bound`.
pub fn dominant_points_in(datum: &RootDatum, s: &GradedSemigroup, bound: i64) -> Vec<RationalVector> {
    split_box(datum, s, bound).0
}

/// Dominant lattice points of the box, split into those in `S` and the rest.
fn split_box(datum: &RootDatum, s: &GradedSemigroup, bound: i64) -> (Vec<RationalVector>, Vec<RationalVector>) {
    let limit = rat(bound);
    let candidates: Vec<RationalVector> = box_points(s.dim(), bound)
        .into_iter()
        .map(|c| from_int_coords(s.lattice(), &c))
        .filter(|p| datum.in_fundamental_domain(p) && datum.height(p) <= limit)
        .collect();
    let flags: Vec<bool> = candidates.par_iter().map(|p| s.contains(p)).collect();
    let (mut inside, mut outside) = (Vec::new(), Vec::new());
    for (p, inside_s) in candidates.into_iter().zip(flags) {
        if inside_s {
            inside.push(p);
        } else {
            outside.push(p);
        }
    }
    let key = |p: &RationalVector| (datum.height(p), p.clone());
    inside.sort_by_key(key);
    outside.sort_by_key(key);
    (inside, outside)
}

pub(crate) fn describe(s: &GradedSemigroup) -> String {
    match s.presentation() {
        Presentation::ConeOverPolytope(p) => {
            format!("cone over a polytope with {} vertices in dimension {}", p.vertices().len(), p.dim())
        }
        Presentation::Generators => format!("semigroup generated by {} points in dimension {}", s.generators().len(), s.dim()),
    }
}

fn point_json(datum: &RootDatum, p: &WeightPoint) -> Value {
    json!({ "ambient": p.reconstruct(datum).to_strings(), "z": p.z_part.to_strings(), "lambda": p.lambda })
}

fn char_json(datum: &RootDatum, f: &Character) -> Value {
    json!(f.display_with(datum))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> BigInt {
    let a: i64 = rng.random_range(1..=5);
    BigInt::from(if rng.random_bool(0.5) { a } else { -a })
}

/// Random combination of 1 to `max_terms` distinct points; the first is drawn from `first`.
fn random_character(rng: &mut ChaCha8Rng, first: &[WeightPoint], rest: &[WeightPoint], max_terms: usize) -> Character {
    let n = rng.random_range(1..=max_terms);
    let mut used = BTreeSet::new();
    let mut terms = Vec::new();
    let lead = first.choose(rng).expect("nonempty").clone();
    used.insert(lead.clone());
    terms.push((lead, random_coeff(rng)));
    for _ in 1..n {
        let Some(p) = rest.choose(rng) else { break };
        if used.insert(p.clone()) {
            terms.push((p.clone(), random_coeff(rng)));
        }
    }
    Character::from_terms(terms)
}

/// Dominant weights `z + Σ bᵢλᵢ` of height at most `bound`, with `z` ranging
/// over small combinations of the basis of `M ∩ Z`.
pub(crate) fn weight_pool(ring: &CharacterRing<'_>, bound: i64, z_range: i64) -> Vec<WeightPoint> {
    let datum = ring.datum();
    let mut zs = vec![RationalVector::zeros(datum.dim())];
    for b in datum.z_basis() {
        zs = zs
            .iter()
            .flat_map(|z| (-z_range..=z_range).map(move |k| z.add_scaled(&rat(k), b)))
            .collect();
    }
    let lambdas = ring.dominant_weights_up_to(&rat(bound));
    zs.iter()
        .flat_map(|z| lambdas.iter().map(move |w| WeightPoint::new(z.clone(), w.lambda.clone())))
        .collect()
}

/// Checks the invariant-ring isomorphism for one saturated `W`-stable semigroup.
pub fn verify_affine(
    datum: &RootDatum,
    group: &Group,
    s: &GradedSemigroup,
    cfg: &AffineConfig,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if cfg.height_bound < 0 || cfg.saturation_bound < 0 {
        return Err(VerifyError::Precondition("bounds must be non-negative".into()));
    }
    if s.dim() != datum.dim() || group.dim() != datum.dim() {
        return Err(VerifyError::Precondition(format!(
            "dimension mismatch: datum {}, group {}, semigroup {}",
            datum.dim(),
            group.dim(),
            s.dim()
        )));
    }
    if let Some(b) = s.lattice().basis().iter().find(|b| datum.decompose(b).is_none()) {
        return Err(VerifyError::Precondition(format!("semigroup lattice vector {b} is not in the weight group")));
    }
    let saturation = check_saturated(s, cfg.saturation_bound);
    if !saturation.saturated {
        return Err(VerifyError::NotSaturated(saturation));
    }
    s.require_stable(group)?;

    let ring = CharacterRing::new(datum, group);
    let mut report = VerificationReport::new("affine", describe(s));
    report.group = Some(GroupSummary::new(datum, group));
    report.seed = Some(cfg.seed);
    report.saturation = Some(saturation);

    let (inside, outside_lattice) = split_box(datum, s, cfg.height_bound);
    let inside_w: Vec<WeightPoint> = inside.iter().map(|p| ring.weight(p)).collect::<Result<_, _>>()?;

    let per_point: Vec<Vec<CheckResult>> = inside
        .par_iter()
        .zip(&inside_w)
        .map(|(p, u)| -> Result<Vec<CheckResult>, VerifyError> {
            let params = json!({ "u": p.to_strings() });
            let sc = ring.support_check(u)?;
            let support = CheckResult::decide(
                format!("support/{p}"),
                params.clone(),
                (!sc.passed()).then(|| {
                    json!({
                        "max_coeff_one": sc.max_coeff_one,
                        "all_below": sc.all_below,
                        "delta_integrality": sc.delta_integrality,
                        "point": sc.counterexample.as_ref().map(|c| point_json(datum, c)),
                    })
                }),
                Some(json!({ "orbit_support": sc.orbit_support.len() })),
            );
            let rc = restriction_support(&ring, s, p)?;
            let restriction = CheckResult::decide(
                format!("restriction/{p}"),
                params,
                rc.outside.as_ref().map(|o| json!({ "outside": o.to_strings() })),
                Some(json!({ "support_size": rc.support_size })),
            );
            Ok(vec![support, restriction])
        })
        .collect::<Result<_, _>>()?;
    report.extend(per_point.into_iter().flatten());

    let sample_params = json!({ "samples": cfg.samples, "seed": cfg.seed, "height_bound": cfg.height_bound });

    if !inside_w.is_empty() {
        let mut rng = rng_for(cfg.seed, 1);
        let pairs: Vec<(WeightPoint, WeightPoint)> = (0..cfg.samples)
            .map(|_| (inside_w.choose(&mut rng).unwrap().clone(), inside_w.choose(&mut rng).unwrap().clone()))
            .collect();
        let bad = pairs.par_iter().find_first(|(u, v)| {
            let lhs = ring.psi(u).unwrap().mul(&ring.psi(v).unwrap());
            lhs != ring.psi(&u.add(v)).unwrap()
        });
        report.push(CheckResult::decide(
            "multiplicativity",
            sample_params.clone(),
            bad.map(|(u, v)| json!({ "u": point_json(datum, u), "v": point_json(datum, v) })),
            Some(json!({ "pairs": pairs.len() })),
        ));
    }

    let pool = weight_pool(&ring, cfg.height_bound, 2);
    let mut rng = rng_for(cfg.seed, 2);
    let targets: Vec<InvariantCharacter> = (0..cfg.samples)
        .map(|_| {
            let f = random_character(&mut rng, &pool, &pool, 5);
            InvariantCharacter::from_terms(f.terms().clone()).expect("pool is dominant")
        })
        .collect();
    let bad = targets.par_iter().find_first(|g| {
        let f = ring.psi_inverse(g).unwrap();
        !f.support().all(WeightPoint::is_dominant) || ring.to_orbit_basis(&ring.psi_linear(&f).unwrap()).unwrap() != **g
    });
    report.push(CheckResult::decide(
        "roundtrip/inverse_then_psi",
        sample_params.clone(),
        bad.map(|g| json!({ "input": g.display_with(datum) })),
        Some(json!({ "characters": targets.len() })),
    ));

    let mut rng = rng_for(cfg.seed, 3);
    let sources: Vec<Character> = (0..cfg.samples).map(|_| random_character(&mut rng, &pool, &pool, 5)).collect();
    let bad = sources.par_iter().find_first(|f| {
        let g = ring.to_orbit_basis(&ring.psi_linear(f).unwrap()).unwrap();
        ring.psi_inverse(&g).unwrap() != **f
    });
    report.push(CheckResult::decide(
        "roundtrip/psi_then_inverse",
        sample_params.clone(),
        bad.map(|f| char_json(datum, f)),
        Some(json!({ "characters": sources.len() })),
    ));

    let mut outside: Vec<WeightPoint> = outside_lattice.iter().map(|p| ring.weight(p)).collect::<Result<_, _>>()?;
    let shifted: BTreeSet<WeightPoint> = inside_w
        .iter()
        .flat_map(|u| {
            (0..datum.rank()).map(move |i| {
                let mut w = u.clone();
                w.lambda[i] += 1;
                w
            })
        })
        .filter(|w| !s.contains(&w.reconstruct(datum)))
        .collect();
    outside.extend(shifted);
    let in_s = |v: &RationalVector| s.contains(v);

    if !outside.is_empty() {
        let mut both = inside_w.clone();
        both.extend(outside.iter().cloned());
        let mut rng = rng_for(cfg.seed, 4);
        let fs: Vec<Character> = (0..cfg.samples).map(|_| random_character(&mut rng, &outside, &both, 4)).collect();
        let bad = fs.par_iter().find_first(|f| {
            let image = ring.psi_linear(f).unwrap();
            let all_in = image.support().all(|p| in_s(&p.reconstruct(datum)));
            all_in
        });
        report.push(CheckResult::decide(
            "containment/outside",
            json!({ "samples": cfg.samples, "seed": cfg.seed, "outside_pool": outside.len() }),
            bad.map(|f| char_json(datum, f)),
            Some(json!({ "characters": fs.len() })),
        ));
    }
    if !inside_w.is_empty() {
        let mut rng = rng_for(cfg.seed, 5);
        let fs: Vec<Character> = (0..cfg.samples).map(|_| random_character(&mut rng, &inside_w, &inside_w, 4)).collect();
        let bad = fs.par_iter().find_first(|f| {
            let image = ring.psi_linear(f).unwrap();
            let all_in = image.support().all(|p| in_s(&p.reconstruct(datum)));
            !all_in
        });
        report.push(CheckResult::decide(
            "containment/inside",
            sample_params,
            bad.map(|f| char_json(datum, f)),
            Some(json!({ "characters": fs.len() })),
        ));
    }

    Ok(report.finalize(started))
}
