use super::fixtures::{self, FixtureObject};
use super::*;
use crate::exactnum::RationalVector;
use crate::latgeom::GradedSemigroup;
use crate::rootsys::{Lattice, RootDatum};
use crate::weylgroup::Group;

fn group(d: &RootDatum) -> Group {
    Group::generate(d, 10_000).unwrap()
}

fn small(height_bound: i64, samples: usize) -> AffineConfig {
    AffineConfig { height_bound, samples, seed: 7, ..AffineConfig::default() }
}

#[test]
fn figure1_passes() {
    let r = figure1_fixture();
    assert!(r.passed(), "{}", r.to_text());
    let cert = r.check("figure1/expansion").unwrap().certificate.as_ref().unwrap();
    assert_eq!(cert["display"], "χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}");
    assert_eq!(cert["terms"][1]["coeff"], "2");
    assert_eq!(r.checks.len(), 5);
}

#[test]
fn affine_rank_one() {
    let (d, s) = fixtures::figure1();
    let r = verify_affine(&d, &group(&d), &s, &small(6, 40)).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.check("support/(1,3)").is_some());
    assert!(r.check("containment/outside").is_some());
}

#[test]
fn affine_trivial_group() {
    let d = RootDatum::trivial(2);
    let r = verify_affine(&d, &group(&d), &GradedSemigroup::orthant(2), &small(3, 20)).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn affine_rank_two() {
    let (d, s) = fixtures::orthant(3);
    let r = verify_affine(&d, &group(&d), &s, &small(4, 30)).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn affine_whole_lattice_under_b2() {
    let (d, s) = fixtures::b2_lattice();
    let cfg = AffineConfig { saturation_bound: 3, ..small(3, 20) };
    let r = verify_affine(&d, &group(&d), &s, &cfg).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.check("containment/outside").is_some());
}

#[test]
fn affine_preconditions() {
    let one = RootDatum::trivial(1);
    let gapped = GradedSemigroup::generated(Lattice::standard(1), vec![RationalVector::from_ints(&[2]), RationalVector::from_ints(&[3])]).unwrap();
    assert!(matches!(verify_affine(&one, &group(&one), &gapped, &small(3, 5)), Err(VerifyError::NotSaturated(_))));

    let (b2, _) = fixtures::b2_lattice();
    let err = verify_affine(&b2, &group(&b2), &GradedSemigroup::orthant(2), &small(3, 5));
    assert!(matches!(err, Err(VerifyError::Geom(_))));
}

#[test]
fn reports_are_deterministic() {
    let (d, s) = fixtures::figure1();
    let g = group(&d);
    let mut a = verify_affine(&d, &g, &s, &small(4, 30)).unwrap();
    let mut b = verify_affine(&d, &g, &s, &small(4, 30)).unwrap();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
    let names: Vec<&str> = a.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn projective_square_counts() {
    let (d, p) = fixtures::square();
    let cfg = ProjectiveConfig { t_max: 5, samples: 20, seed: 1 };
    let r = verify_projective(&d, &group(&d), &p, &cfg).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let counts: Vec<usize> = r.graded_counts.iter().map(|c| c.domain_slice_count).collect();
    assert_eq!(counts, vec![1, 3, 6, 10, 15, 21]);
    assert_eq!(r.full_dimensional, Some(true));
    assert!(r.graded_counts_csv().starts_with("t,total_points,orbit_count,domain_slice_count\n0,1,1,1\n"));
}

#[test]
fn projective_simplex_counts() {
    let (d, p) = fixtures::simplex3();
    let cfg = ProjectiveConfig { t_max: 6, samples: 20, seed: 1 };
    let r = verify_projective(&d, &group(&d), &p, &cfg).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let counts: Vec<usize> = r.graded_counts.iter().map(|c| c.domain_slice_count).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 4, 5, 7]);
    assert_eq!(r.full_dimensional, Some(false));
}

#[test]
fn projective_rejects_unstable_polytope() {
    let d = fixtures::b2_diamond().0;
    let (_, sq) = fixtures::square();
    assert!(matches!(verify_projective(&d, &group(&d), &sq, &ProjectiveConfig::default()), Err(VerifyError::Precondition(_))));
}

#[test]
fn dominance_and_reflection_differences() {
    let (d, _) = fixtures::orthant(3);
    let g = group(&d);
    let r = verify_dominance(&d, &g, &DominanceConfig { pairs: 60, height_bound: 5, seed: 3 }).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let r = verify_reflection_differences(&d, &g, d.lattice(), 3).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert!(!r.checks.is_empty());
}

#[test]
fn fixture_objects_match_names() {
    assert!(matches!(fixtures::by_name("square").unwrap().object, FixtureObject::Polytope(_)));
    assert!(matches!(fixtures::by_name("figure1").unwrap().object, FixtureObject::Semigroup(_)));
}
