use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::exactnum::{rank, rat, RationalMatrix};
use crate::rootsys::CartanType;

fn a1_on_plane() -> (RootDatum, Group) {
    let d = RootDatum::named(CartanType::A(1)).unwrap();
    let g = Group::generate(&d, 100).unwrap();
    (d, g)
}

fn named(ty: &str) -> (RootDatum, Group) {
    let d = RootDatum::named(ty.parse().unwrap()).unwrap();
    let g = Group::generate(&d, 10_000).unwrap();
    (d, g)
}

fn wp(d: &RootDatum, v: &[i64]) -> WeightPoint {
    d.decompose(&RationalVector::from_ints(v)).unwrap()
}

fn lam(d: &RootDatum, b: &[i64]) -> WeightPoint {
    WeightPoint::new(RationalVector::zeros(d.dim()), b.to_vec())
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn orbit_sums() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    let s = ring.orbit_sum(&lam(&d, &[1])).unwrap();
    assert_eq!(s, Character::from_terms([(lam(&d, &[1]), int(1)), (lam(&d, &[-1]), int(1))]));
    assert_eq!(ring.orbit_sum(&lam(&d, &[0])).unwrap(), Character::monomial(lam(&d, &[0])));
    assert!(matches!(ring.orbit_sum(&lam(&d, &[-1])), Err(CharError::NotDominant(_))));

    let (d2, g2) = named("A2");
    let ring2 = CharacterRing::new(&d2, &g2);
    let s = ring2.orbit_sum(&lam(&d2, &[1, 0])).unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.terms().values().all(|a| *a == int(1)));
}

#[test]
fn lambda_orbits_match_matrix_orbits() {
    for ty in ["A2", "B2", "G2", "C3"] {
        let (d, g) = named(ty);
        let ring = CharacterRing::new(&d, &g);
        for b in [vec![1, 0], vec![2, 1], vec![0, 3]].into_iter().map(|mut b| {
            b.resize(d.rank(), 1);
            b
        }) {
            let u = lam(&d, &b);
            let mut via_matrices: Vec<WeightPoint> =
                g.orbit(&u.reconstruct(&d)).iter().map(|v| d.decompose(v).unwrap()).collect();
            via_matrices.sort();
            let via_cartan: Vec<WeightPoint> = ring.orbit_sum(&u).unwrap().support().cloned().collect();
            assert_eq!(via_cartan, via_matrices, "{ty} {b:?}");
        }
    }
}

#[test]
fn orbit_basis_grouping() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    let f = Character::from_terms([(lam(&d, &[1]), int(1)), (lam(&d, &[-1]), int(1))]);
    assert_eq!(ring.to_orbit_basis(&f).unwrap(), InvariantCharacter::from_terms([(lam(&d, &[1]), int(1))]).unwrap());
    assert!(matches!(ring.to_orbit_basis(&Character::monomial(lam(&d, &[1]))), Err(CharError::NotInvariant(_))));
    let f = Character::from_terms([(lam(&d, &[2]), int(1)), (lam(&d, &[0]), int(2)), (lam(&d, &[-2]), int(1))]);
    let expected = InvariantCharacter::from_terms([(lam(&d, &[2]), int(1)), (lam(&d, &[0]), int(2))]).unwrap();
    assert_eq!(ring.to_orbit_basis(&f).unwrap(), expected);
    let lopsided = Character::from_terms([(lam(&d, &[1]), int(1)), (lam(&d, &[-1]), int(3))]);
    assert!(ring.to_orbit_basis(&lopsided).is_err());
}

#[test]
fn psi_of_the_plane_example() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    let u = wp(&d, &[1, 3]);
    assert_eq!(u.lambda, vec![2]);
    assert_eq!(u.z_part, RationalVector::from_ints(&[2, 2]));
    let psi = ring.psi(&u).unwrap();
    let expected = Character::from_terms([(wp(&d, &[1, 3]), int(1)), (wp(&d, &[2, 2]), int(2)), (wp(&d, &[3, 1]), int(1))]);
    assert_eq!(psi, expected);
    assert_eq!(psi.display_with(&d), "χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}");
    assert_eq!(ring.psi(&lam(&d, &[0])).unwrap().display_with(&d), "χ^0");

    let z_only = wp(&d, &[2, 2]);
    assert_eq!(ring.psi(&z_only).unwrap(), Character::monomial(z_only.clone()));
    assert!(ring.psi(&wp(&d, &[3, 1])).is_err());
}

#[test]
fn psi_linear_and_inverse_in_rank_one() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    assert!(ring.psi_linear(&Character::zero()).unwrap().is_empty());
    let f = Character::from_terms([(lam(&d, &[2]), int(1)), (lam(&d, &[0]), int(-2))]);
    let image = ring.psi_linear(&f).unwrap();
    assert_eq!(image, ring.orbit_sum(&lam(&d, &[2])).unwrap());

    let target = InvariantCharacter::from_terms([(lam(&d, &[2]), int(1))]).unwrap();
    assert_eq!(ring.psi_inverse(&target).unwrap(), f);
    let unit = InvariantCharacter::from_terms([(lam(&d, &[0]), int(1))]).unwrap();
    assert_eq!(ring.psi_inverse(&unit).unwrap(), Character::monomial(lam(&d, &[0])));
    assert!(ring.psi_inverse(&InvariantCharacter::zero()).unwrap().is_empty());
}

#[test]
fn support_checks() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    let report = ring.support_check(&wp(&d, &[1, 3])).unwrap();
    assert!(report.passed());
    assert_eq!(report.orbit_support, vec![wp(&d, &[2, 2]), wp(&d, &[1, 3])]);
    assert!(ring.support_check(&lam(&d, &[0])).unwrap().passed());

    let (d2, g2) = named("A2");
    let ring2 = CharacterRing::new(&d2, &g2);
    let r = ring2.support_check(&lam(&d2, &[1, 1])).unwrap();
    assert!(r.passed());
    assert!(r.orbit_support.contains(&lam(&d2, &[0, 0])));
    assert!(r.orbit_support.contains(&lam(&d2, &[1, 1])));
}

#[test]
fn triangular_and_independent() {
    for ty in ["A2", "B2", "G2"] {
        let (d, g) = named(ty);
        let ring = CharacterRing::new(&d, &g);
        let mut ws = ring.dominant_weights_up_to(&rat(6));
        ws.reverse();
        let (rows, m) = ring.psi_matrix(&ws).unwrap();
        for (j, u) in ws.iter().enumerate() {
            let i = rows.iter().position(|r| r == u).unwrap();
            assert_eq!(m[i][j], int(1), "{ty}");
            assert!(m[..i].iter().all(|row| row[j] == int(0)), "{ty}: entries above the diagonal");
        }
        let q = RationalMatrix::from_rows(
            m.iter().map(|row| row.iter().map(|a| Rational::from_integer(a.clone())).collect()).collect(),
        )
        .unwrap();
        assert_eq!(rank(&q), ws.len(), "{ty}");
    }
}

#[test]
fn serde_shapes() {
    let (d, g) = a1_on_plane();
    let ring = CharacterRing::new(&d, &g);
    let psi = ring.psi(&wp(&d, &[1, 3])).unwrap();
    let json = serde_json::to_value(&psi).unwrap();
    assert_eq!(json["basis"], "monomial");
    assert_eq!(json["terms"][1]["coeff"], 2);
    assert_eq!(json["terms"][0]["point"]["z"], serde_json::json!(["2", "2"]));
    let back: Character = serde_json::from_value(json).unwrap();
    assert_eq!(back, psi);

    let orbit = ring.to_orbit_basis(&psi).unwrap();
    let json = serde_json::to_string(&orbit).unwrap();
    assert!(json.contains("\"basis\":\"orbit\""));
    assert_eq!(serde_json::from_str::<InvariantCharacter>(&json).unwrap(), orbit);
    assert!(serde_json::from_str::<Character>(&json).is_err());
}

#[test]
fn big_coefficients_survive_serde() {
    let p = WeightPoint::zero(1, 0);
    let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
    let c = Character::from_terms([(p, huge)]);
    let text = serde_json::to_string(&c).unwrap();
    assert_eq!(serde_json::from_str::<Character>(&text).unwrap(), c);
}

fn dominant(rank: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0..=max, rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn psi_is_multiplicative(b1 in dominant(2, 3), b2 in dominant(2, 3), z1 in -3i64..3, z2 in -3i64..3) {
        let (d, g) = named("B2");
        let ring = CharacterRing::new(&d, &g);
        let (u, v) = (lam(&d, &b1), lam(&d, &b2));
        prop_assert_eq!(ring.psi(&u).unwrap().mul(&ring.psi(&v).unwrap()), ring.psi(&u.add(&v)).unwrap());

        let (d1, g1) = a1_on_plane();
        let ring1 = CharacterRing::new(&d1, &g1);
        let zu = WeightPoint::new(RationalVector::from_ints(&[z1, z1]), vec![b1[0]]);
        let zv = WeightPoint::new(RationalVector::from_ints(&[z2, z2]), vec![b2[1]]);
        prop_assert_eq!(ring1.psi(&zu).unwrap().mul(&ring1.psi(&zv).unwrap()), ring1.psi(&zu.add(&zv)).unwrap());
    }

    #[test]
    fn psi_round_trips(terms in proptest::collection::vec((dominant(2, 3), -4i64..=4), 1..=5)) {
        let (d, g) = named("A2");
        let ring = CharacterRing::new(&d, &g);
        let f = Character::from_terms(terms.into_iter().map(|(b, a)| (lam(&d, &b), int(a))));
        let g_inv = ring.to_orbit_basis(&ring.psi_linear(&f).unwrap()).unwrap();
        prop_assert_eq!(ring.psi_inverse(&g_inv).unwrap(), f);
    }
}
