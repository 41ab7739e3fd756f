use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Character, InvariantCharacter};
use crate::exactnum::RationalVector;
use crate::rootsys::{RootDatum, WeightPoint};

fn exponent(v: &RationalVector) -> String {
    if v.is_zero() {
        "0".to_string()
    } else {
        format!("{{{v}}}")
    }
}

fn render(symbol: &str, terms: Vec<(RationalVector, &BigInt)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (v, a)) in terms.into_iter().enumerate() {
        let neg = a.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = a.abs();
        if !mag.is_one() {
            let _ = write!(out, "{mag}");
        }
        let _ = write!(out, "{symbol}^{}", exponent(&v));
    }
    out
}

fn ambient_sorted<'a>(
    datum: &RootDatum,
    terms: impl Iterator<Item = (&'a WeightPoint, &'a BigInt)>,
) -> Vec<(RationalVector, &'a BigInt)> {
    let mut v: Vec<_> = terms.map(|(p, a)| (p.reconstruct(datum), a)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

impl Character {
    /// Renders as `χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}` with ambient exponents in
    /// ascending order; the origin prints as `χ^0`.
    pub fn display_with(&self, datum: &RootDatum) -> String {
        render("χ", ambient_sorted(datum, self.terms.iter()))
    }
}

impl InvariantCharacter {
    /// Same layout as [`Character::display_with`], with orbit sums written `O^{..}`.
    pub fn display_with(&self, datum: &RootDatum) -> String {
        render("O", ambient_sorted(datum, self.terms.iter()))
    }
}
