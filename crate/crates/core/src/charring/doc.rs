use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{CharError, Character, InvariantCharacter};
use crate::rootsys::WeightPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("expected basis {expected:?}, found {found:?}")]
    WrongBasis { expected: String, found: String },
    #[error(transparent)]
    Char(#[from] CharError),
}

mod int_coeff {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(a: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match a.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&a.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(x) => Ok(x.into()),
            Raw::Text(t) => BigInt::from_str(t.trim()).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub point: WeightPoint,
    #[serde(with = "int_coeff")]
    pub coeff: BigInt,
}

/// File shape of a character. Coefficients beyond `i64` are written as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterDoc {
    #[serde(default = "monomial_tag")]
    pub basis: String,
    pub terms: Vec<TermDoc>,
}

fn monomial_tag() -> String {
    "monomial".to_string()
}

fn terms_of<'a>(it: impl Iterator<Item = (&'a WeightPoint, &'a BigInt)>) -> Vec<TermDoc> {
    it.map(|(p, a)| TermDoc { point: p.clone(), coeff: a.clone() }).collect()
}

impl CharacterDoc {
    fn expect(&self, tag: &str) -> Result<(), DocError> {
        if self.basis != tag {
            return Err(DocError::WrongBasis { expected: tag.to_string(), found: self.basis.clone() });
        }
        Ok(())
    }

    pub fn is_orbit(&self) -> bool {
        self.basis == "orbit"
    }

    pub fn to_character(&self) -> Result<Character, DocError> {
        self.expect("monomial")?;
        Ok(Character::from_terms(self.terms.iter().map(|t| (t.point.clone(), t.coeff.clone()))))
    }

    pub fn to_invariant(&self) -> Result<InvariantCharacter, DocError> {
        self.expect("orbit")?;
        Ok(InvariantCharacter::from_terms(self.terms.iter().map(|t| (t.point.clone(), t.coeff.clone())))?)
    }
}

impl From<&Character> for CharacterDoc {
    fn from(c: &Character) -> Self {
        Self { basis: monomial_tag(), terms: terms_of(c.terms.iter()) }
    }
}

impl From<&InvariantCharacter> for CharacterDoc {
    fn from(g: &InvariantCharacter) -> Self {
        Self { basis: "orbit".to_string(), terms: terms_of(g.terms.iter()) }
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharacterDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CharacterDoc::deserialize(d)?.to_character().map_err(serde::de::Error::custom)
    }
}

impl Serialize for InvariantCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharacterDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvariantCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CharacterDoc::deserialize(d)?.to_invariant().map_err(serde::de::Error::custom)
    }
}
