//! Scenario documents: one TOML file names a group, an optional object,
//! bounds and output settings. Named fixtures expand to the same explicit form.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use reflquot::exactnum::{BilinearForm, RationalMatrix, RationalVector};
use reflquot::latgeom::{GradedSemigroup, LatticePolytope};
use reflquot::rootsys::{adapt_simple_system, CartanType, Lattice, RootDatum};
use reflquot::theoremcheck::fixtures;
use reflquot::weylgroup::{Group, DEFAULT_MAX_ORDER};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<ObjectSpec>,
    #[serde(default, skip_serializing_if = "Bounds::is_empty")]
    pub bounds: Bounds,
    #[serde(default, skip_serializing_if = "OutputSpec::is_empty")]
    pub output: OutputSpec,
}

/// Exactly one of `type`, `simple_roots` or `trivial` must be set.
///
/// `lattice` overrides the realization of a named type; for explicit roots it
/// defaults to `ℤⁿ`, and `form` to the standard inner product.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<RationalVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<RationalVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<RationalMatrix>,
    /// Dimension of a trivial group (no reflections).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectKind {
    Polytope,
    Semigroup,
    WeightBox,
}

/// Vertices and generators are integer coordinates in `lattice`, which
/// defaults to the group's lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub kind: ObjectKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<RationalVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height_bound: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturation_bound: Option<i64>,
}

impl Bounds {
    fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

impl OutputSpec {
    fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| anyhow!("invalid scenario config: {e}"))?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario configs are plain data")
    }

    /// The explicit config behind a bundled fixture name.
    pub fn fixture(name: &str) -> Result<Self> {
        let fx = fixtures::by_name(name)
            .ok_or_else(|| anyhow!("unknown fixture {name:?}; known: {}", fixtures::NAMES.join(", ")))?;
        let label = fx.datum.label().expect("fixtures use named types");
        let object = match &fx.object {
            fixtures::FixtureObject::Polytope(p) => polytope_spec(p),
            fixtures::FixtureObject::Semigroup(s) => semigroup_spec(s),
        };
        Ok(Self {
            name: Some(fx.name.to_string()),
            group: GroupSpec { cartan: Some(label.to_string()), ..GroupSpec::default() },
            object: Some(object),
            ..Self::default()
        })
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let specs = [g.cartan.is_some() || (g.rank.is_some() && g.simple_roots.is_none()), g.simple_roots.is_some(), g.trivial.is_some()];
        match specs.iter().filter(|&&b| b).count() {
            0 => bail!("no group given: set a type, explicit simple roots, or a trivial dimension"),
            1 => {}
            _ => bail!("more than one group spec given"),
        }
        if g.rank == Some(0) {
            bail!("rank must be positive");
        }
        if g.trivial == Some(0) {
            bail!("trivial group dimension must be positive");
        }
        if g.form.is_some() && g.simple_roots.is_none() {
            bail!("a form can only accompany explicit simple roots");
        }
        let b = &self.bounds;
        for (name, value) in [
            ("height_bound", b.height_bound.map(|x| x as i128)),
            ("samples", b.samples.map(|x| x as i128)),
            ("max_order", b.max_order.map(|x| x as i128)),
            ("saturation_bound", b.saturation_bound.map(|x| x as i128)),
        ] {
            if value.is_some_and(|v| v <= 0) {
                bail!("bound {name} must be positive");
            }
        }
        if let Some(o) = &self.object {
            match o.kind {
                ObjectKind::Polytope if o.vertices.as_ref().is_none_or(|v| v.is_empty()) => {
                    bail!("polytope object needs a non-empty vertex list")
                }
                ObjectKind::Semigroup if o.generators.is_none() => bail!("semigroup object needs a generator list"),
                ObjectKind::WeightBox if o.vertices.is_some() || o.generators.is_some() => {
                    bail!("weight-box object takes no vertices or generators")
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn height_bound(&self) -> i64 {
        self.bounds.height_bound.unwrap_or(6)
    }

    pub fn max_order(&self) -> usize {
        self.bounds.max_order.unwrap_or(DEFAULT_MAX_ORDER)
    }

    pub fn seed(&self) -> u64 {
        self.bounds.seed.unwrap_or(0)
    }

    pub fn format(&self) -> Format {
        self.output.format.unwrap_or_default()
    }

    pub fn resolve(&self) -> Result<Scenario> {
        self.validate()?;
        let datum = self.group.datum()?;
        let group = Group::generate(&datum, self.max_order()).context("generating the reflection group")?;
        let object = match &self.object {
            None => None,
            Some(spec) => Some(spec.build(&datum)?),
        };
        Ok(Scenario { datum, group, object })
    }
}

impl GroupSpec {
    pub fn named(ty: &str) -> Self {
        Self { cartan: Some(ty.to_string()), ..Self::default() }
    }

    fn cartan_type(&self) -> Result<Option<CartanType>> {
        let text = match (&self.cartan, self.rank) {
            (None, None) => return Ok(None),
            (Some(t), None) => t.clone(),
            (None, Some(_)) => bail!("a rank needs a type letter"),
            (Some(t), Some(r)) if t.chars().all(|c| c.is_ascii_alphabetic()) => format!("{t}{r}"),
            (Some(t), Some(r)) => {
                let ty: CartanType = t.parse()?;
                if ty.rank() != r {
                    bail!("type {t} has rank {}, not {r}", ty.rank());
                }
                t.clone()
            }
        };
        Ok(Some(text.parse()?))
    }

    pub fn datum(&self) -> Result<RootDatum> {
        if let Some(dim) = self.trivial {
            return match &self.lattice {
                None => Ok(RootDatum::trivial(dim)),
                Some(b) => Ok(adapt_simple_system(BilinearForm::standard(dim), Lattice::new(b.clone())?, &[])?),
            };
        }
        if let Some(ty) = self.cartan_type()? {
            let named = RootDatum::named(ty)?;
            let Some(basis) = &self.lattice else { return Ok(named) };
            let lattice = Lattice::new(basis.clone())?;
            let datum = adapt_simple_system(named.form().clone(), lattice, named.simple_roots())
                .with_context(|| format!("adapting {ty} to the given lattice"))?;
            return Ok(datum.with_label(ty.to_string()));
        }
        let roots = self.simple_roots.as_ref().expect("validated");
        let dim = roots
            .first()
            .map(RationalVector::dim)
            .or(self.lattice.as_ref().map(Vec::len))
            .ok_or_else(|| anyhow!("explicit group needs at least one simple root or a lattice"))?;
        let lattice = match &self.lattice {
            Some(b) => Lattice::new(b.clone())?,
            None => Lattice::standard(dim),
        };
        let form = match &self.form {
            Some(g) => BilinearForm::new(g.clone())?,
            None => BilinearForm::standard(dim),
        };
        Ok(adapt_simple_system(form, lattice, roots)?)
    }
}

impl ObjectSpec {
    pub fn weight_box() -> Self {
        Self { kind: ObjectKind::WeightBox, lattice: None, vertices: None, generators: None }
    }

    /// Ambient dimension implied by the object alone, if any.
    pub fn dim(&self) -> Option<usize> {
        let rows = self.vertices.as_ref().or(self.generators.as_ref());
        rows.and_then(|r| r.first()).map(Vec::len).or(self.lattice.as_ref().map(Vec::len))
    }

    fn build(&self, datum: &RootDatum) -> Result<Object> {
        let lattice = match &self.lattice {
            Some(b) => Lattice::new(b.clone())?,
            None => datum.lattice().clone(),
        };
        if lattice.dim() != datum.dim() {
            bail!("object lives in dimension {} but the group acts on dimension {}", lattice.dim(), datum.dim());
        }
        let rows = |rows: &Option<Vec<Vec<i64>>>| -> Result<Vec<Vec<i64>>> {
            let rows = rows.clone().unwrap_or_default();
            if let Some(r) = rows.iter().find(|r| r.len() != lattice.dim()) {
                bail!("coordinate row {r:?} has length {}, expected {}", r.len(), lattice.dim());
            }
            Ok(rows)
        };
        Ok(match self.kind {
            ObjectKind::WeightBox => Object::WeightBox,
            ObjectKind::Polytope => {
                let coords = rows(&self.vertices)?;
                Object::Polytope(LatticePolytope::from_lattice_coords(&coords, lattice).context("building the polytope")?)
            }
            ObjectKind::Semigroup => {
                let gens = rows(&self.generators)?
                    .iter()
                    .map(|r| lattice.from_coordinates(&r.iter().map(|&x| x.into()).collect::<Vec<_>>()))
                    .collect();
                Object::Semigroup(GradedSemigroup::generated(lattice, gens).context("building the semigroup")?)
            }
        })
    }
}

fn int_rows(lattice: &Lattice, points: &[RationalVector]) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    points
        .iter()
        .map(|p| {
            lattice
                .coordinates(p)
                .iter()
                .map(|c| c.to_integer().to_i64().expect("fixture coordinates are small"))
                .collect()
        })
        .collect()
}

fn lattice_field(lattice: &Lattice) -> Option<Vec<RationalVector>> {
    (*lattice != Lattice::standard(lattice.dim())).then(|| lattice.basis().to_vec())
}

pub fn polytope_spec(p: &LatticePolytope) -> ObjectSpec {
    ObjectSpec {
        kind: ObjectKind::Polytope,
        lattice: lattice_field(p.lattice()),
        vertices: Some(int_rows(p.lattice(), p.vertices())),
        generators: None,
    }
}

pub fn semigroup_spec(s: &GradedSemigroup) -> ObjectSpec {
    ObjectSpec {
        kind: ObjectKind::Semigroup,
        lattice: lattice_field(s.lattice()),
        vertices: None,
        generators: Some(int_rows(s.lattice(), s.generators())),
    }
}

/// A resolved config: datum, generated group and built object.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub datum: RootDatum,
    pub group: Group,
    pub object: Option<Object>,
}

#[derive(Debug, Clone)]
pub enum Object {
    Polytope(LatticePolytope),
    Semigroup(GradedSemigroup),
    WeightBox,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_resolve_to_explicit_configs() {
        for name in fixtures::NAMES {
            let cfg = ScenarioConfig::fixture(name).unwrap();
            let text = cfg.to_toml();
            let again = ScenarioConfig::parse(&text).unwrap();
            assert_eq!(again, cfg, "{name}");
            assert_eq!(again.to_toml(), text);
            again.resolve().unwrap();
        }
    }

    #[test]
    fn group_specs_are_exclusive() {
        let mut cfg = ScenarioConfig::default();
        assert!(cfg.validate().is_err());
        cfg.group = GroupSpec::named("A2");
        cfg.validate().unwrap();
        cfg.group.trivial = Some(3);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn type_letter_with_rank() {
        let g = GroupSpec { cartan: Some("B".into()), rank: Some(3), ..GroupSpec::default() };
        assert_eq!(g.datum().unwrap().rank(), 3);
        let bad = GroupSpec { cartan: Some("A2".into()), rank: Some(3), ..GroupSpec::default() };
        assert!(bad.datum().is_err());
    }

    #[test]
    fn bounds_must_be_positive() {
        let cfg = ScenarioConfig::parse("[group]\ntype = \"A1\"\n[bounds]\nsamples = 0\n").unwrap();
        assert!(cfg.validate().unwrap_err().to_string().contains("samples"));
    }

    #[test]
    fn explicit_roots_on_a_lattice() {
        let text = r#"
[group]
simple_roots = [["-1", "1"]]
lattice = [["1", "0"], ["0", "1"]]
"#;
        let cfg = ScenarioConfig::parse(text).unwrap();
        let s = cfg.resolve().unwrap();
        assert_eq!(s.group.order(), 2);
        assert_eq!(s.datum.fundamental_weights()[0].to_string(), "(-1/2,1/2)");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(ScenarioConfig::parse("[group]\ntype = \"A1\"\ncolour = 3\n").is_err());
    }
}
