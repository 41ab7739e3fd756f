use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{value_parser, Args, Parser, Subcommand};
use reflquot::exactnum::{parse_rational, RationalMatrix, RationalVector};
use reflquot::theoremcheck::fixtures;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::config::{polytope_spec, Format, GroupSpec, ObjectKind, ObjectSpec, ScenarioConfig};

#[derive(Debug, Parser)]
#[command(name = "reflquot", version, about = "Exact invariant rings of reflection groups acting on lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Adapted simple roots, all roots, fundamental weights, Z basis and |W|.
    Roots(ScenarioArgs),
    /// Expand Ψ(χ^v) for a dominant weight v, as monomials and as orbit sums.
    Psi {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Ambient coordinates, comma separated (e.g. `1,3` or `1/2,-1/2`); `0` is the origin.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Preimage under Ψ of an invariant character read from a JSON or TOML file.
    Invpsi {
        #[command(flatten)]
        scenario: ScenarioArgs,
        file: PathBuf,
    },
    /// Verify a scenario; exits with status 1 when any check fails.
    Check(ScenarioArgs),
    /// Graded lattice-point counts of a polytope scenario.
    Hilbert(ScenarioArgs),
    /// Print the fully explicit scenario config.
    Config(ScenarioArgs),
}

#[derive(Debug, Default, Args)]
pub struct ScenarioArgs {
    /// Scenario config (TOML).
    #[arg(long, conflicts_with = "fixture")]
    pub config: Option<PathBuf>,
    /// Bundled scenario name.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Cartan type such as `A2`, or a bare letter together with --rank.
    #[arg(long = "type")]
    pub cartan: Option<String>,
    #[arg(long, value_parser = value_parser!(u64).range(1..))]
    pub rank: Option<u64>,
    /// File with a list of simple roots (rationals as strings), optionally with a `form`.
    #[arg(long, conflicts_with = "cartan")]
    pub simple_roots: Option<PathBuf>,
    /// `Z<n>` for the standard lattice, or a file with a basis.
    #[arg(long)]
    pub lattice: Option<String>,
    /// Bundled polytope name or a file with `vertices` (and optionally `lattice`).
    #[arg(long, conflicts_with = "semigroup")]
    pub polytope: Option<String>,
    /// `orthant`, `lattice`, `gens:2,3` (rows split by `;`), or a file with `generators`.
    #[arg(long)]
    pub semigroup: Option<String>,
    /// Run Ψ and dominance checks on a box of weights instead of a semigroup.
    #[arg(long, conflicts_with_all = ["polytope", "semigroup"])]
    pub weight_box: bool,
    #[arg(long)]
    pub tmax: Option<u64>,
    #[arg(long, value_parser = value_parser!(i64).range(1..))]
    pub height_bound: Option<i64>,
    #[arg(long, value_parser = value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_parser = value_parser!(u64).range(1..))]
    pub max_order: Option<u64>,
    #[arg(long, value_parser = value_parser!(i64).range(1..))]
    pub saturation_bound: Option<i64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl ScenarioArgs {
    /// Config file or fixture first, then flags on top.
    pub fn to_config(&self) -> Result<ScenarioConfig> {
        let mut cfg = match (&self.config, &self.fixture) {
            (Some(path), _) => ScenarioConfig::load(path)?,
            (None, Some(name)) => ScenarioConfig::fixture(name)?,
            (None, None) => ScenarioConfig::default(),
        };
        if self.cartan.is_some() || self.rank.is_some() {
            cfg.group = GroupSpec { cartan: self.cartan.clone(), rank: self.rank.map(|r| r as usize), ..GroupSpec::default() };
        }
        if let Some(path) = &self.simple_roots {
            let doc: RootsFile = load_doc(path)?;
            let (roots, form) = doc.into_parts();
            cfg.group = GroupSpec { simple_roots: Some(roots), form, ..GroupSpec::default() };
        }
        if let Some(spec) = &self.lattice {
            cfg.group.lattice = Some(parse_lattice(spec)?);
        }
        if let Some(p) = &self.polytope {
            cfg.object = Some(polytope_object(p)?);
        }
        if let Some(s) = &self.semigroup {
            let dim = group_dim(&cfg.group)?;
            cfg.object = Some(semigroup_object(s, dim)?);
        }
        if self.weight_box {
            cfg.object = Some(ObjectSpec::weight_box());
        }
        if cfg.group == GroupSpec::default() {
            if let Some(dim) = cfg.object.as_ref().and_then(ObjectSpec::dim) {
                cfg.group.trivial = Some(dim);
            }
        }
        let b = &mut cfg.bounds;
        b.t_max = self.tmax.or(b.t_max);
        b.height_bound = self.height_bound.or(b.height_bound);
        b.samples = self.samples.map(|x| x as usize).or(b.samples);
        b.seed = self.seed.or(b.seed);
        b.max_order = self.max_order.map(|x| x as usize).or(b.max_order);
        b.saturation_bound = self.saturation_bound.or(b.saturation_bound);
        if let Some(out) = &self.out {
            cfg.output.path = Some(out.display().to_string());
        }
        cfg.output.format = self.format.or(cfg.output.format);
        cfg.validate()?;
        Ok(cfg)
    }
}

fn group_dim(g: &GroupSpec) -> Result<Option<usize>> {
    if *g == GroupSpec::default() {
        return Ok(None);
    }
    Ok(Some(g.datum()?.dim()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RootsFile {
    List(Vec<RationalVector>),
    Table {
        simple_roots: Vec<RationalVector>,
        #[serde(default)]
        form: Option<RationalMatrix>,
    },
}

impl RootsFile {
    fn into_parts(self) -> (Vec<RationalVector>, Option<RationalMatrix>) {
        match self {
            Self::List(r) => (r, None),
            Self::Table { simple_roots, form } => (simple_roots, form),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BasisFile {
    List(Vec<RationalVector>),
    Table { basis: Vec<RationalVector> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    #[serde(default)]
    lattice: Option<Vec<RationalVector>>,
    vertices: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SemigroupFile {
    #[serde(default)]
    lattice: Option<Vec<RationalVector>>,
    generators: Vec<Vec<i64>>,
}

/// Reads a TOML file (by extension) or JSON otherwise.
pub fn load_doc<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_doc(&text, path.extension().is_some_and(|e| e == "toml")).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_doc<T: DeserializeOwned>(text: &str, toml_syntax: bool) -> Result<T> {
    if toml_syntax {
        toml::from_str(text).map_err(|e| anyhow!("{e}"))
    } else {
        serde_json::from_str(text).map_err(|e| anyhow!("{e}"))
    }
}

fn parse_lattice(spec: &str) -> Result<Vec<RationalVector>> {
    if let Some(n) = spec.strip_prefix('Z').or_else(|| spec.strip_prefix('z')) {
        if let Ok(n) = n.parse::<usize>() {
            if n == 0 {
                bail!("lattice Z0 has no points to act on");
            }
            return Ok((0..n).map(|i| RationalVector::unit(n, i)).collect());
        }
    }
    Ok(match load_doc::<BasisFile>(Path::new(spec))? {
        BasisFile::List(b) | BasisFile::Table { basis: b } => b,
    })
}

fn polytope_object(spec: &str) -> Result<ObjectSpec> {
    let named = match spec.to_ascii_lowercase().as_str() {
        "square" => Some(fixtures::square()),
        "simplex3" | "simplex" => Some(fixtures::simplex3()),
        "b2-diamond" | "diamond" => Some(fixtures::b2_diamond()),
        "permutohedron-a3" | "permutohedron" => Some(fixtures::permutohedron_a3()),
        _ => None,
    };
    if let Some((_, p)) = named {
        return Ok(polytope_spec(&p));
    }
    if !Path::new(spec).exists() {
        bail!("{spec:?} is neither a bundled polytope (square, simplex3, b2-diamond, permutohedron-a3) nor a file");
    }
    let doc: PolytopeFile = load_doc(Path::new(spec))?;
    Ok(ObjectSpec { kind: ObjectKind::Polytope, lattice: doc.lattice, vertices: Some(doc.vertices), generators: None })
}

fn semigroup_object(spec: &str, group_dim: Option<usize>) -> Result<ObjectSpec> {
    let generators = |gens: Vec<Vec<i64>>| ObjectSpec {
        kind: ObjectKind::Semigroup,
        lattice: None,
        vertices: None,
        generators: Some(gens),
    };
    let unit = |n: usize, i: usize, s: i64| -> Vec<i64> { (0..n).map(|k| if k == i { s } else { 0 }).collect() };
    let need_dim = || group_dim.ok_or_else(|| anyhow!("semigroup {spec:?} needs a group to fix the dimension"));
    match spec {
        "orthant" => {
            let n = need_dim()?;
            return Ok(generators((0..n).map(|i| unit(n, i, 1)).collect()));
        }
        "lattice" => {
            let n = need_dim()?;
            return Ok(generators((0..n).flat_map(|i| [unit(n, i, 1), unit(n, i, -1)]).collect()));
        }
        _ => {}
    }
    if let Some(list) = spec.strip_prefix("gens:") {
        return Ok(generators(parse_generators(list)?));
    }
    let doc: SemigroupFile = load_doc(Path::new(spec))?;
    Ok(ObjectSpec { kind: ObjectKind::Semigroup, lattice: doc.lattice, vertices: None, generators: Some(doc.generators) })
}

/// `2,3` is two one-dimensional generators; `1,0;0,1` is two rows.
fn parse_generators(list: &str) -> Result<Vec<Vec<i64>>> {
    let int = |s: &str| s.trim().parse::<i64>().map_err(|_| anyhow!("generator entry {s:?} is not an integer"));
    let rows: Vec<Vec<i64>> = if list.contains(';') {
        list.split(';').map(|row| row.split(',').map(int).collect()).collect::<Result<_>>()?
    } else {
        list.split(',').map(|x| int(x).map(|x| vec![x])).collect::<Result<_>>()?
    };
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        bail!("generators {list:?} have inconsistent lengths");
    }
    Ok(rows)
}

/// Ambient point from `1,3`, `(1,3)` or `0` (the origin of dimension `dim`).
pub fn parse_point(text: &str, dim: usize) -> Result<RationalVector> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<_> = inner.split(',').map(parse_rational).collect::<Result<_, _>>()?;
    if coords.len() == 1 && dim > 1 && num_traits::Zero::is_zero(&coords[0]) {
        return Ok(RationalVector::zeros(dim));
    }
    if coords.len() != dim {
        bail!("point {text} has {} coordinates, the group acts on dimension {dim}", coords.len());
    }
    Ok(RationalVector::new(coords))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_lists() {
        assert_eq!(parse_generators("2,3").unwrap(), vec![vec![2], vec![3]]);
        assert_eq!(parse_generators("1,0;0,1").unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert!(parse_generators("1,0;1").is_err());
        assert!(parse_generators("x").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("1,3", 2).unwrap(), RationalVector::from_ints(&[1, 3]));
        assert_eq!(parse_point("(1/2,-1/2)", 2).unwrap().to_string(), "(1/2,-1/2)");
        assert_eq!(parse_point("0", 3).unwrap(), RationalVector::zeros(3));
        assert!(parse_point("1,2,3", 2).is_err());
    }

    #[test]
    fn standard_lattices() {
        assert_eq!(parse_lattice("Z2").unwrap().len(), 2);
        assert!(parse_lattice("Z0").is_err());
    }
}
