use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use reflquot::charring::{Character, CharacterDoc, CharacterRing, InvariantCharacter};
use reflquot::exactnum::RationalVector;
use reflquot::latgeom::{orbit_count, slice_by_domain};
use reflquot::rootsys::WeightPoint;
use reflquot::theoremcheck::{
    figure1_fixture, verify_affine, verify_dominance, verify_projective, verify_reflection_differences, AffineConfig,
    DominanceConfig, GroupSummary, ProjectiveConfig, VerificationReport,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::args::{load_doc, parse_point};
use crate::config::{Format, Object, Scenario, ScenarioConfig};

/// What a command hands back to `main`: the rendered document and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub status: i32,
    /// One-line summary printed when the body goes to a file.
    pub summary: String,
}

impl Outcome {
    fn ok(body: String, summary: impl Into<String>) -> Self {
        Self { body, status: 0, summary: summary.into() }
    }
}

/// Writes the body to `--out` (printing the summary) or to stdout.
pub fn emit(cfg: &ScenarioConfig, outcome: &Outcome) -> Result<()> {
    match &cfg.output.path {
        Some(path) => {
            fs::write(path, &outcome.body).with_context(|| format!("writing {path}"))?;
            println!("{} (written to {path})", outcome.summary);
        }
        None => print!("{}", outcome.body),
    }
    Ok(())
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn roots(cfg: &ScenarioConfig) -> Result<Outcome> {
    let Scenario { datum, group, .. } = cfg.resolve()?;
    let label = datum.label().unwrap_or("custom").to_string();
    let body = match cfg.format() {
        Format::Json => pretty(&json!({
            "datum": datum.to_doc(),
            "order": group.order(),
            "roots": datum.all_roots(),
            "cartan": datum.cartan(),
        })),
        Format::Csv => bail!("roots has no CSV form; use text or json"),
        Format::Text => {
            let list = |vs: &[RationalVector]| vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            let mut out = String::new();
            let _ = writeln!(out, "type: {label} (rank {}, dim {})", datum.rank(), datum.dim());
            let _ = writeln!(out, "|W| = {}", group.order());
            let _ = writeln!(out, "simple roots: {}", list(datum.simple_roots()));
            let _ = writeln!(out, "roots ({}): {}", datum.all_roots().len(), list(datum.all_roots()));
            let _ = writeln!(out, "fundamental weights ({}): {}", datum.fundamental_weights().len(), list(datum.fundamental_weights()));
            let _ = writeln!(out, "z basis ({}): {}", datum.z_basis().len(), list(datum.z_basis()));
            let _ = writeln!(out, "cartan matrix: {:?}", datum.cartan());
            out
        }
    };
    Ok(Outcome::ok(body, format!("{label}: |W| = {}", group.order())))
}

pub fn psi(cfg: &ScenarioConfig, point: &str) -> Result<Outcome> {
    let Scenario { datum, group, .. } = cfg.resolve()?;
    let ring = CharacterRing::new(&datum, &group);
    let v = parse_point(point, datum.dim())?;
    let u = ring.weight(&v).with_context(|| format!("{v} is not a weight"))?;
    datum.require_dominant(&v)?;
    let expanded = ring.psi(&u)?;
    let orbit = ring.psi_orbit(&u)?;
    let lhs = format!("Ψ({})", Character::monomial(u.clone()).display_with(&datum));
    let body = match cfg.format() {
        Format::Json => pretty(&json!({
            "point": v,
            "weight": u,
            "expanded": CharacterDoc::from(&expanded),
            "orbit": CharacterDoc::from(&orbit),
            "expanded_display": expanded.display_with(&datum),
            "orbit_display": orbit.display_with(&datum),
        })),
        Format::Csv => {
            let mut out = String::from("point,coeff\n");
            for (p, a) in sorted_terms(&datum, expanded.terms().iter()) {
                let _ = writeln!(out, "\"{p}\",{a}");
            }
            out
        }
        Format::Text => {
            let pad = " ".repeat(lhs.chars().count());
            format!("{lhs} = {}\n{pad} = {}\n", expanded.display_with(&datum), orbit.display_with(&datum))
        }
    };
    Ok(Outcome::ok(body, format!("{lhs}: {} terms", expanded.len())))
}

fn sorted_terms<'a>(
    datum: &reflquot::rootsys::RootDatum,
    terms: impl Iterator<Item = (&'a WeightPoint, &'a BigInt)>,
) -> Vec<(RationalVector, BigInt)> {
    let mut v: Vec<_> = terms.map(|(p, a)| (p.reconstruct(datum), a.clone())).collect();
    v.sort();
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDoc {
    #[serde(default = "orbit_tag")]
    basis: String,
    terms: Vec<InputTerm>,
}

fn orbit_tag() -> String {
    "orbit".to_string()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InputTerm {
    point: InputPoint,
    coeff: InputCoeff,
}

/// Ambient coordinates, or the split `{z, lambda}` form used in output files.
#[derive(Deserialize)]
#[serde(untagged)]
enum InputPoint {
    Ambient(RationalVector),
    Split(WeightPoint),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum InputCoeff {
    Int(i64),
    Text(String),
}

fn read_invariant(ring: &CharacterRing<'_>, path: &Path) -> Result<InvariantCharacter> {
    let doc: InputDoc = load_doc(path)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in doc.terms {
        let p = match t.point {
            InputPoint::Split(p) => p,
            InputPoint::Ambient(v) => ring.weight(&v).with_context(|| format!("{v} is not a weight"))?,
        };
        let a = match t.coeff {
            InputCoeff::Int(a) => BigInt::from(a),
            InputCoeff::Text(s) => s.trim().parse().map_err(|_| anyhow!("coefficient {s:?} is not an integer"))?,
        };
        terms.push((p, a));
    }
    match doc.basis.as_str() {
        "orbit" => Ok(InvariantCharacter::from_terms(terms)?),
        "monomial" => Ok(ring.to_orbit_basis(&Character::from_terms(terms))?),
        other => bail!("unknown basis {other:?}; expected \"orbit\" or \"monomial\""),
    }
}

pub fn invpsi(cfg: &ScenarioConfig, file: &Path) -> Result<Outcome> {
    let Scenario { datum, group, .. } = cfg.resolve()?;
    let ring = CharacterRing::new(&datum, &group);
    let g = read_invariant(&ring, file)?;
    let f = ring.psi_inverse(&g)?;
    if ring.psi_linear(&f)? != ring.expand(&g)? {
        bail!("round trip failed: Ψ of the computed preimage differs from the input");
    }
    let body = match cfg.format() {
        Format::Json => pretty(&json!({
            "input": CharacterDoc::from(&g),
            "preimage": CharacterDoc::from(&f),
            "input_display": g.display_with(&datum),
            "preimage_display": f.display_with(&datum),
            "round_trip": true,
        })),
        Format::Csv => {
            let mut out = String::from("point,coeff\n");
            for (p, a) in sorted_terms(&datum, f.terms().iter()) {
                let _ = writeln!(out, "\"{p}\",{a}");
            }
            out
        }
        Format::Text => format!("{}\n", f.display_with(&datum)),
    };
    Ok(Outcome::ok(body, format!("preimage with {} terms, round trip verified", f.len())))
}

pub fn check(cfg: &ScenarioConfig) -> Result<Outcome> {
    let started = Instant::now();
    let Scenario { datum, group, object } = cfg.resolve()?;
    let name = cfg.name.clone().unwrap_or_else(|| "custom".to_string());
    let seed = cfg.seed();
    let mut report = match object.as_ref().ok_or_else(|| anyhow!("check needs a polytope, semigroup or weight box"))? {
        Object::Semigroup(s) => {
            let mut ac = AffineConfig { height_bound: cfg.height_bound(), seed, ..AffineConfig::default() };
            ac.samples = cfg.bounds.samples.unwrap_or(ac.samples);
            ac.saturation_bound = cfg.bounds.saturation_bound.unwrap_or(ac.saturation_bound);
            verify_affine(&datum, &group, s, &ac).context("verifying the semigroup scenario")?
        }
        Object::Polytope(p) => {
            let mut pc = ProjectiveConfig { seed, ..ProjectiveConfig::default() };
            pc.t_max = cfg.bounds.t_max.unwrap_or(pc.t_max);
            pc.samples = cfg.bounds.samples.unwrap_or(pc.samples);
            verify_projective(&datum, &group, p, &pc).context("verifying the polytope scenario")?
        }
        Object::WeightBox => {
            let mut dc = DominanceConfig { seed, ..DominanceConfig::default() };
            dc.height_bound = cfg.bounds.height_bound.unwrap_or(dc.height_bound);
            dc.pairs = cfg.bounds.samples.unwrap_or(dc.pairs);
            let mut r = verify_dominance(&datum, &group, &dc).context("checking the dominance order")?;
            let refl = verify_reflection_differences(&datum, &group, datum.lattice(), dc.height_bound)
                .context("checking reflection differences")?;
            r.extend(refl.checks);
            r.object = "weight box".to_string();
            r
        }
    };
    if name == "figure1" {
        report.extend(figure1_fixture().checks);
    }
    report.scenario = name;
    report.group = Some(GroupSummary::new(&datum, &group));
    report.seed = Some(seed);
    let report = report.finalize(started);
    let body = match cfg.format() {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
        Format::Csv if !report.graded_counts.is_empty() => report.graded_counts_csv(),
        Format::Csv => checks_csv(&report),
    };
    let failed = report.failures().count();
    let summary = if failed == 0 {
        format!("PASS {}: {} checks", report.scenario, report.checks.len())
    } else {
        format!("FAIL {}: {failed} of {} checks failed", report.scenario, report.checks.len())
    };
    Ok(Outcome { body, status: i32::from(failed > 0), summary })
}

fn checks_csv(report: &VerificationReport) -> String {
    let mut out = String::from("name,verdict\n");
    for c in &report.checks {
        let _ = writeln!(out, "{},{}", c.name, c.verdict.as_str());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub t: u64,
    pub total_points: usize,
    pub orbit_count: usize,
    pub domain_slice_count: usize,
}

pub fn hilbert_rows(cfg: &ScenarioConfig) -> Result<Vec<HilbertRow>> {
    let Scenario { datum, group, object } = cfg.resolve()?;
    let Some(Object::Polytope(p)) = object else {
        bail!("hilbert needs a polytope scenario (use --polytope or a polytope fixture)");
    };
    let t_max = cfg.bounds.t_max.unwrap_or(ProjectiveConfig::default().t_max);
    Ok((0..=t_max)
        .map(|t| {
            let points = p.lattice_points(t);
            HilbertRow {
                t,
                total_points: points.len(),
                orbit_count: orbit_count(&group, &points),
                domain_slice_count: slice_by_domain(&datum, &points).len(),
            }
        })
        .collect())
}

pub fn hilbert(cfg: &ScenarioConfig) -> Result<Outcome> {
    let rows = hilbert_rows(cfg)?;
    let body = match cfg.output.format.unwrap_or(Format::Csv) {
        Format::Json => pretty(&rows),
        Format::Csv | Format::Text => {
            let mut out = String::from("t,total_points,orbit_count,domain_slice_count\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{}", r.t, r.total_points, r.orbit_count, r.domain_slice_count);
            }
            out
        }
    };
    Ok(Outcome::ok(body, format!("{} graded pieces", rows.len())))
}

pub fn config(cfg: &ScenarioConfig) -> Result<Outcome> {
    cfg.resolve()?;
    Ok(Outcome::ok(cfg.to_toml(), "scenario config"))
}
