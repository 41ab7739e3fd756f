//! End-to-end verifiers with machine-readable reports.
//!
//! Every check yields one named verdict. Failing verdicts carry a concrete
//! counterexample, and reports sort their checks by name so that the output
//! does not depend on scheduling.

mod affine;
pub mod fixtures;
mod oracle;
mod projective;
mod props;
mod report;

use thiserror::Error;

use crate::charring::CharError;
use crate::latgeom::{GeomError, SaturationReport};
use crate::rootsys::RootError;
use crate::weylgroup::GroupError;

pub use affine::{dominant_points_in, verify_affine, AffineConfig};
pub use oracle::{brute_force_invariants, AmbientCharacter};
pub use projective::{cone_identity_slice, verify_projective, ProjectiveConfig};
pub use props::{figure1_fixture, verify_dominance, verify_reflection_differences, DominanceConfig};
pub use report::{CheckResult, GradedCount, GroupSummary, Verdict, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("semigroup is not saturated: {} lies in the cone but is not generated (scan bound {})", fmt_point(.0), .0.bound)]
    NotSaturated(SaturationReport),
    #[error("{0}")]
    Precondition(String),
}

fn fmt_point(r: &SaturationReport) -> String {
    r.counterexample.as_ref().map(|p| p.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests;
