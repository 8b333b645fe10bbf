//! The `dk/1` input document shared by every command.

use serde::{Deserialize, Serialize};

use dk_core::cartesian::Point;
use dk_core::cdga::{AlgebraSpec, FreeCdga, Generator, MorphismSpec};
use dk_core::linear::ChainComplex;
use dk_core::simplicial::{disk_chains, gamma, sphere_chains, SimplicialVectorSpace};
use dk_core::DkError;

use crate::CliError;

pub const VERSION: &str = "dk/1";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<SimplicialSpec>,
    /// Source of the algebra map for the map commands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<AlgebraInput>,
    /// Images of the `algebra` generators in `target`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MorphismSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<CellSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Point>,
    /// Classical points of the geometric source (the space of `target`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_points: Option<Vec<Point>>,
    /// Classical points of the geometric target (the space of `algebra`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_points: Option<Vec<Point>>,
}

/// A chain complex, either named or explicit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComplexSpec {
    Sphere { n: usize },
    Disk { n: usize },
    Sum { parts: Vec<ComplexSpec> },
    Explicit { complex: ChainComplex },
}

impl ComplexSpec {
    /// Largest degree carrying a named cell.
    fn needed(&self) -> usize {
        match self {
            ComplexSpec::Sphere { n } | ComplexSpec::Disk { n } => *n,
            ComplexSpec::Sum { parts } => parts.iter().map(ComplexSpec::needed).max().unwrap_or(0),
            ComplexSpec::Explicit { complex } => complex.top(),
        }
    }

    /// The complex in degrees `0..=max(top, needed)`.
    pub fn build(&self, top: usize) -> Result<ChainComplex, CliError> {
        let top = top.max(self.needed());
        Ok(match self {
            ComplexSpec::Sphere { n } => ChainComplex::sphere(*n, top).into_complete(),
            ComplexSpec::Disk { n } => ChainComplex::disk(*n, top).into_complete(),
            ComplexSpec::Sum { parts } => {
                let mut acc = ChainComplex::zero(top).into_complete();
                for p in parts {
                    acc = acc.direct_sum(&p.build(top)?);
                }
                acc
            }
            ComplexSpec::Explicit { complex } => complex.padded(top)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SimplicialSpec {
    /// Reduced chains of `Δ^n / ∂Δ^n`.
    Sphere { n: usize },
    /// Reduced chains of `Δ^n / Λ^n_0`.
    Disk { n: usize },
    Gamma { of: ComplexSpec },
    Explicit { space: SimplicialVectorSpace },
}

impl SimplicialSpec {
    pub fn build(&self, top: usize) -> Result<SimplicialVectorSpace, CliError> {
        Ok(match self {
            SimplicialSpec::Sphere { n } => sphere_chains(*n, top),
            SimplicialSpec::Disk { n } => disk_chains(*n, top),
            SimplicialSpec::Gamma { of } => gamma(&of.build(top)?.truncated(top)),
            SimplicialSpec::Explicit { space } => space.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraInput {
    Symmetric(SymmetricInput),
    Spec(AlgebraSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetricInput {
    /// Graded symmetric algebra on this complex with its linear
    /// differential.
    pub symmetric_on: ComplexSpec,
}

impl AlgebraInput {
    pub fn build(&self) -> Result<FreeCdga, CliError> {
        Ok(match self {
            AlgebraInput::Symmetric(s) => FreeCdga::symmetric_on(&s.symmetric_on.build(0)?)?,
            AlgebraInput::Spec(spec) => FreeCdga::from_spec(spec)?,
        })
    }
}

/// A generator attached along a cycle written in the current algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellSpec {
    pub generator: Generator,
    pub cycle: String,
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: InputDoc = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.version != VERSION {
            return Err(CliError::Parse(format!("unsupported version `{}`, expected `{VERSION}`", doc.version)));
        }
        Ok(doc)
    }

    pub fn algebra(&self) -> Result<FreeCdga, CliError> {
        self.algebra.as_ref().ok_or_else(|| missing("algebra"))?.build()
    }

    pub fn target(&self) -> Result<Option<FreeCdga>, CliError> {
        self.target.as_ref().map(AlgebraInput::build).transpose()
    }

    pub fn complex(&self, top: usize) -> Result<ChainComplex, CliError> {
        self.complex.as_ref().ok_or_else(|| missing("complex"))?.build(top)
    }

    pub fn simplicial(&self, top: usize) -> Result<SimplicialVectorSpace, CliError> {
        self.simplicial.as_ref().ok_or_else(|| missing("simplicial"))?.build(top)
    }

    pub fn point(&self) -> Result<&Point, CliError> {
        self.point.as_ref().ok_or_else(|| missing("point"))
    }
}

pub fn missing(field: &str) -> CliError {
    CliError::Core(DkError::Parse(format!("input document lacks `{field}`")))
}
