//! Validated run settings and the objects built from them.

use std::path::PathBuf;

use serde::Serialize;
use srgswitch::arcs::{
    denniston_arc_with_subgroup, intersection_profile, ArcError, IntersectionProfile,
};
use srgswitch::gf2h::FieldError;
use srgswitch::prelude::*;
use srgswitch::switching::SwitchingError;

use crate::args::GeometryArgs;
use crate::error::CliError;

/// Where the point set at infinity comes from.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcSource {
    Denniston { m: u32, subgroup: Vec<u32> },
    File { path: PathBuf },
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub h: u32,
    /// Dimension of the projective space at infinity; always 2.
    pub n: u32,
    pub source: ArcSource,
    pub alpha: Option<usize>,
    pub choices: SwitchingChoices,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

fn pair(v: &Option<Vec<usize>>) -> Option<(usize, usize)> {
    v.as_ref().map(|p| (p[0], p[1]))
}

impl RunConfig {
    pub fn from_args(a: &GeometryArgs) -> Result<RunConfig, CliError> {
        let h =
            a.h.ok_or_else(|| CliError::Usage("--h is required".into()))?;
        let source = match (&a.arc, a.m) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage(
                    "--arc and --m are mutually exclusive".into(),
                ))
            }
            (Some(_), None) if a.subgroup.is_some() => {
                return Err(CliError::Usage(
                    "--subgroup only applies to Denniston arcs".into(),
                ))
            }
            (Some(path), None) => ArcSource::File { path: path.clone() },
            (None, Some(m)) => {
                if m == 0 || m >= h {
                    return Err(CliError::Usage(format!("need 0 < m < h, got m={m}, h={h}")));
                }
                let subgroup = a
                    .subgroup
                    .clone()
                    .unwrap_or_else(|| (0..m).map(|i| 1 << i).collect());
                if subgroup.len() != m as usize {
                    return Err(CliError::Usage(format!(
                        "--subgroup needs {m} basis elements"
                    )));
                }
                ArcSource::Denniston { m, subgroup }
            }
            (None, None) => return Err(CliError::Usage("one of --m or --arc is required".into())),
        };
        Ok(RunConfig {
            h,
            n: 2,
            source,
            alpha: a.alpha,
            choices: SwitchingChoices {
                secant: a.secant,
                p: a.p,
                qpair: pair(&a.qpair),
                planes: pair(&a.pplane),
            },
            out: a.out.clone(),
        })
    }
}

/// Field, point set, line set and line graph.
pub struct Geometry {
    pub config: RunConfig,
    pub field: Field,
    pub arc: Arc,
    pub profile: IntersectionProfile,
    pub lines: LineSet,
    pub gamma: Graph,
}

fn field_error(e: FieldError) -> CliError {
    CliError::Usage(e.to_string())
}

fn arc_error(e: ArcError) -> CliError {
    match e {
        ArcError::Field(e) => field_error(e),
        other => CliError::Usage(other.to_string()),
    }
}

pub fn switching_error(e: SwitchingError) -> CliError {
    match e {
        SwitchingError::InvalidAlpha
        | SwitchingError::InvalidChoice(_)
        | SwitchingError::BadPartition(_) => CliError::Usage(e.to_string()),
        other => CliError::Failed(other.to_string()),
    }
}

impl Geometry {
    pub fn build(config: RunConfig) -> Result<Geometry, CliError> {
        let field = Field::new(config.h).map_err(field_error)?;
        let arc = match &config.source {
            ArcSource::Denniston { subgroup, .. } => {
                let basis = subgroup
                    .iter()
                    .map(|&v| field.elem(v))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(field_error)?;
                denniston_arc_with_subgroup(&field, &basis).map_err(arc_error)?
            }
            ArcSource::File { path } => load_arc(path, &field).map_err(arc_error)?,
        };
        if arc.is_empty() {
            return Err(CliError::Usage("the point set is empty".into()));
        }
        let profile = intersection_profile(&field, &arc);
        let lines = LineSet::new(&field, &arc);
        log::info!("{} directions, {} lines", arc.len(), lines.len());
        let gamma = build_line_graph(&lines);
        Ok(Geometry {
            config,
            field,
            arc,
            profile,
            lines,
            gamma,
        })
    }

    pub fn t(&self) -> usize {
        self.arc.len() - 1
    }

    /// Largest secant size minus one.
    pub fn geometric_alpha(&self) -> usize {
        self.profile.max_intersection().saturating_sub(1)
    }

    pub fn alpha(&self) -> usize {
        self.config.alpha.unwrap_or_else(|| self.geometric_alpha())
    }

    pub fn switching(&self) -> Result<(SwitchingConfig, PartitionSpec), CliError> {
        let cfg = find_switching_config(&self.field, &self.arc, self.alpha(), &self.config.choices)
            .map_err(switching_error)?;
        let ps = build_partition(&cfg, &self.lines);
        Ok((cfg, ps))
    }
}
