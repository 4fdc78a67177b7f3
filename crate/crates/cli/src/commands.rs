use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use srgswitch::analysis::{
    denniston_line_graph_params, CharPolyMod, Spectrum, WitnessReport, DEFAULT_PRIMES,
};
use srgswitch::explore::ExploreOptions;
use srgswitch::linrep::LineRecord;
use srgswitch::prelude::*;
use srgswitch::switching::WqhReport;

use crate::args::{ExploreArgs, GeometryArgs, SpectrumArgs, VerifyArgs};
use crate::config::{switching_error, ArcSource, Geometry, RunConfig};
use crate::error::CliError;
use crate::output::Output;

#[derive(Serialize)]
struct FieldInfo {
    h: u32,
    q: u32,
    modulus: u32,
    lambda: Option<u32>,
}

impl FieldInfo {
    fn of(f: &Field) -> FieldInfo {
        FieldInfo {
            h: f.degree(),
            q: f.order(),
            modulus: f.modulus(),
            lambda: f.find_irreducible_lambda().ok().map(|l| l.value()),
        }
    }
}

#[derive(Serialize)]
struct SpectrumInfo {
    spectrum: Option<Spectrum>,
    /// Why no integral spectrum exists, if so.
    note: Option<String>,
}

impl SpectrumInfo {
    fn of(p: Option<SrgParams>) -> SpectrumInfo {
        match p.map(|p| srg_spectrum(&p)) {
            Some(Ok(s)) => SpectrumInfo {
                spectrum: Some(s),
                note: None,
            },
            Some(Err(e)) => SpectrumInfo {
                spectrum: None,
                note: Some(e.to_string()),
            },
            None => SpectrumInfo {
                spectrum: None,
                note: Some("not strongly regular".into()),
            },
        }
    }
}

/// Parameters predicted for a Denniston source.
fn expected_params(run: &RunConfig) -> Option<SrgParams> {
    match run.source {
        ArcSource::Denniston { m, .. } => Some(denniston_line_graph_params(run.h, m)),
        ArcSource::File { .. } => None,
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    graph6_decode(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct BuildReport<'a> {
    field: FieldInfo,
    run: &'a RunConfig,
    arc_size: usize,
    t: usize,
    geometric_alpha: usize,
    intersection_histogram: &'a BTreeMap<usize, usize>,
    vertices: usize,
    edges: usize,
    params: Option<SrgParams>,
    srg_error: Option<String>,
    expected: Option<SrgParams>,
    #[serde(flatten)]
    spectrum: SpectrumInfo,
}

pub fn build(a: &GeometryArgs) -> Result<(), CliError> {
    let geo = Geometry::build(RunConfig::from_args(a)?)?;
    let out = Output::new(geo.config.out.clone())?;
    let check = srg_check(&geo.gamma);
    let expected = expected_params(&geo.config);
    let report = BuildReport {
        field: FieldInfo::of(&geo.field),
        run: &geo.config,
        arc_size: geo.arc.len(),
        t: geo.t(),
        geometric_alpha: geo.geometric_alpha(),
        intersection_histogram: &geo.profile.histogram,
        vertices: geo.gamma.order(),
        edges: geo.gamma.edge_count(),
        params: check.as_ref().ok().copied(),
        srg_error: check.as_ref().err().map(|e| e.to_string()),
        expected,
        spectrum: SpectrumInfo::of(check.as_ref().ok().copied()),
    };
    out.graph("gamma.g6", &geo.gamma)?;
    out.json("build.json", &report, false)?;
    match (check, expected) {
        (Err(e), _) => Err(CliError::Failed(e.to_string())),
        (Ok(p), Some(x)) if p != x => {
            Err(CliError::Failed(format!("parameters {p}, expected {x}")))
        }
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct SwitchReport<'a> {
    field: FieldInfo,
    run: &'a RunConfig,
    config: &'a SwitchingConfig,
    partition: &'a PartitionSpec,
    hypotheses: &'a WqhReport,
    flipped_pairs: usize,
    params_before: Option<SrgParams>,
    params_after: Option<SrgParams>,
    connected: bool,
}

pub fn switch(a: &GeometryArgs) -> Result<(), CliError> {
    let geo = Geometry::build(RunConfig::from_args(a)?)?;
    let out = Output::new(geo.config.out.clone())?;
    let (cfg, ps) = geo.switching()?;
    let hypotheses = verify_wqh_hypotheses(&geo.gamma, &ps);
    let gp = apply_switch(&geo.gamma, &ps).map_err(switching_error)?;
    let before = srg_check(&geo.gamma).ok();
    let after = srg_check(&gp).ok();
    let report = SwitchReport {
        field: FieldInfo::of(&geo.field),
        run: &geo.config,
        config: &cfg,
        partition: &ps,
        hypotheses: &hypotheses,
        flipped_pairs: geo.gamma.symmetric_difference(&gp).len(),
        params_before: before,
        params_after: after,
        connected: gp.is_connected(),
    };
    out.graph("gamma_prime.g6", &gp)?;
    out.json("switch.json", &report, false)?;
    if before.is_none() || before != after || !report.connected {
        return Err(CliError::Failed(
            "switched graph does not keep the parameters".into(),
        ));
    }
    Ok(())
}

#[derive(Deserialize)]
struct PartitionFile {
    c1: Vec<usize>,
    c2: Vec<usize>,
}

#[derive(Serialize)]
struct VerifyReport {
    vertices: usize,
    params: Option<SrgParams>,
    srg_error: Option<String>,
    #[serde(flatten)]
    spectrum: SpectrumInfo,
    t: usize,
    geometric: bool,
    pencil_count: usize,
    edge_clique_caps: BTreeMap<usize, usize>,
    failing_edges: Vec<(usize, usize)>,
    hypotheses: Option<WqhReport>,
}

pub fn verify(a: &VerifyArgs) -> Result<(), CliError> {
    if a.t == 0 {
        return Err(CliError::Usage("--t must be positive".into()));
    }
    let g = read_graph(&a.input)?;
    let hypotheses = match &a.partition {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let pf: PartitionFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let ps = PartitionSpec::new(g.order(), pf.c1, pf.c2).map_err(switching_error)?;
            Some(verify_wqh_hypotheses(&g, &ps))
        }
        None => None,
    };
    let check = srg_check(&g);
    let geo = geometricity_report(&g, a.t);
    let report = VerifyReport {
        vertices: g.order(),
        params: check.as_ref().ok().copied(),
        srg_error: check.as_ref().err().map(|e| e.to_string()),
        spectrum: SpectrumInfo::of(check.as_ref().ok().copied()),
        t: a.t,
        geometric: geo.geometric(),
        pencil_count: geo.pencil_count,
        edge_clique_caps: geo.edge_clique_caps,
        failing_edges: geo.failing_edges,
        hypotheses,
    };
    Output::new(a.out.clone())?.json("verify.json", &report, true)?;
    if let Err(e) = check {
        return Err(CliError::Failed(e.to_string()));
    }
    if let Some(h) = &report.hypotheses {
        if !h.passed {
            return Err(CliError::Failed(format!("partition: {}", h.summary())));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    field: FieldInfo,
    run: &'a RunConfig,
    config: &'a SwitchingConfig,
    witness: &'a WitnessReport,
    passed: bool,
}

pub fn witness(a: &GeometryArgs) -> Result<(), CliError> {
    let geo = Geometry::build(RunConfig::from_args(a)?)?;
    let (cfg, ps) = geo.switching()?;
    let gp = apply_switch(&geo.gamma, &ps).map_err(switching_error)?;
    let w = proposition_witness(&cfg, &geo.lines, &geo.gamma, &gp);
    let report = WitnessOutput {
        field: FieldInfo::of(&geo.field),
        run: &geo.config,
        config: &cfg,
        witness: &w,
        passed: w.passed(),
    };
    Output::new(geo.config.out.clone())?.json("witness.json", &report, true)?;
    if !w.passed() {
        let failed: Vec<&str> = w
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        return Err(CliError::Failed(format!(
            "witness checks failed: {}",
            failed.join(", ")
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct SpectrumReport {
    vertices: usize,
    params: Option<SrgParams>,
    #[serde(flatten)]
    spectrum: SpectrumInfo,
    charpoly_mod: Vec<CharPolyMod>,
    /// Whether each polynomial equals the one predicted by the spectrum.
    matches_spectrum: Option<bool>,
}

pub fn spectrum(a: &SpectrumArgs) -> Result<(), CliError> {
    let g = match &a.input {
        Some(path) => read_graph(path)?,
        None => {
            let geo = Geometry::build(RunConfig::from_args(&a.geometry)?)?;
            if a.switched {
                let (_, ps) = geo.switching()?;
                apply_switch(&geo.gamma, &ps).map_err(switching_error)?
            } else {
                geo.gamma
            }
        }
    };
    let primes = a.primes.clone().unwrap_or_else(|| DEFAULT_PRIMES.to_vec());
    let charpoly = char_poly_mod(&g, &primes).map_err(|e| CliError::Usage(e.to_string()))?;
    let params = srg_check(&g).ok();
    let info = SpectrumInfo::of(params);
    let matches = info.spectrum.map(|s| {
        charpoly
            .iter()
            .all(|c| c.coefficients == s.char_poly_mod(c.prime))
    });
    let report = SpectrumReport {
        vertices: g.order(),
        params,
        spectrum: info,
        charpoly_mod: charpoly,
        matches_spectrum: matches,
    };
    Output::new(a.geometry.out.clone())?.json("spectrum.json", &report, true)?;
    match (params, matches) {
        (None, _) => Err(CliError::Failed("not strongly regular".into())),
        (_, Some(false)) => Err(CliError::Failed(
            "characteristic polynomial disagrees with the spectrum".into(),
        )),
        _ => Ok(()),
    }
}

pub fn explore(a: &ExploreArgs) -> Result<(), CliError> {
    let geo = Geometry::build(RunConfig::from_args(&a.geometry)?)?;
    let opts = ExploreOptions {
        depth: a.depth,
        limit: a.limit,
        seed: a.seed,
        t: geo.t(),
        cell_size: a.cell_size.unwrap_or(geo.field.order() as usize),
    };
    if opts.cell_size < 2 {
        return Err(CliError::Usage("--cell-size must be at least 2".into()));
    }
    let census = srgswitch::prelude::explore(&geo.gamma, &opts)
        .map_err(|e| CliError::Failed(e.to_string()))?;
    log::info!(
        "census levels {:?}, {} distinct",
        census.per_level,
        census.distinct
    );
    let out = Output::new(geo.config.out.clone())?;
    if geo.config.out.is_some() {
        for e in &census.entries {
            out.graph(&format!("{}.g6", e.hash), &e.graph)?;
        }
    }
    out.json("census.json", &census, true)?;
    if census.rejected > 0 {
        return Err(CliError::Failed(format!(
            "{} switched graphs changed parameters",
            census.rejected
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ExportReport<'a> {
    field: FieldInfo,
    run: &'a RunConfig,
    points: &'a [srgswitch::geometry::ProjPoint],
    lines: Vec<LineRecord>,
}

pub fn export(a: &GeometryArgs) -> Result<(), CliError> {
    let geo = Geometry::build(RunConfig::from_args(a)?)?;
    let report = ExportReport {
        field: FieldInfo::of(&geo.field),
        run: &geo.config,
        points: geo.arc.points(),
        lines: geo.lines.records(),
    };
    Output::new(geo.config.out.clone())?.json("lines.json", &report, true)
}
