//! Explicit certificate that a switched line graph is not the line graph of
//! any partial linear space with `t + 1` lines per point.
//!
//! Take the least point `R` of `M1` and the lines `L1 = R Q1`, `L2 = R Q2`.
//! They meet at `R` in both graphs. Before switching the only `(t + 1)`-clique
//! through them is the pencil at `R`; after switching no clique through them
//! reaches `t + 1` vertices.

use serde::Serialize;

use super::clique::{cliques_through_edge, max_clique_through_edge};
use crate::geometry::{AffLine, AffPoint};
use crate::graph::{and_count, Graph};
use crate::linrep::LineSet;
use crate::switching::SwitchingConfig;

#[derive(Debug, Clone, Serialize)]
pub struct WitnessCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub r: AffPoint,
    pub l1: usize,
    pub l2: usize,
    pub l1_line: AffLine,
    pub l2_line: AffLine,
    /// Exact largest clique through `(L1, L2)` before and after switching.
    pub max_clique_original: usize,
    pub max_clique_switched: usize,
    /// Number of `(t + 1)`-cliques through `(L1, L2)` before switching.
    pub pencils_original: usize,
    /// `q(alpha - 1) + 1`, the coplanar clique bound, logged as stated.
    pub planar_bound: usize,
    pub checks: Vec<WitnessCheck>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Builds and checks the witness edge for `cfg` on the original graph `g`
/// and its switched version `gp`.
pub fn proposition_witness(
    cfg: &SwitchingConfig,
    lines: &LineSet,
    g: &Graph,
    gp: &Graph,
) -> WitnessReport {
    let f = lines.field();
    let t = cfg.t;
    let r = cfg.m1.base;
    let dir_of = |p| lines.dir_index(p).expect("Q lies in the set");
    let l1 = lines.line_through(&r, dir_of(&cfg.q1));
    let l2 = lines.line_through(&r, dir_of(&cfg.q2));
    let (line1, line2) = (lines.line(l1), lines.line(l2));
    let mut checks = Vec::new();
    let mut check = |name: &'static str, passed: bool, detail: String| {
        checks.push(WitnessCheck {
            name,
            passed,
            detail,
        })
    };

    let outside = [&line1, &line2]
        .iter()
        .all(|l| !cfg.m1.contains_line(f, l) && !cfg.m2.contains_line(f, l));
    check(
        "lines_outside_planes",
        outside,
        format!("L1 = {line1}, L2 = {line2}"),
    );

    check("adjacent_original", g.adj(l1, l2), String::new());
    check("adjacent_switched", gp.adj(l1, l2), String::new());
    let unchanged = g.row(l1) == gp.row(l1) && g.row(l2) == gp.row(l2);
    check("neighbourhoods_unchanged", unchanged, String::new());

    let m2_lines = lines.lines_in_plane(&cfg.m2);
    let mut m2_mask = vec![0u64; gp.row_words()];
    for &id in &m2_lines {
        m2_mask[id / 64] |= 1 << (id % 64);
    }
    let common: Vec<u64> = gp
        .row(l1)
        .iter()
        .zip(gp.row(l2))
        .map(|(a, b)| a & b)
        .collect();
    let in_m2 = and_count(&common, &m2_mask);
    check(
        "no_common_neighbour_in_m2",
        in_m2 == 0,
        format!(
            "{in_m2} common neighbours among {} lines of M2",
            m2_lines.len()
        ),
    );

    // The joining line of the two traces on M2 has direction <Q1,Q2> n k.
    let meets_m2 = |l: &AffLine| l.points(f).into_iter().find(|p| cfg.m2.contains(f, p));
    let trace_detail = match (meets_m2(&line1), meets_m2(&line2)) {
        (Some(s1), Some(s2)) if s1 != s2 => {
            let ok = lines.dir_index(&cfg.q_meet).is_none()
                && line1.dir != cfg.q_meet
                && crate::geometry::proj_normalize(f, crate::geometry::vadd(s1.0, s2.0)).ok()
                    == Some(cfg.q_meet);
            (
                ok,
                format!(
                    "S1 = {s1}, S2 = {s2}, direction {} outside the set",
                    cfg.q_meet
                ),
            )
        }
        _ => (true, "an Li misses M2".to_string()),
    };
    check("trace_line_not_in_set", trace_detail.0, trace_detail.1);

    let max_clique_original = max_clique_through_edge(g, l1, l2, usize::MAX).unwrap_or(0);
    let original = cliques_through_edge(g, l1, l2, t + 1).unwrap_or_default();
    let mut pencil = lines.pencil(&r);
    pencil.sort_unstable();
    check(
        "unique_pencil_original",
        max_clique_original == t + 1 && original == vec![pencil],
        format!(
            "max clique {max_clique_original}, {} cliques of size {}",
            original.len(),
            t + 1
        ),
    );

    let max_clique_switched = max_clique_through_edge(gp, l1, l2, usize::MAX).unwrap_or(0);
    check(
        "clique_bound_switched",
        max_clique_switched <= t,
        format!("max clique {max_clique_switched}, t = {t}"),
    );

    WitnessReport {
        r,
        l1,
        l2,
        l1_line: line1,
        l2_line: line2,
        max_clique_original,
        max_clique_switched,
        pencils_original: original.len(),
        planar_bound: cfg.q * (cfg.alpha - 1) + 1,
        checks,
    }
}
