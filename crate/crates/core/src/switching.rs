//! WQH switching: the partition `{C1, C2, D}`, its hypothesis check, and the
//! switch itself.
//!
//! For a point set `K` at infinity the partition comes from a secant line `k`
//! of `K`, a point `P` of `K` on `k` and two parallel planes `M1`, `M2` with
//! line at infinity `k`: `Ci` is the parallel class of direction `P` inside
//! `Mi`. Two more points `Q1`, `Q2` of `K` off `k`, whose joining line meets
//! `k` outside `K`, later give the non-geometricity witness.

use std::collections::BTreeMap;

use log::warn;
use serde::Serialize;
use thiserror::Error;

use crate::arcs::{intersection_profile, Arc};
use crate::geometry::{
    plane_lines_with_direction, planes_through_infinite_line, proj_line_points, AffPlane, ProjLine,
    ProjPoint,
};
use crate::gf2h::Field;
use crate::graph::{bits, set_bit, Graph};
use crate::linrep::LineSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchingError {
    #[error("the point set has no secant line")]
    NoSecant,
    #[error("no pair Q1, Q2 off a secant has its joining line meet the secant outside the set")]
    NoValidPair,
    #[error("t = {t} does not exceed q(alpha - 1) = {bound}")]
    ThresholdFail { t: usize, bound: usize },
    #[error("alpha must be at least 1")]
    InvalidAlpha,
    #[error("invalid choice: {0}")]
    InvalidChoice(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("switching hypotheses fail: {0}")]
    HypothesesNotVerified(String),
}

/// Optional explicit picks replacing the least-index defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SwitchingChoices {
    /// Index into the secant list (dual-index order).
    pub secant: Option<usize>,
    /// Index into the sorted points of the set on the secant.
    pub p: Option<usize>,
    /// Indices of `Q1`, `Q2` in the sorted point set.
    pub qpair: Option<(usize, usize)>,
    /// Indices of `M1`, `M2` among the planes through the secant.
    pub planes: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SwitchingConfig {
    pub k_line: ProjLine,
    pub secant_index: usize,
    pub p: ProjPoint,
    pub q1: ProjPoint,
    pub q2: ProjPoint,
    /// `<Q1, Q2>` meets `k_line` here, outside the set.
    pub q_meet: ProjPoint,
    pub m1: AffPlane,
    pub m2: AffPlane,
    pub plane_indices: (usize, usize),
    pub t: usize,
    pub alpha: usize,
    /// Largest secant size minus one.
    pub geometric_alpha: usize,
    pub q: usize,
}

impl SwitchingConfig {
    /// Re-checks every structural requirement against `arc`.
    pub fn validate(&self, f: &Field, arc: &Arc) -> Result<(), SwitchingError> {
        let fail = |m: &str| Err(SwitchingError::InvalidChoice(m.to_string()));
        if self.alpha == 0 {
            return Err(SwitchingError::InvalidAlpha);
        }
        let on_line = self
            .k_line
            .points()
            .iter()
            .filter(|p| arc.contains(p))
            .count();
        if on_line < 2 {
            return fail("k_line is not a secant");
        }
        if !(self.k_line.contains(&self.p) && arc.contains(&self.p)) {
            return fail("P must be a point of the set on k_line");
        }
        for qi in [self.q1, self.q2] {
            if !arc.contains(&qi) || self.k_line.contains(&qi) {
                return fail("Q1, Q2 must be points of the set off k_line");
            }
        }
        if self.q1 == self.q2 {
            return fail("Q1 = Q2");
        }
        let joining = proj_line_points(f, self.q1, self.q2).expect("distinct");
        let meet = joining.meet(f, &self.k_line).expect("distinct lines");
        if arc.contains(&meet) || meet != self.q_meet {
            return fail("<Q1, Q2> must meet k_line outside the set");
        }
        if self.t + 1 != arc.len() {
            return fail("t + 1 must equal the size of the set");
        }
        if self.t <= self.q * (self.alpha - 1) {
            return Err(SwitchingError::ThresholdFail {
                t: self.t,
                bound: self.q * (self.alpha - 1),
            });
        }
        if self.m1 == self.m2
            || self.m1.infinite_line != self.k_line
            || self.m2.infinite_line != self.k_line
        {
            return fail("M1, M2 must be distinct planes through k_line");
        }
        Ok(())
    }
}

fn pair_meet(f: &Field, k: &ProjLine, a: ProjPoint, b: ProjPoint) -> ProjPoint {
    proj_line_points(f, a, b)
        .expect("distinct")
        .meet(f, k)
        .expect("distinct lines")
}

/// Least-index switching configuration, honouring any explicit `choices`.
pub fn find_switching_config(
    f: &Field,
    arc: &Arc,
    alpha: usize,
    choices: &SwitchingChoices,
) -> Result<SwitchingConfig, SwitchingError> {
    if alpha == 0 {
        return Err(SwitchingError::InvalidAlpha);
    }
    if arc.is_empty() {
        return Err(SwitchingError::NoSecant);
    }
    let q = f.order() as usize;
    let t = arc.len() - 1;
    let bound = q * (alpha - 1);
    if t <= bound {
        return Err(SwitchingError::ThresholdFail { t, bound });
    }
    let profile = intersection_profile(f, arc);
    if profile.secants.is_empty() {
        return Err(SwitchingError::NoSecant);
    }
    let geometric_alpha = profile.max_intersection() - 1;
    if geometric_alpha != alpha {
        warn!("supplied alpha {alpha} differs from the largest secant size minus one ({geometric_alpha})");
    }

    let secant_ids: Vec<usize> = match choices.secant {
        Some(i) if i < profile.secants.len() => vec![i],
        Some(i) => {
            return Err(SwitchingError::InvalidChoice(format!(
                "secant {i} of {}",
                profile.secants.len()
            )))
        }
        None => (0..profile.secants.len()).collect(),
    };
    let pts = arc.points();
    for si in secant_ids {
        let k = &profile.secants[si];
        let on: Vec<ProjPoint> = pts.iter().copied().filter(|p| k.contains(p)).collect();
        let p = match choices.p {
            Some(i) => *on.get(i).ok_or_else(|| {
                SwitchingError::InvalidChoice(format!("P index {i} of {}", on.len()))
            })?,
            None => on[0],
        };
        let pair = match choices.qpair {
            Some((i, j)) => {
                let (a, b) = match (pts.get(i), pts.get(j)) {
                    (Some(a), Some(b)) if i != j => (*a, *b),
                    _ => return Err(SwitchingError::InvalidChoice(format!("Q pair ({i}, {j})"))),
                };
                if k.contains(&a) || k.contains(&b) {
                    return Err(SwitchingError::InvalidChoice(
                        "Q1, Q2 must lie off the secant".into(),
                    ));
                }
                (!arc.contains(&pair_meet(f, k, a, b))).then_some((a, b))
            }
            None => {
                let off: Vec<ProjPoint> = pts.iter().copied().filter(|p| !k.contains(p)).collect();
                let mut found = None;
                'search: for (i, &a) in off.iter().enumerate() {
                    for &b in &off[i + 1..] {
                        if !arc.contains(&pair_meet(f, k, a, b)) {
                            found = Some((a, b));
                            break 'search;
                        }
                    }
                }
                found
            }
        };
        let Some((q1, q2)) = pair else { continue };

        let planes = planes_through_infinite_line(f, k);
        let (i1, i2) = choices.planes.unwrap_or((0, 1));
        if i1 == i2 || i1 >= planes.len() || i2 >= planes.len() {
            return Err(SwitchingError::InvalidChoice(format!(
                "planes ({i1}, {i2}) of {}",
                planes.len()
            )));
        }
        let cfg = SwitchingConfig {
            k_line: k.clone(),
            secant_index: si,
            p,
            q1,
            q2,
            q_meet: pair_meet(f, k, q1, q2),
            m1: planes[i1].clone(),
            m2: planes[i2].clone(),
            plane_indices: (i1, i2),
            t,
            alpha,
            geometric_alpha,
            q,
        };
        cfg.validate(f, arc)?;
        return Ok(cfg);
    }
    Err(SwitchingError::NoValidPair)
}

/// The two switching cells; everything else is `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionSpec {
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

impl PartitionSpec {
    /// Sorts both cells and checks range and disjointness; equal sizes are
    /// left to [`verify_wqh_hypotheses`].
    pub fn new(
        order: usize,
        mut c1: Vec<usize>,
        mut c2: Vec<usize>,
    ) -> Result<PartitionSpec, SwitchingError> {
        c1.sort_unstable();
        c2.sort_unstable();
        for c in [&c1, &c2] {
            if c.windows(2).any(|w| w[0] == w[1]) {
                return Err(SwitchingError::BadPartition("repeated vertex".into()));
            }
            if let Some(&v) = c.iter().find(|&&v| v >= order) {
                return Err(SwitchingError::BadPartition(format!(
                    "vertex {v} out of range"
                )));
            }
        }
        if let Some(v) = c1.iter().find(|v| c2.binary_search(v).is_ok()) {
            return Err(SwitchingError::BadPartition(format!(
                "vertex {v} in both cells"
            )));
        }
        Ok(PartitionSpec { c1, c2 })
    }

    /// Same cells, the smaller one first.
    pub fn normalized(mut self) -> PartitionSpec {
        if self.c2 < self.c1 {
            std::mem::swap(&mut self.c1, &mut self.c2);
        }
        self
    }
}

/// `Ci` = the lines of direction `P` inside `Mi`.
pub fn build_partition(cfg: &SwitchingConfig, lines: &LineSet) -> PartitionSpec {
    let f = lines.field();
    let cell = |m: &AffPlane| -> Vec<usize> {
        plane_lines_with_direction(f, m, cfg.p)
            .expect("P lies on the planes' line at infinity")
            .iter()
            .map(|l| lines.id_of(l).expect("P belongs to the set"))
            .collect()
    };
    PartitionSpec::new(lines.len(), cell(&cfg.m1), cell(&cfg.m2))
        .expect("disjoint planes give disjoint cells")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborPattern {
    pub in_c1: usize,
    pub in_c2: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct WqhReport {
    pub c1_size: usize,
    pub c2_size: usize,
    /// Induced degree, or `None` when the induced subgraph is irregular.
    pub c1_degree: Option<usize>,
    pub c2_degree: Option<usize>,
    pub union_degree: Option<usize>,
    pub sizes_equal: bool,
    pub degrees_equal: bool,
    /// Vertices of `D` satisfying neither balance nor the cell condition.
    pub violations: Vec<usize>,
    /// Vertices of `D` whose neighbourhood in `C1 u C2` is exactly one cell.
    pub switched: Vec<usize>,
    /// Histogram of `(|N(x) n C1|, |N(x) n C2|)` over `D`.
    pub patterns: Vec<NeighborPattern>,
    pub passed: bool,
}

impl WqhReport {
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if self.c1_degree.is_none() || self.c2_degree.is_none() || self.union_degree.is_none() {
            parts.push("an induced subgraph is irregular".to_string());
        }
        if !self.sizes_equal {
            parts.push(format!("cell sizes {} != {}", self.c1_size, self.c2_size));
        }
        if !self.degrees_equal {
            parts.push("cell degrees differ".to_string());
        }
        if !self.violations.is_empty() {
            parts.push(format!("{} unbalanced vertices", self.violations.len()));
        }
        parts.join("; ")
    }
}

fn mask_of(order: usize, vertices: &[usize]) -> Vec<u64> {
    let mut m = vec![0u64; crate::graph::words_for(order)];
    for &v in vertices {
        set_bit(&mut m, v);
    }
    m
}

fn induced_degree(g: &Graph, cell: &[usize], mask: &[u64]) -> Option<usize> {
    let degs: Vec<usize> = cell
        .iter()
        .map(|&u| crate::graph::and_count(g.row(u), mask))
        .collect();
    match degs.first() {
        None => Some(0),
        Some(&d) => degs.iter().all(|&x| x == d).then_some(d),
    }
}

/// Checks the hypotheses of WQH switching for `ps` on `g`.
pub fn verify_wqh_hypotheses(g: &Graph, ps: &PartitionSpec) -> WqhReport {
    let n = g.order();
    let m1 = mask_of(n, &ps.c1);
    let m2 = mask_of(n, &ps.c2);
    let union: Vec<u64> = m1.iter().zip(&m2).map(|(a, b)| a | b).collect();
    let union_cells: Vec<usize> = bits(&union).collect();

    let c1_degree = induced_degree(g, &ps.c1, &m1);
    let c2_degree = induced_degree(g, &ps.c2, &m2);
    let union_degree = induced_degree(g, &union_cells, &union);
    let sizes_equal = ps.c1.len() == ps.c2.len();
    let degrees_equal = c1_degree.is_some() && c1_degree == c2_degree;

    let mut violations = Vec::new();
    let mut switched = Vec::new();
    let mut patterns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for x in (0..n).filter(|&x| !crate::graph::test_bit(&union, x)) {
        let row = g.row(x);
        let a = crate::graph::and_count(row, &m1);
        let b = crate::graph::and_count(row, &m2);
        *patterns.entry((a, b)).or_default() += 1;
        let whole_cell = (a == ps.c1.len() && b == 0) || (b == ps.c2.len() && a == 0);
        if whole_cell && a != b {
            switched.push(x);
        } else if a != b {
            violations.push(x);
        }
    }
    let passed = c1_degree.is_some()
        && c2_degree.is_some()
        && union_degree.is_some()
        && sizes_equal
        && degrees_equal
        && violations.is_empty();
    WqhReport {
        c1_size: ps.c1.len(),
        c2_size: ps.c2.len(),
        c1_degree,
        c2_degree,
        union_degree,
        sizes_equal,
        degrees_equal,
        violations,
        switched,
        patterns: patterns
            .into_iter()
            .map(|((in_c1, in_c2), count)| NeighborPattern {
                in_c1,
                in_c2,
                count,
            })
            .collect(),
        passed,
    }
}

/// Interchanges adjacency between `C1 u C2` and every vertex of `D` whose
/// neighbourhood there is exactly one cell. Refuses partitions that fail
/// [`verify_wqh_hypotheses`].
pub fn apply_switch(g: &Graph, ps: &PartitionSpec) -> Result<Graph, SwitchingError> {
    let report = verify_wqh_hypotheses(g, ps);
    if !report.passed {
        return Err(SwitchingError::HypothesesNotVerified(report.summary()));
    }
    Ok(switch_unchecked(g, ps, &report.switched))
}

fn switch_unchecked(g: &Graph, ps: &PartitionSpec, switched: &[usize]) -> Graph {
    let n = g.order();
    let union = mask_of(n, &[ps.c1.as_slice(), ps.c2.as_slice()].concat());
    let mut rows = g.rows_owned();
    for &x in switched {
        for (w, m) in rows[x].iter_mut().zip(&union) {
            *w ^= m;
        }
        for c in ps.c1.iter().chain(&ps.c2) {
            rows[*c][x / 64] ^= 1 << (x % 64);
        }
    }
    Graph::from_rows_unchecked(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::denniston_arc;
    use crate::geometry::{proj_normalize, AffLine};
    use crate::linrep::build_line_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    struct Setup {
        f: Field,
        arc: Arc,
        lines: LineSet,
        g: Graph,
    }

    fn setup(h: u32, m: u32) -> Setup {
        let f = Field::new(h).unwrap();
        let arc = denniston_arc(&f, m).unwrap();
        let lines = LineSet::new(&f, &arc);
        let g = build_line_graph(&lines);
        Setup { f, arc, lines, g }
    }

    #[test]
    fn config_small() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        assert_eq!(cfg.t, 5);
        assert_eq!(cfg.secant_index, 0);
        assert_eq!(cfg.geometric_alpha, 1);
        assert!(!s.arc.contains(&cfg.q_meet));
        cfg.validate(&s.f, &s.arc).unwrap();
    }

    #[test]
    fn config_degree_four() {
        let s = setup(3, 2);
        let cfg = find_switching_config(&s.f, &s.arc, 3, &Default::default()).unwrap();
        assert_eq!(cfg.t, 27);
        assert!(cfg.t > 8 * 2);
    }

    #[test]
    fn config_errors() {
        let s = setup(2, 1);
        assert_eq!(
            find_switching_config(&s.f, &s.arc, 3, &Default::default()).unwrap_err(),
            SwitchingError::ThresholdFail { t: 5, bound: 8 }
        );
        assert_eq!(
            find_switching_config(&s.f, &s.arc, 0, &Default::default()).unwrap_err(),
            SwitchingError::InvalidAlpha
        );

        let f = &s.f;
        let e = |v| f.elem(v).unwrap();
        let a = proj_normalize(f, [e(1), e(0), e(0)]).unwrap();
        let b = proj_normalize(f, [e(0), e(1), e(0)]).unwrap();
        let line = proj_line_points(f, a, b).unwrap();
        let full = Arc::new(4, line.points().to_vec());
        assert_eq!(
            find_switching_config(f, &full, 1, &Default::default()).unwrap_err(),
            SwitchingError::NoValidPair
        );

        let single = Arc::new(4, vec![a]);
        assert_eq!(
            find_switching_config(f, &single, 1, &Default::default()).unwrap_err(),
            SwitchingError::ThresholdFail { t: 0, bound: 0 }
        );
        let pair = Arc::new(4, vec![a, b]);
        // one secant and nothing off it
        assert_eq!(
            find_switching_config(f, &pair, 1, &Default::default()).unwrap_err(),
            SwitchingError::NoValidPair
        );
    }

    #[test]
    fn choices_are_honoured() {
        let s = setup(2, 1);
        let choices = SwitchingChoices {
            secant: Some(3),
            p: Some(1),
            qpair: None,
            planes: Some((2, 0)),
        };
        let cfg = find_switching_config(&s.f, &s.arc, 1, &choices).unwrap();
        assert_eq!(cfg.secant_index, 3);
        assert_eq!(cfg.plane_indices, (2, 0));
        let on: Vec<_> = s
            .arc
            .points()
            .iter()
            .filter(|p| cfg.k_line.contains(p))
            .collect();
        assert_eq!(&cfg.p, on[1]);
        let bad = SwitchingChoices {
            secant: Some(99),
            ..Default::default()
        };
        assert!(matches!(
            find_switching_config(&s.f, &s.arc, 1, &bad),
            Err(SwitchingError::InvalidChoice(_))
        ));
        let bad = SwitchingChoices {
            planes: Some((1, 1)),
            ..Default::default()
        };
        assert!(matches!(
            find_switching_config(&s.f, &s.arc, 1, &bad),
            Err(SwitchingError::InvalidChoice(_))
        ));
    }

    #[test]
    fn partition_cells() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        let ps = build_partition(&cfg, &s.lines);
        assert_eq!(ps.c1.len(), 4);
        assert_eq!(ps.c2.len(), 4);
        assert!(ps.c1.iter().all(|v| !ps.c2.contains(v)));
        let all: Vec<usize> = [ps.c1.clone(), ps.c2.clone()].concat();
        assert_eq!(s.g.induced(&all).edge_count(), 0);
    }

    #[test]
    fn hypotheses_hold_with_expected_patterns() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        let ps = build_partition(&cfg, &s.lines);
        let r = verify_wqh_hypotheses(&s.g, &ps);
        assert!(r.passed, "{r:?}");
        let allowed = [(0, 0), (1, 1), (4, 0), (0, 4)];
        assert!(r
            .patterns
            .iter()
            .all(|p| allowed.contains(&(p.in_c1, p.in_c2))));
        assert_eq!(r.switched.len(), 8);
    }

    #[test]
    fn switched_set_is_off_p_lines_in_the_two_planes() {
        for (h, m, alpha) in [(2, 1, 1), (3, 1, 1), (3, 2, 3)] {
            let s = setup(h, m);
            let cfg = find_switching_config(&s.f, &s.arc, alpha, &Default::default()).unwrap();
            let ps = build_partition(&cfg, &s.lines);
            let r = verify_wqh_hypotheses(&s.g, &ps);
            let expected: Vec<usize> = (0..s.lines.len())
                .filter(|&id| {
                    let l: AffLine = s.lines.line(id);
                    l.dir != cfg.p
                        && (cfg.m1.contains_line(&s.f, &l) || cfg.m2.contains_line(&s.f, &l))
                })
                .collect();
            assert_eq!(r.switched, expected);
            assert_eq!(expected.len(), 2 * ((1 << m) - 1) * s.f.order() as usize);
        }
    }

    #[test]
    fn moved_vertex_fails() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        let mut ps = build_partition(&cfg, &s.lines);
        ps.c1.pop();
        let r = verify_wqh_hypotheses(&s.g, &ps);
        assert!(!r.passed);
        assert!(!r.sizes_equal);
        assert!(matches!(
            apply_switch(&s.g, &ps),
            Err(SwitchingError::HypothesesNotVerified(_))
        ));
    }

    #[test]
    fn random_graph_fails() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        let ps = build_partition(&cfg, &s.lines);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = s.g.order();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .filter(|_| rng.gen_bool(0.2))
            .collect();
        let rg = Graph::from_edges(n, edges).unwrap();
        let r = verify_wqh_hypotheses(&rg, &ps);
        assert!(!r.passed);
        assert!(!r.violations.is_empty() || r.c1_degree.is_none() || !r.degrees_equal);
    }

    #[test]
    fn switch_footprint_and_involution() {
        let s = setup(2, 1);
        let cfg = find_switching_config(&s.f, &s.arc, 1, &Default::default()).unwrap();
        let ps = build_partition(&cfg, &s.lines);
        let g2 = apply_switch(&s.g, &ps).unwrap();
        assert_ne!(g2, s.g);
        assert_eq!(g2.degrees(), s.g.degrees());
        assert_eq!(s.g.symmetric_difference(&g2).len(), 64);
        assert_eq!(apply_switch(&g2, &ps).unwrap(), s.g);
        // still a simple graph
        Graph::from_rows(g2.order(), g2.rows_owned()).unwrap();
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionSpec::new(4, vec![0, 1], vec![1, 2]).is_err());
        assert!(PartitionSpec::new(4, vec![0, 4], vec![2]).is_err());
        assert!(PartitionSpec::new(4, vec![0, 0], vec![2]).is_err());
        let ps = PartitionSpec::new(4, vec![3, 2], vec![1, 0])
            .unwrap()
            .normalized();
        assert_eq!(ps.c1, vec![0, 1]);
    }

    #[test]
    fn edgeless_graph_trivially_passes() {
        let g = Graph::empty(6);
        let ps = PartitionSpec::new(6, vec![0, 1], vec![2, 3]).unwrap();
        let r = verify_wqh_hypotheses(&g, &ps);
        assert!(r.passed);
        assert!(r.switched.is_empty());
        assert_eq!(apply_switch(&g, &ps).unwrap(), g);
    }
}
