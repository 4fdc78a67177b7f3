//! Point sets in PG(2, q): Denniston maximal arcs, intersection profiles and
//! a plain-text loader for arbitrary sets.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use log::warn;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{all_proj_lines, proj_normalize, ProjLine, ProjPoint};
use crate::gf2h::{Field, FieldElem, FieldError};

#[derive(Debug, Error)]
pub enum ArcError {
    #[error("Denniston arcs need 0 < m < h, got m={m}, h={h}")]
    DegreeOutOfRange { h: u32, m: u32 },
    #[error("subgroup basis is not linearly independent over GF(2)")]
    DependentBasis,
    #[error("line {line} meets the set in {count} points, expected 0 or {degree}")]
    NotMaximal {
        line: ProjPoint,
        count: usize,
        degree: usize,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A set of points of PG(2, q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    points: Vec<ProjPoint>,
    q: u32,
    declared_degree: Option<usize>,
}

impl Arc {
    /// Sorts and deduplicates `points`.
    pub fn new(q: u32, mut points: Vec<ProjPoint>) -> Arc {
        points.sort_unstable();
        points.dedup();
        Arc {
            points,
            q,
            declared_degree: None,
        }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn declared_degree(&self) -> Option<usize> {
        self.declared_degree
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Position of `p` in the sorted point list.
    pub fn position(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }
}

/// How the lines of PG(2, q) meet a point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionProfile {
    /// intersection size -> number of lines.
    pub histogram: BTreeMap<usize, usize>,
    /// Lines meeting the set in at least two points, in dual-index order.
    #[serde(skip)]
    pub secants: Vec<ProjLine>,
}

impl IntersectionProfile {
    pub fn total_lines(&self) -> usize {
        self.histogram.values().sum()
    }

    /// Largest intersection size attained.
    pub fn max_intersection(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }
}

fn span_gf2(basis: &[FieldElem]) -> Result<Vec<FieldElem>, ArcError> {
    let mut span = vec![0u32];
    for b in basis {
        if span.contains(&b.value()) {
            return Err(ArcError::DependentBasis);
        }
        let shifted: Vec<u32> = span.iter().map(|s| s ^ b.value()).collect();
        span.extend(shifted);
    }
    span.sort_unstable();
    Ok(span.into_iter().map(FieldElem::from_raw).collect())
}

/// Denniston arc of degree `2^m` with the additive subgroup spanned by
/// `1, x, ..., x^(m-1)`.
pub fn denniston_arc(f: &Field, m: u32) -> Result<Arc, ArcError> {
    let h = f.degree();
    if m == 0 || m >= h {
        return Err(ArcError::DegreeOutOfRange { h, m });
    }
    let basis: Vec<FieldElem> = (0..m).map(|i| FieldElem::from_raw(1 << i)).collect();
    denniston_arc_with_subgroup(f, &basis)
}

/// Denniston arc `{(x : y : 1) : x^2 + l x y + y^2 in A}` where `A` is the
/// GF(2)-span of `basis` and `l` is [`Field::find_irreducible_lambda`].
pub fn denniston_arc_with_subgroup(f: &Field, basis: &[FieldElem]) -> Result<Arc, ArcError> {
    let h = f.degree();
    let m = basis.len() as u32;
    if m == 0 || m >= h {
        return Err(ArcError::DegreeOutOfRange { h, m });
    }
    let subgroup = span_gf2(basis)?;
    let lambda = f.find_irreducible_lambda()?;
    let mut points = Vec::new();
    for x in f.elements() {
        for y in f.elements() {
            let form = f.add(f.add(f.square(x), f.mul(lambda, f.mul(x, y))), f.square(y));
            if subgroup.binary_search(&form).is_ok() {
                points.push(proj_normalize(f, [x, y, FieldElem::ONE]).expect("z = 1"));
            }
        }
    }
    let mut arc = Arc::new(f.order(), points);
    arc.declared_degree = Some(1 << m);
    Ok(arc)
}

/// Intersection sizes of every line of PG(2, q) with `arc`.
pub fn intersection_profile(f: &Field, arc: &Arc) -> IntersectionProfile {
    let mut histogram = BTreeMap::new();
    let mut secants = Vec::new();
    for line in all_proj_lines(f) {
        let count = line.points().iter().filter(|p| arc.contains(p)).count();
        *histogram.entry(count).or_insert(0) += 1;
        if count >= 2 {
            secants.push(line);
        }
    }
    IntersectionProfile { histogram, secants }
}

/// Profile of `arc`, failing on the first line whose intersection is not 0 or `degree`.
pub fn verify_maximal_arc(
    f: &Field,
    arc: &Arc,
    degree: usize,
) -> Result<IntersectionProfile, ArcError> {
    let profile = intersection_profile(f, arc);
    if let Some(&count) = profile.histogram.keys().find(|&&c| c != 0 && c != degree) {
        let line = all_proj_lines(f)
            .find(|l| l.points().iter().filter(|p| arc.contains(p)).count() == count)
            .expect("histogram entry has a witness");
        return Err(ArcError::NotMaximal {
            line: line.dual(),
            count,
            degree,
        });
    }
    Ok(profile)
}

/// Parses an arc file: one point per line as three integers, `#` starts a comment.
pub fn parse_arc(source: &str, text: &str, f: &Field) -> Result<Arc, ArcError> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let err = |message: String| ArcError::Parse {
            path: source.to_string(),
            line: lineno + 1,
            message,
        };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(format!(
                "expected 3 coordinates, found {}",
                fields.len()
            )));
        }
        let mut coords = [FieldElem::ZERO; 3];
        for (slot, tok) in coords.iter_mut().zip(&fields) {
            let v: u32 = tok
                .parse()
                .map_err(|_| err(format!("not an integer: {tok:?}")))?;
            *slot = f.elem(v).map_err(|e| err(e.to_string()))?;
        }
        let p = proj_normalize(f, coords).map_err(|e| err(e.to_string()))?;
        if points.contains(&p) {
            warn!("{source}:{}: duplicate point {p} ignored", lineno + 1);
        }
        points.push(p);
    }
    Ok(Arc::new(f.order(), points))
}

pub fn load_arc(path: &Path, f: &Field) -> Result<Arc, ArcError> {
    let text = fs::read_to_string(path)?;
    parse_arc(&path.display().to_string(), &text, f)
}
