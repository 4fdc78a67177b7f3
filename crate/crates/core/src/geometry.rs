//! Points, lines and planes of AG(3, q) together with the plane PG(2, q) at
//! infinity.
//!
//! Affine points are coordinate triples. A point at infinity is a normalized
//! homogeneous triple (leftmost nonzero coordinate 1); it doubles as the
//! direction of every affine line through it. All identities are canonical
//! forms, so equality is plain coordinate equality and points index densely.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2h::{Field, FieldElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("a projective line needs two distinct points")]
    EqualPoints,
    #[error("lines are identical")]
    IdenticalLines,
    #[error("direction {dir} does not lie on the plane's line at infinity")]
    DirectionNotOnPlane { dir: ProjPoint },
}

pub type Vec3 = [FieldElem; 3];

pub(crate) fn vadd(a: Vec3, b: Vec3) -> Vec3 {
    [
        FieldElem::from_raw(a[0].value() ^ b[0].value()),
        FieldElem::from_raw(a[1].value() ^ b[1].value()),
        FieldElem::from_raw(a[2].value() ^ b[2].value()),
    ]
}

pub(crate) fn vscale(f: &Field, s: FieldElem, a: Vec3) -> Vec3 {
    [f.mul(s, a[0]), f.mul(s, a[1]), f.mul(s, a[2])]
}

pub(crate) fn dot(f: &Field, a: Vec3, b: Vec3) -> FieldElem {
    f.add(
        f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])),
        f.mul(a[2], b[2]),
    )
}

/// Cross product; in characteristic 2 every minus sign is a plus.
pub(crate) fn cross(f: &Field, a: Vec3, b: Vec3) -> Vec3 {
    [
        f.add(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
        f.add(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
        f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
    ]
}

pub(crate) fn det3(f: &Field, a: Vec3, b: Vec3, c: Vec3) -> FieldElem {
    dot(f, a, cross(f, b, c))
}

fn is_zero(v: Vec3) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// A point of PG(2, q), normalized so its leftmost nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProjPoint(Vec3);

impl ProjPoint {
    pub fn coords(&self) -> Vec3 {
        self.0
    }

    /// Position of the leading 1.
    pub fn pivot(&self) -> usize {
        self.0
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point is nonzero")
    }

    /// Rank in the sorted list of all `q^2 + q + 1` normalized points.
    pub fn index(&self, q: u32) -> usize {
        let [_, b, c] = self.0.map(|e| e.value() as usize);
        let q = q as usize;
        match self.pivot() {
            2 => 0,
            1 => 1 + c,
            _ => 1 + q + b * q + c,
        }
    }

    /// Inverse of [`ProjPoint::index`].
    pub fn from_index(q: u32, index: usize) -> Option<ProjPoint> {
        let qq = q as usize;
        let e = |v: usize| FieldElem::from_raw(v as u32);
        if index == 0 {
            Some(ProjPoint([
                FieldElem::ZERO,
                FieldElem::ZERO,
                FieldElem::ONE,
            ]))
        } else if index <= qq {
            Some(ProjPoint([FieldElem::ZERO, FieldElem::ONE, e(index - 1)]))
        } else if index < qq * qq + qq + 1 {
            let r = index - 1 - qq;
            Some(ProjPoint([FieldElem::ONE, e(r / qq), e(r % qq)]))
        } else {
            None
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Every point of PG(2, q) in index order.
pub fn all_proj_points(q: u32) -> impl Iterator<Item = ProjPoint> {
    let n = (q as usize) * (q as usize) + q as usize + 1;
    (0..n).map(move |i| ProjPoint::from_index(q, i).unwrap())
}

pub fn proj_normalize(f: &Field, v: Vec3) -> Result<ProjPoint, GeometryError> {
    let lead = v
        .iter()
        .copied()
        .find(|c| !c.is_zero())
        .ok_or(GeometryError::ZeroVector)?;
    let s = f.inv(lead).expect("lead is nonzero");
    Ok(ProjPoint(vscale(f, s, v)))
}

/// A line of PG(2, q): its points plus its dual coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjLine {
    /// The normalized normal vector `n`; the line is `{p : n . p = 0}`.
    dual: ProjPoint,
    points: Vec<ProjPoint>,
}

impl ProjLine {
    /// The line `{p : n . p = 0}` for the dual point `n`.
    pub fn from_dual(f: &Field, dual: ProjPoint) -> ProjLine {
        // Two independent solutions of n . p = 0.
        let n = dual.coords();
        let basis: Vec<Vec3> = [
            [FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO],
            [FieldElem::ZERO, FieldElem::ONE, FieldElem::ZERO],
            [FieldElem::ZERO, FieldElem::ZERO, FieldElem::ONE],
        ]
        .into_iter()
        .map(|e| cross(f, n, e))
        .filter(|v| !is_zero(*v))
        .collect();
        let a = proj_normalize(f, basis[0]).unwrap();
        let b = basis[1..]
            .iter()
            .map(|v| proj_normalize(f, *v).unwrap())
            .find(|p| *p != a)
            .expect("normal of a nonzero vector spans a plane");
        Self::span(f, a, b)
    }

    fn span(f: &Field, a: ProjPoint, b: ProjPoint) -> ProjLine {
        let mut points: Vec<ProjPoint> = std::iter::once(a)
            .chain(
                f.elements()
                    .map(|t| proj_normalize(f, vadd(vscale(f, t, a.0), b.0)).unwrap()),
            )
            .collect();
        points.sort_unstable();
        points.dedup();
        let dual = proj_normalize(f, cross(f, a.0, b.0)).unwrap();
        ProjLine { dual, points }
    }

    pub fn dual(&self) -> ProjPoint {
        self.dual
    }

    /// Rank of this line among all lines, in dual-point order.
    pub fn index(&self, q: u32) -> usize {
        self.dual.index(q)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Common point of two distinct lines.
    pub fn meet(&self, f: &Field, other: &ProjLine) -> Option<ProjPoint> {
        proj_normalize(f, cross(f, self.dual.0, other.dual.0)).ok()
    }
}

/// Every line of PG(2, q) in dual-index order.
pub fn all_proj_lines(f: &Field) -> impl Iterator<Item = ProjLine> + '_ {
    all_proj_points(f.order()).map(move |d| ProjLine::from_dual(f, d))
}

/// The projective line through two distinct points, all `q + 1` points sorted.
pub fn proj_line_points(
    f: &Field,
    p1: ProjPoint,
    p2: ProjPoint,
) -> Result<ProjLine, GeometryError> {
    if p1 == p2 {
        return Err(GeometryError::EqualPoints);
    }
    Ok(ProjLine::span(f, p1, p2))
}

/// A point of AG(3, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffPoint(pub Vec3);

impl AffPoint {
    pub fn from_values(f: &Field, x: u32, y: u32, z: u32) -> Option<AffPoint> {
        Some(AffPoint([
            f.elem(x).ok()?,
            f.elem(y).ok()?,
            f.elem(z).ok()?,
        ]))
    }

    /// `x q^2 + y q + z`, which agrees with lexicographic order.
    pub fn index(&self, q: u32) -> usize {
        let q = q as usize;
        let [x, y, z] = self.0.map(|e| e.value() as usize);
        (x * q + y) * q + z
    }

    pub fn from_index(q: u32, index: usize) -> AffPoint {
        let qq = q as usize;
        let e = |v: usize| FieldElem::from_raw(v as u32);
        AffPoint([e(index / (qq * qq)), e(index / qq % qq), e(index % qq)])
    }
}

impl fmt::Display for AffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn all_aff_points(q: u32) -> impl Iterator<Item = AffPoint> {
    let n = (q as usize).pow(3);
    (0..n).map(move |i| AffPoint::from_index(q, i))
}

/// An affine line: its lexicographically least point and its direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffLine {
    pub base: AffPoint,
    pub dir: ProjPoint,
}

impl AffLine {
    pub fn points(&self, f: &Field) -> Vec<AffPoint> {
        f.elements()
            .map(|t| AffPoint(vadd(self.base.0, vscale(f, t, self.dir.0))))
            .collect()
    }

    pub fn contains(&self, f: &Field, p: &AffPoint) -> bool {
        // p - base must be a multiple of dir.
        is_zero(cross(f, vadd(p.0, self.base.0), self.dir.0))
    }
}

impl fmt::Display for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+t{}", self.base, self.dir)
    }
}

/// Canonical form of the line through `p` with direction `d`.
///
/// Along the line only the pivot coordinate of `d` takes every value (the
/// ones before it are constant), so the least point has that coordinate 0.
pub fn line_canonicalize(f: &Field, p: AffPoint, d: ProjPoint) -> AffLine {
    let j = d.pivot();
    let base = vadd(p.0, vscale(f, p.0[j], d.0));
    AffLine {
        base: AffPoint(base),
        dir: d,
    }
}

/// Whether two distinct affine lines share a point.
pub fn lines_meet(f: &Field, l1: &AffLine, l2: &AffLine) -> Result<bool, GeometryError> {
    if l1 == l2 {
        return Err(GeometryError::IdenticalLines);
    }
    if l1.dir == l2.dir {
        return Ok(false);
    }
    let diff = vadd(l1.base.0, l2.base.0);
    Ok(det3(f, diff, l1.dir.0, l2.dir.0).is_zero())
}

/// An affine plane, given by its least point and its line at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffPlane {
    pub base: AffPoint,
    pub infinite_line: ProjLine,
}

impl AffPlane {
    fn normal(&self) -> Vec3 {
        self.infinite_line.dual().coords()
    }

    pub fn contains(&self, f: &Field, p: &AffPoint) -> bool {
        dot(f, self.normal(), vadd(p.0, self.base.0)).is_zero()
    }

    /// Whether every point of `line` lies in this plane.
    pub fn contains_line(&self, f: &Field, line: &AffLine) -> bool {
        self.infinite_line.contains(&line.dir) && self.contains(f, &line.base)
    }

    /// The `q^2` points of the plane in lexicographic order.
    pub fn points(&self, f: &Field) -> Vec<AffPoint> {
        plane_points(f, self.normal(), dot(f, self.normal(), self.base.0))
    }
}

/// Points `x` with `n . x = c`, sorted.
fn plane_points(f: &Field, n: Vec3, c: FieldElem) -> Vec<AffPoint> {
    let j = n.iter().position(|e| !e.is_zero()).expect("nonzero normal");
    let nj_inv = f.inv(n[j]).unwrap();
    let (i0, i1) = match j {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut pts = Vec::with_capacity((f.order() as usize).pow(2));
    for a in f.elements() {
        for b in f.elements() {
            let mut x = [FieldElem::ZERO; 3];
            x[i0] = a;
            x[i1] = b;
            let rest = f.add(f.mul(n[i0], a), f.mul(n[i1], b));
            x[j] = f.mul(nj_inv, f.add(c, rest));
            pts.push(AffPoint(x));
        }
    }
    pts.sort_unstable();
    pts
}

/// The `q` parallel planes whose line at infinity is `k`, sorted by base point.
pub fn planes_through_infinite_line(f: &Field, k: &ProjLine) -> Vec<AffPlane> {
    let n = k.dual().coords();
    let mut planes: Vec<AffPlane> = f
        .elements()
        .map(|c| AffPlane {
            base: plane_points(f, n, c)[0],
            infinite_line: k.clone(),
        })
        .collect();
    planes.sort_by_key(|p| p.base);
    planes
}

/// The parallel class of direction `d` inside `plane`: `q` canonical lines, sorted.
pub fn plane_lines_with_direction(
    f: &Field,
    plane: &AffPlane,
    d: ProjPoint,
) -> Result<Vec<AffLine>, GeometryError> {
    if !plane.infinite_line.contains(&d) {
        return Err(GeometryError::DirectionNotOnPlane { dir: d });
    }
    let mut lines: Vec<AffLine> = plane
        .points(f)
        .into_iter()
        .map(|p| line_canonicalize(f, p, d))
        .collect();
    lines.sort_unstable();
    lines.dedup();
    Ok(lines)
}
