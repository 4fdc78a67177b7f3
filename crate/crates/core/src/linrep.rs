//! The line set of the linear representation of a point set at infinity and
//! its line graph.
//!
//! Line ids are dense: `dir_index * q^2 + base_index`. For a direction with
//! pivot coordinate `j`, canonical bases have coordinate `j` equal to zero and
//! `base_index = a * q + b` for the remaining two coordinates `(a, b)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arcs::Arc;
use crate::geometry::{line_canonicalize, lines_meet, AffLine, AffPlane, AffPoint, ProjPoint};
use crate::gf2h::{Field, FieldElem};
use crate::graph::{set_bit, words_for, Graph};

#[derive(Debug, Clone)]
pub struct LineSet {
    field: Field,
    dirs: Vec<ProjPoint>,
    /// Projective point index -> position in `dirs`.
    dir_lookup: Vec<Option<u32>>,
}

/// One row of the vertex table.
#[derive(Debug, Clone, Serialize)]
pub struct LineRecord {
    pub id: usize,
    pub dir_index: usize,
    pub base: [u32; 3],
    pub dir: [u32; 3],
}

fn free_coords(pivot: usize) -> (usize, usize) {
    match pivot {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl LineSet {
    /// All affine lines whose point at infinity lies in `arc`.
    pub fn new(field: &Field, arc: &Arc) -> LineSet {
        assert!(!arc.is_empty(), "line set of an empty arc");
        assert_eq!(arc.q(), field.order());
        let q = field.order();
        let mut dir_lookup = vec![None; (q * q + q + 1) as usize];
        for (i, d) in arc.points().iter().enumerate() {
            dir_lookup[d.index(q)] = Some(i as u32);
        }
        LineSet {
            field: field.clone(),
            dirs: arc.points().to_vec(),
            dir_lookup,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order() as usize
    }

    pub fn directions(&self) -> &[ProjPoint] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len() * self.q() * self.q()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn dir_index(&self, d: &ProjPoint) -> Option<usize> {
        self.dir_lookup[d.index(self.field.order())].map(|i| i as usize)
    }

    /// The line with the given id. Panics if out of range.
    pub fn line(&self, id: usize) -> AffLine {
        let q2 = self.q() * self.q();
        let dir = self.dirs[id / q2];
        let b = id % q2;
        let (i0, i1) = free_coords(dir.pivot());
        let mut base = [FieldElem::ZERO; 3];
        base[i0] = FieldElem::from_raw((b / self.q()) as u32);
        base[i1] = FieldElem::from_raw((b % self.q()) as u32);
        AffLine {
            base: AffPoint(base),
            dir,
        }
    }

    /// Id of a canonical line, if its direction is in the set.
    pub fn id_of(&self, line: &AffLine) -> Option<usize> {
        let di = self.dir_index(&line.dir)?;
        let (i0, i1) = free_coords(line.dir.pivot());
        let c = line.base.0;
        if !c[line.dir.pivot()].is_zero() {
            return None;
        }
        let q = self.q();
        Some(di * q * q + c[i0].value() as usize * q + c[i1].value() as usize)
    }

    /// Id of the line through `p` with direction `dirs[dir_index]`.
    pub fn line_through(&self, p: &AffPoint, dir_index: usize) -> usize {
        let line = line_canonicalize(&self.field, *p, self.dirs[dir_index]);
        self.id_of(&line).expect("direction belongs to the set")
    }

    /// Ids of the lines through `p`, one per direction, in direction order.
    pub fn pencil(&self, p: &AffPoint) -> Vec<usize> {
        (0..self.dirs.len())
            .map(|d| self.line_through(p, d))
            .collect()
    }

    /// Ids of the lines of the set contained in `plane`, sorted.
    pub fn lines_in_plane(&self, plane: &AffPlane) -> Vec<usize> {
        let mut ids: Vec<usize> = plane
            .points(&self.field)
            .iter()
            .flat_map(|p| {
                self.dirs
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| plane.infinite_line.contains(d))
                    .map(move |(i, _)| self.line_through(p, i))
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn records(&self) -> Vec<LineRecord> {
        (0..self.len())
            .map(|id| {
                let l = self.line(id);
                LineRecord {
                    id,
                    dir_index: id / (self.q() * self.q()),
                    base: l.base.0.map(|e| e.value()),
                    dir: l.dir.coords().map(|e| e.value()),
                }
            })
            .collect()
    }
}

/// Line graph built from incidences: two lines are adjacent exactly when they
/// lie in a common pencil, so each row is the union of the pencils through
/// the line's `q` points.
pub fn build_line_graph(lines: &LineSet) -> Graph {
    let n = lines.len();
    let words = words_for(n);
    let f = lines.field();
    let rows: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let line = lines.line(u);
            let own = u / (lines.q() * lines.q());
            let mut row = vec![0u64; words];
            for p in line.points(f) {
                for d in (0..lines.directions().len()).filter(|&d| d != own) {
                    set_bit(&mut row, lines.line_through(&p, d));
                }
            }
            row
        })
        .collect();
    Graph::from_rows_unchecked(n, rows)
}

/// Same graph from the pairwise meeting predicate; quadratic in the number of lines.
pub fn build_line_graph_pairwise(lines: &LineSet) -> Graph {
    let n = lines.len();
    let words = words_for(n);
    let f = lines.field();
    let all: Vec<AffLine> = (0..n).map(|i| lines.line(i)).collect();
    let rows: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut row = vec![0u64; words];
            for w in (0..n).filter(|&w| w != u) {
                if lines_meet(f, &all[u], &all[w]).expect("distinct lines") {
                    set_bit(&mut row, w);
                }
            }
            row
        })
        .collect();
    Graph::from_rows_unchecked(n, rows)
}
