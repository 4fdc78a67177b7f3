mod common;

use std::collections::BTreeSet;

use srgswitch::analysis::{max_clique_through_edge, maximal_cliques_at_least};
use srgswitch::geometry::{AffLine, AffPoint};
use srgswitch::gf2h::{Field, FieldElem};

use common::build;

fn sub(f: &Field, a: AffPoint, b: AffPoint) -> [FieldElem; 3] {
    [
        f.add(a.0[0], b.0[0]),
        f.add(a.0[1], b.0[1]),
        f.add(a.0[2], b.0[2]),
    ]
}

fn det(f: &Field, a: [FieldElem; 3], b: [FieldElem; 3], c: [FieldElem; 3]) -> FieldElem {
    let m = |x, y| f.mul(x, y);
    let t0 = m(a[0], f.add(m(b[1], c[2]), m(b[2], c[1])));
    let t1 = m(a[1], f.add(m(b[0], c[2]), m(b[2], c[0])));
    let t2 = m(a[2], f.add(m(b[0], c[1]), m(b[1], c[0])));
    f.add(f.add(t0, t1), t2)
}

fn common_point(f: &Field, lines: &[AffLine]) -> Option<AffPoint> {
    let first: BTreeSet<AffPoint> = lines[0].points(f).into_iter().collect();
    first
        .into_iter()
        .find(|p| lines.iter().all(|l| l.contains(f, p)))
}

/// All points of `lines` on one plane.
fn coplanar(f: &Field, lines: &[AffLine]) -> bool {
    let pts: Vec<AffPoint> = lines.iter().flat_map(|l| l.points(f)).collect();
    let a = pts[0];
    let span: Vec<[FieldElem; 3]> = pts.iter().map(|&p| sub(f, p, a)).collect();
    // find two independent difference vectors
    for (i, u) in span.iter().enumerate() {
        for v in &span[i + 1..] {
            let cross_zero = (0..3).all(|k| {
                let (i1, i2) = ((k + 1) % 3, (k + 2) % 3);
                f.add(f.mul(u[i1], v[i2]), f.mul(u[i2], v[i1])).is_zero()
            });
            if !cross_zero {
                return span.iter().all(|w| det(f, *u, *v, *w).is_zero());
            }
        }
    }
    true
}

fn check_dichotomy(h: u32, m: u32, min_size: usize) -> (usize, usize) {
    let b = build(h, m);
    let f = &b.field;
    let t = b.t();
    let mut pencils = 0;
    let mut planar = 0;
    for clique in maximal_cliques_at_least(&b.gamma, min_size) {
        let ls: Vec<AffLine> = clique.iter().map(|&id| b.lines.line(id)).collect();
        if let Some(p) = common_point(f, &ls) {
            assert_eq!(
                clique.len(),
                t + 1,
                "concurrent maximal clique is a full pencil"
            );
            let mut pencil = b.lines.pencil(&p);
            pencil.sort_unstable();
            assert_eq!(pencil, clique);
            pencils += 1;
        } else {
            assert!(
                coplanar(f, &ls),
                "clique {clique:?} neither concurrent nor coplanar"
            );
            // one line per direction of the plane's secant
            assert!(
                clique.len() <= (1 << m),
                "planar clique of size {}",
                clique.len()
            );
            planar += 1;
        }
    }
    (pencils, planar)
}

#[test]
fn maximal_cliques_small_case_are_pencils() {
    let (pencils, planar) = check_dichotomy(2, 1, 2);
    assert_eq!(pencils, 64);
    assert_eq!(planar, 0);
}

#[test]
fn maximal_cliques_q8_degree4() {
    // Coplanar maximal cliques have at most 2^m = 4 lines; everything
    // larger must be one of the q^3 pencils.
    let (pencils, planar) = check_dichotomy(3, 2, 5);
    assert_eq!(pencils, 512);
    assert_eq!(planar, 0);
}

#[test]
fn coplanar_cliques_inside_one_plane_q8_degree4() {
    let b = build(3, 2);
    let f = &b.field;
    let plane_lines = b.lines.lines_in_plane(&b.config.m1);
    // 4 directions of the secant, q parallel lines each
    assert_eq!(plane_lines.len(), 4 * 8);
    let sub = b.gamma.induced(&plane_lines);
    let cliques = maximal_cliques_at_least(&sub, 2);
    let mut planar = 0;
    for c in &cliques {
        let ls: Vec<AffLine> = c.iter().map(|&i| b.lines.line(plane_lines[i])).collect();
        if common_point(f, &ls).is_none() {
            assert_eq!(c.len(), 4);
            planar += 1;
        }
    }
    // q^4 transversals minus the q^2 concurrent ones
    assert_eq!(planar, 8usize.pow(4) - 8 * 8);
    let bound = b.q() * (b.config.alpha - 1) + 1;
    assert!(cliques.iter().all(|c| c.len() <= bound));
}

#[test]
fn pencil_edges_reach_t_plus_one() {
    let b = build(2, 1);
    let r = AffPoint::from_values(&b.field, 1, 2, 3).unwrap();
    let pencil = b.lines.pencil(&r);
    assert_eq!(pencil.len(), b.t() + 1);
    for w in pencil.windows(2) {
        assert_eq!(
            max_clique_through_edge(&b.gamma, w[0], w[1], usize::MAX).unwrap(),
            b.t() + 1
        );
    }
}
