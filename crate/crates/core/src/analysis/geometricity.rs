//! Clique-based test of whether a graph can be the line graph of a partial
//! linear space with `t + 1` lines per point: every edge must lie in a clique
//! of size `t + 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::clique::{max_clique_through_edge, maximal_cliques_at_least};
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct GeometricityReport {
    pub t: usize,
    pub edges_checked: usize,
    /// Edges in no clique of size `t + 1`.
    pub failing_edges: Vec<(usize, usize)>,
    /// Maximal cliques with at least `t + 1` vertices.
    pub pencil_count: usize,
    /// Largest clique through each edge, capped at `t + 1`, as a histogram.
    pub edge_clique_caps: BTreeMap<usize, usize>,
}

impl GeometricityReport {
    pub fn geometric(&self) -> bool {
        self.failing_edges.is_empty()
    }
}

pub fn geometricity_report(g: &Graph, t: usize) -> GeometricityReport {
    assert!(t >= 1, "t must be positive");
    let target = t + 1;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let caps: Vec<usize> = edges
        .par_iter()
        .map(|&(u, w)| {
            max_clique_through_edge(g, u, w, target)
                .expect("edge")
                .min(target)
        })
        .collect();
    let mut edge_clique_caps = BTreeMap::new();
    for &c in &caps {
        *edge_clique_caps.entry(c).or_insert(0) += 1;
    }
    let failing_edges = edges
        .iter()
        .zip(&caps)
        .filter(|(_, &c)| c < target)
        .map(|(&e, _)| e)
        .collect();
    GeometricityReport {
        t,
        edges_checked: edges.len(),
        failing_edges,
        pencil_count: maximal_cliques_at_least(g, target).len(),
        edge_clique_caps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_trivially_geometric_for_t1() {
        let r = geometricity_report(&Graph::cycle(5), 1);
        assert!(r.geometric());
        assert_eq!(r.edges_checked, 5);
        assert_eq!(r.pencil_count, 5);
    }

    #[test]
    fn path_fails_for_t2() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = geometricity_report(&g, 2);
        assert_eq!(r.failing_edges, vec![(2, 3)]);
        assert_eq!(r.pencil_count, 1);
        assert_eq!(r.edge_clique_caps, BTreeMap::from([(2, 1), (3, 3)]));
    }
}
