//! Repeated switching with invariant-based deduplication.
//!
//! Without a canonical-labelling engine, graphs are told apart by a
//! [`Fingerprint`] of relabelling-invariant counts. Distinct fingerprints
//! mean non-isomorphic graphs, so the census size is a lower bound on the
//! number of isomorphism classes reached.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::clique::clique_counts_by_edge;
use crate::analysis::{srg_check, SrgParams};
use crate::graph::{and_count, bits, graph6_encode, Graph};
use crate::switching::{apply_switch, verify_wqh_hypotheses, PartitionSpec};

/// Relabelling-invariant summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub clique_size: usize,
    /// Number of cliques with exactly `clique_size` vertices.
    pub clique_count: usize,
    /// `(cliques containing an edge, number of such edges)`.
    pub edge_clique_histogram: Vec<(usize, usize)>,
    /// `(triangles at a vertex, number of such vertices)`.
    pub triangle_histogram: Vec<(usize, usize)>,
}

fn histogram(values: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h.into_iter().collect()
}

impl Fingerprint {
    /// Fingerprint with respect to cliques of size `t + 1`.
    pub fn of(g: &Graph, t: usize) -> Fingerprint {
        let (clique_count, per_edge) = clique_counts_by_edge(g, t + 1);
        let triangles = (0..g.order()).map(|u| {
            let row = g.row(u);
            g.neighbors(u)
                .map(|w| and_count(row, g.row(w)))
                .sum::<usize>()
                / 2
        });
        Fingerprint {
            clique_size: t + 1,
            clique_count,
            edge_clique_histogram: histogram(per_edge),
            triangle_histogram: histogram(triangles),
        }
    }

    /// First 16 hex digits of the SHA-256 of the canonical JSON form.
    pub fn hash_hex(&self) -> String {
        let text = format!(
            "{}|{}|{:?}|{:?}",
            self.clique_size,
            self.clique_count,
            self.edge_clique_histogram,
            self.triangle_histogram
        );
        Sha256::digest(text.as_bytes())
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

/// Parameters of the partition search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionSearch {
    /// Size of each cell.
    pub cell_size: usize,
    /// Maximum number of partitions returned.
    pub limit: usize,
    pub seed: u64,
    /// Skip partitions that switch no vertex.
    pub nontrivial_only: bool,
}

impl PartitionSearch {
    pub fn new(cell_size: usize, limit: usize) -> PartitionSearch {
        PartitionSearch {
            cell_size,
            limit,
            seed: 0,
            nontrivial_only: false,
        }
    }
}

/// Closure of a non-adjacent seed pair `{a, b}`: the pair plus every vertex
/// non-adjacent to both that is adjacent to all their common neighbours.
/// In a line graph of a linear representation, two parallel lines close to
/// their full parallel class inside the plane they span.
fn closure(g: &Graph, a: usize, b: usize, rank: &[usize]) -> Vec<usize> {
    let common: Vec<u64> = g.row(a).iter().zip(g.row(b)).map(|(x, y)| x & y).collect();
    let common_count: usize = common.iter().map(|w| w.count_ones() as usize).sum();
    let mut rest: Vec<usize> = (0..g.order())
        .filter(|&x| x != a && x != b && !g.adj(a, x) && !g.adj(b, x))
        .filter(|&x| and_count(g.row(x), &common) == common_count)
        .collect();
    // cyclic from a, so that different seeds pick different tails
    let n = g.order();
    rest.sort_by_key(|&x| (rank[x] + n - rank[a]) % n);
    let mut set = vec![a, b];
    set.extend(rest);
    set
}

/// Candidate switching cells from seeded closures of non-adjacent pairs.
fn candidate_cells(g: &Graph, search: &PartitionSearch, max_cells: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let c = search.cell_size;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(search.seed));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut seen = HashSet::new();
    let mut cells = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            if g.adj(a, b) {
                continue;
            }
            let set = closure(g, a, b, &rank);
            if set.len() < c {
                continue;
            }
            let mut cell: Vec<usize> = set[..c].to_vec();
            cell.sort_unstable();
            let sub = g.induced(&cell);
            if !sub.is_regular() {
                continue;
            }
            if seen.insert(cell.clone()) {
                cells.push(cell);
                if cells.len() >= max_cells {
                    return cells;
                }
            }
        }
    }
    cells
}

/// Up to `search.limit` partitions passing the WQH hypotheses, deterministic
/// for a given seed.
pub fn find_generic_partitions(g: &Graph, search: &PartitionSearch) -> Vec<PartitionSpec> {
    assert!(search.cell_size >= 2, "cells need at least two vertices");
    if search.limit == 0 || g.order() < 2 * search.cell_size {
        return Vec::new();
    }
    let max_cells = search.limit.saturating_mul(4).max(256);
    let cells = candidate_cells(g, search, max_cells);
    let words = g.row_words();
    let masks: Vec<Vec<u64>> = cells
        .iter()
        .map(|c| {
            let mut m = vec![0u64; words];
            for &v in c {
                m[v / 64] |= 1 << (v % 64);
            }
            m
        })
        .collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..cells.len() {
        // test the pairs (i, j) in parallel, keep them in order
        let found: Vec<PartitionSpec> = (i + 1..cells.len())
            .into_par_iter()
            .filter(|&j| masks[i].iter().zip(&masks[j]).all(|(a, b)| a & b == 0))
            .filter_map(|j| {
                let ps = PartitionSpec::new(g.order(), cells[i].clone(), cells[j].clone())
                    .ok()?
                    .normalized();
                let report = verify_wqh_hypotheses(g, &ps);
                (report.passed && (!search.nontrivial_only || !report.switched.is_empty()))
                    .then_some(ps)
            })
            .collect();
        for ps in found {
            if seen.insert(ps.clone()) {
                out.push(ps);
                if out.len() >= search.limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Settings for [`explore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExploreOptions {
    pub depth: usize,
    /// Cap on partitions tried per graph and on new graphs kept per level.
    pub limit: usize,
    pub seed: u64,
    /// Lines per point minus one; fingerprints count `(t + 1)`-cliques.
    pub t: usize,
    pub cell_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub hash: String,
    pub level: usize,
    /// Index of the entry this graph was switched from.
    pub parent: Option<usize>,
    pub fingerprint: Fingerprint,
    pub graph6: String,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub params: SrgParams,
    pub options: ExploreOptions,
    /// New fingerprint-distinct graphs per level; level 0 is the root.
    pub per_level: Vec<usize>,
    /// Switched graphs that failed the parameter check (expected 0).
    pub rejected: usize,
    /// Fingerprint-distinct count: a lower bound on isomorphism classes.
    pub distinct: usize,
    pub entries: Vec<CensusEntry>,
}

/// Breadth-first repeated switching from `root`, keeping one graph per fingerprint.
pub fn explore(root: &Graph, opts: &ExploreOptions) -> Result<Census, crate::analysis::SrgError> {
    let params = srg_check(root)?;
    let fp = Fingerprint::of(root, opts.t);
    let mut seen: HashSet<Fingerprint> = HashSet::from([fp.clone()]);
    let mut entries = vec![CensusEntry {
        hash: fp.hash_hex(),
        level: 0,
        parent: None,
        fingerprint: fp,
        graph6: graph6_encode(root),
        graph: root.clone(),
    }];
    let mut per_level = vec![1];
    let mut rejected = 0;
    let mut frontier: Vec<usize> = vec![0];
    let search = PartitionSearch {
        cell_size: opts.cell_size,
        limit: opts.limit,
        seed: opts.seed,
        nontrivial_only: true,
    };

    for level in 1..=opts.depth {
        let children: Vec<(usize, Graph)> = frontier
            .iter()
            .flat_map(|&parent| {
                let g = &entries[parent].graph;
                find_generic_partitions(g, &search)
                    .into_iter()
                    .filter_map(move |ps| apply_switch(g, &ps).ok().map(|h| (parent, h)))
            })
            .collect();
        let scored: Vec<(usize, Graph, Option<Fingerprint>)> = children
            .into_par_iter()
            .map(|(parent, h)| {
                let ok = srg_check(&h).map(|p| p == params).unwrap_or(false);
                let fp = ok.then(|| Fingerprint::of(&h, opts.t));
                (parent, h, fp)
            })
            .collect();
        let mut next = Vec::new();
        for (parent, h, fp) in scored {
            let Some(fp) = fp else {
                rejected += 1;
                continue;
            };
            if next.len() >= opts.limit || !seen.insert(fp.clone()) {
                continue;
            }
            next.push(entries.len());
            entries.push(CensusEntry {
                hash: fp.hash_hex(),
                level,
                parent: Some(parent),
                fingerprint: fp,
                graph6: graph6_encode(&h),
                graph: h,
            });
        }
        per_level.push(next.len());
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Census {
        params,
        options: *opts,
        per_level,
        rejected,
        distinct: entries.len(),
        entries,
    })
}

/// Vertices of `row` as a list; handy for reports.
pub fn row_vertices(row: &[u64]) -> Vec<usize> {
    bits(row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn edgeless_graph_partitions() {
        let g = Graph::empty(12);
        let parts = find_generic_partitions(&g, &PartitionSearch::new(3, 5));
        assert_eq!(parts.len(), 5);
        for ps in &parts {
            assert_eq!(ps.c1.len(), 3);
            assert!(verify_wqh_hypotheses(&g, ps).passed);
        }
    }

    #[test]
    fn random_graph_has_few_partitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 40;
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let parts = find_generic_partitions(
            &g,
            &PartitionSearch {
                nontrivial_only: true,
                ..PartitionSearch::new(4, 10)
            },
        );
        assert!(parts.is_empty(), "{parts:?}");
    }

    #[test]
    fn fingerprint_distinguishes_simple_graphs() {
        let a = Fingerprint::of(&Graph::cycle(6), 2);
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let b = Fingerprint::of(&two_triangles, 2);
        assert_ne!(a, b);
        assert_eq!(b.clique_count, 2);
        assert_eq!(a.hash_hex().len(), 16);
        assert_ne!(a.hash_hex(), b.hash_hex());
    }
}
