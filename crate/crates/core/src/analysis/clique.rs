//! Clique searches: exact maximum clique through an edge (branch and bound
//! with greedy colouring bounds), clique counting, and Bron–Kerbosch
//! enumeration of large maximal cliques.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{bits, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

/// Induced subgraph on a small vertex list, with local bitset rows.
struct Local {
    vertices: Vec<usize>,
    words: usize,
    adj: Vec<u64>,
}

impl Local {
    fn new(g: &Graph, vertices: Vec<usize>) -> Local {
        let n = vertices.len();
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            for j in i + 1..n {
                if g.adj(vertices[i], vertices[j]) {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                    adj[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        Local {
            vertices,
            words,
            adj,
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    fn full(&self) -> Vec<u64> {
        let mut s = vec![0u64; self.words];
        for i in 0..self.vertices.len() {
            s[i / 64] |= 1 << (i % 64);
        }
        s
    }

    /// Greedy colouring of `set`: vertices in colour order with their colour numbers.
    fn colour_sort(&self, set: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = set.to_vec();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = first_bit(&avail) {
                uncoloured[v / 64] &= !(1 << (v % 64));
                avail[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.row(v)) {
                    *a &= !r;
                }
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&self, mut set: Vec<u64>, size: usize, best: &mut usize, cap: usize) {
        let (order, colours) = self.colour_sort(&set);
        for idx in (0..order.len()).rev() {
            if size + colours[idx] <= *best || *best >= cap {
                return;
            }
            let v = order[idx];
            let next: Vec<u64> = set.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                *best = (*best).max(size + 1);
            } else {
                self.expand(next, size + 1, best, cap);
            }
            set[v / 64] &= !(1 << (v % 64));
        }
    }

    fn max_clique(&self, cap: usize) -> usize {
        let mut best = 0;
        if !self.vertices.is_empty() {
            self.expand(self.full(), 0, &mut best, cap);
        }
        best
    }

    /// Visits every clique of exactly `size` vertices (local indices, increasing).
    fn for_each_clique(&self, size: usize, visit: &mut dyn FnMut(&[usize])) {
        fn rec(
            l: &Local,
            cand: Vec<u64>,
            current: &mut Vec<usize>,
            size: usize,
            visit: &mut dyn FnMut(&[usize]),
        ) {
            if current.len() == size {
                visit(current);
                return;
            }
            let need = size - current.len();
            let avail: Vec<usize> = bits(&cand).collect();
            if avail.len() < need {
                return;
            }
            for (pos, &v) in avail.iter().enumerate() {
                if avail.len() - pos < need {
                    break;
                }
                let mut next: Vec<u64> = cand.iter().zip(l.row(v)).map(|(a, b)| a & b).collect();
                // only later vertices, so each clique is visited once
                for &u in &avail[..=pos] {
                    next[u / 64] &= !(1 << (u % 64));
                }
                current.push(v);
                rec(l, next, current, size, visit);
                current.pop();
            }
        }
        rec(self, self.full(), &mut Vec::new(), size, visit);
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + set[i].trailing_zeros() as usize)
}

fn common_neighbourhood(g: &Graph, u: usize, w: usize) -> Result<Vec<usize>, CliqueError> {
    for x in [u, w] {
        if x >= g.order() {
            return Err(CliqueError::OutOfRange(x));
        }
    }
    if u == w || !g.adj(u, w) {
        return Err(CliqueError::NotAnEdge(u, w));
    }
    let common: Vec<u64> = g.row(u).iter().zip(g.row(w)).map(|(a, b)| a & b).collect();
    Ok(bits(&common).collect())
}

/// Size of the largest clique containing the edge `{u, w}`. The search stops
/// as soon as a clique of at least `cap` vertices is found, in which case the
/// result is only a lower bound that already reaches `cap`. Pass
/// `usize::MAX` for the exact maximum.
pub fn max_clique_through_edge(
    g: &Graph,
    u: usize,
    w: usize,
    cap: usize,
) -> Result<usize, CliqueError> {
    let local = Local::new(g, common_neighbourhood(g, u, w)?);
    Ok(2 + local.max_clique(cap.saturating_sub(2)))
}

/// All cliques of exactly `size` vertices containing the edge `{u, w}`,
/// each sorted.
pub fn cliques_through_edge(
    g: &Graph,
    u: usize,
    w: usize,
    size: usize,
) -> Result<Vec<Vec<usize>>, CliqueError> {
    let local = Local::new(g, common_neighbourhood(g, u, w)?);
    let mut out = Vec::new();
    if size >= 2 {
        local.for_each_clique(size - 2, &mut |c| {
            let mut clique: Vec<usize> =
                c.iter().map(|&i| local.vertices[i]).chain([u, w]).collect();
            clique.sort_unstable();
            out.push(clique);
        });
    }
    Ok(out)
}

/// Number of cliques of exactly `size` vertices in `g`, and for each edge
/// (in [`Graph::edges`] order) how many of them contain it.
pub fn clique_counts_by_edge(g: &Graph, size: usize) -> (usize, Vec<usize>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let per_edge: Vec<usize> = edges
        .par_iter()
        .map(|&(u, w)| {
            let local = Local::new(g, common_neighbourhood(g, u, w).expect("edge"));
            let mut n = 0;
            if size >= 2 {
                local.for_each_clique(size - 2, &mut |_| n += 1);
            }
            n
        })
        .collect();
    let pairs = size * size.saturating_sub(1) / 2;
    let total = per_edge
        .iter()
        .sum::<usize>()
        .checked_div(pairs)
        .unwrap_or(0);
    (total, per_edge)
}

/// Maximal cliques with at least `min_size` vertices, each sorted, in
/// lexicographic order.
pub fn maximal_cliques_at_least(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut found: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            // Cliques whose least vertex is v: candidates are later neighbours,
            // earlier neighbours are excluded.
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            let local = Local::new(g, nbrs);
            let mut p = vec![0u64; local.words];
            let mut x = vec![0u64; local.words];
            for (i, &w) in local.vertices.iter().enumerate() {
                if w > v {
                    p[i / 64] |= 1 << (i % 64);
                } else {
                    x[i / 64] |= 1 << (i % 64);
                }
            }
            let mut out = Vec::new();
            bron_kerbosch(&local, v, &mut Vec::new(), p, x, min_size, &mut out);
            out.into_iter()
        })
        .collect();
    found.sort_unstable();
    found
}

/// `r` holds local indices; the clique is `{root} u r`.
fn bron_kerbosch(
    l: &Local,
    root: usize,
    r: &mut Vec<usize>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    min: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let p_count: usize = p.iter().map(|w| w.count_ones() as usize).sum();
    if p_count == 0 {
        if x.iter().all(|&w| w == 0) && r.len() + 1 >= min {
            let mut c: Vec<usize> = std::iter::once(root)
                .chain(r.iter().map(|&i| l.vertices[i]))
                .collect();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    if r.len() + 1 + p_count < min {
        return;
    }
    // pivot maximising |P n N(u)|
    let pivot = bits(&p)
        .chain(bits(&x))
        .max_by_key(|&u| {
            p.iter()
                .zip(l.row(u))
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .expect("P nonempty");
    let outside: Vec<u64> = p.iter().zip(l.row(pivot)).map(|(a, b)| a & !b).collect();
    let branch: Vec<usize> = bits(&outside).collect();
    for v in branch {
        let np: Vec<u64> = p.iter().zip(l.row(v)).map(|(a, b)| a & b).collect();
        let nx: Vec<u64> = x.iter().zip(l.row(v)).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(l, root, r, np, nx, min, out);
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}
