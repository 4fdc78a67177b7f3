//! Strong regularity, parameter formulas and the restricted spectrum.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{and_count, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub fn new(v: usize, k: usize, lambda: usize, mu: usize) -> SrgParams {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k - lambda - 1) = (v - k - 1) mu`.
    pub fn is_feasible(&self) -> bool {
        self.k > 0
            && self.k < self.v
            && self.lambda < self.k
            && self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SrgError {
    #[error("graph is complete")]
    Complete,
    #[error("graph is edgeless")]
    Edgeless,
    #[error("vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    Irregular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("pair ({u}, {w}) (adjacent: {adjacent}) has {common} common neighbours, expected {expected}")]
    NotSrg {
        u: usize,
        w: usize,
        adjacent: bool,
        common: usize,
        expected: usize,
    },
    #[error("parameters give a non-integral vertex count")]
    NonIntegral,
}

/// Exact strong-regularity check over every vertex pair.
pub fn srg_check(g: &Graph) -> Result<SrgParams, SrgError> {
    let v = g.order();
    if g.edge_count() == 0 {
        return Err(SrgError::Edgeless);
    }
    if g.edge_count() == v * (v - 1) / 2 {
        return Err(SrgError::Complete);
    }
    let k = g.deg(0);
    if let Some(u) = (0..v).find(|&u| g.deg(u) != k) {
        return Err(SrgError::Irregular {
            vertex: u,
            degree: g.deg(u),
            expected: k,
        });
    }
    let (eu, ew) = g.edges().next().expect("has an edge");
    let lambda = and_count(g.row(eu), g.row(ew));
    let (nu, nw) = (0..v)
        .flat_map(|u| (u + 1..v).map(move |w| (u, w)))
        .find(|&(u, w)| !g.adj(u, w))
        .expect("has a non-edge");
    let mu = and_count(g.row(nu), g.row(nw));

    let violation = (0..v).into_par_iter().find_map_first(|u| {
        let ru = g.row(u);
        (u + 1..v).find_map(|w| {
            let adjacent = g.adj(u, w);
            let expected = if adjacent { lambda } else { mu };
            let common = and_count(ru, g.row(w));
            (common != expected).then_some(SrgError::NotSrg {
                u,
                w,
                adjacent,
                common,
                expected,
            })
        })
    });
    match violation {
        Some(e) => Err(e),
        None => Ok(SrgParams { v, k, lambda, mu }),
    }
}

/// Point-graph parameters of a partial geometry of order `(s, t, alpha)`:
/// `((s+1)(st+alpha)/alpha, s(t+1), s-1+t(alpha-1), alpha(t+1))`.
pub fn srg_to_geometry_params(s: usize, t: usize, alpha: usize) -> Result<SrgParams, SrgError> {
    if alpha == 0 {
        return Err(SrgError::NonIntegral);
    }
    let num = (s + 1) * (s * t + alpha);
    if !num.is_multiple_of(alpha) {
        return Err(SrgError::NonIntegral);
    }
    Ok(SrgParams {
        v: num / alpha,
        k: s * (t + 1),
        lambda: (s + t * (alpha - 1))
            .checked_sub(1)
            .ok_or(SrgError::NonIntegral)?,
        mu: alpha * (t + 1),
    })
}

/// Closed form for the line graph of the linear representation of a
/// Denniston arc of degree `2^m` in PG(2, 2^h).
pub fn denniston_line_graph_params(h: u32, m: u32) -> SrgParams {
    let p = |e: u32| 1usize << e;
    SrgParams {
        v: p(2 * h) * (p(m + h) + p(m) - p(h)),
        k: p(h) * (p(h) + 1) * (p(m) - 1),
        lambda: p(h) * (p(m + 1) - 3),
        mu: p(h) * (p(m) - 1),
    }
}

/// Eigenvalues `k > r > s` with multiplicities `1, f, g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub k: i64,
    pub r: i64,
    pub s: i64,
    pub f: i64,
    pub g: i64,
}

impl Spectrum {
    /// `(x - k)(x - r)^f (x - s)^g` evaluated as a monic polynomial mod `p`,
    /// coefficients lowest degree first.
    pub fn char_poly_mod(&self, p: u64) -> Vec<u64> {
        let mut poly = vec![1u64];
        let root = |e: i64| e.rem_euclid(p as i64) as u64;
        let factors = std::iter::once(self.k)
            .chain(std::iter::repeat_n(self.r, self.f as usize))
            .chain(std::iter::repeat_n(self.s, self.g as usize));
        for e in factors {
            let c = (p - root(e)) % p;
            let mut next = vec![0u64; poly.len() + 1];
            for (i, &a) in poly.iter().enumerate() {
                next[i + 1] = (next[i + 1] + a) % p;
                next[i] = (next[i] + a * c) % p;
            }
            poly = next;
        }
        poly
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("irrational eigenvalues (conference-graph case), discriminant {discriminant}")]
    Irrational { discriminant: i64 },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

fn isqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|x| x * x == n)
}

/// Restricted eigenvalues and multiplicities from the parameters alone.
pub fn srg_spectrum(p: &SrgParams) -> Result<Spectrum, SpectrumError> {
    if !p.is_feasible() {
        return Err(SpectrumError::Infeasible(format!(
            "{p} fails k(k-l-1) = (v-k-1)mu"
        )));
    }
    let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let discriminant = (l - m) * (l - m) + 4 * (k - m);
    let root = isqrt(discriminant).ok_or(SpectrumError::Irrational { discriminant })?;
    if (l - m + root) % 2 != 0 {
        return Err(SpectrumError::Irrational { discriminant });
    }
    let r = (l - m + root) / 2;
    let s = (l - m - root) / 2;
    if r == s {
        return Err(SpectrumError::Infeasible(
            "repeated restricted eigenvalue".into(),
        ));
    }
    let f_num = -k - (v - 1) * s;
    let g_num = k + (v - 1) * r;
    if f_num % (r - s) != 0 || g_num % (r - s) != 0 {
        return Err(SpectrumError::Infeasible(
            "non-integral multiplicities".into(),
        ));
    }
    let spec = Spectrum {
        k,
        r,
        s,
        f: f_num / (r - s),
        g: g_num / (r - s),
    };
    debug_assert_eq!(1 + spec.f + spec.g, v);
    debug_assert_eq!(k + spec.f * r + spec.g * s, 0);
    Ok(spec)
}
