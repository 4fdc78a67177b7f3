//! Characteristic polynomial of an adjacency matrix modulo word-sized primes,
//! via reduction to upper Hessenberg form.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// The three largest primes below 2^31.
pub const DEFAULT_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharPolyError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {p} must exceed the order {v}")]
    PrimeTooSmall { p: u64, v: usize },
    #[error("prime {0} does not fit in 31 bits")]
    PrimeTooLarge(u64),
}

/// Coefficients of `det(xI - A) mod p`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharPolyMod {
    pub prime: u64,
    pub coefficients: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial of `g` modulo each prime.
pub fn char_poly_mod(g: &Graph, primes: &[u64]) -> Result<Vec<CharPolyMod>, CharPolyError> {
    for &p in primes {
        if p == 2 || !is_prime(p) {
            return Err(CharPolyError::NotOddPrime(p));
        }
        if p >= 1 << 31 {
            return Err(CharPolyError::PrimeTooLarge(p));
        }
        if p <= g.order() as u64 {
            return Err(CharPolyError::PrimeTooSmall { p, v: g.order() });
        }
    }
    Ok(primes
        .par_iter()
        .map(|&p| CharPolyMod {
            prime: p,
            coefficients: char_poly_prime(g, p),
        })
        .collect())
}

fn char_poly_prime(g: &Graph, p: u64) -> Vec<u64> {
    let n = g.order();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|w| u64::from(g.adj(u, w))).collect())
        .collect();
    hessenberg(&mut a, p);
    hessenberg_char_poly(&a, p)
}

/// In-place similarity transform to upper Hessenberg form over GF(p).
fn hessenberg(a: &mut [Vec<u64>], p: u64) {
    let n = a.len();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(a[j + 1][j], p);
        for i in j + 2..n {
            let u = a[i][j] * inv % p;
            if u == 0 {
                continue;
            }
            // row_i -= u * row_{j+1}
            let (top, bottom) = a.split_at_mut(i);
            let src = &top[j + 1];
            for (x, &y) in bottom[0].iter_mut().zip(src) {
                *x = (*x + p - u * y % p) % p;
            }
            // col_{j+1} += u * col_i
            for row in a.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[i]) % p;
            }
        }
    }
}

/// Characteristic polynomial of an upper Hessenberg matrix by the standard
/// recurrence on its leading principal minors.
fn hessenberg_char_poly(h: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = h.len();
    // polys[m] = char poly of the leading m x m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        // (x - h[m-1][m-1]) * prev
        let diag = h[m - 1][m - 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = (cur[i + 1] + c) % p;
            cur[i] = (cur[i] + p - diag * c % p) % p;
        }
        let mut sub = 1u64;
        for i in (1..m).rev() {
            // product of subdiagonal entries h[i][i-1] .. h[m-1][m-2]
            sub = sub * h[i][i - 1] % p;
            if sub == 0 {
                break;
            }
            let coeff = h[i - 1][m - 1] * sub % p;
            if coeff == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - coeff * c % p) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}
