//! Arithmetic in GF(2^h), 1 <= h <= 16, over the polynomial basis.
//!
//! Elements are stored as integers whose bit `i` is the coefficient of `x^i`.
//! The modulus is the smallest irreducible polynomial of degree `h` (as an
//! integer), so every field built here is reproducible from `h` alone.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest extension degree supported.
pub const MAX_DEGREE: u32 = 16;

/// Fields up to this degree use log/antilog tables for `mul` and `inv`.
const TABLE_DEGREE_LIMIT: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} out of range 1..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("element {value} is not in GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("no irreducible y^2 + ly + 1 exists over GF({q})")]
    NoIrreducibleQuadratic { q: u32 },
    #[error("internal error: {0}")]
    Internal(String),
}

/// An element of GF(2^h) in polynomial-basis encoding.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a raw encoding. Range is checked by [`Field::elem`]; this
    /// constructor trusts the caller.
    #[inline]
    pub const fn from_raw(value: u32) -> Self {
        FieldElem(value)
    }

    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct Tables {
    generator: u32,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[i] = g^i` for `i` in `0..2(q-1)`, doubled so sums of logs need no reduction.
    exp: Vec<u32>,
}

/// The finite field GF(2^h).
#[derive(Debug, Clone)]
pub struct Field {
    h: u32,
    q: u32,
    modulus: u32,
    tables: Option<Tables>,
}

/// Degree of a nonzero GF(2)[x] polynomial.
fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of `a` modulo `b` in GF(2)[x]; `b` nonzero.
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(poly: u32) -> bool {
    if poly < 2 {
        return false;
    }
    let d = poly_degree(poly);
    if d == 1 {
        return true;
    }
    for divisor in 2u32..(1 << (d / 2 + 1)) {
        if poly_rem(poly, divisor) == 0 {
            return false;
        }
    }
    true
}

/// Carry-less product of two field elements reduced by `modulus`.
fn clmul_reduce(mut a: u32, mut b: u32, h: u32, modulus: u32) -> u32 {
    let top = 1u32 << h;
    let mut acc = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= modulus;
        }
    }
    acc
}

impl Field {
    /// Builds GF(2^h) with the smallest irreducible degree-`h` modulus.
    pub fn new(h: u32) -> Result<Self, FieldError> {
        if !(1..=MAX_DEGREE).contains(&h) {
            return Err(FieldError::DegreeOutOfRange(h));
        }
        let q = 1u32 << h;
        let modulus = (q..2 * q).find(|&p| is_irreducible(p)).ok_or_else(|| {
            FieldError::Internal(format!("no irreducible polynomial of degree {h}"))
        })?;
        let mut field = Field {
            h,
            q,
            modulus,
            tables: None,
        };
        if h <= TABLE_DEGREE_LIMIT {
            field.tables = Some(field.build_tables()?);
        }
        Ok(field)
    }

    fn build_tables(&self) -> Result<Tables, FieldError> {
        let order = (self.q - 1) as usize;
        // The modulus need not be primitive, so search for a generator.
        for g in 1..self.q {
            let mut exp = Vec::with_capacity(2 * order);
            let mut x = 1u32;
            let mut full = true;
            for i in 0..order {
                if i > 0 && x == 1 {
                    full = false;
                    break;
                }
                exp.push(x);
                x = clmul_reduce(x, g, self.h, self.modulus);
            }
            if !full || x != 1 {
                continue;
            }
            let mut log = vec![0u32; self.q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
            return Ok(Tables {
                generator: g,
                log,
                exp: doubled,
            });
        }
        Err(FieldError::Internal(
            "multiplicative group has no generator".into(),
        ))
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.h
    }

    /// Field order `q = 2^h`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus polynomial as a bit mask (bit `i` = coefficient of `x^i`).
    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Generator of the multiplicative group used by the log tables, if tabulated.
    pub fn generator(&self) -> Option<FieldElem> {
        self.tables.as_ref().map(|t| FieldElem(t.generator))
    }

    pub fn uses_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Checked constructor.
    pub fn elem(&self, value: u32) -> Result<FieldElem, FieldError> {
        if value < self.q {
            Ok(FieldElem(value))
        } else {
            Err(FieldError::ElementOutOfRange { value, q: self.q })
        }
    }

    /// All `q` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.q).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => FieldElem(clmul_reduce(a.0, b.0, self.h, self.modulus)),
        }
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                FieldElem(t.exp[((order - t.log[a.0 as usize]) % order) as usize])
            }
            None => self.pow(a, u64::from(self.q) - 2),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace `a + a^2 + ... + a^(2^(h-1))`, always 0 or 1.
    pub fn trace(&self, a: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        let mut x = a;
        for _ in 0..self.h {
            acc = self.add(acc, x);
            x = self.square(x);
        }
        acc
    }

    /// Smallest `l` for which `y^2 + l*y + 1` has no root in the field.
    ///
    /// Such an `l` makes `x^2 + l*x*y + y^2` anisotropic, which is what the
    /// Denniston construction needs.
    pub fn find_irreducible_lambda(&self) -> Result<FieldElem, FieldError> {
        if self.h < 2 {
            return Err(FieldError::NoIrreducibleQuadratic { q: self.q });
        }
        self.elements()
            .find(|&l| !self.quadratic_has_root(l))
            .ok_or_else(|| {
                FieldError::Internal(format!(
                    "exhaustive search over GF({}) found no lambda",
                    self.q
                ))
            })
    }

    /// Whether `y^2 + l*y + 1 = 0` has a solution, by exhaustive evaluation.
    pub fn quadratic_has_root(&self, l: FieldElem) -> bool {
        self.elements().any(|y| {
            self.add(self.add(self.square(y), self.mul(l, y)), FieldElem::ONE)
                .is_zero()
        })
    }
}
