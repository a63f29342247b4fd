//! Parameter tuples `(n, a, b, c, d)` and the parameter-level transformations.
//!
//! A tuple is valid when `n >= 3`, `2a != 0 (mod n)`, `b, c, d` are pairwise
//! distinct residues and `gcd(n, a, b, c, d) = 1`. The first two conditions
//! make the graph 4-regular, the last one makes it connected.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Validation failures, reported with a fixed precedence so error output is
/// deterministic: `NTooSmall`, then `DegenerateA`, then `RepeatedBCD`, then
/// `Disconnected`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("NTooSmall: the modulus must satisfy n >= 3, got n = {0}")]
    NTooSmall(i64),
    #[error("DegenerateA: 2a must be nonzero mod n (a = {a}, n = {n})")]
    DegenerateA { n: usize, a: usize },
    #[error("RepeatedBCD: b, c, d must be pairwise distinct mod n (b = {b}, c = {c}, d = {d})")]
    RepeatedBCD { b: usize, c: usize, d: usize },
    #[error("Disconnected: n, a, b, c, d share the prime divisor {divisor}")]
    Disconnected { divisor: usize },
    #[error("QNotCoprime: multiplier q = {q} is not coprime to n = {n}")]
    QNotCoprime { q: usize, n: usize },
}

/// A validated parameter tuple. Residues are stored reduced to `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WhParams {
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
}

pub(crate) fn gcd(mut x: usize, mut y: usize) -> usize {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn smallest_prime_factor(m: usize) -> usize {
    debug_assert!(m > 1);
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    m
}

impl WhParams {
    /// Validates raw integers into a canonical tuple. Residues are reduced
    /// modulo `n`, so any integers are accepted.
    pub fn new(n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<Self, ParamError> {
        if n < 3 {
            return Err(ParamError::NTooSmall(n));
        }
        let n = n as usize;
        let reduce = |x: i64| x.rem_euclid(n as i64) as usize;
        let (a, b, c, d) = (reduce(a), reduce(b), reduce(c), reduce(d));
        if (2 * a) % n == 0 {
            return Err(ParamError::DegenerateA { n, a });
        }
        if b == c || b == d || c == d {
            return Err(ParamError::RepeatedBCD { b, c, d });
        }
        let g = gcd(gcd(gcd(gcd(n, a), b), c), d);
        if g > 1 {
            return Err(ParamError::Disconnected {
                divisor: smallest_prime_factor(g),
            });
        }
        Ok(WhParams { n, a, b, c, d })
    }

    /// Builds a tuple already known to be reduced and valid. Panics otherwise.
    pub(crate) fn from_reduced(n: usize, a: usize, b: usize, c: usize, d: usize) -> Self {
        WhParams::new(n as i64, a as i64, b as i64, c as i64, d as i64)
            .expect("tuple must be valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `(b, c, d)` as an array, convenient when permuting roles.
    pub fn bcd(&self) -> [usize; 3] {
        [self.b, self.c, self.d]
    }

    /// The tuple of the graph relabeled by `i -> q*i` on all three vertex
    /// classes: `WH_n(qa, qb, qc, qd)`. The relabeling is an isomorphism, so
    /// the two graphs are isomorphic. Requires `gcd(q, n) = 1`.
    pub fn multiplier_image(&self, q: usize) -> Result<Self, ParamError> {
        if gcd(q % self.n, self.n) != 1 {
            return Err(ParamError::QNotCoprime { q, n: self.n });
        }
        Ok(WhParams {
            n: self.n,
            a: (q * self.a) % self.n,
            b: (q * self.b) % self.n,
            c: (q * self.c) % self.n,
            d: (q * self.d) % self.n,
        })
    }

    /// All tuples that produce the *identical* labeled graph: negate `a`
    /// and/or permute the roles of `b`, `c`, `d`. At most 12 tuples; returned
    /// sorted and deduplicated.
    pub fn symmetries(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity(12);
        for a in [self.a, (self.n - self.a) % self.n] {
            for [b, c, d] in role_permutations(self.bcd()) {
                out.push(WhParams {
                    n: self.n,
                    a,
                    b,
                    c,
                    d,
                });
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// The six orderings of `[b, c, d]`, in lexicographic order of the slot
/// permutation: bcd, bdc, cbd, cdb, dbc, dcb.
pub fn role_permutations([b, c, d]: [usize; 3]) -> [[usize; 3]; 6] {
    [
        [b, c, d],
        [b, d, c],
        [c, b, d],
        [c, d, b],
        [d, b, c],
        [d, c, b],
    ]
}

impl fmt::Display for WhParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WH_{}({},{},{},{})",
            self.n, self.a, self.b, self.c, self.d
        )
    }
}
