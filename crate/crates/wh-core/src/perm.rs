//! Permutations of the `3n` linear vertex ids and the named automorphisms of
//! the family: the index shift `rho`, the reflection `tau` that swaps the B-
//! and C-classes, and the vertex-transitivity witnesses `sigma` and `theta`
//! defined by case tables on the index parity (mod 2 resp. mod 4).

use crate::graph::{VertexClass, WhGraph};
use crate::params::WhParams;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("NotABijection: image array is not a permutation")]
    NotABijection,
    #[error("LengthMismatch: permutation degree {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("HypothesesNotMet: {clause}")]
    HypothesesNotMet { clause: String },
    #[error("MNotOddOrTooSmall: m = {0} must be odd and at least 3")]
    MNotOddOrTooSmall(i64),
}

/// A bijection on `0..degree`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(PermError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Left-to-right composition: `a.then(b)` maps `x` to `b(a(x))`.
    pub fn then(&self, after: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), after.degree());
        Permutation {
            images: self.images.iter().map(|&x| after.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u128 {
        let mut seen = vec![false; self.degree()];
        let mut order: u128 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.images[v];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Cycle decomposition; each cycle starts at its smallest point, cycles
    /// sorted by starting point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn class_shift(
    p: &WhParams,
    f: impl Fn(VertexClass, usize) -> (VertexClass, usize),
) -> Permutation {
    let n = p.n();
    let images = (0..3 * n)
        .map(|v| {
            let class = [VertexClass::A, VertexClass::B, VertexClass::C][v / n];
            let (nc, ni) = f(class, v % n);
            nc.rank() * n + ni % n
        })
        .collect();
    Permutation::from_images(images).expect("class-wise rule must be a bijection")
}

/// The semiregular index shift: `X_i -> X_{i+1}` on all three classes. Always
/// an automorphism, with three orbits of length `n`.
pub fn rho(p: &WhParams) -> Permutation {
    let n = p.n();
    class_shift(p, |class, i| (class, (i + 1) % n))
}

/// The reflection `A_i -> A_{-i}`, `B_i -> C_{-i}`, `C_i -> B_{-i}`. An
/// involution with `tau rho tau = rho^{-1}`, so `<rho, tau>` is dihedral of
/// order `2n`.
pub fn tau(p: &WhParams) -> Permutation {
    let n = p.n();
    class_shift(p, |class, i| {
        let class = match class {
            VertexClass::A => VertexClass::A,
            VertexClass::B => VertexClass::C,
            VertexClass::C => VertexClass::B,
        };
        (class, (n - i) % n)
    })
}

/// Hypotheses under which [`sigma`] is defined, checked in a fixed order so
/// the reported failing clause is deterministic.
fn check_sigma_hypotheses(p: &WhParams) -> Result<(), PermError> {
    let n = p.n();
    let clause = |c: String| Err(PermError::HypothesesNotMet { clause: c });
    if !n.is_multiple_of(2) {
        return clause(format!("n must be even, got n = {n}"));
    }
    if p.a().is_multiple_of(2) {
        return clause(format!("a must be odd, got a = {}", p.a()));
    }
    if p.b().is_multiple_of(2) {
        return clause(format!("b must be odd, got b = {}", p.b()));
    }
    if p.d().is_multiple_of(2) {
        return clause(format!("d must be odd, got d = {}", p.d()));
    }
    if !p.c().is_multiple_of(2) {
        return clause(format!("c must be even, got c = {}", p.c()));
    }
    if (2 * p.a() + p.b()) % n != p.d() {
        return clause(format!("d = 2a + b (mod n) must hold for {p}"));
    }
    if (2 * p.c()) % n != (3 * p.a() + 3 * p.b()) % n {
        return clause(format!("2c = 3a + 3b (mod n) must hold for {p}"));
    }
    Ok(())
}

/// The parity-table automorphism of the `d = 2a + b`, `2c = 3a + 3b` family:
///
/// ```text
/// i even:  A_i -> B_i          B_i -> C_{i+c}      C_i -> A_i
/// i odd:   A_i -> C_{i-a+d}    B_i -> A_{i+a+b}    C_i -> B_{i-b+c-d}
/// ```
///
/// It maps an A-vertex to a B-vertex, witnessing vertex-transitivity.
/// Fails with the first violated hypothesis otherwise.
pub fn sigma(p: &WhParams) -> Result<Permutation, PermError> {
    check_sigma_hypotheses(p)?;
    let n = p.n();
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    use VertexClass::*;
    Ok(class_shift(p, |class, i| {
        if i % 2 == 0 {
            match class {
                A => (B, i),
                B => (C, (i + c) % n),
                C => (A, i),
            }
        } else {
            match class {
                A => (C, (i + n - a + d) % n),
                B => (A, (i + a + b) % n),
                C => (B, (i + n - b + c + n - d) % n),
            }
        }
    }))
}

/// The mod-4 table automorphism of `WH_{4m}(2, m-2, 0, m+2)` for odd `m >= 3`,
/// with `delta` in `{1, 3}` chosen by `m = delta (mod 4)`:
///
/// ```text
/// i = 0:        A_i -> B_i        B_i -> A_i        C_i -> C_i
/// i = delta:    A_i -> C_i        B_i -> B_i        C_i -> A_i
/// i = 2:        A_i -> C_{i+m}    B_i -> A_{i+m}    C_i -> B_{i+m}
/// i = 4-delta:  A_i -> B_{i-m}    B_i -> C_{i-m}    C_i -> A_{i-m}
/// ```
pub fn theta(m: i64) -> Result<Permutation, PermError> {
    if m < 3 || m % 2 == 0 {
        return Err(PermError::MNotOddOrTooSmall(m));
    }
    let m = m as usize;
    let n = 4 * m;
    let p = WhParams::new(n as i64, 2, m as i64 - 2, 0, m as i64 + 2)
        .expect("family tuple is valid for odd m >= 3");
    let delta = m % 4;
    use VertexClass::*;
    Ok(class_shift(&p, |class, i| {
        let r = i % 4;
        if r == 0 {
            match class {
                A => (B, i),
                B => (A, i),
                C => (C, i),
            }
        } else if r == delta {
            match class {
                A => (C, i),
                B => (B, i),
                C => (A, i),
            }
        } else if r == 2 {
            match class {
                A => (C, (i + m) % n),
                B => (A, (i + m) % n),
                C => (B, (i + m) % n),
            }
        } else {
            debug_assert_eq!(r, 4 - delta);
            match class {
                A => (B, (i + n - m) % n),
                B => (C, (i + n - m) % n),
                C => (A, (i + n - m) % n),
            }
        }
    }))
}

/// True iff `perm` maps every edge of `g` to an edge. For a bijection this is
/// equivalent to preserving adjacency in both directions.
pub fn is_automorphism(g: &WhGraph, perm: &Permutation) -> Result<bool, PermError> {
    if perm.degree() != g.order() {
        return Err(PermError::LengthMismatch {
            expected: g.order(),
            got: perm.degree(),
        });
    }
    Ok(g.edge_pairs()
        .all(|(u, v)| g.adjacent(perm.apply(u), perm.apply(v))))
}
