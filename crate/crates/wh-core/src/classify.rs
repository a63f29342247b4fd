//! The vertex-transitivity decision procedure: a tuple is vertex-transitive
//! exactly when `n` is even and, after a multiplier relabeling combined with
//! negating `a` and permuting the roles of `b`, `c`, `d`, it lands in one of
//! three shapes, all satisfying `d = 2a + b`:
//!
//! 1. one of the two sporadic members `WH_8(2,1,0,5)`, `WH_8(2,1,4,5)`;
//! 2. `a`, `b`, `d` odd, `c` even and `2c = 3a + 3b`;
//! 3. `WH_{4m}(2, m-2, 0, m+2)` with `m > 1` odd.
//!
//! The search is exhaustive over the finite transformation group (at most
//! `12 * phi(n)` tuples) rather than a clever normal form; every match is
//! collected as a witness.

use crate::aut::automorphism_generators;
use crate::graph::WhGraph;
use crate::group::{Action, PermGroup};
use crate::params::{gcd, role_permutations, WhParams};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The three clauses of the classification, in their fixed reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Clause {
    Sporadic8,
    Family2,
    Family3,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Sporadic8 => write!(f, "Sporadic8"),
            Clause::Family2 => write!(f, "Family2"),
            Clause::Family3 => write!(f, "Family3"),
        }
    }
}

/// One successful normalization: the transformation applied and the tuple it
/// produced, which literally satisfies the clause's congruences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub clause: Clause,
    pub q: usize,
    pub negate_a: bool,
    /// Which original role lands in each slot, e.g. "cbd" swaps b and c.
    pub role_perm: String,
    pub tuple: WhParams,
    /// For clause 3, the `m` with `n = 4m`.
    pub m: Option<usize>,
}

/// Outcome of [`classify`]: the set of matched clauses (possibly several) and
/// every witnessing normalization. An empty verdict means not
/// vertex-transitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VtClassification {
    pub verdict: Vec<Clause>,
    pub witnesses: Vec<Witness>,
}

impl VtClassification {
    pub fn is_vertex_transitive(&self) -> bool {
        !self.verdict.is_empty()
    }
}

impl fmt::Display for VtClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verdict.is_empty() {
            return write!(f, "NotVT");
        }
        let names: Vec<String> = self.verdict.iter().map(Clause::to_string).collect();
        write!(f, "{}", names.join("+"))
    }
}

/// Literal clause-2 test on the tuple as given, no normalization: `n` even,
/// `a`, `b`, `d` odd, `c` even, `d = 2a + b` and `2c = 3a + 3b` (mod n).
pub fn family2_check(p: &WhParams) -> bool {
    let n = p.n();
    n.is_multiple_of(2)
        && p.a() % 2 == 1
        && p.b() % 2 == 1
        && p.d() % 2 == 1
        && p.c().is_multiple_of(2)
        && (2 * p.a() + p.b()) % n == p.d()
        && (2 * p.c()) % n == (3 * p.a() + 3 * p.b()) % n
}

/// Literal clause-3 test: returns `m` when `n = 4m` with `m > 1` odd and the
/// tuple is exactly `(2, m-2, 0, m+2)`.
pub fn family3_check(p: &WhParams) -> Option<usize> {
    let n = p.n();
    if !n.is_multiple_of(4) {
        return None;
    }
    let m = n / 4;
    if m <= 1 || m.is_multiple_of(2) {
        return None;
    }
    let expected = (2usize, m - 2, 0usize, (m + 2) % n);
    ((p.a(), p.b(), p.c(), p.d()) == expected).then_some(m)
}

const ROLE_NAMES: [&str; 6] = ["bcd", "bdc", "cbd", "cdb", "dbc", "dcb"];

/// Decides which clauses the tuple matches, searching all multipliers,
/// the sign of `a` and the six role permutations.
pub fn classify(p: &WhParams) -> VtClassification {
    let n = p.n();
    let mut witnesses = Vec::new();
    if n.is_multiple_of(2) {
        for q in (1..n).filter(|&q| gcd(q, n) == 1) {
            let image = p.multiplier_image(q).expect("q is coprime");
            for negate_a in [false, true] {
                let a = if negate_a {
                    (n - image.a()) % n
                } else {
                    image.a()
                };
                for (pi, [b, c, d]) in role_permutations(image.bcd()).into_iter().enumerate() {
                    if (2 * a + b) % n != d {
                        continue;
                    }
                    let tuple = WhParams::from_reduced(n, a, b, c, d);
                    let mut push = |clause: Clause, m: Option<usize>| {
                        witnesses.push(Witness {
                            clause,
                            q,
                            negate_a,
                            role_perm: ROLE_NAMES[pi].to_string(),
                            tuple,
                            m,
                        });
                    };
                    if n == 8 && [(2, 1, 0, 5), (2, 1, 4, 5)].contains(&(a, b, c, d)) {
                        // Tuple matching must agree with graph isomorphism.
                        debug_assert!(crate::aut::are_isomorphic(
                            &WhGraph::build(*p),
                            &WhGraph::build(tuple)
                        ));
                        push(Clause::Sporadic8, None);
                    }
                    if family2_check(&tuple) {
                        push(Clause::Family2, None);
                    }
                    if let Some(m) = family3_check(&tuple) {
                        push(Clause::Family3, Some(m));
                    }
                }
            }
        }
    }
    let mut verdict: Vec<Clause> = witnesses.iter().map(|w| w.clause).collect();
    verdict.sort_unstable();
    verdict.dedup();
    VtClassification { verdict, witnesses }
}

/// Ground truth for the classification: whether the computed automorphism
/// group acts transitively on vertices.
pub fn vt_ground_truth(p: &WhParams) -> bool {
    let g = WhGraph::build(*p);
    let group = PermGroup::from_generators(g.order(), automorphism_generators(&g));
    group
        .orbits(&g, Action::Vertices)
        .expect("degree matches")
        .is_transitive()
}
