//! The graph `WH_n(a,b,c,d)` itself: 3n vertices in three classes `A`, `B`,
//! `C` indexed over `Z_n`, with adjacencies
//!
//! ```text
//! A_i ~ A_{i-a}, A_{i+a}, B_i, C_i
//! B_i ~ A_i, C_{i+b}, C_{i+c}, C_{i+d}
//! C_i ~ A_i, B_{i-b}, B_{i-c}, B_{i-d}
//! ```
//!
//! all subscripts mod `n`. Vertices are linearized A-block, B-block, C-block
//! (ids `0..3n`); that ordering is canonical across the whole crate,
//! including file exports.

use crate::params::WhParams;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("NotATwoPath: ({0}, {1}, {2}) is not a 2-path (middle vertex must be adjacent to both distinct ends)")]
    NotATwoPath(usize, usize, usize),
    #[error("KNotDivisor: k = {k} does not divide n = {n} (or k = 0)")]
    KNotDivisor { k: usize, n: usize },
}

/// One of the three cyclic vertex classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    A,
    B,
    C,
}

impl VertexClass {
    pub fn rank(self) -> usize {
        match self {
            VertexClass::A => 0,
            VertexClass::B => 1,
            VertexClass::C => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            VertexClass::A => 'A',
            VertexClass::B => 'B',
            VertexClass::C => 'C',
        }
    }
}

/// A structured vertex name: class plus index in `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub class: VertexClass,
    pub index: usize,
}

impl VertexId {
    pub fn new(class: VertexClass, index: usize) -> Self {
        VertexId { class, index }
    }

    /// Linear id under the fixed A-block/B-block/C-block layout.
    pub fn linear(self, n: usize) -> usize {
        self.class.rank() * n + (self.index % n)
    }

    pub fn from_linear(id: usize, n: usize) -> Self {
        debug_assert!(id < 3 * n);
        let class = match id / n {
            0 => VertexClass::A,
            1 => VertexClass::B,
            _ => VertexClass::C,
        };
        VertexId {
            class,
            index: id % n,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.letter(), self.index)
    }
}

/// The six `<rho>`-orbits on edges, named after their representative:
/// `{A_0, A_a}` (a-edges), `{A_0, B_0}` (left), `{A_0, C_0}` (right) and
/// `{B_0, C_x}` for `x` in `{b, c, d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    AEdge,
    Left,
    Right,
    BEdge,
    CEdge,
    DEdge,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 6] = [
        EdgeKind::AEdge,
        EdgeKind::Left,
        EdgeKind::Right,
        EdgeKind::BEdge,
        EdgeKind::CEdge,
        EdgeKind::DEdge,
    ];

    /// Attribute string used in DOT export.
    pub fn label(self) -> &'static str {
        match self {
            EdgeKind::AEdge => "a",
            EdgeKind::Left => "left",
            EdgeKind::Right => "right",
            EdgeKind::BEdge => "b",
            EdgeKind::CEdge => "c",
            EdgeKind::DEdge => "d",
        }
    }
}

/// A cycle stored in normalized traversal order: the smallest vertex comes
/// first and of its two neighbors on the cycle the smaller one comes second,
/// so equal cycles compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(walk: &[usize]) -> Self {
        debug_assert!(walk.len() >= 3);
        let k = walk.len();
        let start = (0..k).min_by_key(|&i| walk[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|j| walk[(start + j) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|j| walk[(start + k - j) % k]).collect();
        Cycle(if forward <= backward {
            forward
        } else {
            backward
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// The cycle's edges as normalized `(min, max)` pairs, in traversal order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.0.len();
        (0..k)
            .map(|i| {
                let (u, v) = (self.0[i], self.0[(i + 1) % k]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}

/// Immutable adjacency structure of one Woolly Hat graph.
#[derive(Debug, Clone)]
pub struct WhGraph {
    params: WhParams,
    adjacency: Vec<[usize; 4]>,
    edges: Vec<(usize, usize, EdgeKind)>,
}

impl WhGraph {
    /// Builds the graph for a validated tuple. The result is always simple,
    /// 4-regular, connected and of order `3n`.
    pub fn build(params: WhParams) -> Self {
        let n = params.n();
        let (a, b, c, d) = (params.a(), params.b(), params.c(), params.d());
        let av = |i: usize| i % n;
        let bv = |i: usize| n + i % n;
        let cv = |i: usize| 2 * n + i % n;

        let mut adjacency = vec![[0usize; 4]; 3 * n];
        for i in 0..n {
            let mut na = [av(i + n - a), av(i + a), bv(i), cv(i)];
            let mut nb = [av(i), cv(i + b), cv(i + c), cv(i + d)];
            let mut nc = [av(i), bv(i + n - b), bv(i + n - c), bv(i + n - d)];
            na.sort_unstable();
            nb.sort_unstable();
            nc.sort_unstable();
            adjacency[av(i)] = na;
            adjacency[bv(i)] = nb;
            adjacency[cv(i)] = nc;
        }

        let mut edges = Vec::with_capacity(6 * n);
        for i in 0..n {
            let pairs = [
                (av(i), av(i + a), EdgeKind::AEdge),
                (av(i), bv(i), EdgeKind::Left),
                (av(i), cv(i), EdgeKind::Right),
                (bv(i), cv(i + b), EdgeKind::BEdge),
                (bv(i), cv(i + c), EdgeKind::CEdge),
                (bv(i), cv(i + d), EdgeKind::DEdge),
            ];
            for (u, v, kind) in pairs {
                edges.push((u.min(v), u.max(v), kind));
            }
        }
        edges.sort_unstable();
        debug_assert!(edges
            .windows(2)
            .all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1)));

        WhGraph {
            params,
            adjacency,
            edges,
        }
    }

    pub fn params(&self) -> &WhParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    /// Number of vertices, `3n`.
    pub fn order(&self) -> usize {
        3 * self.params.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize; 4] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    /// Edges as `(min, max, kind)`, sorted.
    pub fn edges(&self) -> &[(usize, usize, EdgeKind)] {
        &self.edges
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v, _)| (u, v))
    }

    pub fn vertex(&self, class: VertexClass, index: usize) -> usize {
        VertexId::new(class, index).linear(self.n())
    }

    pub fn vertex_id(&self, v: usize) -> VertexId {
        VertexId::from_linear(v, self.n())
    }

    /// Kind of the edge `{u, v}`; `None` if they are not adjacent. The kind
    /// assignment is a total function on edges because `b`, `c`, `d` are
    /// pairwise distinct.
    pub fn edge_kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        if !self.adjacent(u, v) {
            return None;
        }
        let n = self.n();
        let (iu, iv) = (self.vertex_id(u), self.vertex_id(v));
        use VertexClass::*;
        let kind = match (iu.class, iv.class) {
            (A, A) => EdgeKind::AEdge,
            (A, B) | (B, A) => EdgeKind::Left,
            (A, C) | (C, A) => EdgeKind::Right,
            (B, C) | (C, B) => {
                let (bi, ci) = if iu.class == B {
                    (iu.index, iv.index)
                } else {
                    (iv.index, iu.index)
                };
                let x = (ci + n - bi) % n;
                if x == self.params.b() {
                    EdgeKind::BEdge
                } else if x == self.params.c() {
                    EdgeKind::CEdge
                } else {
                    debug_assert_eq!(x, self.params.d());
                    EdgeKind::DEdge
                }
            }
            _ => unreachable!("no B-B or C-C edges exist"),
        };
        Some(kind)
    }

    /// All ordered adjacent pairs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(12 * self.n());
        for v in 0..self.order() {
            for &w in self.neighbors(v) {
                out.push((v, w));
            }
        }
        out.sort_unstable();
        out
    }

    /// All ordered triples `(u, v, w)` with `u != w` and both adjacent to `v`.
    pub fn two_arcs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(36 * self.n());
        for v in 0..self.order() {
            for &u in self.neighbors(v) {
                for &w in self.neighbors(v) {
                    if u != w {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> usize {
        let order = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; order];
        let mut parent = vec![usize::MAX; order];
        let mut queue = Vec::with_capacity(order);
        for s in 0..order {
            dist.fill(usize::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    /// The `n` canonical 6-cycles
    /// `(B_i, C_{i+b}, B_{i+b-c}, C_{i+b-c+d}, B_{i-c+d}, C_{i+d})`, one per
    /// `i`. Antipodal edge pairs on each of them share an edge kind in
    /// `{BEdge, CEdge, DEdge}`.
    pub fn canonical_six_cycles(&self) -> Vec<Cycle> {
        let n = self.n();
        let (b, c, d) = (self.params.b(), self.params.c(), self.params.d());
        let bv = |i: usize| n + i % n;
        let cv = |i: usize| 2 * n + i % n;
        (0..n)
            .map(|i| {
                Cycle::new(&[
                    bv(i),
                    cv(i + b),
                    bv(i + b + n - c),
                    cv(i + b + n - c + d),
                    bv(i + n - c + d),
                    cv(i + d),
                ])
            })
            .collect()
    }

    /// All 6-cycles containing the ordered 2-path `(u, v, w)`, found by a
    /// depth-bounded walk extension from `w` back to `u`.
    pub fn six_cycles_through_two_arc(
        &self,
        arc2: (usize, usize, usize),
    ) -> Result<Vec<Cycle>, GraphError> {
        let (u, v, w) = arc2;
        if u == w || !self.adjacent(v, u) || !self.adjacent(v, w) {
            return Err(GraphError::NotATwoPath(u, v, w));
        }
        let mut out = Vec::new();
        for &x in self.neighbors(w) {
            if x == v || x == u {
                continue;
            }
            for &y in self.neighbors(x) {
                if y == u || y == v || y == w {
                    continue;
                }
                for &z in self.neighbors(y) {
                    if z == u || z == v || z == w || z == x {
                        continue;
                    }
                    if self.adjacent(z, u) {
                        out.push(Cycle::new(&[u, v, w, x, y, z]));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Number of cycles of length exactly `len` through the edge `{u, v}`.
    pub fn count_cycles_through_edge(&self, u: usize, v: usize, len: usize) -> usize {
        debug_assert!(self.adjacent(u, v) && len >= 3);
        // Simple paths u -> v of len-1 edges; each closes to one cycle.
        let mut on_path = vec![false; self.order()];
        on_path[u] = true;
        self.count_paths(u, v, len - 1, &mut on_path)
    }

    fn count_paths(&self, from: usize, to: usize, steps: usize, on_path: &mut [bool]) -> usize {
        if steps == 1 {
            return usize::from(self.adjacent(from, to) && !on_path[to]);
        }
        let mut total = 0;
        for &w in self.neighbors(from) {
            if w == to || on_path[w] {
                continue;
            }
            on_path[w] = true;
            total += self.count_paths(w, to, steps - 1, on_path);
            on_path[w] = false;
        }
        total
    }

    /// Quotient by the vertex orbits of `<rho^k>` for a divisor `k` of `n`:
    /// the simple graph on the `3k` orbits `{X_r, X_{r+k}, ...}`.
    pub fn quotient_by_rho_power(&self, k: usize) -> Result<QuotientGraph, GraphError> {
        let n = self.n();
        if k == 0 || !n.is_multiple_of(k) {
            return Err(GraphError::KNotDivisor { k, n });
        }
        let project = |v: usize| (v / n) * k + (v % n) % k;
        let mut adjacency = vec![Vec::new(); 3 * k];
        for (u, v) in self.edge_pairs() {
            let (qu, qv) = (project(u), project(v));
            if qu != qv {
                adjacency[qu].push(qv);
                adjacency[qv].push(qu);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(QuotientGraph { k, adjacency })
    }
}

/// A simple quotient graph on orbit representatives, `3k` vertices laid out
/// like a Woolly Hat graph (A-orbits, then B-orbits, then C-orbits). Collapsed
/// parallel edges can drop the valency below 4, so this is a generic graph,
/// not a [`WhGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    k: usize,
    adjacency: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        3 * self.k
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, list) in self.adjacency.iter().enumerate() {
            for &w in list {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// When every vertex keeps four distinct neighbor orbits the quotient is
    /// again a Woolly Hat graph, namely the one with parameters reduced mod
    /// `k`; this reports that tuple if so.
    pub fn as_wh_params(&self, original: &WhParams) -> Option<WhParams> {
        let k = self.k as i64;
        let reduced = WhParams::new(
            k,
            (original.a() % self.k) as i64,
            (original.b() % self.k) as i64,
            (original.c() % self.k) as i64,
            (original.d() % self.k) as i64,
        )
        .ok()?;
        let expected = WhGraph::build(reduced);
        let same = expected.edge_pairs().collect::<Vec<_>>() == self.edge_set();
        same.then_some(reduced)
    }
}
