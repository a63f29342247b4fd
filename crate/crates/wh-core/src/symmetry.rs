//! Transitivity verdicts, the red/blue edge structure of the vertex-transitive
//! members, basic 6-cycle statistics, alternating 4-cycles, and the
//! LR-structure candidate tests.
//!
//! On a vertex-transitive member the automorphism group has exactly two edge
//! orbits: the blue one (left, right and c-edges) and the red one (a-, b- and
//! d-edges), once the parameter roles are normalized so that `2a = d - b`.
//! For arbitrary tuples the same recoloring is available syntactically
//! whenever some role assignment satisfies the congruence; it only coincides
//! with automorphism orbits in the vertex-transitive case.

use crate::aut::automorphism_generators;
use crate::graph::{Cycle, EdgeKind, GraphError, WhGraph};
use crate::group::{Action, GroupError, PermGroup};
use crate::params::{gcd, role_permutations, WhParams};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("NoNormalization: no role assignment of (b, c, d) with optional negation of a satisfies 2a = d - b for {0}")]
    NoNormalization(WhParams),
    #[error("NotNormalized: parameters {0} do not satisfy 2a = d - b")]
    NotNormalized(WhParams),
    #[error("PathNotRed: both edges of the 2-path must be red")]
    PathNotRed,
    #[error(
        "NotVertexTransitive: {0} is not vertex-transitive; LR candidate conditions do not apply"
    )]
    NotVertexTransitive(WhParams),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Orbit counts of the full automorphism group on the four natural domains,
/// with the derived transitivity verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityReport {
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
    pub two_arc_orbits: usize,
    pub is_vertex_transitive: bool,
    pub is_edge_transitive: bool,
    pub is_arc_transitive: bool,
    pub is_two_arc_transitive: bool,
    pub aut_order: u128,
}

/// Full report from a freshly computed automorphism group.
pub fn transitivity_report(g: &WhGraph) -> TransitivityReport {
    let group = PermGroup::from_generators(g.order(), automorphism_generators(g));
    transitivity_report_with(g, &group)
}

/// Report against a caller-supplied automorphism group (avoids recomputation
/// inside sweeps).
pub fn transitivity_report_with(g: &WhGraph, group: &PermGroup) -> TransitivityReport {
    let vertex_orbits = group
        .orbits(g, Action::Vertices)
        .expect("degree matches")
        .orbit_count();
    let edge_orbits = group
        .orbits(g, Action::Edges)
        .expect("degree matches")
        .orbit_count();
    let arc_orbits = group
        .orbits(g, Action::Arcs)
        .expect("degree matches")
        .orbit_count();
    let two_arc_orbits = group
        .orbits(g, Action::TwoArcs)
        .expect("degree matches")
        .orbit_count();
    TransitivityReport {
        vertex_orbits,
        edge_orbits,
        arc_orbits,
        two_arc_orbits,
        is_vertex_transitive: vertex_orbits == 1,
        is_edge_transitive: edge_orbits == 1,
        is_arc_transitive: arc_orbits == 1,
        is_two_arc_transitive: two_arc_orbits == 1,
        aut_order: group.order(),
    }
}

/// Edge colors of the two-orbit structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// A red/blue coloring of the edges of one graph, derived from a normalized
/// parameter tuple: blue edges are the left, right and c-edges, red edges the
/// a-, b- and d-edges.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    normalized: WhParams,
    colors: Vec<EdgeColor>,
}

impl EdgeColoring {
    pub fn normalized_params(&self) -> &WhParams {
        &self.normalized
    }

    /// Color of the i-th edge in the graph's sorted edge list.
    pub fn color(&self, edge_index: usize) -> EdgeColor {
        self.colors[edge_index]
    }

    pub fn colors(&self) -> &[EdgeColor] {
        &self.colors
    }

    /// Edge indices of each color, (red, blue).
    pub fn split(&self) -> (Vec<usize>, Vec<usize>) {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for (i, c) in self.colors.iter().enumerate() {
            match c {
                EdgeColor::Red => red.push(i),
                EdgeColor::Blue => blue.push(i),
            }
        }
        (red, blue)
    }
}

/// Searches the 12 tuples producing the identical labeled graph (role
/// permutations of `(b, c, d)` crossed with negation of `a`) for one
/// satisfying `2a = d - b`. Scan order is fixed: permutations in
/// lexicographic slot order, sign `+` before `-`; the first match wins.
pub fn normalize_for_coloring(p: &WhParams) -> Result<WhParams, SymmetryError> {
    let n = p.n();
    for [b, c, d] in role_permutations(p.bcd()) {
        for a in [p.a(), (n - p.a()) % n] {
            if (2 * a) % n == (d + n - b) % n {
                return Ok(
                    WhParams::new(n as i64, a as i64, b as i64, c as i64, d as i64)
                        .expect("role permutation preserves validity"),
                );
            }
        }
    }
    Err(SymmetryError::NoNormalization(*p))
}

/// Colors the edges of a graph whose own parameters already satisfy
/// `2a = d - b` (build the graph from [`normalize_for_coloring`]'s output;
/// the labeled graph is unchanged by that substitution).
pub fn color_edges(g: &WhGraph) -> Result<EdgeColoring, SymmetryError> {
    let p = *g.params();
    let n = p.n();
    if (2 * p.a()) % n != (p.d() + n - p.b()) % n {
        return Err(SymmetryError::NotNormalized(p));
    }
    let colors = g
        .edges()
        .iter()
        .map(|&(_, _, kind)| match kind {
            EdgeKind::Left | EdgeKind::Right | EdgeKind::CEdge => EdgeColor::Blue,
            EdgeKind::AEdge | EdgeKind::BEdge | EdgeKind::DEdge => EdgeColor::Red,
        })
        .collect();
    Ok(EdgeColoring {
        normalized: p,
        colors,
    })
}

fn edge_index(g: &WhGraph, u: usize, v: usize) -> usize {
    let key = (u.min(v), u.max(v));
    g.edges()
        .binary_search_by_key(&key, |&(x, y, _)| (x, y))
        .expect("edge must exist")
}

fn edge_color(g: &WhGraph, coloring: &EdgeColoring, u: usize, v: usize) -> EdgeColor {
    coloring.color(edge_index(g, u, v))
}

/// All basic 6-cycles through a red 2-path: 6-cycles with four red edges and
/// two antipodal blue edges. On vertex-transitive normalized members every
/// red 2-path lies on exactly two of them when `4a != 0` and exactly four
/// when `4a = 0`.
pub fn basic_six_cycles_through(
    g: &WhGraph,
    coloring: &EdgeColoring,
    path: (usize, usize, usize),
) -> Result<Vec<Cycle>, SymmetryError> {
    let (u, v, w) = path;
    let candidates = g.six_cycles_through_two_arc((u, v, w))?;
    if edge_color(g, coloring, u, v) != EdgeColor::Red
        || edge_color(g, coloring, v, w) != EdgeColor::Red
    {
        return Err(SymmetryError::PathNotRed);
    }
    Ok(candidates
        .into_iter()
        .filter(|cycle| is_basic(g, coloring, cycle))
        .collect())
}

fn is_basic(g: &WhGraph, coloring: &EdgeColoring, cycle: &Cycle) -> bool {
    let edges = cycle.edges();
    debug_assert_eq!(edges.len(), 6);
    let blue: Vec<usize> = (0..6)
        .filter(|&i| edge_color(g, coloring, edges[i].0, edges[i].1) == EdgeColor::Blue)
        .collect();
    blue.len() == 2 && blue[1] - blue[0] == 3
}

/// All 4-cycles whose edges alternate red/blue/red/blue.
pub fn alternating_four_cycles(g: &WhGraph, coloring: &EdgeColoring) -> Vec<Cycle> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for &x in g.neighbors(u) {
            if edge_color(g, coloring, u, x) != EdgeColor::Red {
                continue;
            }
            for &v in g.neighbors(x) {
                if v == u || edge_color(g, coloring, x, v) != EdgeColor::Blue {
                    continue;
                }
                for &y in g.neighbors(v) {
                    if y == u || y == x || edge_color(g, coloring, v, y) != EdgeColor::Red {
                        continue;
                    }
                    if g.adjacent(y, u) && edge_color(g, coloring, y, u) == EdgeColor::Blue {
                        out.push(Cycle::new(&[u, x, v, y]));
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Result of the LR-structure candidate conditions on a vertex-transitive
/// member: no alternating 4-cycles, and an automorphism fixing a vertex and
/// two of its neighbors while swapping the other two. `q_witness` is the
/// least multiplier `q` with `qa = -a`, `qc = c`, `qb = d` on the normalized
/// tuple, a sufficient condition for the swap automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrReport {
    pub no_alt_4cycles: bool,
    pub swap_automorphism_exists: bool,
    pub q_witness: Option<usize>,
    pub normalized: WhParams,
}

/// Runs the LR candidate checks. The graph must be vertex-transitive; the
/// caller may pass a precomputed automorphism group.
pub fn lr_candidate_check(g: &WhGraph) -> Result<LrReport, SymmetryError> {
    let group = PermGroup::from_generators(g.order(), automorphism_generators(g));
    lr_candidate_check_with(g, &group)
}

pub fn lr_candidate_check_with(g: &WhGraph, group: &PermGroup) -> Result<LrReport, SymmetryError> {
    let vertex_orbits = group.orbits(g, Action::Vertices)?.orbit_count();
    if vertex_orbits != 1 {
        return Err(SymmetryError::NotVertexTransitive(*g.params()));
    }
    let normalized = normalize_for_coloring(g.params())?;
    let ng = WhGraph::build(normalized);
    let coloring = color_edges(&ng)?;
    let no_alt_4cycles = alternating_four_cycles(&ng, &coloring).is_empty();

    // Vertex-transitivity makes one vertex sufficient; use A_0 = vertex 0.
    let swap_automorphism_exists = has_neighbor_swap(g, group, 0);
    let q_witness = find_q_witness(&normalized);

    Ok(LrReport {
        no_alt_4cycles,
        swap_automorphism_exists,
        q_witness,
        normalized,
    })
}

/// Decides whether some automorphism fixes `v` and two of its neighbors while
/// interchanging the other two, by closing the stabilizer's induced action on
/// the four neighbors (a subgroup of S4, at most 24 elements).
fn has_neighbor_swap(g: &WhGraph, group: &PermGroup, v: usize) -> bool {
    let stab = group.stabilizer(v).expect("vertex in range");
    let neighbors = *g.neighbors(v);
    let restrict = |p: &crate::perm::Permutation| -> [u8; 4] {
        let mut image = [0u8; 4];
        for (slot, &u) in neighbors.iter().enumerate() {
            let target = p.apply(u);
            image[slot] = neighbors
                .iter()
                .position(|&x| x == target)
                .expect("stabilizer permutes the neighbors") as u8;
        }
        image
    };
    let local_gens: Vec<[u8; 4]> = stab.generators().iter().map(restrict).collect();
    let mut elements: Vec<[u8; 4]> = vec![[0, 1, 2, 3]];
    let mut frontier = elements.clone();
    while let Some(e) = frontier.pop() {
        for gen in &local_gens {
            let composed = [
                gen[e[0] as usize],
                gen[e[1] as usize],
                gen[e[2] as usize],
                gen[e[3] as usize],
            ];
            if !elements.contains(&composed) {
                elements.push(composed);
                frontier.push(composed);
            }
        }
    }
    elements.iter().any(|e| {
        let fixed = (0..4).filter(|&i| e[i] as usize == i).count();
        fixed == 2 && (0..4).all(|i| e[e[i] as usize] as usize == i)
    })
}

fn find_q_witness(p: &WhParams) -> Option<usize> {
    let n = p.n();
    (1..n).filter(|&q| gcd(q, n) == 1).find(|&q| {
        (q * p.a()) % n == (n - p.a()) % n && (q * p.c()) % n == p.c() && (q * p.b()) % n == p.d()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wh(n: i64, a: i64, b: i64, c: i64, d: i64) -> WhGraph {
        WhGraph::build(WhParams::new(n, a, b, c, d).unwrap())
    }

    #[test]
    fn normalization_examples() {
        let p = WhParams::new(4, 1, 3, 0, 1).unwrap();
        assert_eq!(normalize_for_coloring(&p).unwrap(), p);
        let p = WhParams::new(12, 2, 1, 0, 5).unwrap();
        assert_eq!(normalize_for_coloring(&p).unwrap(), p);
        let p = WhParams::new(4, 1, 0, 1, 3).unwrap();
        assert_eq!(
            normalize_for_coloring(&p).unwrap(),
            WhParams::new(4, 1, 1, 0, 3).unwrap()
        );
    }

    #[test]
    fn colors_by_kind() {
        let g = wh(4, 1, 3, 0, 1);
        let coloring = color_edges(&g).unwrap();
        let a0 = 0;
        let a1 = 1;
        let b0 = g.vertex(crate::graph::VertexClass::B, 0);
        assert_eq!(edge_color(&g, &coloring, a0, b0), EdgeColor::Blue);
        assert_eq!(edge_color(&g, &coloring, a0, a1), EdgeColor::Red);
        // every vertex sees two red and two blue edges
        for v in 0..g.order() {
            let red = g
                .neighbors(v)
                .iter()
                .filter(|&&w| edge_color(&g, &coloring, v, w) == EdgeColor::Red)
                .count();
            assert_eq!(red, 2, "vertex {v}");
        }
    }

    #[test]
    fn unnormalized_params_are_rejected() {
        let g = wh(4, 1, 0, 1, 3);
        assert!(matches!(
            color_edges(&g),
            Err(SymmetryError::NotNormalized(_))
        ));
    }

    #[test]
    fn basic_six_cycle_counts_follow_the_order_of_4a() {
        // 4a != 0: two basic 6-cycles per red 2-path.
        let g = wh(12, 2, 1, 0, 5);
        let coloring = color_edges(&g).unwrap();
        let b0 = g.vertex(crate::graph::VertexClass::B, 0);
        let c1 = g.vertex(crate::graph::VertexClass::C, 1);
        let c5 = g.vertex(crate::graph::VertexClass::C, 5);
        let cycles = basic_six_cycles_through(&g, &coloring, (c1, b0, c5)).unwrap();
        assert_eq!(cycles.len(), 2);

        // 4a = 0: four basic 6-cycles per red 2-path.
        let g = wh(8, 2, 1, 0, 5);
        let coloring = color_edges(&g).unwrap();
        let b0 = g.vertex(crate::graph::VertexClass::B, 0);
        let c1 = g.vertex(crate::graph::VertexClass::C, 1);
        let c5 = g.vertex(crate::graph::VertexClass::C, 5);
        let cycles = basic_six_cycles_through(&g, &coloring, (c1, b0, c5)).unwrap();
        assert_eq!(cycles.len(), 4);
    }

    #[test]
    fn blue_paths_are_rejected() {
        let g = wh(12, 2, 1, 0, 5);
        let coloring = color_edges(&g).unwrap();
        let a0 = 0;
        let b0 = g.vertex(crate::graph::VertexClass::B, 0);
        let c0 = g.vertex(crate::graph::VertexClass::C, 0);
        assert_eq!(
            basic_six_cycles_through(&g, &coloring, (b0, a0, c0)),
            Err(SymmetryError::PathNotRed)
        );
    }

    #[test]
    fn alternating_four_cycles_examples() {
        // a = d = 1: alternating 4-cycles exist.
        let g = wh(8, 1, 7, 0, 1);
        let coloring = color_edges(&g).unwrap();
        assert!(!alternating_four_cycles(&g, &coloring).is_empty());

        // a = 1 not in {3, 5} = {±b, ±d}: none.
        let g = wh(8, 1, 3, 2, 5);
        let coloring = color_edges(&g).unwrap();
        assert!(alternating_four_cycles(&g, &coloring).is_empty());

        let g = wh(12, 2, 1, 0, 5);
        let coloring = color_edges(&g).unwrap();
        assert!(alternating_four_cycles(&g, &coloring).is_empty());
    }

    #[test]
    fn lr_check_on_the_sporadic_and_family_members() {
        let report = lr_candidate_check(&wh(8, 2, 1, 0, 5)).unwrap();
        assert!(report.swap_automorphism_exists);

        let report = lr_candidate_check(&wh(12, 2, 1, 0, 5)).unwrap();
        assert!(report.swap_automorphism_exists);
        assert!(report.no_alt_4cycles);

        let report = lr_candidate_check(&wh(4, 1, 3, 0, 1)).unwrap();
        assert_eq!(report.q_witness, Some(3));
    }

    #[test]
    fn lr_check_requires_vertex_transitivity() {
        let g = wh(5, 1, 0, 1, 2);
        assert!(matches!(
            lr_candidate_check(&g),
            Err(SymmetryError::NotVertexTransitive(_))
        ));
    }

    #[test]
    fn report_flags_follow_orbit_counts() {
        let report = transitivity_report(&wh(4, 1, 3, 0, 1));
        assert!(report.is_vertex_transitive);
        assert!(!report.is_edge_transitive);
        assert_eq!(report.edge_orbits, 2);
        assert_eq!(report.is_edge_transitive, report.is_arc_transitive);

        let report = transitivity_report(&wh(5, 1, 0, 1, 2));
        assert!(!report.is_vertex_transitive);
    }
}
