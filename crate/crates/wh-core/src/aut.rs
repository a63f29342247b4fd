//! Full automorphism groups and canonical forms via color refinement plus
//! individualization backtracking.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton color class at each node (vertices taken in ascending id,
//! fixed tie-breaking), refines to the coarsest equitable coloring, and
//! harvests an automorphism whenever a leaf reproduces the first leaf's
//! relabeled edge set. The canonical labeling is the one whose relabeled edge
//! set is lexicographically smallest among explored leaves; discovered
//! automorphisms prune sibling branches in the same orbit.
//!
//! Scale target is a few hundred vertices, which covers the whole census
//! range with plenty of room; this makes no attempt to compete with mature
//! canonical-labeling tools.

use crate::format;
use crate::graph::WhGraph;
use crate::perm::Permutation;
use sha2::{Digest, Sha256};

/// Adjacency lists plus a vertex coloring. The default coloring is uniform;
/// callers may supply their own to restrict maps to color-preserving ones.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(adjacency: Vec<Vec<usize>>, colors: Vec<u32>) -> Self {
        assert_eq!(adjacency.len(), colors.len());
        let mut adjacency = adjacency;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        ColoredGraph {
            adjacency,
            colors: compact_colors(&colors),
        }
    }

    pub fn uniform(adjacency: Vec<Vec<usize>>) -> Self {
        let colors = vec![0; adjacency.len()];
        Self::new(adjacency, colors)
    }

    pub fn from_wh(g: &WhGraph) -> Self {
        let mut adjacency = vec![Vec::with_capacity(4); g.order()];
        for (u, v) in g.edge_pairs() {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Self::uniform(adjacency)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// The coarsest equitable refinement of the initial coloring: vertices
    /// with the same resulting color have the same color and the same
    /// multiset of neighbor colors. Deterministic and relabeling-invariant.
    pub fn refine(&self) -> Vec<u32> {
        refine_colors(&self.adjacency, self.colors.clone())
    }
}

/// Renumber colors to `0..k` preserving their relative order.
fn compact_colors(colors: &[u32]) -> Vec<u32> {
    let mut values: Vec<u32> = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    colors
        .iter()
        .map(|c| values.binary_search(c).unwrap() as u32)
        .collect()
}

fn refine_colors(adjacency: &[Vec<usize>], mut colors: Vec<u32>) -> Vec<u32> {
    let n = adjacency.len();
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut around: Vec<u32> = adjacency[v].iter().map(|&w| colors[w]).collect();
            around.sort_unstable();
            signatures.push((colors[v], around));
        }
        let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() as u32 == count_colors(&colors) {
            return colors;
        }
        for v in 0..n {
            colors[v] = distinct.binary_search(&&signatures[v]).unwrap() as u32;
        }
    }
}

fn count_colors(colors: &[u32]) -> u32 {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() as u32
}

/// Color classes as (color, members) with members ascending.
fn cells(colors: &[u32]) -> Vec<(u32, Vec<usize>)> {
    let k = count_colors(colors) as usize;
    let mut cells: Vec<(u32, Vec<usize>)> = (0..k as u32).map(|c| (c, Vec::new())).collect();
    for (v, &c) in colors.iter().enumerate() {
        cells[c as usize].1.push(v);
    }
    cells
}

/// Split `v` into its own cell placed just before the rest of its old cell.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let pivot = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            if c > pivot || (c == pivot && u != v) {
                c + 1
            } else {
                c
            }
        })
        .collect()
}

/// An isomorphism-invariant relabeling of a graph: equal canonical edge sets
/// (and color vectors) exactly characterize isomorphic inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Maps each original vertex to its canonical position.
    pub relabeling: Permutation,
    /// Edge set under the relabeling, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Initial color of each canonical position (all zero for plain graphs).
    pub colors: Vec<u32>,
    /// SHA-256 of order, colors and edges, as lowercase hex.
    pub digest: String,
}

impl CanonicalForm {
    /// graph6 encoding of the canonical edge set; the cross-run graph
    /// identity key in census files.
    pub fn to_graph6(&self) -> String {
        format::graph6_from_edges(self.colors.len(), &self.edges)
    }
}

struct Search<'a> {
    g: &'a ColoredGraph,
    first_leaf: Option<(Permutation, Vec<(usize, usize)>)>,
    best_edges: Vec<(usize, usize)>,
    best_labeling: Permutation,
    generators: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn leaf_labeling(colors: &[u32]) -> Permutation {
        Permutation::from_images(colors.iter().map(|&c| c as usize).collect())
            .expect("discrete coloring is a bijection")
    }

    fn relabeled_edges(&self, labeling: &Permutation) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (v, list) in self.g.adjacency.iter().enumerate() {
            for &w in list {
                if v < w {
                    let (x, y) = (labeling.apply(v), labeling.apply(w));
                    edges.push((x.min(y), x.max(y)));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    fn explore(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) {
        let colors = refine_colors(&self.g.adjacency, colors);
        let cells = cells(&colors);
        let target = cells
            .iter()
            .filter(|(_, m)| m.len() > 1)
            .min_by_key(|(c, m)| (m.len(), *c));
        let Some((_, candidates)) = target else {
            // Discrete coloring: a leaf.
            let labeling = Self::leaf_labeling(&colors);
            let edges = self.relabeled_edges(&labeling);
            match &self.first_leaf {
                None => {
                    self.first_leaf = Some((labeling.clone(), edges.clone()));
                    self.best_edges = edges;
                    self.best_labeling = labeling;
                }
                Some((first_labeling, first_edges)) => {
                    if edges == *first_edges {
                        let auto = first_labeling.then(&labeling.inverse());
                        if !auto.is_identity() {
                            self.generators.push(auto);
                        }
                    }
                    if edges < self.best_edges {
                        self.best_edges = edges;
                        self.best_labeling = labeling;
                    }
                }
            }
            return;
        };

        let candidates = candidates.clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, path) {
                continue;
            }
            explored.push(v);
            path.push(v);
            self.explore(individualize(&colors, v), path);
            path.pop();
        }
    }

    /// True if some already-explored sibling maps to `v` under the discovered
    /// automorphisms that fix the current path pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let valid: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|g| path.iter().all(|&p| g.apply(p) == p))
            .collect();
        if valid.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.g.order()];
        let mut stack: Vec<usize> = explored.to_vec();
        for &u in explored {
            seen[u] = true;
        }
        while let Some(u) = stack.pop() {
            if u == v {
                return true;
            }
            for g in &valid {
                let w = g.apply(u);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[v]
    }
}

fn run_search(g: &ColoredGraph) -> Search<'_> {
    let mut search = Search {
        g,
        first_leaf: None,
        best_edges: Vec::new(),
        best_labeling: Permutation::identity(g.order()),
        generators: Vec::new(),
    };
    let mut path = Vec::new();
    search.explore(g.colors.clone(), &mut path);
    search
}

/// Generators of the full automorphism group of `g` (color-preserving
/// automorphisms if the coloring is non-uniform).
pub fn colored_automorphism_generators(g: &ColoredGraph) -> Vec<Permutation> {
    run_search(g).generators
}

/// Generators of the full automorphism group of a Woolly Hat graph.
pub fn automorphism_generators(g: &WhGraph) -> Vec<Permutation> {
    colored_automorphism_generators(&ColoredGraph::from_wh(g))
}

/// Canonical form of a colored graph.
pub fn canonical_form_colored(g: &ColoredGraph) -> CanonicalForm {
    let search = run_search(g);
    let relabeling = search.best_labeling;
    let edges = search.best_edges;
    let mut colors = vec![0u32; g.order()];
    for v in 0..g.order() {
        colors[relabeling.apply(v)] = g.colors[v];
    }
    let digest = digest_of(g.order(), &colors, &edges);
    CanonicalForm {
        relabeling,
        edges,
        colors,
        digest,
    }
}

/// Canonical form of a Woolly Hat graph under the uniform coloring.
pub fn canonical_form(g: &WhGraph) -> CanonicalForm {
    canonical_form_colored(&ColoredGraph::from_wh(g))
}

fn digest_of(order: usize, colors: &[u32], edges: &[(usize, usize)]) -> String {
    let mut hasher = Sha256::new();
    hasher.update((order as u64).to_be_bytes());
    for &c in colors {
        hasher.update(c.to_be_bytes());
    }
    for &(u, v) in edges {
        hasher.update((u as u32).to_be_bytes());
        hasher.update((v as u32).to_be_bytes());
    }
    let bytes = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in bytes {
        out.push_str(&std::format!("{b:02x}"));
    }
    out
}

/// Isomorphism test through canonical forms.
pub fn are_isomorphic(g1: &WhGraph, g2: &WhGraph) -> bool {
    if g1.order() != g2.order() || g1.edges().len() != g2.edges().len() {
        return false;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    c1.colors == c2.colors && c1.edges == c2.edges
}
