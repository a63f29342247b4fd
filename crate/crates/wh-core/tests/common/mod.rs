//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's own algorithms: plain
//! backtracking over adjacency-preserving maps, edge-deleted shortest paths
//! for the girth, exhaustive walk enumeration for 6-cycles, and member-wise
//! orbit contraction for quotients.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use wh_core::census;
use wh_core::graph::Cycle;
use wh_core::group::PermGroup;
use wh_core::params::WhParams;
use wh_core::{automorphism_generators, WhGraph};

fn adjacency_matrix(g: &WhGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edge_pairs() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Vertices in breadth-first order from 0, so each vertex after the first has
/// an already-placed neighbor and partial maps are checked early.
fn bfs_order(g: &WhGraph) -> Vec<usize> {
    let mut order = vec![0usize];
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    assert_eq!(order.len(), g.order(), "oracle assumes a connected graph");
    order
}

#[allow(clippy::too_many_arguments)]
fn extend_maps(
    adj1: &[Vec<bool>],
    adj2: &[Vec<bool>],
    order: &[usize],
    k: usize,
    image: &mut [usize],
    used: &mut [bool],
    count: &mut u128,
    stop_at_first: bool,
) -> bool {
    let n = order.len();
    if k == n {
        *count += 1;
        return stop_at_first;
    }
    let v = order[k];
    'candidates: for w in 0..n {
        if used[w] {
            continue;
        }
        for &prev in &order[..k] {
            if adj1[v][prev] != adj2[w][image[prev]] {
                continue 'candidates;
            }
        }
        image[v] = w;
        used[w] = true;
        let done = extend_maps(adj1, adj2, order, k + 1, image, used, count, stop_at_first);
        used[w] = false;
        image[v] = usize::MAX;
        if done {
            return true;
        }
    }
    false
}

/// Number of automorphisms by unpruned extension search over
/// adjacency-preserving bijections.
pub fn brute_force_automorphism_count(g: &WhGraph) -> u128 {
    let adj = adjacency_matrix(g);
    let order = bfs_order(g);
    let mut image = vec![usize::MAX; g.order()];
    let mut used = vec![false; g.order()];
    let mut count = 0u128;
    extend_maps(
        &adj, &adj, &order, 0, &mut image, &mut used, &mut count, false,
    );
    count
}

/// Isomorphism by the same bijection search, stopping at the first hit.
pub fn brute_force_is_isomorphic(g1: &WhGraph, g2: &WhGraph) -> bool {
    if g1.order() != g2.order() || g1.edges().len() != g2.edges().len() {
        return false;
    }
    let adj1 = adjacency_matrix(g1);
    let adj2 = adjacency_matrix(g2);
    let order = bfs_order(g1);
    let mut image = vec![usize::MAX; g1.order()];
    let mut used = vec![false; g1.order()];
    let mut count = 0u128;
    extend_maps(
        &adj1, &adj2, &order, 0, &mut image, &mut used, &mut count, true,
    );
    count > 0
}

/// Girth by the independent route: for every edge, the shortest alternative
/// path between its endpoints, plus one.
pub fn brute_force_girth(g: &WhGraph) -> usize {
    let mut best = usize::MAX;
    for (u, v) in g.edge_pairs() {
        let mut dist = vec![usize::MAX; g.order()];
        dist[u] = 0;
        let mut queue = vec![u];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || (x, y) == (v, u) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            best = best.min(dist[v] + 1);
        }
    }
    best
}

/// Every 6-cycle, by exhaustive walk enumeration anchored at each cycle's
/// smallest vertex.
pub fn brute_force_six_cycles(g: &WhGraph) -> BTreeSet<Cycle> {
    let mut cycles = BTreeSet::new();
    let mut walk = Vec::with_capacity(6);
    for v0 in 0..g.order() {
        walk.push(v0);
        extend_walk(g, v0, &mut walk, &mut cycles);
        walk.pop();
    }
    cycles
}

fn extend_walk(g: &WhGraph, v0: usize, walk: &mut Vec<usize>, cycles: &mut BTreeSet<Cycle>) {
    let last = *walk.last().unwrap();
    if walk.len() == 6 {
        if g.adjacent(last, v0) {
            cycles.insert(Cycle::new(walk));
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > v0 && !walk.contains(&w) {
            walk.push(w);
            extend_walk(g, v0, walk, cycles);
            walk.pop();
        }
    }
}

/// Quotient edges by explicit orbit contraction: two orbits are adjacent iff
/// some member of one is adjacent to some member of the other.
pub fn quotient_oracle(g: &WhGraph, k: usize) -> Vec<(usize, usize)> {
    let n = g.n();
    assert!(k >= 1 && n.is_multiple_of(k));
    let members = |orbit: usize| -> Vec<usize> {
        let class = orbit / k;
        let r = orbit % k;
        (0..n / k).map(|t| class * n + r + t * k).collect()
    };
    let mut edges = Vec::new();
    for o1 in 0..3 * k {
        for o2 in (o1 + 1)..3 * k {
            let found = members(o1)
                .iter()
                .any(|&u| members(o2).iter().any(|&w| g.adjacent(u, w)));
            if found {
                edges.push((o1, o2));
            }
        }
    }
    edges
}

/// All valid tuples for one modulus, by the direct quadruple filter.
pub fn all_valid_tuples(n: usize) -> Vec<WhParams> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if let Ok(p) = WhParams::new(n as i64, a as i64, b as i64, c as i64, d as i64) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Tuples related by negating `a` or permuting the roles of `b`, `c`, `d`
/// produce the identical labeled graph, hence share one automorphism group.
pub type GraphKey = (usize, usize, [usize; 3]);

pub fn identical_graph_key(p: &WhParams) -> GraphKey {
    let n = p.n();
    let mut bcd = p.bcd();
    bcd.sort_unstable();
    (n, p.a().min(n - p.a()), bcd)
}

static GROUP_CACHE: OnceLock<Mutex<HashMap<GraphKey, Arc<PermGroup>>>> = OnceLock::new();

fn cache() -> &'static Mutex<HashMap<GraphKey, Arc<PermGroup>>> {
    GROUP_CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Computes (in parallel) and caches the automorphism groups of every
/// distinct labeled graph among the tuples.
pub fn prime_group_cache(tuples: &[WhParams]) {
    let mut todo: Vec<WhParams> = Vec::new();
    {
        let map = cache().lock().unwrap();
        let mut seen: BTreeSet<GraphKey> = map.keys().cloned().collect();
        for p in tuples {
            if seen.insert(identical_graph_key(p)) {
                todo.push(*p);
            }
        }
    }
    let computed = census::map_tuples(&todo, |p| {
        let g = WhGraph::build(*p);
        Arc::new(PermGroup::from_generators(
            g.order(),
            automorphism_generators(&g),
        ))
    });
    let mut map = cache().lock().unwrap();
    for (p, grp) in todo.iter().zip(computed) {
        map.insert(identical_graph_key(p), grp);
    }
}

/// Automorphism group of the labeled graph of `p`, from the cache or afresh.
pub fn automorphism_group(p: &WhParams) -> Arc<PermGroup> {
    let key = identical_graph_key(p);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let g = WhGraph::build(*p);
    let grp = Arc::new(PermGroup::from_generators(
        g.order(),
        automorphism_generators(&g),
    ));
    cache().lock().unwrap().entry(key).or_insert(grp).clone()
}
