//! Structural sweeps: regularity/connectivity over the full small-n tuple
//! space, the girth characterization against an edge-deletion oracle,
//! canonical 6-cycles, two-arc cycle searches against exhaustive enumeration,
//! parameter symmetries, multiplier relabelings and quotients.

mod common;

use common::{all_valid_tuples, brute_force_girth, brute_force_six_cycles, quotient_oracle};
use proptest::prelude::*;
use wh_core::census::map_tuples;
use wh_core::graph::{Cycle, EdgeKind, VertexClass};
use wh_core::params::WhParams;
use wh_core::WhGraph;

#[test]
fn every_small_graph_is_4_regular_simple_connected() {
    for n in 3..=12usize {
        let tuples = all_valid_tuples(n);
        let ok = map_tuples(&tuples, |p| {
            let g = WhGraph::build(*p);
            g.order() == 3 * n
                && g.edges().len() == 6 * n
                && (0..g.order()).all(|v| {
                    let nb = g.neighbors(v);
                    nb.windows(2).all(|w| w[0] < w[1]) && !nb.contains(&v)
                })
                && g.is_connected()
        });
        assert!(ok.iter().all(|&b| b), "n = {n}");
    }
}

#[test]
fn girth_three_iff_zero_offset_or_triangular_a_cycle() {
    for n in 3..=12usize {
        let tuples = all_valid_tuples(n);
        let results = map_tuples(&tuples, |p| (WhGraph::build(*p).girth(), *p));
        for (girth, p) in results {
            let zero_offset = p.b() == 0 || p.c() == 0 || p.d() == 0;
            let short_a_cycle = (3 * p.a()) % n == 0;
            assert_eq!(
                girth == 3,
                zero_offset || short_a_cycle,
                "{p} girth {girth}"
            );
        }
    }
}

#[test]
fn girth_matches_edge_deletion_oracle() {
    for n in 3..=8usize {
        let tuples = all_valid_tuples(n);
        let ok = map_tuples(&tuples, |p| {
            let g = WhGraph::build(*p);
            g.girth() == brute_force_girth(&g)
        });
        assert!(ok.iter().all(|&b| b), "n = {n}");
    }
}

#[test]
fn girth_example_by_oracle() {
    let g = WhGraph::build(WhParams::new(8, 1, 3, 2, 5).unwrap());
    assert_eq!(g.girth(), brute_force_girth(&g));
    // no triangles (b,c,d nonzero, 3a != 0), no 4-cycles, and
    // (A_0, A_1, A_2, C_2, B_0) closes a 5-cycle
    assert_eq!(g.girth(), 5);
}

#[test]
fn canonical_six_cycles_are_n_distinct_with_antipodal_kinds() {
    for n in 3..=12usize {
        for p in all_valid_tuples(n) {
            let g = WhGraph::build(p);
            let cycles = g.canonical_six_cycles();
            assert_eq!(cycles.len(), n);
            let mut dedup = cycles.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), n, "{p}: canonical 6-cycles must be distinct");
            for cycle in &cycles {
                assert_eq!(cycle.len(), 6, "{p}: degenerate canonical cycle");
                let edges = cycle.edges();
                for i in 0..3 {
                    let k1 = g.edge_kind(edges[i].0, edges[i].1).expect("cycle edge");
                    let k2 = g
                        .edge_kind(edges[i + 3].0, edges[i + 3].1)
                        .expect("cycle edge");
                    assert_eq!(k1, k2, "{p}: antipodal kinds differ");
                    assert!(matches!(
                        k1,
                        EdgeKind::BEdge | EdgeKind::CEdge | EdgeKind::DEdge
                    ));
                }
            }
        }
    }
}

#[test]
fn canonical_six_cycles_appear_in_exhaustive_enumeration() {
    for (n, a, b, c, d) in [(4i64, 1, 0, 1, 3), (6, 1, 1, 2, 4), (8, 1, 3, 2, 5)] {
        let g = WhGraph::build(WhParams::new(n, a, b, c, d).unwrap());
        let all = brute_force_six_cycles(&g);
        for cycle in g.canonical_six_cycles() {
            assert!(all.contains(&cycle));
        }
    }
}

#[test]
fn two_arc_six_cycles_match_exhaustive_enumeration() {
    for (n, a, b, c, d) in [(4i64, 1, 0, 1, 3), (8, 1, 3, 2, 5), (6, 1, 1, 2, 4)] {
        let g = WhGraph::build(WhParams::new(n, a, b, c, d).unwrap());
        let all = brute_force_six_cycles(&g);
        for (u, v, w) in g.two_arcs() {
            let found = g.six_cycles_through_two_arc((u, v, w)).unwrap();
            let expected: Vec<&Cycle> = all
                .iter()
                .filter(|cycle| {
                    let edges = cycle.edges();
                    cycle.contains(v)
                        && edges.contains(&(u.min(v), u.max(v)))
                        && edges.contains(&(v.min(w), v.max(w)))
                })
                .collect();
            assert_eq!(found.len(), expected.len(), "{u}-{v}-{w}");
            for cycle in &found {
                assert!(all.contains(cycle));
            }
        }
    }
}

#[test]
fn six_cycles_through_mixed_two_arc_follow_the_offset_rule() {
    // Cycles through (B_0, A_0, C_0) pair offsets x = -y from {b, c, d}.
    let p = WhParams::new(8, 1, 3, 2, 5).unwrap();
    let g = WhGraph::build(p);
    let arc = (
        g.vertex(VertexClass::B, 0),
        g.vertex(VertexClass::A, 0),
        g.vertex(VertexClass::C, 0),
    );
    let found = g.six_cycles_through_two_arc(arc).unwrap();
    let offsets = [p.b(), p.c(), p.d()];
    let mut expected = 0;
    for &x in &offsets {
        for &y in &offsets {
            if (x + y) % p.n() == 0 {
                expected += 1;
            }
        }
    }
    assert_eq!(found.len(), expected);
    assert_eq!(expected, 2); // (x, y) in {(3, 5), (5, 3)}
}

#[test]
fn param_symmetries_give_identical_labeled_graphs() {
    for n in 3..=8usize {
        for p in all_valid_tuples(n) {
            let edges: Vec<(usize, usize)> = WhGraph::build(p).edge_pairs().collect();
            for s in p.symmetries() {
                let other: Vec<(usize, usize)> = WhGraph::build(s).edge_pairs().collect();
                assert_eq!(edges, other, "{p} vs {s}");
            }
        }
    }
}

#[test]
fn multiplier_composes_exhaustively_on_small_n() {
    for n in 3..=8usize {
        let coprimes: Vec<usize> = (1..n).filter(|&q| gcd(q, n) == 1).collect();
        for p in all_valid_tuples(n) {
            for &q1 in &coprimes {
                for &q2 in &coprimes {
                    let twice = p
                        .multiplier_image(q1)
                        .unwrap()
                        .multiplier_image(q2)
                        .unwrap();
                    let once = p.multiplier_image((q1 * q2) % n).unwrap();
                    assert_eq!(twice, once);
                }
            }
        }
    }
}

#[test]
fn multiplier_relabeling_is_an_isomorphism_edge_by_edge() {
    let p = WhParams::new(4, 1, 3, 0, 1).unwrap();
    let q = 3usize;
    let image = p.multiplier_image(q).unwrap();
    let g1 = WhGraph::build(p);
    let g2 = WhGraph::build(image);
    let n = p.n();
    let relabel = |v: usize| (v / n) * n + (v % n * q) % n;
    for (u, v) in g1.edge_pairs() {
        assert!(g2.adjacent(relabel(u), relabel(v)), "edge ({u}, {v})");
    }
}

#[test]
fn quotient_matches_orbit_contraction_oracle() {
    for (n, a, b, c, d) in [
        (4i64, 1, 0, 1, 3),
        (8, 1, 3, 2, 5),
        (12, 2, 1, 0, 5),
        (6, 1, 1, 2, 4),
    ] {
        let g = WhGraph::build(WhParams::new(n, a, b, c, d).unwrap());
        for k in 1..=n as usize {
            if !(n as usize).is_multiple_of(k) {
                continue;
            }
            let q = g.quotient_by_rho_power(k).unwrap();
            assert_eq!(q.edge_set(), quotient_oracle(&g, k), "k = {k}");
        }
    }
}

fn gcd(mut x: usize, mut y: usize) -> usize {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplier_composes(n in 3usize..40, a in 0i64..40, b in 0i64..40, c in 0i64..40, d in 0i64..40, q1 in 1usize..40, q2 in 1usize..40) {
        prop_assume!(gcd(q1 % n, n) == 1 && gcd(q2 % n, n) == 1 && q1 % n != 0 && q2 % n != 0);
        let Ok(p) = WhParams::new(n as i64, a, b, c, d) else {
            return Ok(());
        };
        let twice = p.multiplier_image(q1 % n).unwrap().multiplier_image(q2 % n).unwrap();
        let once = p.multiplier_image((q1 * q2) % n).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn symmetric_tuples_build_equal_edge_sets(n in 3usize..16, a in 0i64..16, b in 0i64..16, c in 0i64..16, d in 0i64..16) {
        let Ok(p) = WhParams::new(n as i64, a, b, c, d) else {
            return Ok(());
        };
        let edges: Vec<(usize, usize)> = WhGraph::build(p).edge_pairs().collect();
        for s in p.symmetries() {
            let other: Vec<(usize, usize)> = WhGraph::build(s).edge_pairs().collect();
            prop_assert_eq!(&edges, &other);
        }
    }
}
