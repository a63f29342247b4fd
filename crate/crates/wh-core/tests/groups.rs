//! Permutation-group machinery against the unpruned backtracking oracle:
//! chain orders, orbit-stabilizer, membership of the named automorphisms,
//! and invariance of the computed group under vertex relabeling.

mod common;

use common::{all_valid_tuples, brute_force_automorphism_count, identical_graph_key};
use std::collections::BTreeSet;
use wh_core::aut::{colored_automorphism_generators, ColoredGraph};
use wh_core::census::map_tuples;
use wh_core::group::{Action, PermGroup};
use wh_core::params::WhParams;
use wh_core::perm::{is_automorphism, rho, tau};
use wh_core::{automorphism_generators, WhGraph};

#[test]
fn chain_order_matches_brute_force_up_to_n_8() {
    let mut reps: Vec<WhParams> = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 3..=8usize {
        for p in all_valid_tuples(n) {
            if seen.insert(identical_graph_key(&p)) {
                reps.push(p);
            }
        }
    }
    let ok = map_tuples(&reps, |p| {
        let g = WhGraph::build(*p);
        let grp = PermGroup::from_generators(g.order(), automorphism_generators(&g));
        (
            grp.order() == brute_force_automorphism_count(&g),
            *p,
            grp.order(),
        )
    });
    for (good, p, order) in ok {
        assert!(good, "{p}: chain order {order} disagrees with the oracle");
    }
}

#[test]
fn aut_always_contains_the_dihedral_subgroup() {
    let mut reps: Vec<WhParams> = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 3..=10usize {
        for p in all_valid_tuples(n) {
            if seen.insert(identical_graph_key(&p)) {
                reps.push(p);
            }
        }
    }
    let ok = map_tuples(&reps, |p| {
        let g = WhGraph::build(*p);
        let grp = PermGroup::from_generators(g.order(), automorphism_generators(&g));
        grp.contains(&rho(p)) && grp.contains(&tau(p)) && grp.order() >= 2 * p.n() as u128
    });
    assert!(ok.iter().all(|&b| b));
}

#[test]
fn orbit_stabilizer_identity_holds_everywhere() {
    for (n, a, b, c, d) in [
        (4i64, 1, 3, 0, 1),
        (8, 2, 1, 0, 5),
        (5, 1, 0, 1, 2),
        (12, 2, 1, 0, 5),
    ] {
        let p = WhParams::new(n, a, b, c, d).unwrap();
        let g = WhGraph::build(p);
        let grp = PermGroup::from_generators(g.order(), automorphism_generators(&g));
        for v in 0..g.order() {
            let orbit = grp.point_orbit(v).unwrap().len() as u128;
            let stab = grp.stabilizer(v).unwrap().order();
            assert_eq!(orbit * stab, grp.order(), "{p} vertex {v}");
        }
    }
}

#[test]
fn vertex_stabilizer_order_for_vertex_transitive_members() {
    let p = WhParams::new(4, 1, 3, 0, 1).unwrap();
    let g = WhGraph::build(p);
    let grp = PermGroup::from_generators(g.order(), automorphism_generators(&g));
    assert!(grp.orbits(&g, Action::Vertices).unwrap().is_transitive());
    assert_eq!(grp.stabilizer(0).unwrap().order(), grp.order() / (3 * 4));
}

#[test]
fn generated_group_is_invariant_under_relabeling() {
    let g = WhGraph::build(WhParams::new(6, 1, 0, 2, 4).unwrap());
    let base = PermGroup::from_generators(g.order(), automorphism_generators(&g)).order();
    // rotate ids by 5 positions as an arbitrary relabeling
    let shift = 5usize;
    let relabel = |v: usize| (v + shift) % g.order();
    let mut adjacency = vec![Vec::new(); g.order()];
    for (u, v) in g.edge_pairs() {
        adjacency[relabel(u)].push(relabel(v));
        adjacency[relabel(v)].push(relabel(u));
    }
    let shuffled = ColoredGraph::uniform(adjacency);
    let other =
        PermGroup::from_generators(g.order(), colored_automorphism_generators(&shuffled)).order();
    assert_eq!(base, other);
}

#[test]
fn all_generators_pass_is_automorphism() {
    for (n, a, b, c, d) in [(6i64, 1, 1, 2, 4), (8, 1, 7, 0, 1), (10, 1, 1, 2, 5)] {
        let p = WhParams::new(n, a, b, c, d).unwrap();
        let g = WhGraph::build(p);
        for gen in automorphism_generators(&g) {
            assert_eq!(is_automorphism(&g, &gen), Ok(true));
        }
    }
}
