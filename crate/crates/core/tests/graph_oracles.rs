mod common;

use common::*;
use copwin::graph::{canonical_form, parse_compact};
use copwin::search::{canonical_key, enumerate_connected, graph_from_key};
use copwin::Graph;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn random_graph(rng: &mut XorShift, n: usize, density: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(100) < density {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_perm(rng: &mut XorShift, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.below(i as u64 + 1) as usize);
    }
    p
}

#[test]
fn four_vertices_have_eleven_classes() {
    let perms = permutations(4);
    let all: BTreeSet<u64> = (0..1u64 << 6).map(|m| brute_canon(&graph_from_mask(4, m), &perms)).collect();
    assert_eq!(all.len(), 11);
    let conn: BTreeSet<u64> = (0..1u64 << 6)
        .map(|m| graph_from_mask(4, m))
        .filter(|g| connected(&adjacency(g)))
        .map(|g| brute_canon(&g, &perms))
        .collect();
    assert_eq!(conn.len(), 6);
}

#[test]
fn enumeration_matches_labeled_dedup() {
    for n in 1..=6 {
        let perms = permutations(n);
        let m = n * (n - 1) / 2;
        let expected: BTreeSet<u64> = (0..1u64 << m)
            .map(|mask| graph_from_mask(n, mask))
            .filter(|g| connected(&adjacency(g)))
            .map(|g| brute_canon(&g, &perms))
            .collect();
        let got = enumerate_connected(n, 9).unwrap();
        let got_codes: BTreeSet<u64> = got.iter().map(|g| brute_canon(g, &perms)).collect();
        assert_eq!(got.len(), got_codes.len(), "n={n}: duplicate classes");
        assert_eq!(got_codes, expected, "n={n}");
    }
}

#[test]
fn enumeration_at_seven_by_orbit_counting() {
    let perms = permutations(7);
    let graphs = enumerate_connected(7, 9).unwrap();
    let labeled: u128 = graphs.iter().map(|g| 5040 / automorphism_count(g, &perms) as u128).sum();
    assert_eq!(labeled, labeled_connected(7));
    assert!(graphs.iter().all(|g| g.n() == 7 && connected(&adjacency(g))));
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    for _ in 0..1000 {
        let n = 1 + rng.below(8) as usize;
        let density = 20 + rng.below(60);
        let g = random_graph(&mut rng, n, density);
        let p = random_perm(&mut rng, n);
        let h = g.relabel(&p).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h), "{} vs {}", g.to_compact(), h.to_compact());
    }
}

#[test]
fn canonical_form_separates_non_isomorphic_pairs() {
    let mut rng = XorShift(0x2545_f491_4f6c_dd1d);
    let mut tested = 0;
    while tested < 1000 {
        let n = 2 + rng.below(7) as usize;
        let density = 20 + rng.below(60);
        let g = random_graph(&mut rng, n, density);
        // Same order and edge count, so the codes cannot differ trivially.
        let h = loop {
            let h = random_graph(&mut rng, n, density);
            if h.edge_count() == g.edge_count() {
                break h;
            }
        };
        let iso = brute_isomorphic(&g, &h);
        assert_eq!(canonical_form(&g) == canonical_form(&h), iso, "{} vs {}", g.to_compact(), h.to_compact());
        if !iso {
            tested += 1;
        }
    }
}

#[test]
fn canonical_representative_round_trips() {
    let mut rng = XorShift(7);
    for _ in 0..300 {
        let n = 1 + rng.below(10) as usize;
        let g = random_graph(&mut rng, n, 40);
        let c = canonical_form(&g);
        let rep = c.to_graph();
        assert!(brute_isomorphic_small(&g, &rep));
        assert_eq!(canonical_form(&rep), c);
    }
}

fn brute_isomorphic_small(g: &Graph, h: &Graph) -> bool {
    if g.n() <= 8 {
        brute_isomorphic(g, h)
    } else {
        // Degree sequences as a cheap necessary condition above 8 vertices.
        let mut a: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut b: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        a.sort();
        b.sort();
        a == b
    }
}

#[test]
fn keys_round_trip() {
    for n in 1..=6 {
        for g in enumerate_connected(n, 9).unwrap() {
            let k = canonical_key(&g);
            assert_eq!(canonical_key(&graph_from_key(n, k)), k);
            assert!(brute_isomorphic(&g, &graph_from_key(n, k)));
        }
    }
}

#[test]
fn compact_text_round_trips() {
    let mut rng = XorShift(11);
    for _ in 0..200 {
        let n = 1 + rng.below(12) as usize;
        let g = random_graph(&mut rng, n, 35);
        assert_eq!(parse_compact(&g.to_compact()).unwrap(), g);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | (b as u64) << i);
            graph_from_mask(n, mask)
        })
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_vertex_order(g in arb_graph(), seed in any::<u64>()) {
        let p = random_perm(&mut XorShift(seed | 1), g.n());
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&p).unwrap()));
    }

    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in arb_graph()) {
        for u in 0..g.n() {
            prop_assert!(!g.neighbors(u).contains(u));
            for v in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }
}
