mod common;

use common::*;
use copwin::catalog::{default_corpus_dir, load_corpus};
use copwin::search::{census, enumerate_connected, CensusOptions, Method, RFilter};
use copwin::{Graph, RankVector};
use std::collections::BTreeMap;

fn v(e: &[u32]) -> RankVector {
    RankVector::new(e.to_vec()).unwrap()
}

/// Vector and top class (1 or 0; `None` for cliques) from the naive ranking.
fn naive_class(g: &Graph) -> Option<(RankVector, Option<u8>)> {
    let ranks: Vec<u32> = naive_ranks(g).into_iter().collect::<Option<_>>()?;
    let alpha = *ranks.iter().max().unwrap();
    let counts: Vec<u32> = (1..=alpha).rev().map(|k| ranks.iter().filter(|&&r| r == k).count() as u32).collect();
    let adj = adjacency(g);
    let top = (alpha >= 2).then(|| {
        let below: Vec<usize> = (0..g.n()).filter(|&u| ranks[u] >= alpha - 1).collect();
        let dominates = (0..g.n())
            .filter(|&t| ranks[t] == alpha)
            .any(|t| below.iter().all(|&u| u == t || adj[t][u]));
        u8::from(dominates)
    });
    Some((RankVector::new(counts).unwrap(), top))
}

#[test]
fn census_counts_match_naive_classification() {
    for n in 2..=7 {
        let mut expected: BTreeMap<(RankVector, u8), usize> = BTreeMap::new();
        for g in enumerate_connected(n, 9).unwrap() {
            if let Some((vec, Some(r))) = naive_class(&g) {
                *expected.entry((vec, r)).or_default() += 1;
            }
        }
        for ((vec, r), count) in &expected {
            let filter = RFilter::from_r(*r).unwrap();
            let got = census(vec, filter, &CensusOptions::default()).unwrap();
            assert!(got.exhaustive);
            assert_eq!(got.count(), *count, "{vec} r={r}");
        }
        // Vectors with no realizer at this order come back empty.
        for vec in copwin::vector::compositions_of(n) {
            let any = census(&vec, RFilter::Any, &CensusOptions::default()).unwrap().count();
            let want: usize = [0, 1].iter().map(|&r| expected.get(&(vec.clone(), r)).copied().unwrap_or(0)).sum();
            assert_eq!(any, want, "{vec}");
        }
    }
}

#[test]
fn realizability_is_closed_upward() {
    let opts = CensusOptions::default();
    let vs: Vec<RankVector> = (2..=7).flat_map(copwin::vector::compositions_of).filter(|x| x.len() >= 2).collect();
    for r in [RFilter::Top0, RFilter::Top1] {
        let realizable: Vec<&RankVector> = vs.iter().filter(|x| census(x, r, &opts).unwrap().count() > 0).collect();
        for x in &realizable {
            for y in vs.iter().filter(|y| x.leq(y)) {
                assert!(census(y, r, &opts).unwrap().count() > 0, "{x} realizable but {y} not (r={r})");
            }
        }
    }
}

#[test]
fn cliques_only_on_request() {
    let mut opts = CensusOptions::default();
    assert_eq!(census(&v(&[4]), RFilter::Any, &opts).unwrap().count(), 0);
    opts.include_cliques = true;
    let c = census(&v(&[4]), RFilter::Any, &opts).unwrap();
    assert_eq!(c.count(), 1);
    assert!(c.realizers[0].is_clique());
}

#[test]
fn lift_agrees_with_enumeration_at_nine() {
    for (vec, r) in [(v(&[2, 2, 2, 1, 1, 1]), RFilter::Any), (v(&[3, 3, 2, 1]), RFilter::Top0), (v(&[1, 3, 3, 2]), RFilter::Top1)] {
        let e = census(&vec, r, &CensusOptions { method: Method::Enumerate, ..Default::default() }).unwrap();
        let l = census(&vec, r, &CensusOptions { method: Method::Lift, ..Default::default() }).unwrap();
        let key = |gs: &[Graph]| {
            let mut k: Vec<_> = gs.iter().map(copwin::graph::canonical_form).collect();
            k.sort();
            k
        };
        assert_eq!(key(&e.realizers), key(&l.realizers), "{vec} r={r}");
    }
}

#[test]
fn search_cap_is_enforced() {
    let err = census(&v(&[2, 2, 2, 2, 1, 1]), RFilter::Any, &CensusOptions::default()).unwrap_err();
    assert!(matches!(err, copwin::Error::Resource { requested: 10, cap: 9 }), "{err:?}");
    let err = census(&v(&[2, 2, 2, 2, 2, 1]), RFilter::Any, &CensusOptions::with_cap(10)).unwrap_err();
    assert!(matches!(err, copwin::Error::Resource { .. }), "{err:?}");
}

#[test]
fn corpus_loads_and_reverifies() {
    let fixtures = load_corpus(default_corpus_dir()).unwrap();
    assert!(fixtures.len() >= 15);
    for f in &fixtures {
        let c = f.check();
        assert!(c.pass(), "{}: {}", f.name, c.detail);
        assert_eq!(f.graph.n(), f.declared_vector.sum(), "{}", f.name);
        assert!(connected(&adjacency(&f.graph)), "{}", f.name);
    }
    let by_name = |n: &str| fixtures.iter().find(|f| f.name == n).unwrap();
    let big = by_name("v1_2_8_4_1");
    assert_eq!((big.graph.n(), big.graph.edge_count()), (16, 43));
    assert_eq!(by_name("v3_3_2_1").graph.n(), 9);
    // Realizers of every vector in the two conjectured-minimal lists.
    for vec in [
        "(1,2,8,4,1)",
        "(1,2,6,4,2,1)",
        "(1,2,5,4,3,2,1)",
        "(1,3,5,4,2,1)",
        "(1,3,4,4,2,2,1)",
        "(1,2,4,4,4,2,2,1)",
        "(1,2,5,3,3,2,2,1)",
        "(1,3,3,3,3,2,2,1)",
        "(1,2,4,2,4,2,2,2,1)",
        "(1,2,3,3,3,3,2,2,2,1)",
        "(2,4,4,2,1)",
        "(4,2,4,2,1)",
        "(2,4,3,4,2,2,1)",
        "(2,4,2,4,2,2,2,1)",
        "(3,2,4,2,3,2,2,1)",
        "(2,3,3,3,3,2,2,2,1)",
    ] {
        let vec: RankVector = vec.parse().unwrap();
        assert!(fixtures.iter().any(|f| f.declared_vector == vec), "no fixture for {vec}");
    }
}

#[test]
fn the_two_three_two_row_is_missing_a_graph() {
    let fixtures = load_corpus(default_corpus_dir()).unwrap();
    let listed: Vec<&Graph> = fixtures.iter().filter(|f| f.group.as_deref() == Some("r3_2_3_2")).map(|f| &f.graph).collect();
    assert_eq!(listed.len(), 3);
    let all = census(&v(&[2, 3, 2]), RFilter::Any, &CensusOptions::default()).unwrap();
    assert_eq!(all.count(), 4);
    for g in &listed {
        assert_eq!(all.realizers.iter().filter(|h| brute_isomorphic(g, h)).count(), 1);
    }
    assert_eq!(census(&v(&[2, 3, 2]), RFilter::Top0, &CensusOptions::default()).unwrap().count(), 1);
}

#[test]
fn complete_groups_match_the_census() {
    let fixtures = load_corpus(default_corpus_dir()).unwrap();
    let mut groups: BTreeMap<&str, Vec<&copwin::catalog::Fixture>> = BTreeMap::new();
    for f in &fixtures {
        if let (Some(g), Some(_)) = (&f.group, f.complete) {
            groups.entry(g.as_str()).or_default().push(f);
        }
    }
    assert!(groups.len() >= 10);
    for (name, members) in groups {
        let vec = &members[0].declared_vector;
        if vec.sum() > 9 {
            continue;
        }
        let c = census(vec, members[0].complete.unwrap(), &CensusOptions::default()).unwrap();
        assert_eq!(c.count(), members.len(), "{name}");
        for h in &c.realizers {
            assert_eq!(members.iter().filter(|f| brute_isomorphic(&f.graph, h)).count(), 1, "{name}");
        }
    }
}
