mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use ringgraph_core::classify::build_catalog;
use ringgraph_core::graph::aut_embeds_in_graph_aut;
use ringgraph_core::{
    automorphisms, full_orbit_graph, make_ring, subgroup_closure, AutGroup, FiniteRing, Limits,
    OrbitGraph, RingError, RingExpr,
};

fn ring(expr: RingExpr) -> Arc<FiniteRing> {
    make_ring(&expr).unwrap()
}

fn full(expr: RingExpr) -> OrbitGraph {
    full_orbit_graph(&ring(expr), &Limits::default()).unwrap()
}

fn dual(n: u64) -> RingExpr {
    RingExpr::poly_quot(n, vec![0, 0, 1])
}

fn gf(q: u64) -> RingExpr {
    RingExpr::gf(q).unwrap()
}

fn names(g: &OrbitGraph, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.ring().name(x).to_string()).collect()
}

#[test]
fn build_examples() {
    let z6 = ring(RingExpr::zn(6));
    let g = OrbitGraph::build(Arc::new(AutGroup::trivial(&z6)));
    assert_eq!(g.cliques().len(), 6);
    assert!(g.is_totally_disconnected());

    let g = full(dual(5));
    assert_eq!(g.cliques().len(), 10);
    assert_eq!(g.graph_type(), 3);
    let x = g.ring().index_of("x").unwrap();
    assert_eq!(names(&g, g.orbit(x)), ["x", "2x", "3x", "4x"]);
    for c in 0..5 {
        assert_eq!(g.orbit(c), [c]);
    }

    let g = full(gf(4));
    let blocks: Vec<_> = g.cliques().iter().map(|b| names(&g, b)).collect();
    assert_eq!(blocks, [vec!["0"], vec!["1"], vec!["x", "1+x"]]);
}

#[test]
fn degree_and_type_examples() {
    let g = full(dual(7));
    assert_eq!(g.degree(g.ring().zero()), 0);
    assert_eq!(g.degree(g.ring().one()), 0);
    assert_eq!(g.degree(g.ring().index_of("x").unwrap()), 5);
    assert_eq!(g.graph_type(), 5);
    assert!(!g.is_planar());

    assert_eq!(full(dual(15)).graph_type(), 7);
    assert_eq!(full(gf(8)).graph_type(), 2);
    assert_eq!(full(RingExpr::zn(12)).graph_type(), 0);
    let g = full(gf(4));
    assert_eq!(g.degree(g.ring().index_of("x").unwrap()), 1);
}

#[test]
fn total_disconnection_examples() {
    assert!(full(RingExpr::zn(9)).is_totally_disconnected());
    assert!(full(dual(2)).is_totally_disconnected());
    assert!(!full(gf(4)).is_totally_disconnected());
}

#[test]
fn subset_connectivity_examples() {
    let g = full(gf(4));
    assert!(g.subset_connected(&[]));
    assert!(g.subset_connected(&[0]));
    let r = g.ring().clone();
    let u: Vec<_> = r
        .units()
        .iter()
        .copied()
        .filter(|&x| x != r.one())
        .collect();
    assert!(g.subset_connected(&u));

    let g = full(dual(5));
    let m: Vec<_> = g
        .ring()
        .maximal_ideal()
        .unwrap()
        .into_iter()
        .filter(|&x| x != 0)
        .collect();
    assert!(g.subset_connected(&m));

    let g = full(RingExpr::zn(9));
    let m: Vec<_> = g
        .ring()
        .maximal_ideal()
        .unwrap()
        .into_iter()
        .filter(|&x| x != 0)
        .collect();
    assert_eq!(m, [3, 6]);
    assert!(!g.subset_connected(&m));
}

#[test]
fn planarity_examples() {
    assert!(full(dual(5)).is_planar());
    assert!(!full(dual(7)).is_planar());
    for n in 2..30 {
        assert!(full(RingExpr::zn(n)).is_planar());
    }
}

#[test]
fn graph_automorphism_orders() {
    let z4 = full(RingExpr::zn(4));
    assert_eq!(z4.graph_aut_order().unwrap(), 24);
    assert!(aut_embeds_in_graph_aut(&z4));
    let f4 = full(gf(4));
    assert_eq!(f4.graph_aut_order().unwrap(), 4);
    assert!(aut_embeds_in_graph_aut(&f4));
    let d5 = full(dual(5));
    assert!(aut_embeds_in_graph_aut(&d5));
    // 5 singletons and 5 blocks of size 4: 5! * (4!)^5 * 5!
    assert_eq!(d5.graph_aut_order().unwrap(), 120 * 24u64.pow(5) * 120);
    let z7 = full(RingExpr::zn(7));
    assert_eq!(z7.graph_aut_order().unwrap(), 5040);
    let big = full(RingExpr::zn(64));
    assert_eq!(big.graph_aut_order(), Err(RingError::Overflow));
    assert!(big.graph_aut_order_big() > (1u64 << 63).into());
}

#[test]
fn product_degree_example() {
    let r = ring(RingExpr::prod(vec![gf(4), dual(5)]));
    let g = full_orbit_graph(&r, &Limits::default()).unwrap();
    assert_eq!(g.degree(r.index_of("(x,x)").unwrap()), 7);
    assert_eq!(g.graph_type(), 7);
}

#[test]
fn catalog_partition_invariants_and_edge_oracle() {
    let cat = build_catalog(32).unwrap();
    let limits = Limits::default();
    for e in &cat.entries {
        let g = e.graph(&limits).unwrap();
        let n = e.ring.order();
        let mut seen = vec![0usize; n];
        for b in g.cliques() {
            for &x in b {
                seen[x] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1), "{}", e.expr);
        assert_eq!(g.orbit(e.ring.zero()).len(), 1);
        assert_eq!(g.orbit(e.ring.one()).len(), 1);
        let firsts: Vec<_> = g.cliques().iter().map(|b| b[0]).collect();
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.graph_type(), (0..n).map(|x| g.degree(x)).max().unwrap());
        assert_eq!(g.is_planar(), g.graph_type() <= 3, "{}", e.expr);
        assert_eq!(g.is_totally_disconnected(), g.group().order() == 1);

        // adjacency straight from the definition, over an independent oracle
        let oracle = common::brute_force_automorphisms(&e.ring);
        let mut adj = vec![BTreeSet::new(); n];
        for s in &oracle {
            for (x, &y) in s.iter().enumerate() {
                if y != x {
                    adj[x].insert(y);
                }
            }
        }
        for (x, expected) in adj.iter().enumerate() {
            let from_partition: BTreeSet<_> = (0..n).filter(|&y| g.adjacent(x, y)).collect();
            assert_eq!(
                &from_partition,
                expected,
                "{} at {}",
                e.expr,
                e.ring.name(x)
            );
        }
        assert!(aut_embeds_in_graph_aut(&g), "{}", e.expr);
    }
}

#[test]
fn planarity_iff_type_at_most_three() {
    let cat = build_catalog(64).unwrap();
    let limits = Limits::default();
    for e in &cat.entries {
        let g = e.graph(&limits).unwrap();
        assert_eq!(g.is_planar(), g.graph_type() <= 3, "{}", e.expr);
    }
}

#[test]
fn subgroup_orbits_refine_full_orbits() {
    for expr in [
        gf(16),
        dual(9),
        RingExpr::square_zero(RingExpr::zn(2), 3),
        RingExpr::prod(vec![gf(4), gf(4)]),
    ] {
        let r = ring(expr.clone());
        let full_group = Arc::new(automorphisms(&r).unwrap());
        let g2 = OrbitGraph::build(full_group.clone());
        for gen in full_group.generators() {
            let h = subgroup_closure(&r, &[gen]).unwrap();
            let g1 = OrbitGraph::build(Arc::new(h));
            for x in r.elements() {
                for &y in g1.orbit(x) {
                    assert!(g2.adjacent(x, y) || x == y, "{expr}");
                }
            }
            assert!(g1.edge_count() <= g2.edge_count());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degree_is_orbit_size_minus_one(n in 2u64..12, c0 in 0u64..12, c1 in 0u64..12) {
        let r = ring(RingExpr::poly_quot(n, vec![c0 % n, c1 % n, 1]));
        let g = full_orbit_graph(&r, &Limits::default()).unwrap();
        let total: usize = g.cliques().iter().map(Vec::len).sum();
        prop_assert_eq!(total, r.order());
        for x in r.elements() {
            prop_assert_eq!(g.degree(x), g.orbit(x).len() - 1);
            for &y in g.orbit(x) {
                prop_assert!(g.adjacent(x, y) == (x != y));
                prop_assert!(g.adjacent(y, x) == (x != y));
            }
        }
        let edges: usize = g.cliques().iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
        prop_assert_eq!(g.edge_count(), edges);
    }
}
