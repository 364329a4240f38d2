//! Acceptance criteria. Run with `--nocapture` to see one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use ringgraph_core::classify::{
    build_catalog, check_product_formulas, local_ring_samples, verify_field_extension_connectivity,
    verify_involution_and_order_bounds, verify_m_connected_classification,
    verify_trivial_aut_classification, verify_units_connected_classification, Catalog,
    VerificationReport,
};
use ringgraph_core::{full_orbit_graph, isomorphism, make_ring, FiniteRing, Limits, RingExpr};

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build_catalog(64).expect("catalog"))
}

fn ring(expr: &RingExpr) -> Arc<FiniteRing> {
    make_ring(expr).expect("ring")
}

fn graph_type(expr: &RingExpr) -> usize {
    full_orbit_graph(&ring(expr), &Limits::default())
        .expect("graph")
        .graph_type()
}

fn phi(n: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn report_ok(r: &VerificationReport) -> Result<(), String> {
    if r.passed && r.counterexamples.is_empty() && r.checked > 0 {
        Ok(())
    } else {
        Err(r.to_string())
    }
}

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn c1_type_formulas() -> Outcome {
    for p in [3u64, 5, 7, 11, 13] {
        let t = graph_type(&RingExpr::poly_quot(p, vec![0, 0, 1])) as u64;
        if t != p - 2 {
            return Err(format!("Z{p}[x]/(x^2): type {t}, expected {}", p - 2));
        }
    }
    for n in [3u64, 5, 7, 9, 15, 21] {
        let t = graph_type(&RingExpr::poly_quot(n, vec![0, 0, 1])) as u64;
        if t != phi(n) - 1 {
            return Err(format!("Z{n}[x]/(x^2): type {t}, expected {}", phi(n) - 1));
        }
    }
    Ok(())
}

fn c2_trivial_aut() -> Outcome {
    let cat = catalog();
    report_ok(&verify_trivial_aut_classification(cat).map_err(|e| e.to_string())?)?;
    // spot values
    let limits = Limits::default();
    for (expr, trivial) in [
        (RingExpr::zn(8), true),
        (RingExpr::poly_quot(2, vec![0, 0, 1]), true),
        (RingExpr::prod(vec![RingExpr::zn(4), RingExpr::zn(9)]), true),
        (
            RingExpr::prod(vec![RingExpr::zn(2), RingExpr::zn(2)]),
            false,
        ),
        (RingExpr::gf(4).unwrap(), false),
    ] {
        let e = cat
            .find(&ring(&expr))
            .map_err(|e| e.to_string())?
            .ok_or(format!("{expr} missing"))?;
        if (e.aut(&limits).map_err(|e| e.to_string())?.order() == 1) != trivial {
            return Err(format!("{expr}: expected trivial = {trivial}"));
        }
    }
    Ok(())
}

fn c3_units_connected() -> Outcome {
    report_ok(&verify_units_connected_classification(catalog()).map_err(|e| e.to_string())?)
}

fn c4_m_connected() -> Outcome {
    report_ok(&verify_m_connected_classification(catalog()).map_err(|e| e.to_string())?)
}

fn c5_product_formulas() -> Outcome {
    let pairs = local_ring_samples();
    if pairs.len() < 10 {
        return Err(format!("only {} pairs", pairs.len()));
    }
    for (a, b) in &pairs {
        let (ra, rb) = (ring(a), ring(b));
        if !(ra.is_local() && rb.is_local() && ra.order() <= 25 && rb.order() <= 25) {
            return Err(format!("{a}, {b} not local of order <= 25"));
        }
        if isomorphism(&ra, &rb).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("{a} and {b} are isomorphic"));
        }
    }
    report_ok(&check_product_formulas(&pairs, &Limits::default()).map_err(|e| e.to_string())?)
}

fn c6_symmetric_products() -> Outcome {
    for (p, n, k) in [
        (2u64, 2u32, 2usize),
        (2, 2, 3),
        (3, 1, 2),
        (5, 1, 2),
        (5, 1, 3),
        (5, 1, 4),
    ] {
        let expr = RingExpr::prod(vec![RingExpr::zn(p.pow(n)); k]);
        let order = ringgraph_core::automorphisms(&ring(&expr))
            .map_err(|e| e.to_string())?
            .order();
        let want: u128 = (1..=k as u128).product();
        if order != want {
            return Err(format!("{expr}: |Aut| = {order}, expected {want}"));
        }
    }
    Ok(())
}

fn c7_graph_aut() -> Outcome {
    let limits = Limits::default();
    for e in catalog().entries.iter().filter(|e| e.ring.order() <= 32) {
        let g = e.graph(&limits).map_err(|e| e.to_string())?;
        if !g.embeds_in_graph_aut() {
            return Err(format!("{}: Aut R does not embed", e.expr));
        }
    }
    let z4 = full_orbit_graph(&ring(&RingExpr::zn(4)), &limits).map_err(|e| e.to_string())?;
    match z4.graph_aut_order() {
        Ok(24) => Ok(()),
        other => Err(format!("Z4: graph_aut_order {other:?}")),
    }
}

fn c8_planarity() -> Outcome {
    let limits = Limits::default();
    for e in &catalog().entries {
        let g = e.graph(&limits).map_err(|e| e.to_string())?;
        if g.is_planar() != (g.graph_type() <= 3) {
            return Err(format!(
                "{}: planar {} but type {}",
                e.expr,
                g.is_planar(),
                g.graph_type()
            ));
        }
    }
    Ok(())
}

fn c9_field_extension() -> Outcome {
    let r =
        verify_field_extension_connectivity(5, 3, &Limits::default()).map_err(|e| e.to_string())?;
    // q in {2,3,4,5}, t in {2,3}: connectivity and fixed field per pair
    if r.checked != 16 {
        return Err(format!("{} checks, expected 16", r.checked));
    }
    report_ok(&r)
}

fn c10_involution() -> Outcome {
    report_ok(&verify_involution_and_order_bounds(catalog()).map_err(|e| e.to_string())?)
}

fn c11_oracle() -> Outcome {
    for e in catalog().entries.iter().filter(|e| e.ring.order() <= 32) {
        let group = ringgraph_core::automorphisms(&e.ring).map_err(|e| e.to_string())?;
        let mut pruned = BTreeSet::new();
        group.for_each_perm(|p| {
            pruned.insert(p.iter().map(|&y| y as usize).collect::<Vec<_>>());
        });
        let oracle = common::brute_force_automorphisms(&e.ring);
        if pruned != oracle || pruned.len() as u128 != group.order() {
            return Err(format!(
                "{}: search {} maps, oracle {}",
                e.expr,
                pruned.len(),
                oracle.len()
            ));
        }
    }
    Ok(())
}

fn c12_field_types() -> Outcome {
    for (q, m) in [
        (4u64, 2usize),
        (8, 3),
        (9, 2),
        (16, 4),
        (27, 3),
        (25, 2),
        (64, 6),
    ] {
        let t = graph_type(&RingExpr::gf(q).unwrap());
        if t != m - 1 {
            return Err(format!("GF({q}): type {t}, expected {}", m - 1));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("1 type formulas", c1_type_formulas, 5),
        ("2 trivial-aut classification", c2_trivial_aut, 60),
        ("3 units-connected classification", c3_units_connected, 60),
        ("4 M-connected classification", c4_m_connected, 60),
        ("5 product formulas", c5_product_formulas, 30),
        ("6 symmetric products", c6_symmetric_products, 30),
        ("7 graph-automorphism embedding", c7_graph_aut, 30),
        ("8 planarity", c8_planarity, 10),
        ("9 field extension", c9_field_extension, 10),
        ("10 involution and order bounds", c10_involution, 60),
        ("11 search-oracle equivalence", c11_oracle, 120),
        ("12 perfect-field type", c12_field_types, 5),
    ];
    let mut failures = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = outcome.is_ok() && in_time;
        println!(
            "[{}] criterion {name}: {:.3}s (limit {limit}s){}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            match &outcome {
                Err(msg) => format!(": {msg}"),
                Ok(()) if !in_time => ": over time limit".to_string(),
                Ok(()) => String::new(),
            }
        );
        if !pass {
            failures.push(name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
