use std::sync::Arc;

use rayon::prelude::*;

use super::catalog::{Catalog, CatalogEntry};
use super::report::{TheoremId, VerificationReport};
use crate::arith::{euler_phi, exact_log, factorial_saturating, prime_power};
use crate::aut::{automorphisms_with, isomorphism_with, subgroup_closure, RingMorphism};
use crate::error::Result;
use crate::expr::RingExpr;
use crate::graph::OrbitGraph;
use crate::ring::{decompose_local, make_ring_with, FiniteRing};
use crate::Limits;

pub const DEFAULT_P_LIST: [u64; 5] = [3, 5, 7, 11, 13];
pub const DEFAULT_N_LIST: [u64; 6] = [3, 5, 7, 9, 15, 21];
/// `(p, n, k)` for `Z_{p^n}^k`.
pub const DEFAULT_SYMMETRIC_SAMPLES: [(u64, u32, usize); 6] = [
    (2, 2, 2),
    (2, 2, 3),
    (3, 1, 2),
    (5, 1, 2),
    (5, 1, 3),
    (5, 1, 4),
];
pub const DEFAULT_FIELD_ORDERS: [u64; 7] = [4, 8, 9, 16, 27, 25, 64];

/// Field-extension pairs with `q^t` above this are skipped.
const FIELD_EXT_ORDER_CAP: u64 = 256;

fn graph_of(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<OrbitGraph> {
    Ok(OrbitGraph::build(Arc::new(automorphisms_with(
        ring, limits,
    )?)))
}

fn graph_for(expr: &RingExpr, limits: &Limits) -> Result<OrbitGraph> {
    graph_of(&make_ring_with(expr, limits)?, limits)
}

fn iso(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>, limits: &Limits) -> Result<bool> {
    Ok(isomorphism_with(a, b, limits)?.is_some())
}

fn isomorphic_to_any(ring: &Arc<FiniteRing>, refs: &[RingExpr], limits: &Limits) -> Result<bool> {
    for r in refs {
        if r.order() != Some(ring.order() as u128) {
            continue;
        }
        if iso(&make_ring_with(r, limits)?, ring, limits)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Evaluates `check` on every selected entry in parallel and returns the
/// outcomes in catalog order.
fn per_entry<T, F>(
    catalog: &Catalog,
    select: fn(&CatalogEntry) -> bool,
    check: F,
) -> Result<Vec<(&CatalogEntry, T)>>
where
    T: Send,
    F: Fn(&CatalogEntry) -> Result<T> + Sync,
{
    catalog
        .entries
        .par_iter()
        .filter(|e| select(e))
        .map(|e| check(e).map(|t| (e, t)))
        .collect()
}

fn local(e: &CatalogEntry) -> bool {
    e.ring.is_local()
}

fn any(_: &CatalogEntry) -> bool {
    true
}

fn local_universe(catalog: &Catalog) -> String {
    format!("local entries of the {}", catalog.universe())
}

/// Largest degree over the maximal ideal of a local ring.
fn max_degree_on_m(graph: &OrbitGraph) -> usize {
    graph
        .ring()
        .maximal_ideal()
        .unwrap_or_default()
        .into_iter()
        .map(|x| graph.degree(x))
        .max()
        .unwrap_or(0)
}

/// `|Aut R| = 1` iff `R` is a product of pairwise non-isomorphic factors
/// each isomorphic to some `Z_{p^a}` or to `Z_2[x]/(x^2)`.
pub fn verify_trivial_aut_classification(catalog: &Catalog) -> Result<VerificationReport> {
    let limits = catalog.limits;
    let dual2 = make_ring_with(&RingExpr::poly_quot(2, vec![0, 0, 1]), &limits)?;
    let rows = per_entry(catalog, any, |e| {
        let trivial = e.aut(&limits)?.order() == 1;
        let (factors, _) = decompose_local(&e.ring);
        let mut allowed = true;
        for f in &factors {
            if f.characteristic() != f.order() && !iso(f, &dual2, &limits)? {
                allowed = false;
            }
        }
        let mut distinct = true;
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                if iso(a, b, &limits)? {
                    distinct = false;
                }
            }
        }
        Ok((trivial, allowed, distinct))
    })?;
    let mut report = VerificationReport::new(TheoremId::TrivialAut.as_str(), catalog.universe());
    for (e, (trivial, allowed, distinct)) in rows {
        let predicted = allowed && distinct;
        let detail = format!(
            "|Aut| = {}, factors allowed: {allowed}, pairwise non-isomorphic: {distinct}",
            e.aut(&limits)?.order()
        );
        report.record(trivial == predicted, &e.expr, detail);
    }
    Ok(report)
}

/// For local `R`: `U(R) - {1}` is connected iff `R` is isomorphic to
/// `Z_2`, `Z_3`, `Z_4`, `F_4` or a square-zero algebra over `Z_2`.
pub fn verify_units_connected_classification(catalog: &Catalog) -> Result<VerificationReport> {
    let limits = catalog.limits;
    let rows = per_entry(catalog, any, |e| {
        let graph = e.graph(&limits)?;
        let r = &e.ring;
        let subset: Vec<usize> = r
            .units()
            .iter()
            .copied()
            .filter(|&u| u != r.one())
            .collect();
        let connected = graph.subset_connected(&subset);
        if !r.is_local() {
            return Ok((connected, None));
        }
        let mut refs = vec![
            RingExpr::zn(2),
            RingExpr::zn(3),
            RingExpr::zn(4),
            RingExpr::gf(4)?,
        ];
        if let Some(k) = exact_log(r.order() as u64, 2) {
            if k >= 2 {
                refs.push(RingExpr::square_zero(RingExpr::zn(2), k - 1));
            }
        }
        Ok((connected, Some(isomorphic_to_any(r, &refs, &limits)?)))
    })?;
    let mut report =
        VerificationReport::new(TheoremId::UnitsConnected.as_str(), local_universe(catalog));
    for (e, (connected, predicted)) in rows {
        match predicted {
            Some(p) => report.record(
                connected == p,
                &e.expr,
                format!("U(R)-{{1}} connected: {connected}, in classification: {p}"),
            ),
            None if connected => report
                .notes
                .push(format!("non-local {} has U(R)-{{1}} connected", e.expr)),
            None => {}
        }
    }
    Ok(report)
}

/// For local `R`: `M - {0}` is connected iff `R ≅ Z_4` or `R` is a
/// square-zero algebra over its residue field (fields being the case m = 0).
pub fn verify_m_connected_classification(catalog: &Catalog) -> Result<VerificationReport> {
    let limits = catalog.limits;
    let rows = per_entry(catalog, local, |e| {
        let graph = e.graph(&limits)?;
        let r = &e.ring;
        let m: Vec<usize> = r
            .maximal_ideal()
            .unwrap_or_default()
            .into_iter()
            .filter(|&x| x != r.zero())
            .collect();
        let connected = graph.subset_connected(&m);
        let q = r.local_structure().residue_field_order.unwrap_or(0) as u64;
        let mut refs = vec![RingExpr::zn(4)];
        if let Some(k) = exact_log(r.order() as u64, q) {
            let field = RingExpr::field(q)?;
            refs.push(if k == 1 {
                field
            } else {
                RingExpr::square_zero(field, k - 1)
            });
        }
        Ok((connected, isomorphic_to_any(r, &refs, &limits)?))
    })?;
    let mut report =
        VerificationReport::new(TheoremId::MConnected.as_str(), local_universe(catalog));
    for (e, (connected, predicted)) in rows {
        report.record(
            connected == predicted,
            &e.expr,
            format!("M-{{0}} connected: {connected}, in classification: {predicted}"),
        );
    }
    Ok(report)
}

fn dual_numbers(n: u64) -> RingExpr {
    RingExpr::poly_quot(n, vec![0, 0, 1])
}

/// `type(Z_p[x]/(x^2)) = p - 2`.
pub fn check_dual_number_types(p_list: &[u64], limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("type of Z_p[x]/(x^2)", "sampled primes");
    for &p in p_list {
        let expr = dual_numbers(p);
        let t = graph_for(&expr, limits)?.graph_type();
        report.record(
            t as u64 + 2 == p,
            &expr,
            format!("type {t}, expected {}", p - 2),
        );
    }
    Ok(report)
}

/// `type(Z_n[x]/(x^2)) = φ(n) - 1` for odd `n`.
pub fn check_odd_dual_types(n_list: &[u64], limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("type of Z_n[x]/(x^2)", "sampled odd moduli");
    for &n in n_list {
        let expr = dual_numbers(n);
        let t = graph_for(&expr, limits)?.graph_type() as u64;
        let expected = euler_phi(n) - 1;
        report.record(
            t == expected,
            &expr,
            format!("type {t}, expected {expected}"),
        );
    }
    Ok(report)
}

/// `|Aut(Z_{p^n}^k)| = k!` when `k < p^n`. Larger `k` is recorded only.
pub fn check_symmetric_products(
    samples: &[(u64, u32, usize)],
    limits: &Limits,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("symmetric products", "sampled powers of Z_{p^n}");
    for &(p, n, k) in samples {
        let base = RingExpr::zn(p.pow(n));
        let expr = RingExpr::prod(vec![base; k]);
        let order = automorphisms_with(&make_ring_with(&expr, limits)?, limits)?.order();
        if (k as u64) < p.pow(n) {
            let expected = factorial_saturating(k as u64);
            report.record(
                order == expected,
                &expr,
                format!("|Aut| = {order}, expected {expected}"),
            );
        } else {
            report
                .notes
                .push(format!("{expr}: |Aut| = {order} (k >= p^n, no claim)"));
        }
    }
    Ok(report)
}

/// `type(F_{p^m}) = m - 1`.
pub fn check_field_types(orders: &[u64], limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("type of F_{p^m}", "sampled finite fields");
    for &q in orders {
        let expr = RingExpr::field(q)?;
        let m = prime_power(q).map_or(0, |(_, e)| e as usize);
        let t = graph_for(&expr, limits)?.graph_type();
        report.record(
            t + 1 == m,
            &expr,
            format!("type {t}, expected {}", m.saturating_sub(1)),
        );
    }
    Ok(report)
}

/// Pairs of non-isomorphic local rings, each of order at most 25.
pub fn local_ring_samples() -> Vec<(RingExpr, RingExpr)> {
    let gf = |q| RingExpr::gf(q).expect("prime power");
    vec![
        (gf(4), dual_numbers(5)),
        (RingExpr::zn(4), RingExpr::zn(9)),
        (gf(4), gf(8)),
        (dual_numbers(3), RingExpr::zn(5)),
        (gf(9), dual_numbers(2)),
        (RingExpr::square_zero(RingExpr::zn(2), 2), gf(4)),
        (dual_numbers(5), dual_numbers(3)),
        (gf(16), RingExpr::zn(7)),
        (RingExpr::zn(8), gf(9)),
        (gf(25), gf(4)),
        (RingExpr::poly_quot(2, vec![0, 0, 0, 1]), dual_numbers(3)),
        (RingExpr::poly_quot(4, vec![0, 0, 1]), RingExpr::zn(25)),
        (gf(8), RingExpr::zn(25)),
    ]
}

/// Product expression and its (passed, detail) checks.
type PairChecks = (RingExpr, Vec<(bool, String)>);

/// `deg(a, b) = (deg a + 1)(deg b + 1) - 1` in `R × S` for every pair, and
/// `type(R × S) = (m + 1)(n + 1) - 1` when the factor types differ.
pub fn check_product_formulas(
    pairs: &[(RingExpr, RingExpr)],
    limits: &Limits,
) -> Result<VerificationReport> {
    let rows: Vec<Result<PairChecks>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let (ga, gb) = (graph_for(a, limits)?, graph_for(b, limits)?);
            let expr = RingExpr::prod(vec![a.clone(), b.clone()]);
            let gp = graph_for(&expr, limits)?;
            let nb = gb.ring().order();
            let mut bad = None;
            'outer: for x in 0..ga.ring().order() {
                for y in 0..nb {
                    let want = (ga.degree(x) + 1) * (gb.degree(y) + 1) - 1;
                    let got = gp.degree(x * nb + y);
                    if got != want {
                        bad = Some(format!(
                            "deg({},{}) = {got}, expected {want}",
                            ga.ring().name(x),
                            gb.ring().name(y)
                        ));
                        break 'outer;
                    }
                }
            }
            let mut out = vec![(bad.is_none(), bad.unwrap_or_default())];
            let (m, n) = (ga.graph_type(), gb.graph_type());
            if m != n {
                let want = (m + 1) * (n + 1) - 1;
                let got = gp.graph_type();
                out.push((got == want, format!("type {got}, expected {want}")));
            }
            Ok((expr, out))
        })
        .collect();
    let mut report =
        VerificationReport::new("product formulas", "sampled non-isomorphic local pairs");
    for row in rows {
        let (expr, checks) = row?;
        for (ok, detail) in checks {
            report.record(ok, &expr, detail);
        }
    }
    Ok(report)
}

/// All type formulas: dual numbers over primes and odd moduli, symmetric
/// products, finite fields and the product corollaries.
pub fn verify_type_formulas(
    p_list: &[u64],
    n_list: &[u64],
    limits: &Limits,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(TheoremId::TypeFormulas.as_str(), "sampled families");
    report.absorb(check_dual_number_types(p_list, limits)?);
    report.absorb(check_odd_dual_types(n_list, limits)?);
    report.absorb(check_symmetric_products(
        &DEFAULT_SYMMETRIC_SAMPLES,
        limits,
    )?);
    report.absorb(check_field_types(&DEFAULT_FIELD_ORDERS, limits)?);
    report.absorb(check_product_formulas(&local_ring_samples(), limits)?);
    Ok(report)
}

/// For local non-field `R` with maximal degree `n` over `M`: if `n <= 1`
/// then `Aut R` is an abelian 2-group, and every automorphism has order at
/// most `(n + 1)!`.
pub fn verify_involution_and_order_bounds(catalog: &Catalog) -> Result<VerificationReport> {
    let limits = catalog.limits;
    let select: fn(&CatalogEntry) -> bool = |e| e.ring.is_local() && !e.ring.is_field();
    let rows = per_entry(catalog, select, |e| {
        let graph = e.graph(&limits)?;
        let group = graph.group();
        let n = max_degree_on_m(&graph);
        let bound = factorial_saturating(n as u64 + 1);
        // Element orders divide |G|, so the walk is needed only past the bound.
        let max_order = if group.order() <= bound {
            None
        } else {
            Some(group.max_element_order())
        };
        let mut checks = Vec::new();
        if n <= 1 {
            let order = group.order();
            let abelian = group.is_abelian();
            checks.push((
                abelian && order.is_power_of_two(),
                format!("max degree {n}, |Aut| = {order}, abelian: {abelian}"),
            ));
        }
        let ok = max_order.is_none_or(|o| u128::from(o) <= bound);
        checks.push((
            ok,
            format!(
                "max degree {n}, largest element order {}, bound {bound}",
                max_order.map_or_else(|| format!("<= {}", group.order()), |o| o.to_string())
            ),
        ));
        Ok(checks)
    })?;
    let universe = format!("local non-field entries of the {}", catalog.universe());
    let mut report = VerificationReport::new(TheoremId::Involution.as_str(), universe);
    for (e, checks) in rows {
        for (ok, detail) in checks {
            report.record(ok, &e.expr, detail);
        }
    }
    Ok(report)
}

/// For `K = F_{q^t}`, `E` its subfield of order `q` and `H` the
/// automorphisms fixing `E` pointwise: `K - E` is connected in `Γ_H(K)`
/// iff `(q, t) = (2, 2)`, and the fixed field of `H` is `E`.
pub fn verify_field_extension_connectivity(
    max_q: u64,
    max_t: u32,
    limits: &Limits,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        TheoremId::FieldExt.as_str(),
        format!("F_{{q^t}} over F_q for prime powers q <= {max_q}, 2 <= t <= {max_t}, q^t <= {FIELD_EXT_ORDER_CAP}"),
    );
    for q in 2..=max_q {
        let Some((p, e)) = prime_power(q) else {
            continue;
        };
        for t in 2..=max_t {
            let Some(qt) = q.checked_pow(t).filter(|&v| v <= FIELD_EXT_ORDER_CAP) else {
                report.notes.push(format!(
                    "q = {q}, t = {t} skipped (order above {FIELD_EXT_ORDER_CAP})"
                ));
                continue;
            };
            let expr = RingExpr::field(qt)?;
            let k = make_ring_with(&expr, limits)?;
            let sub: Vec<usize> = k.elements().filter(|&x| k.pow(x, q) == x).collect();
            let aut = automorphisms_with(&k, limits)?;
            let fixing: Vec<RingMorphism> = aut
                .elements()?
                .into_iter()
                .filter(|s| sub.iter().all(|&x| s.apply(x) == x))
                .collect();
            let h = subgroup_closure(&k, &fixing)?;
            let graph = OrbitGraph::build(Arc::new(h));
            let rest: Vec<usize> = k.elements().filter(|x| !sub.contains(x)).collect();
            let connected = graph.subset_connected(&rest);
            let expected = (q, t) == (2, 2);
            report.record(
                connected == expected,
                &expr,
                format!("q = {q}, t = {t}: K-E connected: {connected}, expected {expected}"),
            );
            let fixed: Vec<usize> = k
                .elements()
                .filter(|&x| graph.orbit(x).len() == 1)
                .collect();
            report.record(
                fixed == sub && sub.len() as u64 == q,
                &expr,
                format!(
                    "q = {q}, t = {t}: |E| = {}, |K^H| = {}, |H| = {} (p = {p}, e = {e})",
                    sub.len(),
                    fixed.len(),
                    graph.group().order()
                ),
            );
        }
    }
    Ok(report)
}

/// Local `R` with `[R/M : F_p] > 2` has type at least 2.
pub fn verify_residue_field_remark(catalog: &Catalog) -> Result<VerificationReport> {
    let limits = catalog.limits;
    let rows = per_entry(catalog, local, |e| {
        let q = e.ring.local_structure().residue_field_order.unwrap_or(1) as u64;
        let degree = prime_power(q).map_or(0, |(_, f)| f);
        if degree <= 2 {
            return Ok(None);
        }
        Ok(Some((degree, e.graph(&limits)?.graph_type())))
    })?;
    let mut report =
        VerificationReport::new(TheoremId::ResidueRemark.as_str(), local_universe(catalog));
    for (e, row) in rows {
        if let Some((degree, t)) = row {
            report.record(t >= 2, &e.expr, format!("[R/M:F_p] = {degree}, type {t}"));
        }
    }
    Ok(report)
}

/// Runs one check with its default parameters; catalog-based checks use
/// `catalog`, the others only its limits.
pub fn run_verification(id: TheoremId, catalog: &Catalog) -> Result<VerificationReport> {
    let limits = &catalog.limits;
    match id {
        TheoremId::TrivialAut => verify_trivial_aut_classification(catalog),
        TheoremId::UnitsConnected => verify_units_connected_classification(catalog),
        TheoremId::MConnected => verify_m_connected_classification(catalog),
        TheoremId::TypeFormulas => verify_type_formulas(&DEFAULT_P_LIST, &DEFAULT_N_LIST, limits),
        TheoremId::Involution => verify_involution_and_order_bounds(catalog),
        TheoremId::FieldExt => verify_field_extension_connectivity(5, 3, limits),
        TheoremId::ResidueRemark => verify_residue_field_remark(catalog),
    }
}
