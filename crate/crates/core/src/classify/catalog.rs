use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::aut::{automorphisms_with, isomorphism_with, AutGroup};
use crate::error::{Result, RingError};
use crate::expr::RingExpr;
use crate::graph::OrbitGraph;
use crate::poly;
use crate::ring::{make_ring_with, Fingerprint, FiniteRing};
use crate::Limits;

/// Largest order a catalog may be built for.
pub const CATALOG_ORDER_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ZeroRing,
    Cyclic,
    Field,
    PolyQuotient,
    SquareZero,
    Product,
}

pub struct CatalogEntry {
    pub expr: RingExpr,
    pub ring: Arc<FiniteRing>,
    pub family: Family,
    aut: OnceLock<Result<Arc<AutGroup>>>,
    graph: OnceLock<Result<Arc<OrbitGraph>>>,
}

impl CatalogEntry {
    fn new(expr: RingExpr, ring: Arc<FiniteRing>, family: Family) -> Self {
        CatalogEntry {
            expr,
            ring,
            family,
            aut: OnceLock::new(),
            graph: OnceLock::new(),
        }
    }

    /// `Aut R`, computed on first use.
    pub fn aut(&self, limits: &Limits) -> Result<Arc<AutGroup>> {
        self.aut
            .get_or_init(|| automorphisms_with(&self.ring, limits).map(Arc::new))
            .clone()
    }

    /// `Γ_{Aut R}(R)`, computed on first use.
    pub fn graph(&self, limits: &Limits) -> Result<Arc<OrbitGraph>> {
        self.graph
            .get_or_init(|| Ok(Arc::new(OrbitGraph::build(self.aut(limits)?))))
            .clone()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CatalogOptions {
    /// Include the zero ring Z1 (all invariants degenerate).
    pub include_zero_ring: bool,
    pub limits: Limits,
}

/// Pairwise non-isomorphic rings from the constructor families, ordered by
/// ring order and then by family (cyclic, fields, polynomial quotients,
/// square-zero algebras, products).
pub struct Catalog {
    pub max_order: usize,
    pub entries: Vec<CatalogEntry>,
    pub limits: Limits,
}

impl Catalog {
    pub fn universe(&self) -> String {
        format!(
            "catalog families up to order {} (complete only at orders p and p^2)",
            self.max_order
        )
    }

    pub fn local_entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.ring.is_local())
    }

    pub fn find(&self, ring: &Arc<FiniteRing>) -> Result<Option<&CatalogEntry>> {
        for e in &self.entries {
            if isomorphism_with(&e.ring, ring, &self.limits)?.is_some() {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

pub fn build_catalog(max_order: usize) -> Result<Catalog> {
    build_catalog_with(max_order, CatalogOptions::default())
}

type Key = (usize, usize, Vec<Fingerprint>);

struct Dedup {
    limits: Limits,
    entries: Vec<CatalogEntry>,
    buckets: HashMap<Key, Vec<usize>>,
}

impl Dedup {
    fn offer(&mut self, expr: RingExpr, family: Family) -> Result<()> {
        let ring = make_ring_with(&expr, &self.limits)?;
        let mut fps = ring.fingerprints().to_vec();
        fps.sort_unstable();
        let key = (ring.order(), ring.characteristic(), fps);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if isomorphism_with(&self.entries[i].ring, &ring, &self.limits)?.is_some() {
                return Ok(());
            }
        }
        bucket.push(self.entries.len());
        self.entries.push(CatalogEntry::new(expr, ring, family));
        Ok(())
    }
}

pub fn build_catalog_with(max_order: usize, options: CatalogOptions) -> Result<Catalog> {
    if max_order > CATALOG_ORDER_CAP {
        return Err(RingError::OrderLimitExceeded {
            order: max_order as u128,
            limit: CATALOG_ORDER_CAP,
        });
    }
    let limits = options.limits;
    let mut d = Dedup {
        limits,
        entries: Vec::new(),
        buckets: HashMap::new(),
    };
    let max = max_order as u64;

    if options.include_zero_ring && max >= 1 {
        d.offer(RingExpr::zn(1), Family::ZeroRing)?;
    }
    for n in 2..=max {
        d.offer(RingExpr::zn(n), Family::Cyclic)?;
    }
    for q in 4..=max {
        if let Some((_, e)) = prime_power(q) {
            if e >= 2 {
                d.offer(RingExpr::gf(q)?, Family::Field)?;
            }
        }
    }
    for n in 2..=max {
        for deg in 2..=3u32 {
            if n.pow(deg) > max {
                continue;
            }
            let nu = n as usize;
            for idx in 0..nu.pow(deg) {
                let mut modulus = poly::digits(idx, nu, deg as usize);
                modulus.push(1);
                d.offer(RingExpr::poly_quot(n, modulus), Family::PolyQuotient)?;
            }
        }
    }
    let mut bases: Vec<RingExpr> = (2..=max).map(RingExpr::zn).collect();
    for q in 4..=max {
        if prime_power(q).is_some() && !is_prime(q) {
            bases.push(RingExpr::gf(q)?);
        }
    }
    for base in bases {
        let b = base.order().unwrap_or(u128::MAX);
        let mut m = 1u32;
        while b.saturating_pow(m + 1) <= max as u128 {
            d.offer(RingExpr::square_zero(base.clone(), m), Family::SquareZero)?;
            m += 1;
        }
    }

    // Products of at least two local entries; every finite ring is such a
    // product, so products of non-local entries add nothing.
    let locals: Vec<(RingExpr, usize)> = d
        .entries
        .iter()
        .filter(|e| e.ring.is_local())
        .map(|e| (e.expr.clone(), e.ring.order()))
        .collect();
    let mut products = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    collect_products(&locals, 0, 1, max_order, &mut stack, &mut products);
    for factors in products {
        d.offer(RingExpr::prod(factors), Family::Product)?;
    }

    let mut entries = d.entries;
    entries.sort_by_key(|e| e.ring.order());
    Ok(Catalog {
        max_order,
        entries,
        limits,
    })
}

fn collect_products(
    locals: &[(RingExpr, usize)],
    start: usize,
    order: usize,
    max: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<RingExpr>>,
) {
    if stack.len() >= 2 {
        out.push(stack.iter().map(|&i| locals[i].0.clone()).collect());
    }
    for i in start..locals.len() {
        let next = order * locals[i].1;
        if next > max {
            continue;
        }
        stack.push(i);
        collect_products(locals, i, next, max, stack, out);
        stack.pop();
    }
}
