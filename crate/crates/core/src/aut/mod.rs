//! Automorphism groups and isomorphisms of finite rings.

mod group;
mod morphism;
mod search;

use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;
use crate::Limits;

pub use group::{AutGroup, LISTING_LIMIT};
pub use morphism::{compose, inverse, is_homomorphism, RingMorphism};

use group::Perm;
use search::Matcher;

/// `Aut R` under the default limits.
pub fn automorphisms(ring: &Arc<FiniteRing>) -> Result<AutGroup> {
    automorphisms_with(ring, &Limits::default())
}

/// Computes `Aut R` as a stabiliser chain over the ring's generating set
/// `g_1..g_k`, deepest level first. At level `i` every fingerprint-compatible
/// image `c` of `g_i` not yet reached by the generators found so far is
/// tried: one search for an automorphism fixing `g_1..g_{i-1}` with
/// `g_i -> c` either yields a new strong generator or rules `c` out.
pub fn automorphisms_with(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<AutGroup> {
    check_order(ring, limits)?;
    let mut matcher = Matcher::new(ring, ring, limits.search_budget);
    let base = matcher.generators().to_vec();
    let n = ring.order();
    let mut strong: Vec<Perm> = Vec::new();

    for i in (0..base.len()).rev() {
        let mut fixed: Vec<(usize, usize)> = base[..i].iter().map(|&b| (b, b)).collect();
        let candidates: Vec<usize> = matcher
            .candidates_for(base[i])
            .iter()
            .map(|&c| c as usize)
            .collect();
        let mut reached = orbit_under(n, base[i], &strong);
        for c in candidates {
            if reached[c] {
                continue;
            }
            fixed.push((base[i], c));
            let found = matcher.first(&fixed)?;
            fixed.pop();
            if let Some(map) = found {
                let map: Perm = map.into();
                let morphism = RingMorphism::from_table(ring.clone(), ring.clone(), &map);
                debug_assert!(morphism.is_isomorphism());
                if !morphism.is_isomorphism() {
                    return Err(RingError::NotAutomorphism);
                }
                strong.push(map);
                reached = orbit_under(n, base[i], &strong);
            }
        }
    }
    Ok(AutGroup::from_strong_generators(
        ring.clone(),
        &base,
        strong,
    ))
}

fn orbit_under(n: usize, x: usize, gens: &[Perm]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g[y] as usize;
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

fn check_order(ring: &FiniteRing, limits: &Limits) -> Result<()> {
    if ring.order() > limits.max_order {
        return Err(RingError::OrderLimitExceeded {
            order: ring.order() as u128,
            limit: limits.max_order,
        });
    }
    Ok(())
}

/// Every automorphism found by a single exhaustive pruned search, sorted
/// lexicographically by image. Practical only for small groups; the chain
/// construction in [`automorphisms`] is the scalable route.
pub fn enumerate_automorphisms(
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Vec<RingMorphism>> {
    check_order(ring, limits)?;
    let mut matcher = Matcher::new(ring, ring, limits.search_budget);
    let mut out = Vec::new();
    matcher.search(&[], &mut |m| {
        out.push(RingMorphism::from_table(ring.clone(), ring.clone(), m));
        std::ops::ControlFlow::Continue(())
    })?;
    if let Some(bad) = out.iter().find(|m| !m.is_isomorphism()) {
        debug_assert!(false, "search produced a non-automorphism {bad:?}");
        return Err(RingError::NotAutomorphism);
    }
    out.sort_by(|a, b| a.image().cmp(b.image()));
    Ok(out)
}

pub fn isomorphism(r: &Arc<FiniteRing>, s: &Arc<FiniteRing>) -> Result<Option<RingMorphism>> {
    isomorphism_with(r, s, &Limits::default())
}

/// A verified isomorphism `r -> s`, if one exists. Order, characteristic and
/// the fingerprint multiset are compared before any search.
pub fn isomorphism_with(
    r: &Arc<FiniteRing>,
    s: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Option<RingMorphism>> {
    check_order(r, limits)?;
    check_order(s, limits)?;
    if !same_invariants(r, s) {
        return Ok(None);
    }
    let mut matcher = Matcher::new(r, s, limits.search_budget);
    let found = matcher.first(&[])?;
    Ok(found.and_then(|m| {
        let map = RingMorphism::from_table(r.clone(), s.clone(), &m);
        map.is_isomorphism().then_some(map)
    }))
}

/// Cheap necessary conditions for `r ≅ s`.
pub fn same_invariants(r: &FiniteRing, s: &FiniteRing) -> bool {
    if r.order() != s.order() || r.characteristic() != s.characteristic() {
        return false;
    }
    let mut a = r.fingerprints().to_vec();
    let mut b = s.fingerprints().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Smallest automorphism group of `ring` containing `gens`.
pub fn subgroup_closure(ring: &Arc<FiniteRing>, gens: &[RingMorphism]) -> Result<AutGroup> {
    let perms = gens
        .iter()
        .map(|g| {
            if g.is_automorphism_of(ring) {
                Ok(g.image().iter().map(|&y| y as u16).collect::<Perm>())
            } else {
                Err(RingError::NotAutomorphism)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let base = ring.generating_set();
    Ok(AutGroup::closure(ring.clone(), &base, &perms))
}
