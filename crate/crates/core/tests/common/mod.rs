//! Test-only oracles, independent of the pruned search.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ringgraph_core::FiniteRing;

/// Extends a partial map by naive fixpoint iteration over all pairs of
/// mapped elements (first value written wins). Returns the map if it became
/// total.
fn extend_by_closure(ring: &FiniteRing, mut map: Vec<Option<usize>>) -> Option<Vec<usize>> {
    loop {
        let mut changed = false;
        let mapped: Vec<usize> = (0..ring.order()).filter(|&x| map[x].is_some()).collect();
        for &a in &mapped {
            for &b in &mapped {
                let (fa, fb) = (map[a].unwrap(), map[b].unwrap());
                let s = ring.add(a, b);
                if map[s].is_none() {
                    map[s] = Some(ring.add(fa, fb));
                    changed = true;
                }
                let p = ring.mul(a, b);
                if map[p].is_none() {
                    map[p] = Some(ring.mul(fa, fb));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    map.into_iter().collect()
}

fn is_automorphism(ring: &FiniteRing, f: &[usize]) -> bool {
    let n = ring.order();
    let mut seen = vec![false; n];
    if f.iter().any(|&y| std::mem::replace(&mut seen[y], true)) {
        return false;
    }
    if f[ring.one()] != ring.one() {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            f[ring.add(x, y)] == ring.add(f[x], f[y]) && f[ring.mul(x, y)] == ring.mul(f[x], f[y])
        })
    })
}

/// Every automorphism, by trying every assignment of generator images among
/// same-fingerprint elements with no pruning at all.
pub fn brute_force_automorphisms(ring: &FiniteRing) -> BTreeSet<Vec<usize>> {
    let gens = ring.generating_set();
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            ring.elements()
                .filter(|&y| ring.element_fingerprint(y) == ring.element_fingerprint(g))
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut digits = vec![0usize; gens.len()];
    loop {
        let mut map = vec![None; ring.order()];
        map[ring.zero()] = Some(ring.zero());
        map[ring.one()] = Some(ring.one());
        for (k, &g) in gens.iter().enumerate() {
            map[g] = Some(choices[k][digits[k]]);
        }
        if let Some(f) = extend_by_closure(ring, map) {
            if is_automorphism(ring, &f) {
                out.insert(f);
            }
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return out;
            }
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// Orbit partition computed straight from a list of group elements.
pub fn orbits_from_elements(n: usize, elements: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    for x in 0..n {
        if out.iter().any(|b| b.contains(&x)) {
            continue;
        }
        out.push(elements.iter().map(|f| f[x]).collect());
    }
    out
}
