use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use super::morphism::RingMorphism;
use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

pub(crate) type Perm = Box<[u16]>;

/// Groups larger than this are never materialised as a sorted list.
pub const LISTING_LIMIT: u128 = 1 << 18;

/// One level of a stabiliser chain: the orbit of a base point under the
/// pointwise stabiliser of the earlier base points, with coset
/// representatives.
#[derive(Clone)]
struct Level {
    point: usize,
    orbit: Vec<usize>,
    /// `slot[y]` is the position of `y` in `orbit`, or `u32::MAX`.
    slot: Vec<u32>,
    reps: Vec<Perm>,
    inv_reps: Vec<Perm>,
}

/// A group of automorphisms of one ring, stored as a stabiliser chain over a
/// ring generating set. Every element is a unique product
/// `t_0 ∘ t_1 ∘ .. ∘ t_{k-1}` of level representatives.
pub struct AutGroup {
    ring: Arc<FiniteRing>,
    generators: Vec<Perm>,
    levels: Vec<Level>,
    order: u128,
    listing: OnceLock<Vec<Perm>>,
}

fn identity_perm(n: usize) -> Perm {
    (0..n as u16).collect()
}

/// `outer ∘ inner`.
fn compose(outer: &[u16], inner: &[u16]) -> Perm {
    inner.iter().map(|&y| outer[y as usize]).collect()
}

fn invert(p: &[u16]) -> Perm {
    let mut inv = vec![0u16; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y as usize] = x as u16;
    }
    inv.into()
}

fn is_identity(p: &[u16]) -> bool {
    p.iter().enumerate().all(|(i, &y)| i == y as usize)
}

impl AutGroup {
    /// Builds the chain from a strong generating set relative to `base`:
    /// the generators fixing `base[..i]` must generate the stabiliser of
    /// `base[..i]`.
    pub(crate) fn from_strong_generators(
        ring: Arc<FiniteRing>,
        base: &[usize],
        generators: Vec<Perm>,
    ) -> Self {
        let levels = build_levels(ring.order(), base, &generators);
        let order = levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128));
        AutGroup {
            ring,
            generators,
            levels,
            order,
            listing: OnceLock::new(),
        }
    }

    /// Schreier–Sims closure of arbitrary automorphisms over `base`.
    pub(crate) fn closure(ring: Arc<FiniteRing>, base: &[usize], gens: &[Perm]) -> Self {
        let n = ring.order();
        let mut strong: Vec<Perm> = Vec::new();
        for g in gens {
            if is_identity(g) {
                continue;
            }
            let levels = build_levels(n, base, &strong);
            if sift(&levels, g).1.is_some() {
                strong.push(g.clone());
                complete(n, base, &mut strong);
            }
        }
        Self::from_strong_generators(ring, base, strong)
    }

    pub fn trivial(ring: &Arc<FiniteRing>) -> Self {
        let base = ring.generating_set();
        Self::from_strong_generators(ring.clone(), &base, Vec::new())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    /// `|G|`, the product of the level orbit lengths.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// The base points (a generating set of the ring).
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Lengths of the fundamental orbits, one per base point.
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn generators(&self) -> Vec<RingMorphism> {
        self.generators.iter().map(|p| self.morphism(p)).collect()
    }

    fn morphism(&self, p: &[u16]) -> RingMorphism {
        RingMorphism::from_table(self.ring.clone(), self.ring.clone(), p)
    }

    /// Calls `f` on every element, in chain order.
    pub fn for_each_perm<F: FnMut(&[u16])>(&self, mut f: F) {
        let n = self.ring.order();
        let k = self.levels.len();
        if k == 0 {
            f(&identity_perm(n));
            return;
        }
        // prefix[i] = t_0 ∘ .. ∘ t_{i-1}
        let mut prefix: Vec<Perm> = vec![identity_perm(n); k + 1];
        let mut digits = vec![0usize; k];
        let mut level = 0;
        loop {
            while level < k {
                prefix[level + 1] =
                    compose(&prefix[level], &self.levels[level].reps[digits[level]]);
                level += 1;
            }
            f(&prefix[k]);
            // advance the mixed-radix counter
            loop {
                if level == 0 {
                    return;
                }
                level -= 1;
                digits[level] += 1;
                if digits[level] < self.levels[level].orbit.len() {
                    break;
                }
                digits[level] = 0;
            }
        }
    }

    /// Every element as a morphism, sorted lexicographically by image tuple
    /// (the identity first). Fails for groups above [`LISTING_LIMIT`].
    pub fn elements(&self) -> Result<Vec<RingMorphism>> {
        Ok(self
            .sorted_perms()?
            .iter()
            .map(|p| self.morphism(p))
            .collect())
    }

    pub(crate) fn sorted_perms(&self) -> Result<&[Perm]> {
        if self.order > LISTING_LIMIT {
            return Err(RingError::GroupTooLarge {
                order: self.order.min(u64::MAX as u128) as u64,
                limit: LISTING_LIMIT as u64,
            });
        }
        Ok(self.listing.get_or_init(|| {
            let mut all = Vec::with_capacity(self.order as usize);
            self.for_each_perm(|p| all.push(Box::from(p)));
            all.sort_unstable();
            all
        }))
    }

    /// Position of `map` in [`AutGroup::elements`].
    pub fn index_of(&self, map: &RingMorphism) -> Result<Option<usize>> {
        let key: Vec<u16> = map.image().iter().map(|&y| y as u16).collect();
        Ok(self
            .sorted_perms()?
            .binary_search_by(|p| p.as_ref().cmp(key.as_slice()))
            .ok())
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn compose_index(&self, i: usize, j: usize) -> Result<usize> {
        let all = self.sorted_perms()?;
        let c = compose(&all[i], &all[j]);
        Ok(all
            .binary_search(&c)
            .expect("group is closed under composition"))
    }

    pub fn inverse_index(&self, i: usize) -> Result<usize> {
        let all = self.sorted_perms()?;
        let inv = invert(&all[i]);
        Ok(all
            .binary_search(&inv)
            .expect("group is closed under inverses"))
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, map: &RingMorphism) -> bool {
        if map.image().len() != self.ring.order() {
            return false;
        }
        let p: Perm = map.image().iter().map(|&y| y as u16).collect();
        sift(&self.levels, &p).1.is_none()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| compose(a, b) == compose(b, a)))
    }

    /// Least `k >= 1` with `σ^k = id`.
    pub fn element_order(&self, sigma: &RingMorphism) -> u64 {
        let p: Perm = sigma.image().iter().map(|&y| y as u16).collect();
        perm_order(&p)
    }

    /// Largest element order, by walking the whole group.
    pub fn max_element_order(&self) -> u64 {
        let mut best = 1;
        self.for_each_perm(|p| best = best.max(perm_order(p)));
        best
    }

    /// `{σ(x) : σ ∈ G}`, ascending.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.ring.order()];
        seen[x] = true;
        let mut out = vec![x];
        let mut i = 0;
        while i < out.len() {
            let y = out[i];
            for g in &self.generators {
                let z = g[y] as usize;
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Orbit partition of the carrier, each block ascending, blocks ordered
    /// by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.ring.order();
        let mut done = vec![false; n];
        let mut blocks = Vec::new();
        for x in 0..n {
            if done[x] {
                continue;
            }
            let block = self.orbit(x);
            for &y in &block {
                done[y] = true;
            }
            blocks.push(block);
        }
        blocks
    }
}

pub(crate) fn perm_order(p: &[u16]) -> u64 {
    // lcm of cycle lengths
    let mut seen = vec![false; p.len()];
    let mut order = 1u64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn build_levels(n: usize, base: &[usize], strong: &[Perm]) -> Vec<Level> {
    base.iter()
        .enumerate()
        .map(|(i, &point)| {
            let gens: Vec<&Perm> = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g[b] as usize == b))
                .collect();
            let mut slot = vec![u32::MAX; n];
            let mut orbit = vec![point];
            let mut reps = vec![identity_perm(n)];
            slot[point] = 0;
            let mut j = 0;
            while j < orbit.len() {
                let y = orbit[j];
                for g in &gens {
                    let z = g[y] as usize;
                    if slot[z] == u32::MAX {
                        slot[z] = orbit.len() as u32;
                        orbit.push(z);
                        reps.push(compose(g, &reps[j]));
                    }
                }
                j += 1;
            }
            let inv_reps = reps.iter().map(|r| invert(r)).collect();
            Level {
                point,
                orbit,
                slot,
                reps,
                inv_reps,
            }
        })
        .collect()
}

/// Strips `g` through the chain. Returns the level where it left the chain
/// (or `levels.len()`) and the non-identity residue, if any.
fn sift(levels: &[Level], g: &[u16]) -> (usize, Option<Perm>) {
    let mut h: Perm = g.into();
    for (i, level) in levels.iter().enumerate() {
        let y = h[level.point] as usize;
        let s = level.slot[y];
        if s == u32::MAX {
            return (i, Some(h));
        }
        h = compose(&level.inv_reps[s as usize], &h);
    }
    if is_identity(&h) {
        (levels.len(), None)
    } else {
        (levels.len(), Some(h))
    }
}

/// Adds sifted Schreier generators to `strong` until it is a strong
/// generating set relative to `base`.
fn complete(n: usize, base: &[usize], strong: &mut Vec<Perm>) {
    'outer: loop {
        let levels = build_levels(n, base, strong);
        let mut tried: HashSet<Perm> = HashSet::new();
        for (i, level) in levels.iter().enumerate() {
            let gens: Vec<Perm> = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g[b] as usize == b))
                .cloned()
                .collect();
            for (j, &p) in level.orbit.iter().enumerate() {
                for s in &gens {
                    let sp = s[p] as usize;
                    let back = &level.inv_reps[level.slot[sp] as usize];
                    let schreier = compose(back, &compose(s, &level.reps[j]));
                    if is_identity(&schreier) || !tried.insert(schreier.clone()) {
                        continue;
                    }
                    if let (_, Some(residue)) = sift(&levels[i + 1..], &schreier) {
                        strong.push(residue);
                        continue 'outer;
                    }
                }
            }
        }
        return;
    }
}
