//! Table-backed finite commutative rings with identity.

mod construct;
mod local;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Result, RingError};
use crate::expr::RingExpr;

pub use construct::{make_ring, make_ring_with};
pub use local::{decompose_local, LocalStructure};

/// A finite commutative ring with identity on the carrier `{0, .., n-1}`.
///
/// Values are immutable once built; share them behind an `Arc`.
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    presentation: Option<RingExpr>,
    label: String,
    names: Vec<String>,
    characteristic: usize,
    unit_mask: Vec<bool>,
    units: Vec<usize>,
    nilpotents: Vec<usize>,
    fingerprints: OnceLock<Vec<Fingerprint>>,
}

/// Automorphism-invariant statistics of one element, used to prune searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub additive_order: u32,
    /// Least `k >= 1` with `x^k = 0`, or 0 when `x` is not nilpotent.
    pub nilpotency_index: u32,
    pub is_unit: bool,
    /// Least `k >= 1` with `x^k = 1`, or 0 when `x` is not a unit.
    pub multiplicative_order: u32,
    pub annihilator_size: u32,
    /// `|{y : xy = x}|`.
    pub stabilizer_size: u32,
}

impl FiniteRing {
    /// Builds a ring from raw row-major tables and derives the cached
    /// structure. Only the identities and table ranges are checked here; the
    /// remaining axioms are the business of [`FiniteRing::check_axioms`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        names: Vec<String>,
        presentation: Option<RingExpr>,
        label: String,
    ) -> Result<Self> {
        let bad = |msg: &str| Err(RingError::InvalidExpr(format!("{label}: {msg}")));
        if order == 0 || order > u16::MAX as usize {
            return bad("order out of range");
        }
        if add.len() != order * order || mul.len() != order * order || names.len() != order {
            return bad("table dimensions do not match the order");
        }
        if zero >= order || one >= order {
            return bad("identity index out of range");
        }
        if add.iter().chain(mul.iter()).any(|&v| v as usize >= order) {
            return bad("table entry out of range");
        }
        for x in 0..order {
            if add[zero * order + x] as usize != x || mul[one * order + x] as usize != x {
                return bad("identity law fails");
            }
        }

        let mut neg = vec![0u16; order];
        for x in 0..order {
            match (0..order).find(|&y| add[x * order + y] as usize == zero) {
                Some(y) => neg[x] = y as u16,
                None => return bad("element without additive inverse"),
            }
        }

        let mut characteristic = 1;
        let mut acc = one;
        while acc != zero {
            acc = add[acc * order + one] as usize;
            characteristic += 1;
            if characteristic > order {
                return bad("additive order of one exceeds the order");
            }
        }
        if order == 1 {
            characteristic = 1;
        }

        let unit_mask: Vec<bool> = (0..order)
            .map(|x| (0..order).any(|y| mul[x * order + y] as usize == one))
            .collect();
        let units = (0..order).filter(|&x| unit_mask[x]).collect();

        let nilpotents = (0..order)
            .filter(|&x| {
                let mut p = x;
                for _ in 0..order {
                    if p == zero {
                        return true;
                    }
                    p = mul[p * order + x] as usize;
                }
                p == zero
            })
            .collect();

        Ok(FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            presentation,
            label,
            names,
            characteristic,
            unit_mask,
            units,
            nilpotents,
            fingerprints: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn presentation(&self) -> Option<&RingExpr> {
        self.presentation.as_ref()
    }

    /// Human-readable name; the expression text when the ring has one.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.unit_mask[x]
    }

    pub fn nilpotents(&self) -> &[usize] {
        &self.nilpotents
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `x^k` by square-and-multiply; `pow(x, 0) == one`.
    pub fn pow(&self, x: usize, mut k: u64) -> usize {
        let (mut base, mut acc) = (x, self.one);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Integer multiple `k * x`.
    pub fn scale(&self, x: usize, k: u64) -> usize {
        (0..k % self.characteristic as u64).fold(self.zero, |acc, _| self.add(acc, x))
    }

    pub fn check_index(&self, x: usize) -> Result<usize> {
        if x < self.order {
            Ok(x)
        } else {
            Err(RingError::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn try_add(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.add(self.check_index(x)?, self.check_index(y)?))
    }

    pub fn try_mul(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.mul(self.check_index(x)?, self.check_index(y)?))
    }

    pub fn try_neg(&self, x: usize) -> Result<usize> {
        Ok(self.neg(self.check_index(x)?))
    }

    pub fn try_pow(&self, x: usize, k: u64) -> Result<usize> {
        Ok(self.pow(self.check_index(x)?, k))
    }

    pub fn is_field(&self) -> bool {
        self.order > 1 && self.units.len() == self.order - 1
    }

    /// The subring generated by 1, as `[0, 1, 1+1, ...]`.
    pub fn prime_subring(&self) -> Vec<usize> {
        let mut out = vec![self.zero];
        let mut acc = self.one;
        while acc != self.zero {
            out.push(acc);
            acc = self.add(acc, self.one);
        }
        out
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.mul(x, x) == x).collect()
    }

    /// `{a : a x = 0}`.
    pub fn annihilator(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.mul(a, x) == self.zero)
            .collect()
    }

    pub fn element_fingerprint(&self, x: usize) -> Fingerprint {
        self.fingerprints()[x]
    }

    /// Fingerprints of every element, computed once.
    pub fn fingerprints(&self) -> &[Fingerprint] {
        self.fingerprints.get_or_init(|| {
            self.elements()
                .map(|x| self.compute_fingerprint(x))
                .collect()
        })
    }

    fn compute_fingerprint(&self, x: usize) -> Fingerprint {
        let n = self.order;
        let mut additive_order = 1u32;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            additive_order += 1;
        }
        let mut nilpotency_index = 0u32;
        let mut multiplicative_order = 0u32;
        let mut p = x;
        for k in 1..=n as u32 + 1 {
            if p == self.zero && nilpotency_index == 0 {
                nilpotency_index = k;
            }
            if p == self.one && multiplicative_order == 0 && self.is_unit(x) {
                multiplicative_order = k;
            }
            if nilpotency_index != 0 || multiplicative_order != 0 {
                break;
            }
            p = self.mul(p, x);
        }
        let row = &self.mul[x * n..(x + 1) * n];
        Fingerprint {
            additive_order,
            nilpotency_index,
            is_unit: self.is_unit(x),
            multiplicative_order,
            annihilator_size: row.iter().filter(|&&v| v as usize == self.zero).count() as u32,
            stabilizer_size: row.iter().filter(|&&v| v as usize == x).count() as u32,
        }
    }

    /// Greedy generating set over the prime subring: each generator is the
    /// lowest-index element outside the subring generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut closure = SubringClosure::new(self);
        let mut gens = Vec::new();
        while let Some(g) = closure.first_missing() {
            gens.push(g);
            closure.insert(g);
        }
        gens
    }

    /// Smallest subring containing `seeds`, as a membership mask.
    pub fn subring_generated_by(&self, seeds: &[usize]) -> Vec<bool> {
        let mut closure = SubringClosure::new(self);
        for &s in seeds {
            closure.insert(s);
        }
        closure.mask
    }

    /// Exhaustive O(n^3) check of the commutative ring axioms.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(format!("addition not commutative at ({x}, {y})"));
                }
                if self.mul(x, y) != self.mul(y, x) {
                    return Err(format!("multiplication not commutative at ({x}, {y})"));
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Err(format!("addition not associative at ({x}, {y}, {z})"));
                    }
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Err(format!("multiplication not associative at ({x}, {y}, {z})"));
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return Err(format!("distributivity fails at ({x}, {y}, {z})"));
                    }
                }
            }
            if self.add(x, self.neg(x)) != self.zero {
                return Err(format!("{x} has no additive inverse"));
            }
            if self.add(self.zero, x) != x || self.mul(self.one, x) != x {
                return Err(format!("identity law fails at {x}"));
            }
        }
        Ok(())
    }

    /// Hash of the order and both tables in carrier order. Deterministic
    /// across runs; used only for tie-breaking.
    pub fn table_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.order.hash(&mut h);
        self.zero.hash(&mut h);
        self.one.hash(&mut h);
        self.add.hash(&mut h);
        self.mul.hash(&mut h);
        h.finish()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("characteristic", &self.characteristic)
            .finish_non_exhaustive()
    }
}

/// Incremental closure of a subset under `+` and `*`, seeded with {0, 1}.
struct SubringClosure<'a> {
    ring: &'a FiniteRing,
    mask: Vec<bool>,
    members: Vec<usize>,
    scan: usize,
}

impl<'a> SubringClosure<'a> {
    fn new(ring: &'a FiniteRing) -> Self {
        let mut c = SubringClosure {
            ring,
            mask: vec![false; ring.order],
            members: Vec::new(),
            scan: 0,
        };
        c.insert(ring.zero);
        c.insert(ring.one);
        c
    }

    fn insert(&mut self, x: usize) {
        let mut queue = vec![x];
        while let Some(a) = queue.pop() {
            if self.mask[a] {
                continue;
            }
            self.mask[a] = true;
            self.members.push(a);
            for i in 0..self.members.len() {
                let b = self.members[i];
                for c in [self.ring.add(a, b), self.ring.mul(a, b)] {
                    if !self.mask[c] {
                        queue.push(c);
                    }
                }
            }
        }
    }

    fn first_missing(&mut self) -> Option<usize> {
        while self.scan < self.mask.len() && self.mask[self.scan] {
            self.scan += 1;
        }
        (self.scan < self.mask.len()).then_some(self.scan)
    }
}
