//! The automorphism orbit graph: vertices are ring elements, and distinct
//! `x`, `y` are adjacent iff some automorphism in the chosen group maps `x`
//! to `y`. The graph is a disjoint union of cliques (the orbits), so it is
//! stored as a partition only.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::aut::AutGroup;
use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

pub struct OrbitGraph {
    ring: Arc<FiniteRing>,
    group: Arc<AutGroup>,
    blocks: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

impl OrbitGraph {
    /// Γ_H(R) for the group `H` (which carries its ring).
    pub fn build(group: Arc<AutGroup>) -> Self {
        let ring = group.ring().clone();
        let blocks = group.orbits();
        let mut orbit_of = vec![0usize; ring.order()];
        for (id, block) in blocks.iter().enumerate() {
            for &x in block {
                orbit_of[x] = id;
            }
        }
        OrbitGraph {
            ring,
            group,
            blocks,
            orbit_of,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn group(&self) -> &Arc<AutGroup> {
        &self.group
    }

    /// The cliques, i.e. the orbits, ordered by smallest member.
    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn orbit(&self, x: usize) -> &[usize] {
        &self.blocks[self.orbit_of[x]]
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        x != y && self.orbit_of[x] == self.orbit_of[y]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.orbit(x).len() - 1
    }

    /// Maximum degree: largest orbit size minus one.
    pub fn graph_type(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub fn edge_count(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.len() * (b.len() - 1) / 2)
            .sum()
    }

    /// Orbit sizes, ascending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn is_totally_disconnected(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Whether the induced subgraph on `subset` is connected. Empty and
    /// one-element subsets count as connected; otherwise the subset must lie
    /// inside one clique.
    pub fn subset_connected(&self, subset: &[usize]) -> bool {
        match subset.split_first() {
            None => true,
            Some((&first, rest)) => rest
                .iter()
                .all(|&x| self.orbit_of[x] == self.orbit_of[first]),
        }
    }

    /// A disjoint union of complete graphs is planar iff no clique has more
    /// than four vertices.
    pub fn is_planar(&self) -> bool {
        self.blocks.iter().all(|b| b.len() <= 4)
    }

    /// `|Aut Γ|` = Π over cliques of `|b|!` times Π over clique sizes `s` of
    /// `(number of cliques of size s)!`.
    pub fn graph_aut_order_big(&self) -> BigUint {
        let mut by_size: BTreeMap<usize, u64> = BTreeMap::new();
        for b in &self.blocks {
            *by_size.entry(b.len()).or_default() += 1;
        }
        let mut acc = BigUint::from(1u32);
        for (&size, &count) in &by_size {
            let fact = factorial(size as u64);
            for _ in 0..count {
                acc *= &fact;
            }
            acc *= factorial(count);
        }
        acc
    }

    /// [`OrbitGraph::graph_aut_order_big`], or `Overflow` above 2^63.
    pub fn graph_aut_order(&self) -> Result<u64> {
        let big = self.graph_aut_order_big();
        u64::try_from(&big)
            .ok()
            .filter(|&v| v <= 1 << 63)
            .ok_or(RingError::Overflow)
    }

    /// Checks that every element of the group, viewed as a vertex
    /// permutation, preserves adjacency; that distinct elements give
    /// distinct permutations; and that `|H|` divides `|Aut Γ|`.
    pub fn embeds_in_graph_aut(&self) -> bool {
        let mut preserves = true;
        let mut distinct = HashSet::new();
        let mut count = 0u128;
        let nb = self.blocks.len();
        self.group.for_each_perm(|p| {
            count += 1;
            if !preserves {
                return;
            }
            let mut block_image = vec![usize::MAX; nb];
            let mut hit = vec![false; nb];
            for (x, &y) in p.iter().enumerate() {
                let (b, t) = (self.orbit_of[x], self.orbit_of[y as usize]);
                if block_image[b] == usize::MAX {
                    if hit[t] {
                        preserves = false;
                        return;
                    }
                    hit[t] = true;
                    block_image[b] = t;
                } else if block_image[b] != t {
                    preserves = false;
                    return;
                }
            }
            if count <= 1 << 20 {
                distinct.insert(Box::<[u16]>::from(p));
            }
        });
        let injective = distinct.len() as u128 == count.min(1 << 20);
        let divides =
            (self.graph_aut_order_big() % BigUint::from(self.group.order())) == BigUint::ZERO;
        preserves && injective && divides
    }
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Convenience: `Γ_{Aut R}(R)` check of the embedding `Aut R -> Aut Γ`.
pub fn aut_embeds_in_graph_aut(graph: &OrbitGraph) -> bool {
    graph.embeds_in_graph_aut()
}
