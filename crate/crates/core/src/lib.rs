//! Finite commutative rings, their automorphism groups, and the orbit graphs
//! those groups induce on the ring.
//!
//! Rings are dense operation tables over `{0, .., n-1}` built from a
//! [`RingExpr`]. [`aut::automorphisms`] enumerates `Aut R` by backtracking
//! over images of a ring generating set, [`graph::OrbitGraph`] derives the
//! clique partition and its invariants, and [`classify`] checks structural
//! classifications over a catalog of small rings.

#![forbid(unsafe_code)]

pub mod arith;
pub mod aut;
pub mod classify;
pub mod error;
pub mod expr;
pub mod graph;
mod poly;
pub mod ring;

use std::sync::Arc;

pub use arith::euler_phi;
pub use aut::{automorphisms, isomorphism, subgroup_closure, AutGroup, RingMorphism};
pub use error::{Result, RingError};
pub use expr::RingExpr;
pub use graph::OrbitGraph;
pub use ring::{
    decompose_local, make_ring, make_ring_with, Fingerprint, FiniteRing, LocalStructure,
};

pub const DEFAULT_MAX_ORDER: usize = 4096;
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Resource limits shared by construction and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order that will be tabulated.
    pub max_order: usize,
    /// Backtrack nodes allowed per automorphism or isomorphism computation.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// `Γ_{Aut R}(R)` together with the group it was built from.
pub fn full_orbit_graph(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<OrbitGraph> {
    let group = aut::automorphisms_with(ring, limits)?;
    Ok(OrbitGraph::build(Arc::new(group)))
}
