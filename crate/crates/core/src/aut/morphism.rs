use std::fmt;
use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

/// A total map between the carriers of two rings.
#[derive(Clone)]
pub struct RingMorphism {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    image: Vec<usize>,
}

fn same_ring(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RingMorphism {
    pub fn new(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != source.order() {
            return Err(RingError::IndexOutOfRange {
                index: image.len(),
                order: source.order(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= target.order()) {
            return Err(RingError::IndexOutOfRange {
                index: bad,
                order: target.order(),
            });
        }
        Ok(RingMorphism {
            source,
            target,
            image,
        })
    }

    pub(crate) fn from_table(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        image: &[u16],
    ) -> Self {
        RingMorphism {
            source,
            target,
            image: image.iter().map(|&v| v as usize).collect(),
        }
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingMorphism {
            source: ring.clone(),
            target: ring.clone(),
            image: ring.elements().collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Full O(n^2) check that the map preserves `+`, `*` and `1`.
    pub fn is_homomorphism(&self) -> bool {
        let (s, t, f) = (&*self.source, &*self.target, &self.image);
        if f[s.one()] != t.one() {
            return false;
        }
        for x in s.elements() {
            for y in s.elements() {
                if f[s.add(x, y)] != t.add(f[x], f[y]) || f[s.mul(x, y)] != t.mul(f[x], f[y]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        self.image
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective() && self.is_homomorphism()
    }

    pub fn is_automorphism_of(&self, ring: &Arc<FiniteRing>) -> bool {
        same_ring(&self.source, ring) && same_ring(&self.target, ring) && self.is_isomorphism()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &RingMorphism) -> Result<RingMorphism> {
        if !same_ring(&inner.target, &self.source) {
            return Err(RingError::NotComposable);
        }
        Ok(RingMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            image: inner.image.iter().map(|&y| self.image[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Result<RingMorphism> {
        if !self.is_bijective() {
            return Err(RingError::NotBijective);
        }
        let mut inv = vec![0usize; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Ok(RingMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            image: inv,
        })
    }
}

impl PartialEq for RingMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
            && same_ring(&self.source, &other.source)
            && same_ring(&self.target, &other.target)
    }
}

impl Eq for RingMorphism {}

impl fmt::Debug for RingMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingMorphism")
            .field("source", &self.source.label())
            .field("target", &self.target.label())
            .field("image", &self.image)
            .finish()
    }
}

/// Free-function form of [`RingMorphism::compose`]: `f ∘ g`.
pub fn compose(f: &RingMorphism, g: &RingMorphism) -> Result<RingMorphism> {
    f.compose(g)
}

pub fn inverse(f: &RingMorphism) -> Result<RingMorphism> {
    f.inverse()
}

pub fn is_homomorphism(map: &RingMorphism) -> bool {
    map.is_homomorphism()
}
