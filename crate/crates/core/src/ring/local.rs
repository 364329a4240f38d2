use std::sync::Arc;

use serde::Serialize;

use super::FiniteRing;
use crate::aut::RingMorphism;
use crate::error::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalStructure {
    pub is_local: bool,
    /// The non-units, when they form an ideal.
    pub maximal_ideal: Option<Vec<usize>>,
    /// `|R / M|`, when local.
    pub residue_field_order: Option<usize>,
}

impl FiniteRing {
    pub fn local_structure(&self) -> LocalStructure {
        match self.maximal_ideal() {
            Some(m) => LocalStructure {
                is_local: true,
                residue_field_order: Some(self.order() / m.len()),
                maximal_ideal: Some(m),
            },
            None => LocalStructure {
                is_local: false,
                maximal_ideal: None,
                residue_field_order: None,
            },
        }
    }

    /// The non-units if they are closed under addition (and so form the
    /// unique maximal ideal), `None` otherwise. The zero ring is not local.
    pub fn maximal_ideal(&self) -> Option<Vec<usize>> {
        if self.order() == 1 {
            return None;
        }
        let non_units: Vec<usize> = self.elements().filter(|&x| !self.is_unit(x)).collect();
        let closed = non_units
            .iter()
            .all(|&a| non_units.iter().all(|&b| !self.is_unit(self.add(a, b))));
        closed.then_some(non_units)
    }

    pub fn is_local(&self) -> bool {
        self.maximal_ideal().is_some()
    }

    /// Annihilator of the maximal ideal. For a field this is the whole ring,
    /// since M = 0.
    pub fn socle(&self) -> Result<Vec<usize>> {
        let m = self.maximal_ideal().ok_or(RingError::NotLocal)?;
        Ok(self
            .elements()
            .filter(|&a| m.iter().all(|&x| self.mul(a, x) == self.zero()))
            .collect())
    }

    /// Minimal nonzero idempotents, ascending.
    pub fn primitive_idempotents(&self) -> Vec<usize> {
        let idem = self.idempotents();
        idem.iter()
            .copied()
            .filter(|&e| e != self.zero())
            .filter(|&e| {
                idem.iter()
                    .all(|&f| f == self.zero() || f == e || self.mul(e, f) != f)
            })
            .collect()
    }

    /// The ideal `R e` as a ring with identity `e`, carrier in ascending
    /// index order of the parent.
    /// Also returns the parent-to-corner position map (`usize::MAX` outside).
    fn corner(&self, e: usize) -> Result<(FiniteRing, Vec<usize>)> {
        let mut members: Vec<usize> = self.elements().map(|x| self.mul(x, e)).collect();
        members.sort_unstable();
        members.dedup();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                add.push(pos[self.add(a, b)] as u16);
                mul.push(pos[self.mul(a, b)] as u16);
            }
        }
        let names = members.iter().map(|&m| self.name(m).to_string()).collect();
        let label = format!("{} * {}", self.label(), self.name(e));
        let ring =
            FiniteRing::from_tables(k, add, mul, pos[self.zero()], pos[e], names, None, label)?;
        Ok((ring, pos))
    }
}

/// Splits `ring` into local factors `R e_i` along its primitive idempotents.
/// Factors are sorted by order, then by table hash; the returned morphism
/// `x -> (x e_1, .., x e_k)` is an isomorphism onto their product.
pub fn decompose_local(ring: &Arc<FiniteRing>) -> (Vec<Arc<FiniteRing>>, RingMorphism) {
    let mut parts: Vec<(usize, FiniteRing, Vec<usize>)> = ring
        .primitive_idempotents()
        .into_iter()
        .map(|e| {
            let (f, pos) = ring.corner(e).expect("corner of an idempotent is a ring");
            (e, f, pos)
        })
        .collect();
    parts.sort_by_key(|(_, f, _)| (f.order(), f.table_hash()));

    let sizes: Vec<usize> = parts.iter().map(|(_, f, _)| f.order()).collect();
    let image = ring
        .elements()
        .map(|x| {
            parts
                .iter()
                .zip(&sizes)
                .fold(0usize, |acc, ((e, _, pos), &s)| {
                    acc * s + pos[ring.mul(x, *e)]
                })
        })
        .collect();

    let factors: Vec<Arc<FiniteRing>> = parts.into_iter().map(|(_, f, _)| Arc::new(f)).collect();
    let product = Arc::new(
        FiniteRing::product(&factors, None).expect("product of factors fits the source order"),
    );
    let map = RingMorphism::new(ring.clone(), product, image).expect("image is total");
    (factors, map)
}
