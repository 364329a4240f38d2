//! Backtracking over generator images with closure propagation.
//!
//! A partial map fixes 0 and 1 and is extended one generator at a time. Every
//! newly mapped element is combined (by `+` and `*`) with every element mapped
//! before it; the results are forced, so any conflict prunes the branch. Once
//! the map is total, every pair of elements has been checked, so complete maps
//! are homomorphisms by construction. Candidate images are restricted to
//! elements with an equal fingerprint.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

const UNSET: u16 = u16::MAX;

pub(crate) struct Matcher<'a> {
    src: &'a FiniteRing,
    dst: &'a FiniteRing,
    src_class: Vec<u32>,
    dst_class: Vec<u32>,
    candidates: Vec<Vec<u16>>,
    gens: Vec<usize>,
    img: Vec<u16>,
    pre: Vec<u16>,
    mapped: Vec<usize>,
    queue: Vec<(usize, usize)>,
    base_mark: Option<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(src: &'a FiniteRing, dst: &'a FiniteRing, budget: u64) -> Self {
        let mut ids = BTreeMap::new();
        for fp in src.fingerprints().iter().chain(dst.fingerprints()) {
            let next = ids.len() as u32;
            ids.entry(*fp).or_insert(next);
        }
        let src_class: Vec<u32> = src.fingerprints().iter().map(|fp| ids[fp]).collect();
        let dst_class: Vec<u32> = dst.fingerprints().iter().map(|fp| ids[fp]).collect();
        let mut candidates = vec![Vec::new(); ids.len()];
        for (y, &c) in dst_class.iter().enumerate() {
            candidates[c as usize].push(y as u16);
        }
        let mut m = Matcher {
            src,
            dst,
            src_class,
            dst_class,
            candidates,
            gens: src.generating_set(),
            img: vec![UNSET; src.order()],
            pre: vec![UNSET; dst.order()],
            mapped: Vec::with_capacity(src.order()),
            queue: Vec::new(),
            base_mark: None,
            nodes: 0,
            budget,
        };
        if src.order() == dst.order()
            && m.assign(src.zero(), dst.zero())
            && m.assign(src.one(), dst.one())
        {
            m.base_mark = Some(m.mapped.len());
        }
        m
    }

    pub(crate) fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Candidate images of `x`: target elements sharing its fingerprint.
    pub(crate) fn candidates_for(&self, x: usize) -> &[u16] {
        &self.candidates[self.src_class[x] as usize]
    }

    /// Maps `a -> b` and propagates everything it forces. On `false` the
    /// state is inconsistent and must be rolled back with `undo`.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        self.queue.clear();
        self.queue.push((a, b));
        while let Some((a, b)) = self.queue.pop() {
            let cur = self.img[a];
            if cur != UNSET {
                if cur as usize != b {
                    return false;
                }
                continue;
            }
            if self.pre[b] != UNSET || self.src_class[a] != self.dst_class[b] {
                return false;
            }
            self.img[a] = b as u16;
            self.pre[b] = a as u16;
            self.mapped.push(a);
            for i in 0..self.mapped.len() {
                let c = self.mapped[i];
                let ic = self.img[c] as usize;
                let pairs = [
                    (self.src.add(a, c), self.dst.add(b, ic)),
                    (self.src.mul(a, c), self.dst.mul(b, ic)),
                ];
                for (s, t) in pairs {
                    match self.img[s] {
                        UNSET => self.queue.push((s, t)),
                        v if v as usize != t => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for &a in &self.mapped[mark..] {
            self.pre[self.img[a] as usize] = UNSET;
            self.img[a] = UNSET;
        }
        self.mapped.truncate(mark);
    }

    /// Runs the search with the prescribed `fixed` images, calling `visit` on
    /// each complete map until it breaks.
    pub(crate) fn search<F>(&mut self, fixed: &[(usize, usize)], visit: &mut F) -> Result<()>
    where
        F: FnMut(&[u16]) -> ControlFlow<()>,
    {
        let Some(base) = self.base_mark else {
            return Ok(());
        };
        self.undo(base);
        let consistent = fixed.iter().all(|&(a, b)| self.assign(a, b));
        if consistent {
            let _ = self.dfs(visit)?;
        }
        self.undo(base);
        Ok(())
    }

    pub(crate) fn first(&mut self, fixed: &[(usize, usize)]) -> Result<Option<Vec<u16>>> {
        let mut found = None;
        self.search(fixed, &mut |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    fn dfs<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[u16]) -> ControlFlow<()>,
    {
        if self.mapped.len() == self.src.order() {
            return Ok(visit(&self.img));
        }
        let Some(g) = self.gens.iter().copied().find(|&g| self.img[g] == UNSET) else {
            return Ok(ControlFlow::Continue(()));
        };
        let class = self.src_class[g] as usize;
        for k in 0..self.candidates[class].len() {
            let c = self.candidates[class][k] as usize;
            if self.pre[c] != UNSET {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(RingError::SearchBudgetExceeded {
                    budget: self.budget,
                });
            }
            let mark = self.mapped.len();
            let flow = if self.assign(g, c) {
                self.dfs(visit)?
            } else {
                ControlFlow::Continue(())
            };
            self.undo(mark);
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}
