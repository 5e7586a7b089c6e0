//! Permutation groups backed by stabilizer chains.
//!
//! A [`PermGroup`] is an immutable generator list; its stabilizer chain is
//! built on first use and cached behind a race-safe cell, so concurrent
//! readers see either no chain or a complete one. Chains may also be built
//! with a prescribed base prefix, which the backtrack searches and pointwise
//! stabilizers rely on: every prescribed point gets a chain level (possibly
//! with a singleton orbit) before any automatically chosen point.
//!
//! All chain construction is deterministic: generators are processed in
//! list order, orbits grow in BFS discovery order, and automatic base
//! points are chosen by descending generator-support count (ties to the
//! lowest point).

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use once_cell::race::OnceBox;

use crate::perm::{Perm, PointSet};
use crate::{Error, Result};

/// One level of a stabilizer chain. `gens` is the full known generating set
/// of this level's stabilizer subgroup (deeper generators are repeated here,
/// so `levels[i].gens` always generates the stabilizer of `base[..i]`).
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) point: usize,
    pub(crate) gens: Vec<Perm>,
    pub(crate) orbit: Vec<usize>,
    pub(crate) transversal: Vec<Option<Perm>>,
    pub(crate) transversal_inv: Vec<Option<Perm>>,
    pending: VecDeque<(u32, u32)>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Level {
        let mut transversal = vec![None; degree];
        let mut transversal_inv = vec![None; degree];
        transversal[point] = Some(Perm::identity(degree));
        transversal_inv[point] = Some(Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
            transversal_inv,
            pending: VecDeque::new(),
        }
    }

    /// Closes the orbit under the current generator list, recording
    /// transversal entries and Schreier work items for new points.
    fn extend_orbit(&mut self) {
        let mut qi = 0;
        while qi < self.orbit.len() {
            let p = self.orbit[qi];
            for gi in 0..self.gens.len() {
                let q = self.gens[gi].apply(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().unwrap().compose(&self.gens[gi]);
                    self.transversal_inv[q] = Some(u.inverse());
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                    let oi = (self.orbit.len() - 1) as u32;
                    for g in 0..self.gens.len() as u32 {
                        self.pending.push_back((oi, g));
                    }
                }
            }
            qi += 1;
        }
    }

    fn push_gen(&mut self, g: Perm) {
        self.gens.push(g);
        let gi = (self.gens.len() - 1) as u32;
        for oi in 0..self.orbit.len() as u32 {
            self.pending.push_back((oi, gi));
        }
        self.extend_orbit();
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    support_count: Vec<u32>,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `base_hint` (every hint point
    /// gets a level, in order, even if its fundamental orbit is a singleton).
    pub fn build(degree: usize, gens: &[Perm], base_hint: &[usize]) -> StabChain {
        let mut support_count = vec![0u32; degree];
        for g in gens {
            for p in g.support() {
                support_count[p] += 1;
            }
        }
        let mut chain = StabChain {
            degree,
            support_count,
            levels: Vec::new(),
        };
        for &p in base_hint {
            debug_assert!(p < degree);
            if !chain.levels.iter().any(|l| l.point == p) {
                chain.levels.push(Level::new(degree, p));
            }
        }
        for g in gens {
            if !g.is_identity() {
                chain.add_strong_gen(g.clone());
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        for level in &self.levels {
            ord = ord.checked_mul(level.orbit.len() as u128).expect("order");
        }
        ord
    }

    /// Generators of the stabilizer of `base[..i]` (the whole group at 0).
    pub fn level_generators(&self, i: usize) -> &[Perm] {
        if i < self.levels.len() {
            &self.levels[i].gens
        } else {
            &[]
        }
    }

    pub(crate) fn fundamental_orbit(&self, i: usize) -> &[usize] {
        &self.levels[i].orbit
    }

    /// Sifts `g` through levels `from..`; returns the first level whose
    /// transversal cannot strip the image, with the residue at that point.
    pub fn sift_from(&self, from: usize, g: Perm) -> (usize, Perm) {
        let mut cur = g;
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let beta = cur.apply(level.point);
            match &level.transversal_inv[beta] {
                Some(u_inv) => cur = cur.compose(u_inv),
                None => return (j, cur),
            }
        }
        (self.levels.len(), cur)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (level, residue) = self.sift_from(0, g.clone());
        level == self.levels.len() && residue.is_identity()
    }

    fn choose_base_point(&self, g: &Perm) -> usize {
        let mut best: Option<usize> = None;
        for p in g.support() {
            match best {
                None => best = Some(p),
                Some(b) => {
                    if self.support_count[p] > self.support_count[b] {
                        best = Some(p);
                    }
                }
            }
        }
        best.expect("non-identity permutation")
    }

    /// Extends the chain with one more generator, keeping base and strong
    /// generating set valid. The existing base point order is preserved, so
    /// a chain built with a base hint keeps its prefix.
    pub(crate) fn insert_gen(&mut self, g: Perm) {
        if !g.is_identity() && !self.contains(&g) {
            self.add_strong_gen(g);
        }
    }

    fn add_strong_gen(&mut self, g: Perm) {
        // Deepest level whose base prefix g fixes pointwise.
        let mut depth = 0;
        while depth < self.levels.len() && g.apply(self.levels[depth].point) == self.levels[depth].point {
            depth += 1;
        }
        if depth == self.levels.len() {
            if self.contains(&g) {
                return;
            }
            let p = self.choose_base_point(&g);
            self.levels.push(Level::new(self.degree, p));
        }
        for j in 0..=depth.min(self.levels.len() - 1) {
            self.levels[j].push_gen(g.clone());
        }
        self.process_pending();
    }

    /// Establishes the Schreier condition: every Schreier generator of every
    /// level sifts to the identity through the deeper levels.
    fn process_pending(&mut self) {
        loop {
            let Some(i) = (0..self.levels.len()).rev().find(|&i| !self.levels[i].pending.is_empty())
            else {
                return;
            };
            let (oi, gi) = self.levels[i].pending.pop_front().unwrap();
            let level = &self.levels[i];
            let beta = level.orbit[oi as usize];
            let h = &level.gens[gi as usize];
            let u_beta = level.transversal[beta].as_ref().unwrap();
            let target = h.apply(beta);
            let u_target_inv = level.transversal_inv[target].as_ref().unwrap();
            let schreier = u_beta.compose(h).compose(u_target_inv);
            if schreier.is_identity() {
                continue;
            }
            let (land, residue) = self.sift_from(i + 1, schreier);
            if land == self.levels.len() && residue.is_identity() {
                continue;
            }
            self.add_strong_gen(residue);
        }
    }

    /// Enumerates all elements in deterministic transversal order.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for y in &out {
                for &beta in &level.orbit {
                    next.push(y.compose(level.transversal[beta].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }
}

/// A permutation group given by generators.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceBox<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> PermGroup {
        let chain = OnceBox::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Box::new(c.clone()));
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain,
        }
    }
}

impl core::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "PermGroup(degree={}, gens=[", self.degree)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: g.degree(),
                    right: degree,
                });
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            chain: OnceBox::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<PermGroup> {
        let parsed: Result<Vec<Perm>> = gens.iter().map(|s| Perm::parse(degree, s)).collect();
        PermGroup::new(degree, parsed?)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// The cached stabilizer chain (default base).
    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Box::new(StabChain::build(self.degree, &self.gens, &[])))
    }

    /// A fresh chain whose base starts with the given points.
    pub fn chain_with_base(&self, base_hint: &[usize]) -> StabChain {
        StabChain::build(self.degree, &self.gens, base_hint)
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        if self.gens.is_empty() {
            return g.is_identity();
        }
        self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Group equality: equal degree, equal order, one-sided containment.
    pub fn equals(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.is_subgroup_of(other)
    }

    /// Orbits of the natural action, sorted by minimum point.
    pub fn orbits(&self) -> Vec<PointSet> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let orbit = self.orbit_of_point(start);
            for p in orbit.iter() {
                seen[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of_point(&self, start: usize) -> PointSet {
        let mut orbit = PointSet::empty(self.degree);
        orbit.insert(start);
        let mut queue = vec![start];
        while let Some(p) = queue.pop() {
            for g in &self.gens {
                let q = g.apply(p);
                if !orbit.contains(q) {
                    orbit.insert(q);
                    queue.push(q);
                }
            }
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit_of_point(0).len() == self.degree
    }

    /// A nontrivial block system with the smallest block size, or `None` if
    /// the group is primitive. Blocks are sorted by minimum point.
    ///
    /// For each candidate second point the finest system fusing it with
    /// point 1 is computed by the usual union-find closure; the winner is
    /// the candidate giving the smallest block (ties to the lower point).
    pub fn minimal_block_system(&self) -> Result<Option<Vec<PointSet>>> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree < 2 {
            return Ok(None);
        }
        let mut best: Option<Vec<PointSet>> = None;
        for other in 1..self.degree {
            let blocks = self.block_system_fusing(0, other);
            let size = blocks[0].len();
            if size == self.degree {
                continue;
            }
            if best.as_ref().is_none_or(|b| size < b[0].len()) {
                best = Some(blocks);
            }
        }
        Ok(best)
    }

    /// The finest block system in which `a` and `b` share a block.
    fn block_system_fusing(&self, a: usize, b: usize) -> Vec<PointSet> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue: Vec<(usize, usize)> = vec![(a, b)];
        let union = |parent: &mut Vec<usize>, x: usize, y: usize| -> Option<(usize, usize)> {
            let (rx, ry) = (find(parent, x), find(parent, y));
            if rx == ry {
                None
            } else {
                parent[rx.max(ry)] = rx.min(ry);
                Some((rx, ry))
            }
        };
        union(&mut parent, a, b);
        while let Some((x, y)) = queue.pop() {
            for g in &self.gens {
                if let Some((rx, ry)) = union(&mut parent, g.apply(x), g.apply(y)) {
                    queue.push((rx, ry));
                }
            }
        }
        let mut blocks: Vec<PointSet> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; self.degree];
        for p in 0..self.degree {
            let r = find(&mut parent, p);
            match root_block[r] {
                Some(bi) => blocks[bi].insert(p),
                None => {
                    root_block[r] = Some(blocks.len());
                    let mut s = PointSet::empty(self.degree);
                    s.insert(p);
                    blocks.push(s);
                }
            }
        }
        blocks
    }

    /// The subgroup fixing every point of `s`, with generators straight off
    /// a chain whose base starts with the points of `s`.
    pub fn pointwise_stabilizer(&self, s: &PointSet) -> PermGroup {
        let points: Vec<usize> = s.iter().collect();
        let chain = self.chain_with_base(&points);
        let gens = chain.level_generators(points.len()).to_vec();
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// The subgroup preserving `s` as a set, by backtrack search.
    pub fn setwise_stabilizer(&self, s: &PointSet) -> PermGroup {
        assert_eq!(s.degree(), self.degree);
        crate::search::setwise_stabilizer(self, s)
    }

    /// All elements, in deterministic transversal order. Errors if the order
    /// exceeds `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Perm>> {
        if self.order() > cap {
            return Err(Error::BudgetExceeded {
                what: "element enumeration",
            });
        }
        Ok(self.chain().elements())
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermGroup {
        let mut gens: Vec<Perm> = seeds.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut group = PermGroup::new(self.degree, gens.clone()).unwrap();
        let mut queue: VecDeque<Perm> = gens.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &self.gens {
                let c = x.conjugate_by(g);
                if !group.contains(&c) {
                    gens.push(c.clone());
                    queue.push_back(c);
                    group = PermGroup::new(self.degree, gens.clone()).unwrap();
                }
            }
        }
        group
    }

    /// Subgroup generated by all commutators of generator pairs, closed
    /// under conjugation (the derived subgroup).
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = a.compose(b).compose(&a.inverse()).compose(&b.inverse());
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Best-effort simplicity test. Abelian groups are decided exactly (the
    /// order must be prime); otherwise every generator, every product of two
    /// generators, and every prime-order power of those must have full
    /// normal closure. A `false` answer is always correct; `true` is
    /// reliable for the catalog inputs this crate works with but is not a
    /// proof for arbitrary groups.
    pub fn is_simple_certified(&self) -> bool {
        if self.is_trivial() {
            return false;
        }
        if self.is_abelian() {
            let ord = self.order();
            return ord < u64::MAX as u128 && is_prime(ord as u64);
        }
        let full = self.order();
        let mut seeds: Vec<Perm> = self.gens.clone();
        for a in &self.gens {
            for b in &self.gens {
                seeds.push(a.compose(b));
            }
        }
        for g in &seeds {
            let mut candidates = vec![g.clone()];
            let ord = g.order();
            for p in prime_divisors(ord) {
                let mut pw = Perm::identity(self.degree);
                for _ in 0..(ord / p) {
                    pw = pw.compose(g);
                }
                candidates.push(pw);
            }
            for x in candidates {
                if x.is_identity() {
                    continue;
                }
                if self.normal_closure(&[x]).order() != full {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to an invariant set of points, renumbered by rank.
    pub fn restrict_to(&self, window: &PointSet) -> Result<PermGroup> {
        let gens: Result<Vec<Perm>> = self.gens.iter().map(|g| g.restrict(window)).collect();
        PermGroup::new(window.len(), gens?)
    }

    /// The relabeled group `{ pi^-1 g pi : g in G }`.
    pub fn conjugated_by(&self, pi: &Perm) -> PermGroup {
        let gens = self.gens.iter().map(|g| g.conjugate_by(pi)).collect();
        PermGroup::new(self.degree, gens).unwrap()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(degree, gens).unwrap()
    }

    /// Brute-force closure, the oracle for small orders.
    fn closure_order(g: &PermGroup) -> usize {
        let mut seen: hashbrown::HashSet<Perm> = hashbrown::HashSet::new();
        let mut queue = vec![Perm::identity(g.degree())];
        seen.insert(queue[0].clone());
        while let Some(x) = queue.pop() {
            for gen in g.generators() {
                let y = x.compose(gen);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_match_brute_force() {
        let cases: Vec<(PermGroup, u128)> = vec![
            (group(4, &["(1,2)", "(1,2,3,4)"]), 24),
            (group(5, &["(1,2,3)", "(3,4,5)"]), 60),
            (group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]), 10),
            (group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]), 4),
            (group(7, &["(1,2,3,4,5,6,7)", "(1,2)"]), 5040),
            (group(6, &["(1,2,3,4,5,6)"]), 6),
            (PermGroup::trivial(5), 1),
        ];
        for (g, expect) in cases {
            assert_eq!(g.order(), expect);
            assert_eq!(closure_order(&g) as u128, expect);
        }
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let g = group(5, &["(1,2,3)", "(3,4,5)"]);
        let elems = g.elements(100).unwrap();
        assert_eq!(elems.len(), 60);
        let mut distinct: hashbrown::HashSet<Perm> = hashbrown::HashSet::new();
        for e in &elems {
            assert!(g.contains(e));
            distinct.insert(e.clone());
        }
        assert_eq!(distinct.len(), 60);
        assert!(!g.contains(&Perm::parse(5, "(1,2)").unwrap()));
        assert!(g.contains(&Perm::identity(5)));
        assert!(g.elements(59).is_err());
    }

    #[test]
    fn prescribed_base_prefix_is_respected() {
        let g = group(6, &["(1,2,3,4,5,6)", "(1,2)"]);
        let chain = g.chain_with_base(&[3, 1]);
        let base = chain.base();
        assert_eq!(&base[..2], &[3, 1]);
        assert_eq!(chain.order(), 720);
    }

    #[test]
    fn pointwise_stabilizer_fixes_points() {
        let g = group(5, &["(1,2,3,4,5)", "(1,2)"]);
        let s = PointSet::from_points_1based(5, &[1, 2]).unwrap();
        let stab = g.pointwise_stabilizer(&s);
        assert_eq!(stab.order(), 6);
        for gen in stab.generators() {
            assert_eq!(gen.apply(0), 0);
            assert_eq!(gen.apply(1), 1);
        }
        // Stabilizing a point the group never moves costs nothing.
        let t = PointSet::from_points_1based(5, &[3]).unwrap();
        let fixed = group(5, &["(1,2)"]).pointwise_stabilizer(&t);
        assert_eq!(fixed.order(), 2);
    }

    #[test]
    fn orbits_and_transitivity() {
        let g = group(6, &["(1,2,3)", "(5,6)"]);
        let orbits = g.orbits();
        assert_eq!(orbits.len(), 3);
        assert_eq!(orbits[0], PointSet::from_points_1based(6, &[1, 2, 3]).unwrap());
        assert_eq!(orbits[1], PointSet::from_points_1based(6, &[4]).unwrap());
        assert_eq!(orbits[2], PointSet::from_points_1based(6, &[5, 6]).unwrap());
        assert!(!g.is_transitive());
        assert!(group(3, &["(1,2,3)"]).is_transitive());
    }

    #[test]
    fn block_systems() {
        // S4 acting on 4 points is imprimitive with blocks {1,3}/{2,4}? No:
        // S4 is primitive; the dihedral group of order 8 is not.
        let d4 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let blocks = d4.minimal_block_system().unwrap().unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], PointSet::from_points_1based(4, &[1, 3]).unwrap());
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert!(s4.minimal_block_system().unwrap().is_none());
        assert!(group(4, &["(1,2)"]).minimal_block_system().is_err());
    }

    #[test]
    fn normal_closure_and_simplicity() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = s4.normal_closure(&[Perm::parse(4, "(1,2)(3,4)").unwrap()]);
        assert_eq!(v4.order(), 4);
        let a4 = s4.derived_subgroup();
        assert_eq!(a4.order(), 12);
        assert!(!s4.is_simple_certified());
        assert!(!a4.is_simple_certified());

        let a5 = group(5, &["(1,2,3)", "(3,4,5)"]);
        assert!(a5.is_simple_certified());
        assert!(group(5, &["(1,2,3,4,5)"]).is_simple_certified());
        assert!(!group(4, &["(1,2,3,4)"]).is_simple_certified());
        assert!(!group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).is_simple_certified());
        assert!(!group(6, &["(1,2,3,4,5,6)"]).is_simple_certified());
    }

    #[test]
    fn restriction_to_orbit() {
        let g = group(6, &["(1,2,3)(4,5,6)", "(1,2)(4,5)"]);
        let w = PointSet::from_points_1based(6, &[4, 5, 6]).unwrap();
        let r = g.restrict_to(&w).unwrap();
        assert_eq!(r.degree(), 3);
        assert_eq!(r.order(), 6);
    }

    #[test]
    fn equals_is_label_sensitive() {
        let a = group(4, &["(1,2)"]);
        let b = group(4, &["(3,4)"]);
        assert_eq!(a.order(), b.order());
        assert!(!a.equals(&b));
        let c = group(4, &["(1,2)", "(1,2)"]);
        assert!(a.equals(&c));
    }
}
