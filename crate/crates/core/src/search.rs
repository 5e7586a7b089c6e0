//! Backtrack search for property subgroups inside a stabilizer chain.
//!
//! [`subgroup_search`] finds generators for `{ g in G : P(g) }` where `P`
//! describes a subgroup (setwise stabilizers, ordered-partition stabilizers,
//! relation stabilizers). It walks the chain bottom-up: at stage `i` it
//! already holds `K = G_P ∩ G_i+1` (the property subgroup intersected with
//! the pointwise stabilizer of the first `i+1` base points) and looks, for
//! each candidate image `β` of base point `i`, for a single property element
//! fixing the earlier base points and sending `base[i]` to `β`. One element
//! per candidate suffices because two such solutions differ by an element of
//! the deeper intersection, and candidates in the same orbit of the current
//! `K`-stabilizer are skipped for the same reason.
//!
//! Pruning contracts: [`SearchTarget::admissible`] must never reject a
//! `(point, image)` pair that some property element realizes given the
//! partial images so far, and [`SearchTarget::accepts`] must be exact.
//! Candidates are scanned in ascending point order at every level, so the
//! generator list returned for a given chain is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{PermGroup, StabChain};
use crate::perm::{Perm, PointSet};

/// Partial base-image assignment maintained by the search.
pub struct Assignment {
    /// `(base point, image)` in assignment order.
    pub pairs: Vec<(usize, usize)>,
    /// Point-indexed image lookup; `usize::MAX` marks unassigned points.
    pub image_of: Vec<usize>,
}

impl Assignment {
    fn new(degree: usize) -> Assignment {
        Assignment {
            pairs: Vec::new(),
            image_of: vec![usize::MAX; degree],
        }
    }

    fn push(&mut self, point: usize, image: usize) {
        self.pairs.push((point, image));
        self.image_of[point] = image;
    }

    fn pop(&mut self) {
        let (point, _) = self.pairs.pop().unwrap();
        self.image_of[point] = usize::MAX;
    }
}

/// A subgroup-defining property.
pub trait SearchTarget {
    /// May some property element extend `assigned` by `point -> image`?
    /// Sound over-approximation; must accept identity assignments.
    fn admissible(&self, assigned: &Assignment, point: usize, image: usize) -> bool;

    /// Exact membership test for the property.
    fn accepts(&self, g: &Perm) -> bool;
}

/// Generators of the property subgroup of the chain's group.
pub fn subgroup_search<T: SearchTarget>(chain: &StabChain, target: &T) -> Vec<Perm> {
    search_impl(chain, target, false)
}

/// The first non-identity property element found, if any (the property
/// subgroup is trivial iff this returns `None`).
pub fn find_nontrivial<T: SearchTarget>(chain: &StabChain, target: &T) -> Option<Perm> {
    let mut found = search_impl(chain, target, true);
    found.pop()
}

fn search_impl<T: SearchTarget>(chain: &StabChain, target: &T, stop_at_first: bool) -> Vec<Perm> {
    let degree = chain.degree();
    let base = chain.base();
    let levels = chain.len();
    let sorted_orbits: Vec<Vec<usize>> = (0..levels)
        .map(|i| {
            let mut o = chain.fundamental_orbit(i).to_vec();
            o.sort_unstable();
            o
        })
        .collect();

    let mut found: Vec<Perm> = Vec::new();
    let mut k_chain = StabChain::build(degree, &[], &base);

    for stage in (0..levels).rev() {
        let mut assigned = Assignment::new(degree);
        let mut prefix_ok = true;
        for &b in &base[..stage] {
            if !target.admissible(&assigned, b, b) {
                prefix_ok = false;
                break;
            }
            assigned.push(b, b);
        }
        if !prefix_ok {
            // No property element fixes this base prefix pointwise, so no
            // deeper stage can contribute either; stages run bottom-up, so
            // shallower prefixes may still work.
            continue;
        }
        let mut processed: Vec<usize> = Vec::new();
        for &beta in &sorted_orbits[stage] {
            if beta == base[stage] {
                continue;
            }
            if covered(&k_chain, stage, beta, base[stage], &processed) {
                continue;
            }
            processed.push(beta);
            if !target.admissible(&assigned, base[stage], beta) {
                continue;
            }
            assigned.push(base[stage], beta);
            let t = chain.levels[stage].transversal[beta].as_ref().unwrap().clone();
            let hit = dfs(chain, target, &sorted_orbits, stage + 1, t, &mut assigned);
            assigned.pop();
            if let Some(g) = hit {
                if stop_at_first {
                    return vec![g];
                }
                k_chain.insert_gen(g.clone());
                found.push(g);
            }
        }
    }
    found
}

/// Is `beta` in the current `K`-stabilizer orbit of an already handled
/// candidate (or of the base point itself)?
fn covered(
    k_chain: &StabChain,
    stage: usize,
    beta: usize,
    base_point: usize,
    processed: &[usize],
) -> bool {
    let gens = k_chain.level_generators(stage);
    if gens.is_empty() {
        return false;
    }
    let mut seen = vec![false; k_chain.degree()];
    seen[beta] = true;
    let mut queue = vec![beta];
    while let Some(p) = queue.pop() {
        if p == base_point || (p != beta && processed.contains(&p)) {
            return true;
        }
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
    }
    false
}

fn dfs<T: SearchTarget>(
    chain: &StabChain,
    target: &T,
    sorted_orbits: &[Vec<usize>],
    level: usize,
    t: Perm,
    assigned: &mut Assignment,
) -> Option<Perm> {
    if level == chain.len() {
        return target.accepts(&t).then_some(t);
    }
    let base_point = chain.levels[level].point;
    for &gamma in &sorted_orbits[level] {
        let image = t.apply(gamma);
        if !target.admissible(assigned, base_point, image) {
            continue;
        }
        assigned.push(base_point, image);
        let t2 = chain.levels[level].transversal[gamma].as_ref().unwrap().compose(&t);
        let hit = dfs(chain, target, sorted_orbits, level + 1, t2, assigned);
        assigned.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Stabilizer of a set of points as a subgroup of `group`.
pub struct SetwiseTarget {
    s: PointSet,
}

impl SearchTarget for SetwiseTarget {
    fn admissible(&self, _assigned: &Assignment, point: usize, image: usize) -> bool {
        self.s.contains(point) == self.s.contains(image)
    }

    fn accepts(&self, g: &Perm) -> bool {
        g.apply_set(&self.s) == self.s
    }
}

/// `{ g in group : s·g = s }`. The chain is rebuilt with the points of `s`
/// leading the base, which keeps the branching inside `s` at the top.
pub fn setwise_stabilizer(group: &PermGroup, s: &PointSet) -> PermGroup {
    let hint: Vec<usize> = s.iter().collect();
    let chain = group.chain_with_base(&hint);
    let gens = subgroup_search(&chain, &SetwiseTarget { s: *s });
    PermGroup::new(group.degree(), gens).unwrap()
}

/// A non-identity element of `group` preserving `s`, if one exists.
pub fn nontrivial_set_preserver(group: &PermGroup, s: &PointSet) -> Option<Perm> {
    let hint: Vec<usize> = s.iter().collect();
    let chain = group.chain_with_base(&hint);
    find_nontrivial(&chain, &SetwiseTarget { s: *s })
}

/// Stabilizer of an ordered partition, given as a color per point.
pub struct PartitionTarget<'a> {
    colors: &'a [u32],
}

impl SearchTarget for PartitionTarget<'_> {
    fn admissible(&self, _assigned: &Assignment, point: usize, image: usize) -> bool {
        self.colors[point] == self.colors[image]
    }

    fn accepts(&self, g: &Perm) -> bool {
        (0..g.degree()).all(|p| self.colors[g.apply(p)] == self.colors[p])
    }
}

/// `{ g in group : every color class is preserved }` (classes are ordered,
/// so classes of equal size are not interchangeable).
pub fn ordered_partition_stabilizer(group: &PermGroup, colors: &[u32]) -> PermGroup {
    assert_eq!(colors.len(), group.degree());
    let chain = group.chain();
    let gens = subgroup_search(chain, &PartitionTarget { colors });
    PermGroup::new(group.degree(), gens).unwrap()
}

/// A non-identity element preserving every color class, if any.
pub fn nontrivial_partition_preserver(group: &PermGroup, colors: &[u32]) -> Option<Perm> {
    assert_eq!(colors.len(), group.degree());
    find_nontrivial(group.chain(), &PartitionTarget { colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PointSet;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(degree, gens).unwrap()
    }

    fn brute_setwise_order(g: &PermGroup, s: &PointSet) -> usize {
        g.elements(1 << 20)
            .unwrap()
            .iter()
            .filter(|e| e.apply_set(s) == *s)
            .count()
    }

    #[test]
    fn setwise_stabilizers_match_brute_force() {
        let cases: Vec<(PermGroup, Vec<usize>)> = vec![
            (group(4, &["(1,2)", "(1,2,3,4)"]), vec![1, 2]),
            (group(6, &["(1,2,3,4,5,6)"]), vec![1, 3, 5]),
            (group(5, &["(1,2,3)", "(3,4,5)"]), vec![2, 3]),
            (group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]), vec![1]),
            (group(7, &["(1,2,3,4,5,6,7)", "(1,2)"]), vec![2, 4, 6]),
            (group(6, &["(1,2,3)(4,5,6)", "(1,4)(2,5)(3,6)"]), vec![1, 2, 3]),
        ];
        for (g, pts) in cases {
            let s = PointSet::from_points_1based(g.degree(), &pts).unwrap();
            let stab = setwise_stabilizer(&g, &s);
            assert_eq!(stab.order() as usize, brute_setwise_order(&g, &s));
            for gen in stab.generators() {
                assert_eq!(gen.apply_set(&s), s);
                assert!(g.contains(gen));
            }
        }
    }

    #[test]
    fn setwise_stabilizer_of_rotation_group() {
        let c6 = group(6, &["(1,2,3,4,5,6)"]);
        let s = PointSet::from_points_1based(6, &[1, 3, 5]).unwrap();
        assert_eq!(setwise_stabilizer(&c6, &s).order(), 3);
        let t = PointSet::from_points_1based(6, &[1, 2]).unwrap();
        assert_eq!(setwise_stabilizer(&c6, &t).order(), 1);
        assert!(nontrivial_set_preserver(&c6, &t).is_none());
        let w = nontrivial_set_preserver(&c6, &s).unwrap();
        assert!(!w.is_identity());
        assert_eq!(w.apply_set(&s), s);
    }

    #[test]
    fn partition_stabilizers() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        // Two ordered classes of size 2 inside S4: Sym{1,2} x Sym{3,4}.
        let stab = ordered_partition_stabilizer(&s4, &[0, 0, 1, 1]);
        assert_eq!(stab.order(), 4);
        // Discrete partition: trivial stabilizer.
        assert!(nontrivial_partition_preserver(&s4, &[0, 1, 2, 3]).is_none());
        // One class: everything survives.
        assert_eq!(ordered_partition_stabilizer(&s4, &[0, 0, 0, 0]).order(), 24);
    }

    #[test]
    fn stabilizer_in_intransitive_group() {
        let g = group(6, &["(1,2,3)", "(4,5)"]);
        let s = PointSet::from_points_1based(6, &[1, 4]).unwrap();
        let stab = setwise_stabilizer(&g, &s);
        assert_eq!(stab.order() as usize, brute_setwise_order(&g, &s));
    }

    #[test]
    fn deterministic_generator_list() {
        let g = group(7, &["(1,2,3,4,5,6,7)", "(1,2)"]);
        let s = PointSet::from_points_1based(7, &[2, 4, 6]).unwrap();
        let a = setwise_stabilizer(&g, &s);
        let b = setwise_stabilizer(&g, &s);
        let fmt = |grp: &PermGroup| {
            grp.generators()
                .iter()
                .map(|p| alloc::format!("{p}"))
                .collect::<Vec<_>>()
        };
        assert_eq!(fmt(&a), fmt(&b));
    }
}
