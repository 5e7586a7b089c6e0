//! Unordered relations (set families / hypergraphs) and their symmetry
//! groups.
//!
//! A relation `R` on `{1..n}` is a family of point sets; its symmetry group
//! `𝒢(R)` is every permutation mapping member sets to member sets. Two
//! engines compute it:
//!
//! * [`symmetry_group_in`] intersects `𝒢(R)` with a supplied overgroup by
//!   backtrack over the overgroup's stabilizer chain. Exact for the
//!   intersection; cheap whenever a good overgroup is known.
//! * [`symmetry_group_full`] computes `𝒢(R)` inside the full symmetric
//!   group: a stable point coloring (iterated membership-signature
//!   refinement) bounds `𝒢(R)` by a Young subgroup, and the relative engine
//!   finishes inside it. Capped by degree because the overgroup can be huge.
//!
//! Backtrack pruning uses three relation invariants: point colors, pairwise
//! co-membership counts per cardinality class, and exact membership of every
//! member set that becomes fully assigned during the search.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::group::{PermGroup, StabChain};
use crate::perm::{Perm, PointSet};
use crate::search::{subgroup_search, Assignment, SearchTarget};
use crate::{Error, Result};

/// Default degree cap for [`symmetry_group_full`].
pub const FULL_SYMMETRY_DEGREE_CAP: usize = 24;

/// A deduplicated family of subsets of `{1..n}`, ordered by cardinality and
/// then lexicographically, so equal relations have equal representations.
#[derive(Clone, PartialEq, Eq)]
pub struct UnorderedRelation {
    degree: usize,
    sets: Vec<PointSet>,
}

impl UnorderedRelation {
    pub fn new(degree: usize, mut sets: Vec<PointSet>) -> Result<UnorderedRelation> {
        if degree > PointSet::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: PointSet::MAX_DEGREE,
            });
        }
        for s in &sets {
            if s.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: s.degree(),
                    right: degree,
                });
            }
        }
        sets.sort_unstable_by(PointSet::cmp_card_lex);
        sets.dedup();
        Ok(UnorderedRelation { degree, sets })
    }

    pub fn empty(degree: usize) -> UnorderedRelation {
        UnorderedRelation {
            degree,
            sets: Vec::new(),
        }
    }

    /// Member sets given as 1-based point lists.
    pub fn from_point_lists(degree: usize, lists: &[&[usize]]) -> Result<UnorderedRelation> {
        let sets = lists
            .iter()
            .map(|pts| PointSet::from_points_1based(degree, pts))
            .collect::<Result<Vec<_>>>()?;
        UnorderedRelation::new(degree, sets)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &PointSet) -> bool {
        self.sets
            .binary_search_by(|probe| probe.cmp_card_lex(s))
            .is_ok()
    }

    /// The distinct member-set cardinalities, ascending.
    pub fn arity(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.sets.iter().map(|s| s.len()).collect();
        ks.dedup();
        ks
    }

    /// The sub-family of member sets of cardinality `k`.
    pub fn cardinality_class(&self, k: usize) -> UnorderedRelation {
        UnorderedRelation {
            degree: self.degree,
            sets: self.sets.iter().copied().filter(|s| s.len() == k).collect(),
        }
    }

    /// The image relation `R·g`.
    pub fn apply(&self, g: &Perm) -> UnorderedRelation {
        let sets = self.sets.iter().map(|s| g.apply_set(s)).collect();
        UnorderedRelation::new(self.degree, sets).unwrap()
    }

    pub fn is_invariant_under(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sets.iter().all(|s| self.contains(&g.apply_set(s)))
    }

    /// Is the relation a union of orbits of `group` (preserved by every
    /// generator)?
    pub fn is_union_of_orbits(&self, group: &PermGroup) -> bool {
        group.degree() == self.degree
            && group.generators().iter().all(|g| self.is_invariant_under(g))
    }

    pub fn union(relations: &[&UnorderedRelation]) -> Result<UnorderedRelation> {
        let degree = match relations.first() {
            None => return Err(Error::Precondition("union of no relations")),
            Some(r) => r.degree,
        };
        let mut sets = Vec::new();
        for r in relations {
            if r.degree != degree {
                return Err(Error::DegreeMismatch {
                    left: r.degree,
                    right: degree,
                });
            }
            sets.extend_from_slice(&r.sets);
        }
        UnorderedRelation::new(degree, sets)
    }

    /// `{ Ω∖x : x ∈ R }`; has the same symmetry group.
    pub fn complemented(&self) -> UnorderedRelation {
        UnorderedRelation::new(self.degree, self.sets.iter().map(|s| s.complement()).collect())
            .unwrap()
    }
}

impl core::fmt::Debug for UnorderedRelation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "UnorderedRelation(degree {}, {} sets)", self.degree, self.sets.len())
    }
}

/// The orbit `s^G` as a relation.
pub fn orbit_of_set(group: &PermGroup, s: &PointSet) -> Result<UnorderedRelation> {
    if s.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: s.degree(),
            right: group.degree(),
        });
    }
    let mut seen: HashSet<PointSet> = HashSet::new();
    seen.insert(*s);
    let mut queue = vec![*s];
    while let Some(t) = queue.pop() {
        for g in group.generators() {
            let u = g.apply_set(&t);
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }
    UnorderedRelation::new(group.degree(), seen.into_iter().collect())
}

/// Backtrack pruning data for a fixed relation and a fixed search base.
pub struct RelationTarget<'r> {
    r: &'r UnorderedRelation,
    /// Distinct cardinalities, index = class id.
    class_sizes: Vec<usize>,
    /// Per class, flattened degree x degree co-membership counts:
    /// entry [a*n+b] = number of class sets containing both a and b
    /// (diagonal = membership degree).
    pair_counts: Vec<Vec<u32>>,
    /// Per class, hash of member sets for O(1) image checks.
    members: Vec<HashSet<PointSet>>,
    /// `complete_at[t]` = member sets all of whose points sit in the first
    /// `t+1` base positions (checked exactly once the image is forced).
    complete_at: Vec<Vec<PointSet>>,
}

impl<'r> RelationTarget<'r> {
    pub fn new(r: &'r UnorderedRelation, base: &[usize]) -> RelationTarget<'r> {
        let n = r.degree();
        let class_sizes = r.arity();
        let class_of = |k: usize| class_sizes.iter().position(|&c| c == k).unwrap();
        let mut pair_counts = vec![vec![0u32; n * n]; class_sizes.len()];
        let mut members = vec![HashSet::new(); class_sizes.len()];
        for s in r.sets() {
            let c = class_of(s.len());
            members[c].insert(*s);
            let pts: Vec<usize> = s.iter().collect();
            for &a in &pts {
                for &b in &pts {
                    pair_counts[c][a * n + b] += 1;
                }
            }
        }
        let mut base_pos = vec![usize::MAX; n];
        for (t, &b) in base.iter().enumerate() {
            base_pos[b] = t;
        }
        let mut complete_at = vec![Vec::new(); base.len()];
        for s in r.sets() {
            let mut last = 0usize;
            let mut inside = true;
            for p in s.iter() {
                if base_pos[p] == usize::MAX {
                    inside = false;
                    break;
                }
                last = last.max(base_pos[p]);
            }
            if inside && !s.is_empty() {
                complete_at[last].push(*s);
            }
        }
        RelationTarget {
            r,
            class_sizes,
            pair_counts,
            members,
            complete_at,
        }
    }
}

impl SearchTarget for RelationTarget<'_> {
    fn admissible(&self, assigned: &Assignment, point: usize, image: usize) -> bool {
        let n = self.r.degree();
        for pc in &self.pair_counts {
            if pc[point * n + point] != pc[image * n + image] {
                return false;
            }
            for &(p, q) in &assigned.pairs {
                if pc[point * n + p] != pc[image * n + q] {
                    return false;
                }
            }
        }
        // Member sets completed by this assignment must land inside their
        // own cardinality class.
        let t = assigned.pairs.len();
        for s in &self.complete_at[t] {
            let mut img = PointSet::empty(n);
            for p in s.iter() {
                let q = if p == point { image } else { assigned.image_of[p] };
                img.insert(q);
            }
            let c = self.class_sizes.iter().position(|&k| k == s.len()).unwrap();
            if !self.members[c].contains(&img) {
                return false;
            }
        }
        true
    }

    fn accepts(&self, g: &Perm) -> bool {
        self.r.is_invariant_under(g)
    }
}

/// `{ g ∈ overgroup : R·g = R }`, exact.
pub fn symmetry_group_in(overgroup: &PermGroup, r: &UnorderedRelation) -> Result<PermGroup> {
    if overgroup.degree() != r.degree() {
        return Err(Error::DegreeMismatch {
            left: overgroup.degree(),
            right: r.degree(),
        });
    }
    let chain = overgroup.chain();
    let target = RelationTarget::new(r, &chain.base());
    let gens = subgroup_search(chain, &target);
    PermGroup::new(r.degree(), gens)
}

/// Stable point coloring of the relation: start from per-cardinality
/// membership degrees, then refine each point by the multiset of
/// (cardinality, color multiset) signatures of the member sets through it,
/// until the class count stops growing. Every symmetry of the relation
/// preserves the resulting classes. Colors are numbered by sorted signature,
/// so relabeling a relation permutes classes consistently.
pub fn refinement_colors(r: &UnorderedRelation) -> Vec<u32> {
    let n = r.degree();
    let arity = r.arity();
    let mut colors: Vec<u32> = {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|p| {
                arity
                    .iter()
                    .map(|&k| {
                        r.sets().iter().filter(|s| s.len() == k && s.contains(p)).count() as u32
                    })
                    .collect()
            })
            .collect();
        canonical_indices(&sigs)
    };
    let mut class_count = distinct_count(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<(usize, Vec<u32>)>)> =
            (0..n).map(|p| (colors[p], Vec::new())).collect();
        for s in r.sets() {
            let mut key: Vec<u32> = s.iter().map(|p| colors[p]).collect();
            key.sort_unstable();
            for p in s.iter() {
                sigs[p].1.push((s.len(), key.clone()));
            }
        }
        for sig in &mut sigs {
            sig.1.sort_unstable();
        }
        colors = canonical_indices(&sigs);
        let next = distinct_count(&colors);
        if next == class_count {
            return colors;
        }
        class_count = next;
    }
}

fn canonical_indices<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).unwrap() as u32)
        .collect()
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// The direct product of symmetric groups on the classes of `colors`.
pub fn young_subgroup(degree: usize, colors: &[u32]) -> PermGroup {
    assert_eq!(colors.len(), degree);
    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (p, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(p);
    }
    let mut gens = Vec::new();
    for pts in classes.values() {
        gens.extend(symmetric_on(degree, pts));
    }
    PermGroup::new(degree, gens).unwrap()
}

/// Generators of Sym(pts) inside Sym(degree): a transposition and a cycle.
pub fn symmetric_on(degree: usize, pts: &[usize]) -> Vec<Perm> {
    let mut gens = Vec::new();
    if pts.len() >= 2 {
        let mut img: Vec<usize> = (0..degree).collect();
        img[pts[0]] = pts[1];
        img[pts[1]] = pts[0];
        gens.push(Perm::from_images(img.iter().map(|&x| x as u8).collect()).unwrap());
    }
    if pts.len() >= 3 {
        let mut img: Vec<usize> = (0..degree).collect();
        for w in 0..pts.len() {
            img[pts[w]] = pts[(w + 1) % pts.len()];
        }
        gens.push(Perm::from_images(img.iter().map(|&x| x as u8).collect()).unwrap());
    }
    gens
}

/// `𝒢(R)` inside the full symmetric group, with the default degree cap.
pub fn symmetry_group_full(r: &UnorderedRelation) -> Result<PermGroup> {
    symmetry_group_full_capped(r, FULL_SYMMETRY_DEGREE_CAP)
}

pub fn symmetry_group_full_capped(r: &UnorderedRelation, cap: usize) -> Result<PermGroup> {
    if r.degree() > cap {
        return Err(Error::DegreeTooLarge {
            degree: r.degree(),
            max: cap,
        });
    }
    let colors = refinement_colors(r);
    let young = young_subgroup(r.degree(), &colors);
    // Base ordered by ascending class size: rare colors first, so the search
    // commits its most constrained choices early.
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut hint: Vec<usize> = (0..r.degree()).collect();
    hint.sort_by_key(|&p| (class_size[&colors[p]], colors[p], p));
    let chain = young.chain_with_base(&hint);
    let target = RelationTarget::new(r, &chain.base());
    let gens = subgroup_search(&chain, &target);
    PermGroup::new(r.degree(), gens)
}

/// An exactly-known overgroup of `𝒢(R)` derived from a cardinality class of
/// `R` that happens to be a disjoint family: every symmetry of `R` preserves
/// each cardinality class, and the symmetry group of a disjoint family is a
/// product of block-wreath factors times the symmetric group on untouched
/// points, constructible without search. Returns the smallest such
/// overgroup, or `None` when no class is disjoint.
pub fn forced_overgroup(r: &UnorderedRelation) -> Option<PermGroup> {
    let mut best: Option<PermGroup> = None;
    for k in r.arity() {
        if k == 0 {
            continue;
        }
        let class = r.cardinality_class(k);
        let mut seen = PointSet::empty(r.degree());
        let mut disjoint = true;
        for s in class.sets() {
            if !seen.intersection(s).is_empty() {
                disjoint = false;
                break;
            }
            seen = seen.union(s);
        }
        if !disjoint {
            continue;
        }
        let g = disjoint_family_group(r.degree(), class.sets());
        if best.as_ref().is_none_or(|b| g.order() < b.order()) {
            best = Some(g);
        }
    }
    best
}

/// The full symmetry group of a family of pairwise disjoint blocks:
/// permutations mapping blocks to blocks (necessarily of equal size) and
/// acting arbitrarily on points outside every block.
pub fn disjoint_family_group(degree: usize, blocks: &[PointSet]) -> PermGroup {
    let mut gens: Vec<Perm> = Vec::new();
    let mut covered = PointSet::empty(degree);
    let mut by_size: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for b in blocks {
        covered = covered.union(b);
        let pts: Vec<usize> = b.iter().collect();
        gens.extend(symmetric_on(degree, &pts));
        by_size.entry(pts.len()).or_default().push(pts);
    }
    for group_of_blocks in by_size.values_mut() {
        group_of_blocks.sort();
        for w in group_of_blocks.windows(2) {
            // Swap two equal-size blocks position by position.
            let mut img: Vec<usize> = (0..degree).collect();
            for (a, b) in w[0].iter().zip(w[1].iter()) {
                img[*a] = *b;
                img[*b] = *a;
            }
            gens.push(Perm::from_images(img.iter().map(|&x| x as u8).collect()).unwrap());
        }
    }
    let outside: Vec<usize> = covered.complement().iter().collect();
    gens.extend(symmetric_on(degree, &outside));
    PermGroup::new(degree, gens).unwrap()
}

/// Does `R` define `group` exactly, i.e. `𝒢(R) = group`? Errors if `R` is
/// not even invariant under `group` (a construction bug, not a refutation)
/// or if the degree exceeds the absolute-engine cap.
pub fn is_defining_relation(group: &PermGroup, r: &UnorderedRelation) -> Result<bool> {
    if !r.is_union_of_orbits(group) {
        return Err(Error::Precondition("relation is not a union of orbits of the group"));
    }
    let full = symmetry_group_full(r)?;
    Ok(full.equals(group))
}

/// Relative variant: does the stabilizer of `R` inside `overgroup` equal
/// `group`? A true answer certifies `𝒢(R) = group` only together with an
/// argument that `𝒢(R) ≤ overgroup` (e.g. from [`forced_overgroup`]).
pub fn is_defining_relation_in(
    overgroup: &PermGroup,
    group: &PermGroup,
    r: &UnorderedRelation,
) -> Result<bool> {
    if !r.is_union_of_orbits(group) {
        return Err(Error::Precondition("relation is not a union of orbits of the group"));
    }
    if !group.is_subgroup_of(overgroup) {
        return Err(Error::NotSubgroup);
    }
    let stab = symmetry_group_in(overgroup, r)?;
    Ok(stab.equals(group))
}

/// Is the action on `k`-subsets a single orbit?
pub fn k_homogeneous(group: &PermGroup, k: usize) -> bool {
    let n = group.degree();
    if k > n {
        return false;
    }
    if k == 0 || k == n {
        return true;
    }
    let first = PointSet::from_points_1based(n, &(1..=k).collect::<Vec<_>>()).unwrap();
    let orbit = orbit_of_set(group, &first).unwrap();
    orbit.len() as u128 == binomial(n, k)
}

/// k-homogeneous for every k.
pub fn set_transitive(group: &PermGroup) -> bool {
    (0..=group.degree()).all(|k| k_homogeneous(group, k))
}

/// Stabilizer of `r` as a whole family inside `overgroup`, via breadth-first
/// enumeration of the family orbit with Schreier generators. Returns the
/// stabilizer and the orbit length, so `|overgroup| = orbit * |stabilizer|`.
/// Errors with `BudgetExceeded` once more than `orbit_cap` distinct families
/// appear. Unlike [`symmetry_group_in`] this never backtracks, so it stays
/// cheap whenever the stabilizer has small index.
pub fn relation_orbit_stabilizer_in(
    overgroup: &PermGroup,
    r: &UnorderedRelation,
    orbit_cap: usize,
) -> Result<(PermGroup, usize)> {
    if r.degree() != overgroup.degree() {
        return Err(Error::DegreeMismatch {
            left: r.degree(),
            right: overgroup.degree(),
        });
    }
    let degree = overgroup.degree();
    if degree <= 64 {
        return mask_family_stabilizer(overgroup, r, orbit_cap);
    }
    let start: Vec<PointSet> = r.sets().to_vec();
    let mut index: HashMap<Vec<PointSet>, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut families: Vec<Vec<PointSet>> = vec![start];
    let mut transversal: Vec<Perm> = vec![Perm::identity(degree)];
    let mut chain = StabChain::build(degree, &[], &[]);
    let mut kept: Vec<Perm> = Vec::new();
    let mut head = 0;
    while head < families.len() {
        let fam = families[head].clone();
        for g in overgroup.generators() {
            let mut img: Vec<PointSet> = fam.iter().map(|s| g.apply_set(s)).collect();
            img.sort_unstable_by(PointSet::cmp_card_lex);
            let u = transversal[head].compose(g);
            match index.get(&img) {
                Some(&j) => {
                    let schreier = u.compose(&transversal[j].inverse());
                    if !schreier.is_identity() && !chain.contains(&schreier) {
                        kept.push(schreier.clone());
                        chain.insert_gen(schreier);
                    }
                }
                None => {
                    if families.len() >= orbit_cap {
                        return Err(Error::BudgetExceeded {
                            what: "relation family orbit",
                        });
                    }
                    index.insert(img.clone(), families.len());
                    families.push(img);
                    transversal.push(u);
                }
            }
        }
        head += 1;
    }
    let stab = PermGroup::new(degree, kept)?;
    Ok((stab, families.len()))
}

/// Mask-based core of [`relation_orbit_stabilizer_in`] for degrees up to
/// 64: families are sorted vectors of bitmasks, applied through
/// per-generator point tables. Large single-class orbits dominate the
/// class-refinement certifications, and set images are the hot loop.
fn mask_family_stabilizer(
    overgroup: &PermGroup,
    r: &UnorderedRelation,
    orbit_cap: usize,
) -> Result<(PermGroup, usize)> {
    let degree = overgroup.degree();
    let gens = overgroup.generators();
    let maps: Vec<Vec<u8>> = gens
        .iter()
        .map(|g| (0..degree).map(|p| g.apply(p) as u8).collect())
        .collect();
    let apply_mask = |mask: u64, map: &[u8]| -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            out |= 1u64 << map[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        out
    };
    let mut start: Vec<u64> = r.sets().iter().map(PointSet::low_mask).collect();
    start.sort_unstable();
    let start = Rc::new(start);
    let mut index: HashMap<Rc<Vec<u64>>, usize> = HashMap::new();
    index.insert(Rc::clone(&start), 0);
    let mut families: Vec<Rc<Vec<u64>>> = vec![start];
    let mut transversal: Vec<Perm> = vec![Perm::identity(degree)];
    let mut chain = StabChain::build(degree, &[], &[]);
    let mut kept: Vec<Perm> = Vec::new();
    let mut head = 0;
    while head < families.len() {
        let fam = Rc::clone(&families[head]);
        for (gi, g) in gens.iter().enumerate() {
            let map = &maps[gi];
            let mut img: Vec<u64> = fam.iter().map(|&m| apply_mask(m, map)).collect();
            img.sort_unstable();
            let u = transversal[head].compose(g);
            match index.get(&img) {
                Some(&j) => {
                    let schreier = u.compose(&transversal[j].inverse());
                    if !schreier.is_identity() && !chain.contains(&schreier) {
                        kept.push(schreier.clone());
                        chain.insert_gen(schreier);
                    }
                }
                None => {
                    if families.len() >= orbit_cap {
                        return Err(Error::BudgetExceeded {
                            what: "relation family orbit",
                        });
                    }
                    let img = Rc::new(img);
                    index.insert(Rc::clone(&img), families.len());
                    families.push(img);
                    transversal.push(u);
                }
            }
        }
        head += 1;
    }
    let stab = PermGroup::new(degree, kept)?;
    Ok((stab, families.len()))
}

/// Smallest single set-orbit that defines `group` absolutely: scans
/// cardinalities upward and, within one cardinality, representatives in
/// ascending bitmask order; the first orbit whose full symmetry group equals
/// `group` wins. Returns `None` when no single orbit works. Exhaustive over
/// subsets, so the degree is capped as in [`symmetry_group_full`].
pub fn minimal_defining_orbit(group: &PermGroup) -> Result<Option<UnorderedRelation>> {
    let degree = group.degree();
    if degree > FULL_SYMMETRY_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree,
            max: FULL_SYMMETRY_DEGREE_CAP,
        });
    }
    for k in 1..degree {
        let mut seen: HashSet<PointSet> = HashSet::new();
        // Gosper's hack walks the k-bit masks in ascending order.
        let mut mask: u64 = (1u64 << k) - 1;
        while mask < 1u64 << degree {
            let pts: Vec<usize> = (0..degree).filter(|p| mask >> p & 1 == 1).collect();
            let s = PointSet::from_points(degree, &pts)?;
            if !seen.contains(&s) {
                let orbit = orbit_of_set(group, &s)?;
                seen.extend(orbit.sets().iter().copied());
                if symmetry_group_full(&orbit)?.equals(group) {
                    return Ok(Some(orbit));
                }
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(None)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
