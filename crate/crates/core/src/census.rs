//! Orbit censuses over the subset lattice, regular sets, and distinguishing
//! numbers.
//!
//! The full census sweeps all `2^n` subsets with a visited bitmap (degree
//! capped at [`FULL_SWEEP_DEGREE_CAP`]), walking each orbit once with
//! generator image tables. A set is regular exactly when its orbit length
//! equals the group order, so the sweep doubles as the regular-set search.
//! Witnesses are canonical: the regular set whose bitmask is numerically
//! smallest (point 1 = lowest bit) among all regular sets of its size.
//!
//! The distinguishing number is `2` iff a regular set exists; larger values
//! are found by a coloring backtrack that tracks the set of non-identity
//! group elements still compatible with the partial coloring.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::PermGroup;
use crate::perm::{Perm, PointSet};
use crate::{Error, Result};

/// Largest degree for which the `2^n` sweep is attempted.
pub const FULL_SWEEP_DEGREE_CAP: usize = 26;

/// Default cap on group order for the distinguishing-number backtrack.
pub const DISTINGUISHING_ORDER_CAP: u128 = 1 << 20;

/// Census data for one subset cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub k: usize,
    /// Number of orbits of `k`-sets.
    pub orbit_count: u64,
    /// Total `k`-sets covered; always `C(n,k)`.
    pub set_count: u64,
    /// Longest orbit; divides the group order.
    pub max_orbit_length: u128,
    /// Canonical regular `k`-set, present iff `max_orbit_length = |G|`.
    pub regular_witness: Option<PointSet>,
}

/// Census data for every cardinality `0..=n`.
#[derive(Clone, Debug)]
pub struct OrbitCensus {
    pub degree: usize,
    pub group_order: u128,
    pub records: Vec<CensusRecord>,
}

impl OrbitCensus {
    pub fn record(&self, k: usize) -> &CensusRecord {
        &self.records[k]
    }

    /// All `k` admitting a regular `k`-set.
    pub fn regular_sizes(&self) -> Vec<usize> {
        self.records
            .iter()
            .filter(|r| r.regular_witness.is_some())
            .map(|r| r.k)
            .collect()
    }

    pub fn has_regular_set(&self) -> bool {
        self.records.iter().any(|r| r.regular_witness.is_some())
    }
}

fn image_tables(group: &PermGroup) -> Vec<Vec<u32>> {
    group
        .generators()
        .iter()
        .map(|g| (0..group.degree()).map(|p| g.apply(p) as u32).collect())
        .collect()
}

fn apply_mask(table: &[u32], mask: u32) -> u32 {
    let mut m = mask;
    let mut img = 0u32;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        img |= 1 << table[p];
        m &= m - 1;
    }
    img
}

fn mask_to_set(degree: usize, mask: u32) -> PointSet {
    let mut s = PointSet::empty(degree);
    let mut m = mask;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        s.insert(p);
        m &= m - 1;
    }
    s
}

/// Full orbit census of the subset lattice.
pub fn orbit_census(group: &PermGroup) -> Result<OrbitCensus> {
    let n = group.degree();
    if n > FULL_SWEEP_DEGREE_CAP {
        return Err(Error::BudgetExceeded {
            what: "full subset sweep (degree cap)",
        });
    }
    let order = group.order();
    let tables = image_tables(group);
    let total: u64 = 1u64 << n;
    let mut visited = vec![0u64; ((total + 63) / 64) as usize];
    let mut records: Vec<CensusRecord> = (0..=n)
        .map(|k| CensusRecord {
            k,
            orbit_count: 0,
            set_count: 0,
            max_orbit_length: 0,
            regular_witness: None,
        })
        .collect();
    let mut stack: Vec<u32> = Vec::new();
    for start in 0..total {
        if visited[(start >> 6) as usize] >> (start & 63) & 1 == 1 {
            continue;
        }
        let start = start as u32;
        visited[(start >> 6) as usize] |= 1 << (start & 63);
        stack.push(start);
        let mut len: u128 = 0;
        while let Some(m) = stack.pop() {
            len += 1;
            for t in &tables {
                let im = apply_mask(t, m) as u64;
                if visited[(im >> 6) as usize] >> (im & 63) & 1 == 0 {
                    visited[(im >> 6) as usize] |= 1 << (im & 63);
                    stack.push(im as u32);
                }
            }
        }
        let k = start.count_ones() as usize;
        let rec = &mut records[k];
        rec.orbit_count += 1;
        rec.set_count += len as u64;
        rec.max_orbit_length = rec.max_orbit_length.max(len);
        if len == order && rec.regular_witness.is_none() {
            rec.regular_witness = Some(mask_to_set(n, start));
        }
    }
    Ok(OrbitCensus {
        degree: n,
        group_order: order,
        records,
    })
}

/// Census of a single cardinality. Same sweep, restricted bookkeeping, so
/// large degrees stay out of reach; use the sampler beyond the cap.
pub fn orbit_census_at(group: &PermGroup, k: usize) -> Result<CensusRecord> {
    if k > group.degree() {
        return Err(Error::Precondition("cardinality above degree"));
    }
    let census = orbit_census(group)?;
    Ok(census.records[k].clone())
}

/// All sizes with a regular set.
pub fn regular_set_sizes(group: &PermGroup) -> Result<Vec<usize>> {
    Ok(orbit_census(group)?.regular_sizes())
}

/// Is the setwise stabilizer of `s` in `group` trivial?
pub fn is_regular_set(group: &PermGroup, s: &PointSet) -> Result<bool> {
    if s.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: s.degree(),
            right: group.degree(),
        });
    }
    Ok(crate::search::nontrivial_set_preserver(group, s).is_none())
}

/// Random-subset probe for a regular `k`-set: cheap positive witnesses at
/// any degree, but a `None` certifies nothing.
pub fn sample_regular_set(
    group: &PermGroup,
    k: usize,
    attempts: u32,
    seed: u64,
) -> Option<PointSet> {
    let n = group.degree();
    if k > n {
        return None;
    }
    let mut state = seed;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..attempts {
        // Floyd sampling of a k-subset.
        let mut s = PointSet::empty(n);
        for j in (n - k)..n {
            let t = (next() % (j as u64 + 1)) as usize;
            if s.contains(t) {
                s.insert(j);
            } else {
                s.insert(t);
            }
        }
        if is_regular_set(group, &s).unwrap() {
            return Some(s);
        }
    }
    None
}

/// An ordered partition of the domain witnessing a distinguishing coloring.
#[derive(Clone, Debug)]
pub struct DistinguishingPartition {
    pub parts: Vec<PointSet>,
}

impl DistinguishingPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Color of each point (index into `parts`).
    pub fn colors(&self) -> Vec<u32> {
        let degree = self.parts[0].degree();
        let mut colors = vec![0u32; degree];
        for (c, part) in self.parts.iter().enumerate() {
            for p in part.iter() {
                colors[p] = c as u32;
            }
        }
        colors
    }
}

/// Least `d` such that some `d`-coloring of the points is preserved by no
/// non-identity element, together with a witness partition.
///
/// `d = 2` is answered by the regular-set census when the degree allows it;
/// beyond that (and for `d >= 3`) the element-filter backtrack runs against
/// the full element list, so the group order must stay under `order_cap`.
pub fn distinguishing_number(group: &PermGroup) -> Result<(usize, DistinguishingPartition)> {
    distinguishing_number_capped(group, DISTINGUISHING_ORDER_CAP)
}

pub fn distinguishing_number_capped(
    group: &PermGroup,
    order_cap: u128,
) -> Result<(usize, DistinguishingPartition)> {
    let n = group.degree();
    if group.is_trivial() {
        return Ok((
            1,
            DistinguishingPartition {
                parts: vec![PointSet::full(n)],
            },
        ));
    }
    if n <= FULL_SWEEP_DEGREE_CAP {
        let census = orbit_census(group)?;
        if let Some(rec) = census.records.iter().find(|r| r.regular_witness.is_some()) {
            let s = rec.regular_witness.unwrap();
            return Ok((
                2,
                DistinguishingPartition {
                    parts: vec![s, s.complement()],
                },
            ));
        }
    } else if let Some(s) = (1..n).find_map(|k| sample_regular_set(group, k, 64, 7)) {
        return Ok((
            2,
            DistinguishingPartition {
                parts: vec![s, s.complement()],
            },
        ));
    }
    let elements = group.elements(order_cap)?;
    let nontrivial: Vec<&Perm> = elements.iter().filter(|g| !g.is_identity()).collect();
    let inverses: Vec<Perm> = nontrivial.iter().map(|g| g.inverse()).collect();
    for d in 3..=n {
        let mut colors = vec![u32::MAX; n];
        let alive: Vec<usize> = (0..nontrivial.len()).collect();
        if color_search(&nontrivial, &inverses, &mut colors, 0, 0, &alive, d as u32) {
            // Unassigned tail points (search can succeed early) default to 0.
            for c in colors.iter_mut() {
                if *c == u32::MAX {
                    *c = 0;
                }
            }
            let used = colors.iter().max().unwrap() + 1;
            let mut parts = vec![PointSet::empty(n); used as usize];
            for (p, &c) in colors.iter().enumerate() {
                parts[c as usize].insert(p);
            }
            return Ok((d, DistinguishingPartition { parts }));
        }
    }
    unreachable!("the discrete partition always distinguishes a faithful action");
}

/// Assign colors to points in index order; `alive` holds elements consistent
/// with the coloring so far. First use of color `j` precedes first use of
/// `j+1`, cutting color-relabeling symmetry.
fn color_search(
    elems: &[&Perm],
    inverses: &[Perm],
    colors: &mut Vec<u32>,
    point: usize,
    used: u32,
    alive: &[usize],
    d: u32,
) -> bool {
    if alive.is_empty() {
        return true;
    }
    if point == colors.len() {
        return false;
    }
    for color in 0..(used + 1).min(d) {
        colors[point] = color;
        let next_alive: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&gi| {
                let fwd = elems[gi].apply(point);
                if fwd <= point && colors[fwd] != color {
                    return false;
                }
                let back = inverses[gi].apply(point);
                if back < point && colors[back] != color {
                    return false;
                }
                true
            })
            .collect();
        if color_search(
            elems,
            inverses,
            colors,
            point + 1,
            used.max(color + 1),
            &next_alive,
            d,
        ) {
            return true;
        }
    }
    colors[point] = u32::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::binomial;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(degree, gens).unwrap()
    }

    /// Burnside's lemma: orbit count on k-sets = average number of k-sets
    /// fixed by an element; an element fixes exactly the unions of its
    /// cycles, counted by subset-sum over cycle lengths.
    fn burnside_orbit_count(g: &PermGroup, k: usize) -> u64 {
        let n = g.degree();
        let elements = g.elements(1 << 16).unwrap();
        let mut total: u128 = 0;
        for e in &elements {
            let mut dp = vec![0u128; n + 1];
            dp[0] = 1;
            for cycle in e.cycles() {
                let len = cycle.len();
                for j in (len..=n).rev() {
                    dp[j] += dp[j - len];
                }
            }
            // Fixed points of e are 1-cycles not listed by cycles(); add them.
            let moved: usize = e.cycles().iter().map(|c| c.len()).sum();
            let fixed = n - moved;
            for _ in 0..fixed {
                for j in (1..=n).rev() {
                    dp[j] += dp[j - 1];
                }
            }
            total += dp[k];
        }
        (total / elements.len() as u128) as u64
    }

    #[test]
    fn census_matches_burnside_oracle() {
        let cases = [
            group(5, &["(1,2,3,4,5)"]),
            group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]),
            group(4, &["(1,2)", "(1,2,3,4)"]),
            group(6, &["(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"]),
            group(7, &["(1,2,3,4,5,6,7)", "(2,3)(4,7)"]),
        ];
        for g in &cases {
            let census = orbit_census(g).unwrap();
            for k in 0..=g.degree() {
                let rec = &census.records[k];
                assert_eq!(rec.orbit_count, burnside_orbit_count(g, k), "k={k}");
                assert_eq!(rec.set_count as u128, binomial(g.degree(), k));
                if rec.max_orbit_length > 0 {
                    assert_eq!(census.group_order % rec.max_orbit_length, 0);
                }
            }
        }
    }

    #[test]
    fn cyclic_group_regular_sets() {
        let c5 = group(5, &["(1,2,3,4,5)"]);
        let census = orbit_census(&c5).unwrap();
        assert_eq!(census.regular_sizes(), vec![1, 2, 3, 4]);
        let rec = census.record(1);
        assert_eq!(rec.orbit_count, 1);
        assert_eq!(rec.max_orbit_length, 5);
        let w = rec.regular_witness.unwrap();
        assert_eq!(w.len(), 1);
        assert!(w.contains(0));
        assert!(is_regular_set(&c5, &w).unwrap());
    }

    #[test]
    fn symmetric_group_has_no_regular_sets() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        assert!(regular_set_sizes(&s3).unwrap().is_empty());
        for pts in [&[1][..], &[1, 2][..]] {
            let s = PointSet::from_points_1based(3, pts).unwrap();
            assert!(!is_regular_set(&s3, &s).unwrap());
        }
    }

    #[test]
    fn complement_symmetry_of_regular_sizes() {
        let cases = [
            group(5, &["(1,2,3,4,5)"]),
            group(6, &["(1,2,3,4,5,6)"]),
            group(6, &["(1,2,3)(4,5,6)", "(1,4)(2,5)(3,6)"]),
            group(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
        ];
        for g in &cases {
            let sizes = regular_set_sizes(&g).unwrap();
            for &k in &sizes {
                assert!(
                    sizes.contains(&(g.degree() - k)),
                    "complement of regular size {k} missing"
                );
            }
        }
    }

    #[test]
    fn regular_witnesses_verified_by_stabilizer_search() {
        let g = group(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]);
        let census = orbit_census(&g).unwrap();
        for rec in &census.records {
            if let Some(w) = rec.regular_witness {
                assert_eq!(w.len(), rec.k);
                assert!(is_regular_set(&g, &w).unwrap());
                assert_eq!(g.setwise_stabilizer(&w).order(), 1);
            }
        }
    }

    #[test]
    fn sampling_finds_witnesses_deterministically() {
        let c7 = group(7, &["(1,2,3,4,5,6,7)"]);
        let a = sample_regular_set(&c7, 3, 32, 42);
        let b = sample_regular_set(&c7, 3, 32, 42);
        assert_eq!(a, b);
        assert!(is_regular_set(&c7, &a.unwrap()).unwrap());
    }

    /// Oracle: smallest d by scanning every d-coloring.
    fn brute_distinguishing(g: &PermGroup) -> usize {
        let n = g.degree();
        let elements = g.elements(1 << 16).unwrap();
        for d in 1..=n {
            let mut coloring = vec![0usize; n];
            'words: loop {
                let distinguishes = elements.iter().all(|e| {
                    e.is_identity() || (0..n).any(|p| coloring[e.apply(p)] != coloring[p])
                });
                if distinguishes {
                    return d;
                }
                // Next d-ary word; stop once all words are exhausted.
                let mut i = 0;
                while i < n {
                    coloring[i] += 1;
                    if coloring[i] < d {
                        continue 'words;
                    }
                    coloring[i] = 0;
                    i += 1;
                }
                break;
            }
        }
        unreachable!()
    }

    #[test]
    fn distinguishing_numbers_small() {
        let trivial = PermGroup::trivial(4);
        assert_eq!(distinguishing_number(&trivial).unwrap().0, 1);
        let c5 = group(5, &["(1,2,3,4,5)"]);
        assert_eq!(distinguishing_number(&c5).unwrap().0, 2);
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(distinguishing_number(&s3).unwrap().0, 3);
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(distinguishing_number(&s4).unwrap().0, 4);
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        assert_eq!(distinguishing_number(&a4).unwrap().0, 3);
        for g in [&c5, &s3, &s4, &a4] {
            assert_eq!(distinguishing_number(g).unwrap().0, brute_distinguishing(g));
        }
    }

    #[test]
    fn distinguishing_witness_is_valid() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let (d, partition) = distinguishing_number(&s4).unwrap();
        assert_eq!(partition.part_count(), d);
        let colors = partition.colors();
        assert!(crate::search::nontrivial_partition_preserver(&s4, &colors).is_none());
        // Parts cover the domain disjointly.
        let mut seen = PointSet::empty(4);
        for part in &partition.parts {
            assert!(seen.intersection(part).is_empty());
            seen = seen.union(part);
        }
        assert_eq!(seen.len(), 4);
    }
}
