//! Built-in groups: the fourteen simple primitive groups without regular
//! sets, the imprimitive and intransitive case studies assembled from them,
//! and small standard families (symmetric, alternating, cyclic, dihedral,
//! Klein four).
//!
//! Generators are stored as 1-based cycle strings. All intransitive entries
//! use one flat domain: the second copy of an n-point domain occupies points
//! n+1..2n (a primed point i' is renumbered n+i, a double-primed point i''
//! becomes 2n+i).

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::builders::{direct_sum, embed_at, embed_left};
use crate::group::PermGroup;
use crate::perm::{Perm, PointSet};
use crate::relation::UnorderedRelation;
use crate::{Error, Result};

/// A transitive simple primitive group with no regular set, together with a
/// regular set for its doubled (two lockstep copies) action.
#[derive(Clone, Copy, Debug)]
pub struct NoRegularSetEntry {
    pub key: &'static str,
    pub degree: usize,
    pub order: u128,
    pub gens: [&'static str; 2],
    /// Regular set in the doubled group on `2*degree` points (1-based).
    pub doubled_regular_set: &'static [usize],
}

/// A transitive imprimitive case study with its printed block system.
#[derive(Clone, Copy, Debug)]
pub struct BlockCaseEntry {
    pub key: &'static str,
    pub degree: usize,
    pub order: u128,
    pub gens: [&'static str; 2],
    pub blocks: &'static [&'static [usize]],
    /// Defining relation: the blocks plus the orbits of these seed sets.
    pub relation_seeds: &'static [&'static [usize]],
    /// Regular sets exist exactly for the sizes in this inclusive range.
    pub regular_sizes: (usize, usize),
}

/// A same-degree sum of two copies of a group glued along an automorphism
/// that no relabeling of points induces. Stored as the component generators
/// and their printed automorphism images; the sum on `2*degree` points is
/// generated by the juxtaposed pairs.
#[derive(Clone, Copy, Debug)]
pub struct TwistedPairEntry {
    pub key: &'static str,
    /// Component degree; the sum acts on twice as many points.
    pub degree: usize,
    pub order: u128,
    pub gens: [&'static str; 2],
    pub auto_images: [&'static str; 2],
    /// Inclusive size range of the sum's regular sets; `None` when the sum
    /// has no regular set at all.
    pub regular_sizes: Option<(usize, usize)>,
}

/// A parallel sum of two isomorphic groups acting in different actions,
/// together with the printed defining set `x` and regular set `y`.
#[derive(Clone, Copy, Debug)]
pub struct MixedPairEntry {
    pub key: &'static str,
    pub degree: usize,
    pub order: u128,
    /// Size of the first (larger) domain; the second starts at `split + 1`.
    pub split: usize,
    pub gens: [&'static str; 2],
    /// The certifying overgroup is `H ⊕ K'` where `K'` is the closure of the
    /// second constituent: the full symmetric group on its domain when the
    /// constituent is alternating, the constituent itself otherwise.
    pub symmetric_second_factor: bool,
    /// Orbit seed whose family pins the sum inside the overgroup (1-based).
    pub x: &'static [usize],
    /// A regular set with more points than the first domain (1-based).
    pub y: &'static [usize],
}

pub const NO_REGULAR_SET: [NoRegularSetEntry; 14] = [
    NoRegularSetEntry {
        key: "L2(5)@6",
        degree: 6,
        order: 60,
        gens: ["(1,2,5)(3,4,6)", "(3,5)(4,6)"],
        doubled_regular_set: &[1, 2, 3, 8, 10, 12],
    },
    NoRegularSetEntry {
        key: "L3(2)@7",
        degree: 7,
        order: 168,
        gens: ["(1,4)(6,7)", "(1,3,2)(4,7,5)"],
        doubled_regular_set: &[1, 2, 3, 10, 12],
    },
    NoRegularSetEntry {
        key: "L2(7)@8",
        degree: 8,
        order: 168,
        gens: ["(3,7,8)(4,6,5)", "(1,4,2,5,7,8,6)"],
        doubled_regular_set: &[1, 2, 10, 15],
    },
    NoRegularSetEntry {
        key: "L2(8)@9",
        degree: 9,
        order: 504,
        gens: ["(1,5,4,2,8,3,6)", "(1,8,6,2,7,3,9)"],
        // This group is set-transitive, so its double needs the whole
        // parallel-structure relation, not just an orbit; the set below is
        // still regular in the double and additionally pins it inside the
        // doubled symmetric group (see `bgr::doubled_defining_relation`).
        doubled_regular_set: &[1, 2, 3, 4, 11, 12, 13, 14],
    },
    NoRegularSetEntry {
        key: "L2(9)@10",
        degree: 10,
        order: 360,
        gens: ["(1,9,6,3,8)(2,10,7,5,4)", "(1,10,6,2,5)(3,4,9,8,7)"],
        doubled_regular_set: &[1, 2, 13, 15],
    },
    NoRegularSetEntry {
        key: "L2(11)@11",
        degree: 11,
        order: 660,
        gens: ["(1,5)(2,4)(3,10)(7,11)", "(3,11,5)(4,7,9)(6,8,10)"],
        doubled_regular_set: &[1, 2, 14, 16, 17],
    },
    NoRegularSetEntry {
        key: "M11@11",
        degree: 11,
        order: 7920,
        gens: ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"],
        doubled_regular_set: &[1, 2, 3, 12, 16, 18],
    },
    NoRegularSetEntry {
        key: "M11@12",
        degree: 12,
        order: 7920,
        gens: ["(1,12)(2,10,5,7)(3,8)(4,6,11,9)", "(1,3)(2,7)(8,11)(9,10)"],
        doubled_regular_set: &[1, 2, 3, 4, 13, 16, 19],
    },
    NoRegularSetEntry {
        key: "M12@12",
        degree: 12,
        order: 95040,
        gens: [
            "(1,4,12,6)(2,7,5,9,8,10,3,11)",
            "(1,12)(2,6,4,9,7,8,11,3)",
        ],
        doubled_regular_set: &[1, 2, 3, 4, 11, 13, 14, 17, 20, 21],
    },
    NoRegularSetEntry {
        key: "L3(3)@13",
        degree: 13,
        order: 5616,
        gens: [
            "(1,10,4)(6,9,7)(8,12,13)",
            "(1,3,2)(4,9,5)(7,8,12)(10,13,11)",
        ],
        doubled_regular_set: &[1, 2, 3, 4, 14, 20, 22],
    },
    NoRegularSetEntry {
        key: "L4(2)@15",
        degree: 15,
        order: 20160,
        gens: [
            "(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)",
            "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)",
        ],
        doubled_regular_set: &[1, 2, 3, 4, 5, 6, 9, 16, 22, 23, 26, 30],
    },
    NoRegularSetEntry {
        key: "M22@22",
        degree: 22,
        order: 443_520,
        gens: [
            "(1,13,11,17)(2,7)(3,22,12,21)(4,18,16,10)(6,20,19,14)(9,15)",
            "(1,6,12,11,14,5,22)(2,19,16,9,13,21,8)(3,17,18,15,7,4,10)",
        ],
        doubled_regular_set: &[1, 2, 3, 4, 7, 9, 23, 25, 30],
    },
    NoRegularSetEntry {
        key: "M23@23",
        degree: 23,
        order: 10_200_960,
        gens: [
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
        ],
        doubled_regular_set: &[1, 2, 3, 4, 9, 12, 24, 33, 40],
    },
    NoRegularSetEntry {
        key: "M24@24",
        degree: 24,
        order: 244_823_040,
        gens: [
            "(1,5)(2,14,7,12)(3,21)(4,17,16,11)(6,20,23,22)(9,10,15,13)",
            "(1,19,15,8,20,23,24,9,14,11,5,10,22,13,2)(3,6,4)(7,16,12,17,18)",
        ],
        doubled_regular_set: &[1, 2, 3, 5, 11, 13, 19, 25, 28, 38, 42, 48],
    },
];

pub const BLOCK_CASES: [BlockCaseEntry; 2] = [
    BlockCaseEntry {
        key: "15T5",
        degree: 15,
        order: 60,
        gens: [
            "(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)",
            "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)",
        ],
        blocks: &[
            &[1, 6, 8],
            &[2, 4, 9],
            &[3, 7, 11],
            &[5, 10, 15],
            &[12, 13, 14],
        ],
        relation_seeds: &[&[1, 2], &[3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]],
        regular_sizes: (3, 12),
    },
    BlockCaseEntry {
        key: "14T10",
        degree: 14,
        order: 168,
        gens: [
            "(1,5,9,13,3,7,11)(2,6,10,14,4,8,12)",
            "(1,10,6,14,11,9,12)(2,5,8,3,13,7,4)",
        ],
        blocks: &[
            &[1, 8],
            &[2, 9],
            &[3, 10],
            &[4, 11],
            &[5, 12],
            &[6, 13],
            &[7, 14],
        ],
        relation_seeds: &[&[1, 2, 3, 4]],
        regular_sizes: (3, 11),
    },
];

pub const TWISTED_PAIRS: [TwistedPairEntry; 5] = [
    TwistedPairEntry {
        key: "A6xA6_twisted",
        degree: 6,
        order: 360,
        gens: ["(2,3)(4,5)", "(1,2,3,4)(5,6)"],
        auto_images: ["(2,5)(3,4)", "(1,2,3,4)(5,6)"],
        regular_sizes: None,
    },
    TwistedPairEntry {
        key: "L3(2)xL3(2)_twisted",
        degree: 7,
        order: 168,
        gens: ["(1,2)(5,7)", "(2,3,4,7)(5,6)"],
        auto_images: ["(1,2)(3,6)", "(2,3,4,7)(5,6)"],
        regular_sizes: Some((4, 10)),
    },
    TwistedPairEntry {
        key: "L2(11)xL2(11)_twisted",
        degree: 11,
        order: 660,
        gens: ["(1,3)(2,7)(5,9)(6,11)", "(3,5,11)(4,9,7)(6,10,8)"],
        auto_images: ["(1,4)(2,3)(5,10)(9,11)", "(3,5,11)(4,9,7)(6,10,8)"],
        regular_sizes: Some((4, 18)),
    },
    TwistedPairEntry {
        key: "L3(3)xL3(3)_twisted",
        degree: 13,
        order: 5616,
        gens: [
            "(3,5,11)(6,7,9)(8,12,13)",
            "(1,13,7)(2,10,6)(3,5,12)(4,11,9)",
        ],
        auto_images: [
            "(3,8,7)(5,12,9)(6,11,13)",
            "(1,13,7)(2,10,6)(3,5,12)(4,11,9)",
        ],
        regular_sizes: Some((6, 20)),
    },
    TwistedPairEntry {
        key: "L4(2)xL4(2)_twisted",
        degree: 15,
        order: 20160,
        gens: [
            "(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)",
            "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)",
        ],
        auto_images: [
            "(1,4,2,14,13,7,8)(3,10,15,9,5,6,12)",
            "(1,2,3)(4,14,10)(5,12,9)(6,13,11)(7,15,8)",
        ],
        regular_sizes: Some((6, 24)),
    },
];

pub const MIXED_PAIRS: [MixedPairEntry; 5] = [
    MixedPairEntry {
        key: "L2(5)xA5",
        degree: 11,
        order: 60,
        split: 6,
        gens: ["(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"],
        symmetric_second_factor: true,
        x: &[1, 3, 7, 9],
        y: &[2, 4, 5, 6, 8, 10, 11],
    },
    MixedPairEntry {
        key: "L2(7)xL3(2)",
        degree: 15,
        order: 168,
        split: 8,
        gens: [
            "(1,6,5)(2,3,7)(9,11,10)(12,15,13)",
            "(1,4)(2,7)(3,5)(6,8)(9,12)(14,15)",
        ],
        symmetric_second_factor: false,
        x: &[1, 3, 5, 10, 12, 14],
        y: &[2, 4, 6, 7, 8, 9, 11, 13, 15],
    },
    MixedPairEntry {
        key: "L2(9)xA6",
        degree: 16,
        order: 360,
        split: 10,
        gens: [
            "(1,9,6,3,8)(2,10,7,5,4)(11,13,14,15,16)",
            "(1,10,6,2,5)(3,4,9,8,7)(11,13,15,14,12)",
        ],
        symmetric_second_factor: true,
        x: &[1, 3, 13, 15],
        y: &[2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16],
    },
    MixedPairEntry {
        key: "M11_12xM11",
        degree: 23,
        order: 7920,
        split: 12,
        gens: [
            "(1,12)(2,10,5,7)(3,8)(4,6,11,9)(13,21,17,19)(16,20,23,18)",
            "(1,3)(2,7)(8,11)(9,10)(14,16)(15,18)(19,22)(21,23)",
        ],
        symmetric_second_factor: false,
        x: &[1, 3, 7, 9, 11, 14, 18],
        y: &[
            2, 4, 5, 6, 8, 10, 12, 13, 15, 16, 17, 19, 20, 21, 22, 23,
        ],
    },
    MixedPairEntry {
        key: "L4(2)xA8",
        degree: 23,
        order: 20160,
        split: 15,
        gens: [
            "(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)(16,17,18,19,20,21,22)",
            "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)(21,22,23)",
        ],
        symmetric_second_factor: true,
        // x pins the sum in the overgroup but is not itself regular here.
        x: &[1, 2, 20, 21],
        y: &[
            2, 3, 5, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17, 19, 21, 22,
        ],
    },
];

/// The degree-24 twisted sum of two copies of the degree-12 Mathieu group,
/// with the intermediate transitive group and regular set used to pin it.
#[derive(Clone, Copy, Debug)]
pub struct M12SumData {
    pub sum_gens: [&'static str; 2],
    pub intermediate_gens: [&'static str; 2],
    pub intermediate_order: u128,
    /// Seeds of the defining relation: orbit of the first under the degree-24
    /// Mathieu group, of the second under the intermediate group, of the
    /// third under the sum itself.
    pub seeds: [&'static [usize]; 3],
    pub regular_set: &'static [usize],
}

pub const M12_SUM: M12SumData = M12SumData {
    sum_gens: [
        "(1,19,17,23,2,4,8,9)(6,16,21,22)(3,12)(5,24,15,7,18,10,20,13)",
        "(1,23,8,19,9,6,4,21,16,22,2)(3,14,12,7,11,20,13,5,15,24,10)",
    ],
    intermediate_gens: [
        "(1,16,23,19,9,21,2,4)(5,15,12,10,18,24,14,20)(6,8,22,17)(7,13)",
        "(1,5)(2,11)(3,22)(4,15)(6,10)(7,23)(8,24)(9,14)(12,21)(13,19)(16,20)(17,18)",
    ],
    intermediate_order: 190_080,
    seeds: [&[1, 2, 3, 4, 5, 6], &[1, 2, 3], &[1, 2]],
    regular_set: &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
};

/// The triple sum of three copies of the degree-6 alternating group, the
/// first two in lockstep and the third glued by the exceptional
/// automorphism. Unlike the plain twisted pair it has regular sets.
pub const A6_DOUBLE_TWISTED_GENS: [&str; 2] = [
    "(2,3)(4,5)(8,11)(9,10)(14,17)(15,16)",
    "(1,2,3,4)(5,6)(7,8,9,10)(11,12)(13,14,15,16)(17,18)",
];

/// Inclusive size range asserted for the triple sum's regular sets. On 18
/// points sizes above 14 pair off with sizes below 4 by complementation, so
/// the meaningful range is 4..=14.
pub const A6_DOUBLE_TWISTED_REGULAR_SIZES: (usize, usize) = (4, 14);

fn parse_group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycle_strings(degree, gens)
        .expect("catalog generator data parses at its documented degree")
}

/// Generators of the full symmetric group on `1..=n`.
pub fn symmetric(n: usize) -> PermGroup {
    let mut gens: Vec<String> = Vec::new();
    if n >= 2 {
        gens.push(String::from("(1,2)"));
    }
    if n >= 3 {
        gens.push(cycle_on(1, n));
    }
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    parse_group(n.max(1), &refs)
}

/// The alternating group on `1..=n` (trivial for n < 3).
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let three = String::from("(1,2,3)");
    let mut gens: Vec<String> = vec![three];
    if n > 3 {
        if n % 2 == 1 {
            gens.push(cycle_on(1, n));
        } else {
            gens.push(cycle_on(2, n));
        }
    }
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    parse_group(n, &refs)
}

/// The cyclic group generated by the n-cycle `(1,…,n)`.
pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    parse_group(n, &[&cycle_on(1, n)])
}

/// The dihedral group of order 2n on `1..=n` (n ≥ 3): rotation plus the
/// reflection fixing point 1.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 3, "dihedral catalog family needs n >= 3");
    let rotation = cycle_on(1, n);
    let mut img: Vec<u8> = (0..n as u8).collect();
    for i in 1..n {
        img[i] = (n - i) as u8;
    }
    let reflection = Perm::from_images(img).unwrap();
    let r = Perm::parse(n, &rotation).unwrap();
    PermGroup::new(n, vec![r, reflection]).unwrap()
}

/// The Klein four-group on 4 points.
pub fn klein_four() -> PermGroup {
    parse_group(4, &["(1,2)(3,4)", "(1,3)(2,4)"])
}

fn cycle_on(from: usize, to: usize) -> String {
    let mut s = String::from("(");
    for p in from..=to {
        if p > from {
            s.push(',');
        }
        s.push_str(&format!("{p}"));
    }
    s.push(')');
    s
}

/// The sum of two component copies glued by the stored automorphism: each
/// generator acts as itself on the first copy and as its automorphism image
/// on the second.
pub fn twisted_sum(entry: &TwistedPairEntry) -> PermGroup {
    let n = entry.degree;
    let degree = 2 * n;
    let gens: Vec<Perm> = entry
        .gens
        .iter()
        .zip(&entry.auto_images)
        .map(|(g, im)| {
            let g = Perm::parse(n, g).unwrap();
            let im = Perm::parse(n, im).unwrap();
            embed_left(&g, degree).compose(&embed_at(&im, n, degree))
        })
        .collect();
    PermGroup::new(degree, gens).unwrap()
}

/// The two constituents of a mixed pair, restricted to their own domains.
pub fn mixed_pair_components(entry: &MixedPairEntry) -> (PermGroup, PermGroup) {
    let g = catalog_group(entry.key).unwrap();
    let first: Vec<usize> = (0..entry.split).collect();
    let second: Vec<usize> = (entry.split..entry.degree).collect();
    let restrict = |window: &[usize]| {
        let w = PointSet::from_points(entry.degree, window).unwrap();
        let gens: Vec<Perm> = g
            .generators()
            .iter()
            .map(|p| p.restrict(&w).expect("mixed pair domains are invariant"))
            .collect();
        PermGroup::new(window.len(), gens).unwrap()
    };
    (restrict(&first), restrict(&second))
}

/// The direct-sum overgroup used to certify a mixed pair: the first
/// constituent's copy joined with either the second constituent or the full
/// symmetric group on its domain.
pub fn mixed_pair_overgroup(entry: &MixedPairEntry) -> PermGroup {
    let (h, k) = mixed_pair_components(entry);
    let second = if entry.symmetric_second_factor {
        symmetric(k.degree())
    } else {
        k
    };
    direct_sum(&h, &second)
}

/// The blocks of a block case as a relation.
pub fn blocks_relation(entry: &BlockCaseEntry) -> UnorderedRelation {
    UnorderedRelation::from_point_lists(entry.degree, entry.blocks).unwrap()
}

/// Rows of the generated catalog manifest.
#[derive(Clone, Copy, Debug)]
pub struct ManifestRow {
    pub key: &'static str,
    pub degree: usize,
    pub order: u128,
    pub kind: &'static str,
}

/// Every fixed catalog key with its degree, order, and kind. Family builders
/// (`S<n>`, `A<n>`, `C<n>`, `D<n>`, `K4`) accept any size and are therefore
/// not enumerated.
pub fn manifest() -> Vec<ManifestRow> {
    let mut rows = Vec::new();
    for e in &NO_REGULAR_SET {
        rows.push(ManifestRow {
            key: e.key,
            degree: e.degree,
            order: e.order,
            kind: "primitive-no-regular-set",
        });
    }
    for e in &BLOCK_CASES {
        rows.push(ManifestRow {
            key: e.key,
            degree: e.degree,
            order: e.order,
            kind: "imprimitive-case",
        });
    }
    for e in &TWISTED_PAIRS {
        rows.push(ManifestRow {
            key: e.key,
            degree: 2 * e.degree,
            order: e.order,
            kind: "twisted-pair",
        });
    }
    rows.push(ManifestRow {
        key: "A6_2xA6_twisted",
        degree: 18,
        order: 360,
        kind: "twisted-triple",
    });
    rows.push(ManifestRow {
        key: "M12xM12_twisted",
        degree: 24,
        order: 95040,
        kind: "twisted-pair",
    });
    rows.push(ManifestRow {
        key: "M12xM12_T",
        degree: 24,
        order: M12_SUM.intermediate_order,
        kind: "intermediate-overgroup",
    });
    for e in &MIXED_PAIRS {
        rows.push(ManifestRow {
            key: e.key,
            degree: e.degree,
            order: e.order,
            kind: "mixed-pair",
        });
    }
    rows
}

pub fn no_regular_set_entry(key: &str) -> Option<&'static NoRegularSetEntry> {
    NO_REGULAR_SET.iter().find(|e| e.key == key)
}

pub fn block_case(key: &str) -> Option<&'static BlockCaseEntry> {
    BLOCK_CASES.iter().find(|e| e.key == key)
}

pub fn twisted_pair(key: &str) -> Option<&'static TwistedPairEntry> {
    TWISTED_PAIRS.iter().find(|e| e.key == key)
}

pub fn mixed_pair(key: &str) -> Option<&'static MixedPairEntry> {
    MIXED_PAIRS.iter().find(|e| e.key == key)
}

/// Looks up a primitive no-regular-set entry by its action fingerprint.
/// Degree and order identify the action uniquely within the list.
pub fn no_regular_set_by_action(degree: usize, order: u128) -> Option<&'static NoRegularSetEntry> {
    NO_REGULAR_SET
        .iter()
        .find(|e| e.degree == degree && e.order == order)
}

/// Builds the group for a catalog key. Fixed keys cover the printed
/// generator sets; family keys are `S<n>`, `A<n>`, `C<n>`, `D<n>` and `K4`.
pub fn catalog_group(name: &str) -> Result<PermGroup> {
    if let Some(e) = no_regular_set_entry(name) {
        return Ok(parse_group(e.degree, &e.gens));
    }
    if let Some(e) = block_case(name) {
        return Ok(parse_group(e.degree, &e.gens));
    }
    if let Some(e) = twisted_pair(name) {
        return Ok(twisted_sum(e));
    }
    if let Some(e) = mixed_pair(name) {
        return Ok(parse_group(e.degree, &e.gens));
    }
    match name {
        "A6_2xA6_twisted" => {
            let refs: Vec<&str> = A6_DOUBLE_TWISTED_GENS.to_vec();
            return Ok(parse_group(18, &refs));
        }
        "M12xM12_twisted" => return Ok(parse_group(24, &M12_SUM.sum_gens)),
        "M12xM12_T" => return Ok(parse_group(24, &M12_SUM.intermediate_gens)),
        "K4" => return Ok(klein_four()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('S') {
        if let Ok(n) = rest.parse::<usize>() {
            if n >= 1 {
                return Ok(symmetric(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('A') {
        if let Ok(n) = rest.parse::<usize>() {
            if n >= 3 {
                return Ok(alternating(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('C') {
        if let Ok(n) = rest.parse::<usize>() {
            if n >= 1 {
                return Ok(cyclic(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('D') {
        if let Ok(n) = rest.parse::<usize>() {
            if n >= 3 {
                return Ok(dihedral(n));
            }
        }
    }
    Err(Error::UnknownCatalogKey)
}

/// The stored doubled regular set of a primitive entry, as a point set on
/// `2 * degree` points.
pub fn doubled_regular_point_set(entry: &NoRegularSetEntry) -> PointSet {
    PointSet::from_points_1based(2 * entry.degree, entry.doubled_regular_set).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(symmetric(1).order(), 1);
        assert_eq!(symmetric(2).order(), 2);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(3).order(), 3);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(alternating(7).order(), 2520);
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(klein_four().order(), 4);
        assert!(klein_four().is_abelian());
    }

    #[test]
    fn family_keys() {
        for (key, degree, order) in [
            ("S6", 6, 720u128),
            ("A5", 5, 60),
            ("C11", 11, 11),
            ("D5", 5, 10),
            ("K4", 4, 4),
        ] {
            let g = catalog_group(key).unwrap();
            assert_eq!((g.degree(), g.order()), (degree, order), "{key}");
        }
        assert!(catalog_group("A2").is_err());
        assert!(catalog_group("Q8").is_err());
        assert!(catalog_group("S").is_err());
    }

    #[test]
    fn small_primitive_orders() {
        for key in ["L2(5)@6", "L3(2)@7", "L2(7)@8", "L2(8)@9", "L2(9)@10", "L2(11)@11"] {
            let e = no_regular_set_entry(key).unwrap();
            let g = catalog_group(key).unwrap();
            assert_eq!((g.degree(), g.order()), (e.degree, e.order), "{key}");
        }
    }

    #[test]
    fn block_systems_match_printed_blocks() {
        for e in &BLOCK_CASES {
            let g = catalog_group(e.key).unwrap();
            assert_eq!((g.degree(), g.order()), (e.degree, e.order), "{}", e.key);
            let printed: Vec<PointSet> = e
                .blocks
                .iter()
                .map(|b| PointSet::from_points_1based(e.degree, b).unwrap())
                .collect();
            let mut found = g.minimal_block_system().unwrap().unwrap();
            let mut printed = printed;
            printed.sort_unstable_by(PointSet::cmp_card_lex);
            found.sort_unstable_by(PointSet::cmp_card_lex);
            assert_eq!(found, printed, "{}", e.key);
        }
    }

    #[test]
    fn manifest_keys_unique_and_buildable() {
        let rows = manifest();
        for (i, r) in rows.iter().enumerate() {
            assert!(
                rows[i + 1..].iter().all(|s| s.key != r.key),
                "duplicate key {}",
                r.key
            );
        }
        // Degree checks are cheap for every row; order checks for the large
        // groups live in the integration suite.
        for r in &rows {
            let g = catalog_group(r.key).unwrap();
            assert_eq!(g.degree(), r.degree, "{}", r.key);
        }
    }

    #[test]
    fn doubled_regular_sets_are_well_formed() {
        for e in &NO_REGULAR_SET {
            let s = doubled_regular_point_set(e);
            assert!(!s.is_empty());
            assert!(s.len() <= 2 * e.degree - 3, "{}", e.key);
        }
    }

    #[test]
    fn mixed_pair_shapes() {
        for e in &MIXED_PAIRS {
            let x = PointSet::from_points_1based(e.degree, e.x).unwrap();
            let y = PointSet::from_points_1based(e.degree, e.y).unwrap();
            assert!(y.len() > e.split, "{}: |y| must exceed the first domain", e.key);
            if e.key != "L4(2)xA8" {
                assert_eq!(y, x.complement(), "{}", e.key);
            }
        }
    }
}
