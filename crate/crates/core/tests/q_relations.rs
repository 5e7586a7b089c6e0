//! The counting relation Q on lockstep multiples of the full symmetric
//! group, and the binary-set construction that carves out the alternating
//! multiple below it.

use permrel_core::bgr::{
    binary_partition_set, binary_regular_set, orbit_closure, q_relation, relation_sies,
};
use permrel_core::builders::parallel_multiple;
use permrel_core::catalog::{alternating, symmetric};
use permrel_core::census::is_regular_set;
use permrel_core::relation::symmetry_group_full;

#[test]
fn q_defines_the_symmetric_multiple() {
    for n in 3usize..=8 {
        for r in 1usize..=3 {
            if n * r > 16 {
                continue;
            }
            let q = q_relation(n, r).unwrap();
            let s = parallel_multiple(&symmetric(n), r);
            let sq = symmetry_group_full(&q).unwrap();
            assert!(sq.equals(&s), "Q({n},{r}) symmetry group");
        }
    }
}

#[test]
fn q_defines_the_symmetric_multiple_wide() {
    // The remaining grid cells under twenty points.
    for (n, r) in [(7, 2), (8, 2), (6, 3)] {
        let q = q_relation(n, r).unwrap();
        let s = parallel_multiple(&symmetric(n), r);
        let sq = symmetry_group_full(&q).unwrap();
        assert!(sq.equals(&s), "Q({n},{r}) symmetry group");
    }
}

#[test]
fn binary_sets_are_regular_when_words_suffice() {
    // With 2^r >= n every point gets a distinct column word, the strict
    // binary set is regular for the symmetric multiple, and adjoining its
    // orbit to Q cuts the symmetry group down to the alternating multiple.
    let frozen: [(usize, usize, &[usize]); 6] = [
        (3, 2, &[0, 2, 4, 5]),
        (3, 3, &[0, 2, 4, 5]),
        (4, 2, &[0, 2, 5, 6]),
        (4, 3, &[0, 2, 5, 6, 11]),
        (5, 3, &[0, 2, 4, 6, 7, 13, 14]),
        (6, 3, &[0, 2, 4, 7, 8, 11, 15, 16, 17]),
    ];
    for (n, r, want) in frozen {
        assert!((1usize << r) >= n);
        let y = binary_regular_set(n, r).unwrap();
        let got: Vec<usize> = y.iter().collect();
        assert_eq!(got, want, "binary set for ({n},{r})");
        let s = parallel_multiple(&symmetric(n), r);
        let a = parallel_multiple(&alternating(n), r);
        assert!(is_regular_set(&s, &y).unwrap(), "({n},{r}) strict set regular");
        let q = q_relation(n, r).unwrap();
        let rs = relation_sies(&s, &q, &y, &a).unwrap();
        if n * r <= 18 {
            let abs = symmetry_group_full(&rs).unwrap();
            assert!(abs.equals(&a), "({n},{r}) alternating multiple defined");
        }
    }
}

#[test]
fn alternating_multiples_close_up_when_words_run_out() {
    // With 2^r < n two points share every column word, so each subset
    // orbit of the alternating multiple is already symmetric-invariant
    // and the closure is the full symmetric multiple.
    for (n, r) in [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2)] {
        assert!((1usize << r) < n);
        let a = parallel_multiple(&alternating(n), r);
        let s = parallel_multiple(&symmetric(n), r);
        let c = orbit_closure(&a).unwrap();
        assert!(c.equals(&s), "closure of A_{n}^({r})");
    }
}

#[test]
fn boundary_partition_sets_separate_the_multiples() {
    // At 2^r = n - 1 the partition set is still regular for the
    // alternating multiple but picks up the leftover transposition in the
    // symmetric one.
    for (n, r) in [(3, 1), (5, 2)] {
        let y = binary_partition_set(n, r).unwrap();
        let a = parallel_multiple(&alternating(n), r);
        let s = parallel_multiple(&symmetric(n), r);
        assert!(is_regular_set(&a, &y).unwrap(), "({n},{r}) regular for A-multiple");
        assert!(!is_regular_set(&s, &y).unwrap(), "({n},{r}) not regular for S-multiple");
    }
}
