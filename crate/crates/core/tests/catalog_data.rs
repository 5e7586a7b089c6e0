//! Cross-checks of the shipped catalog: orders, pair structure, and frozen
//! search results (smallest defining orbits, family stabilizers).

use permrel_core::builders::{embed_at, induced_relabeling, IsoMap};
use permrel_core::catalog::{
    self, catalog_group, mixed_pair_components, mixed_pair_overgroup, twisted_sum, MIXED_PAIRS,
    TWISTED_PAIRS,
};
use permrel_core::relation::{
    minimal_defining_orbit, orbit_of_set, relation_orbit_stabilizer_in,
};
use permrel_core::{Perm, PermGroup, PointSet, UnorderedRelation};

fn family_fixed_by(r: &UnorderedRelation, g: &Perm) -> bool {
    r.sets().iter().all(|s| r.contains(&g.apply_set(s)))
}

/// Kernel sweep for a two-orbit sum G on `degree` points split at `split`:
/// embeds every element of `second_closure` on the second window and checks
/// that only the identity fixes `family`. Together with the projection bound
/// |Stab| = |proj_1(Stab)| * |kernel| <= |closure_1| this pins the family
/// stabilizer inside the product overgroup down to G itself.
fn second_factor_kernel_trivial(
    sum: &PermGroup,
    split: usize,
    second_closure: &PermGroup,
    family: &UnorderedRelation,
) -> bool {
    assert!(family.is_union_of_orbits(sum));
    let degree = sum.degree();
    let elements = second_closure.elements(1 << 17).unwrap();
    for k in &elements {
        if k.is_identity() {
            continue;
        }
        let embedded = embed_at(k, split, degree);
        if family_fixed_by(family, &embedded) {
            return false;
        }
    }
    true
}

#[test]
fn manifest_orders_match() {
    for row in catalog::manifest() {
        let g = catalog_group(row.key).unwrap();
        assert_eq!(g.degree(), row.degree, "degree of {}", row.key);
        assert_eq!(g.order(), row.order, "order of {}", row.key);
    }
}

#[test]
fn twisted_pairs_are_proper_diagonals() {
    for e in &TWISTED_PAIRS {
        let h = PermGroup::from_cycle_strings(e.degree, &e.gens).unwrap();
        let images: Vec<Perm> = e
            .auto_images
            .iter()
            .map(|s| Perm::parse(e.degree, s).unwrap())
            .collect();
        // The generator-image map extends to an automorphism of the component.
        let phi = IsoMap::new(h.clone(), h.clone(), images).unwrap();
        // It is not induced by any relabeling of the points, so the doubled
        // group is a genuinely twisted diagonal, not a parallel multiple.
        assert!(
            induced_relabeling(&phi).unwrap().is_none(),
            "{}: automorphism unexpectedly induced by a point bijection",
            e.key
        );
        let sum = twisted_sum(e);
        assert_eq!(sum.order(), h.order(), "{}: diagonal order", e.key);
        assert_eq!(sum.degree(), 2 * e.degree, "{}: diagonal degree", e.key);
    }
}

#[test]
fn mixed_pairs_structure() {
    // Family orbit lengths, frozen from the first verified run.
    let expected_family_len = |key: &str| -> usize {
        match key {
            "L2(5)xA5" => 60,
            "L2(7)xL3(2)" => 168,
            "L2(9)xA6" => 360,
            "M11_12xM11" => 7920,
            "L4(2)xA8" => 1260,
            _ => panic!("unknown pair {key}"),
        }
    };
    for e in &MIXED_PAIRS {
        let g = catalog_group(e.key).unwrap();
        let (p1, p2) = mixed_pair_components(e);
        assert_eq!(p1.order(), g.order(), "{}: first window projection", e.key);
        assert_eq!(p2.order(), g.order(), "{}: second window projection", e.key);

        let over = mixed_pair_overgroup(e);
        assert_eq!(over.degree(), e.degree);
        assert!(g.is_subgroup_of(&over), "{}: sum inside overgroup", e.key);

        // The printed y (or complement) has trivial setwise stabilizer.
        let y = PointSet::from_points_1based(e.degree, e.y).unwrap();
        assert_eq!(g.setwise_stabilizer(&y).order(), 1, "{}: y regular", e.key);

        // The x-family is pinned: no nonidentity element of the second
        // window's closure factor fixes it, so its stabilizer inside the
        // product overgroup is exactly the sum.
        let x = PointSet::from_points_1based(e.degree, e.x).unwrap();
        let fam = orbit_of_set(&g, &x).unwrap();
        assert_eq!(fam.len(), expected_family_len(e.key), "{}: |x-orbit|", e.key);
        let second = if e.symmetric_second_factor {
            catalog::symmetric(e.degree - e.split)
        } else {
            p2.clone()
        };
        assert!(
            second_factor_kernel_trivial(&g, e.split, &second, &fam),
            "{}: x-family not pinned",
            e.key
        );
    }
}

#[test]
fn chain_of_three_orbit_data() {
    let g = catalog_group("M12xM12_twisted").unwrap();
    let t = catalog_group("M12xM12_T").unwrap();
    let m = catalog_group("M24@24").unwrap();
    assert_eq!(g.order(), 95_040);
    assert_eq!(t.order(), 190_080);
    assert_eq!(m.order(), 244_823_040);
    assert!(g.is_subgroup_of(&t));
    assert!(t.is_subgroup_of(&m));

    let hexads = orbit_of_set(&m, &PointSet::from_points_1based(24, &[1, 2, 3, 4, 5, 6]).unwrap())
        .unwrap();
    // Strictly fewer 6-sets than C(24,6) = 134596: the top group is not
    // 6-homogeneous, so its orbit is a proper, group-defining family.
    assert_eq!(hexads.len(), 113_344);
    assert_ne!(hexads.len(), 134_596);

    let triples =
        orbit_of_set(&t, &PointSet::from_points_1based(24, &[1, 2, 3]).unwrap()).unwrap();
    assert_eq!(triples.len(), 1_584);

    let pairs = orbit_of_set(&g, &PointSet::from_points_1based(24, &[1, 2]).unwrap()).unwrap();
    assert_eq!(pairs.len(), 66);

    // Family stabilizers up the chain, each with the orbit-stabilizer
    // identity |overgroup| = (family orbit length) * |stabilizer|.
    let (stab, orbit_len) = relation_orbit_stabilizer_in(&m, &pairs, 4_096).unwrap();
    assert_eq!(orbit_len, 2_576);
    assert!(stab.equals(&g), "pair family stabilizer in the top group");

    let (stab_t, orbit_t) = relation_orbit_stabilizer_in(&t, &pairs, 16).unwrap();
    assert_eq!(orbit_t, 2);
    assert!(stab_t.equals(&g));

    let (stab3, orbit3) = relation_orbit_stabilizer_in(&m, &triples, 2_048).unwrap();
    assert_eq!(orbit3, 1_288);
    assert!(stab3.equals(&t), "triple family stabilizer in the top group");

    // The documented 10-point set is regular in the twisted sum.
    let reg = PointSet::from_points_1based(24, catalog::M12_SUM.regular_set).unwrap();
    assert_eq!(g.setwise_stabilizer(&reg).order(), 1);
}

#[test]
fn triple_twisted_sum_shape() {
    let triple = catalog_group("A6_2xA6_twisted").unwrap();
    assert_eq!(triple.order(), 360);
    let sizes: Vec<usize> = triple.orbits().iter().map(|o| o.len()).collect();
    assert_eq!(sizes, vec![6, 6, 6]);
}

#[test]
fn minimal_defining_orbits_frozen() {
    // (key, smallest k whose single orbit defines the group, orbit length);
    // None records that no single set orbit defines the group.
    let expected: &[(&str, Option<(usize, usize)>)] = &[
        ("L2(5)@6", Some((3, 10))),
        ("L3(2)@7", Some((3, 28))),
        ("L2(7)@8", None),
        ("L2(8)@9", None),
        ("L2(9)@10", None),
        ("L2(11)@11", Some((3, 110))),
        ("M11@11", Some((5, 396))),
        ("M11@12", Some((4, 330))),
        ("M12@12", Some((6, 792))),
        ("L3(3)@13", Some((3, 234))),
        ("L4(2)@15", Some((3, 35))),
    ];
    for (key, want) in expected {
        let h = catalog_group(key).unwrap();
        let got = minimal_defining_orbit(&h)
            .unwrap()
            .map(|orbit| (orbit.sets()[0].len(), orbit.len()));
        assert_eq!(got, *want, "{key}");
    }
}
