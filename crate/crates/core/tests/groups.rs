use repring::groups::{
    abelian_structure, all_subgroups, conjugacy_classes, cyclic, dihedral, direct_product, klein,
    normal_abelian_subgroups, quaternion8, symmetric, ExtensionData, Group, GroupTable, DEFAULT_ORDER_LIMIT,
};
use repring::Error;

/// Class sizes by scanning every conjugate, independent of `ConjugacyData`.
fn orbit_sizes(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for h in 0..n {
                let z = g.mul(g.mul(g.inv(h), y), h);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        sizes.push(orbit.len());
    }
    sizes.sort_unstable();
    sizes
}

fn presets() -> Vec<GroupTable> {
    vec![
        cyclic(1),
        cyclic(5),
        cyclic(12),
        dihedral(2),
        dihedral(6),
        dihedral(8),
        dihedral(10),
        quaternion8(),
        klein(),
        symmetric(3),
        symmetric(4),
        direct_product(&dihedral(8), &cyclic(2)),
    ]
}

#[test]
fn class_counts_match_orbit_scan() {
    for g in presets() {
        let c = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = (0..c.num_classes()).map(|i| c.class_size(i)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, orbit_sizes(&g), "{}", g.name());
        assert_eq!(sizes.iter().sum::<usize>(), g.order());
        for i in 0..c.num_classes() {
            assert_eq!(c.centralizer_order(i) * c.class_size(i), g.order());
        }
        let e = g.exponent() as i64;
        assert_eq!(c.exponent() as i64, e);
        for k in 0..e {
            assert_eq!(c.power_map(k), c.power_map(k + e));
        }
        assert_eq!(c.power_map(1), (0..c.num_classes()).collect::<Vec<_>>().as_slice());
    }
}

#[test]
fn d8_and_q8_classes() {
    for g in [dihedral(8), quaternion8()] {
        let c = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = (0..5).map(|i| c.class_size(i)).collect();
        sizes.sort_unstable();
        assert_eq!(c.num_classes(), 5);
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }
    let d8 = dihedral(8);
    let labels: Vec<&str> = (0..8).map(|i| d8.label(i)).collect();
    assert_eq!(labels, ["1", "x", "y", "xy", "q", "xq", "yq", "xyq"]);
    // q x q⁻¹ = x y
    assert_eq!(d8.conjugate(4, 1), 3);
}

#[test]
fn cyclic_four_power_map() {
    let c = conjugacy_classes(&cyclic(4));
    assert_eq!(c.num_classes(), 4);
    assert_eq!(c.power_map(2)[1], 2);
}

#[test]
fn permutation_s3() {
    let s3 = GroupTable::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_ORDER_LIMIT).unwrap();
    assert_eq!(orbit_sizes(&s3), vec![1, 2, 3]);
    assert_eq!(conjugacy_classes(&s3).num_classes(), 3);
}

#[test]
fn klein_from_product() {
    let k = direct_product(&cyclic(2), &cyclic(2));
    assert_eq!(k.exponent(), 2);
    assert_eq!(k.rows(), klein().rows());
}

#[test]
fn normal_abelian_subgroups_are_checked() {
    for g in presets() {
        let grp = Group::new(g);
        for s in normal_abelian_subgroups(&grp) {
            assert!(grp.is_subgroup(&s) && grp.is_normal(&s) && grp.is_abelian_set(&s));
        }
    }
    let d8 = Group::new(dihedral(8));
    assert!(normal_abelian_subgroups(&d8).contains(&vec![0, 1, 2, 3]));
    let c7 = Group::new(cyclic(7));
    assert_eq!(normal_abelian_subgroups(&c7), vec![vec![0], (0..7).collect::<Vec<_>>()]);
}

#[test]
fn q8_normal_abelian_subgroups_by_exhaustive_scan() {
    let q8 = Group::new(quaternion8());
    let oracle: Vec<Vec<usize>> = all_subgroups(&q8)
        .into_iter()
        .filter(|s| q8.is_normal(s) && q8.is_abelian_set(s))
        .collect();
    let found = normal_abelian_subgroups(&q8);
    assert_eq!(found, oracle);
    let sizes: Vec<usize> = found.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 4, 4, 4]);
    for s in &found {
        if s.len() == 4 {
            let st = abelian_structure(&q8.subgroup_table(s).unwrap().0).unwrap();
            assert_eq!(st.invariant_factors(), &[4]);
        }
    }
}

#[test]
fn invariant_factors() {
    assert_eq!(abelian_structure(&klein()).unwrap().invariant_factors(), &[2, 2]);
    assert_eq!(abelian_structure(&cyclic(6)).unwrap().invariant_factors(), &[6]);
    assert!(abelian_structure(&cyclic(1)).unwrap().invariant_factors().is_empty());
    let c24 = direct_product(&cyclic(2), &cyclic(4));
    let s = abelian_structure(&c24).unwrap();
    assert_eq!(s.invariant_factors(), &[2, 4]);
    // coordinates give a bijection onto ℤ/2 ⊕ ℤ/4 compatible with the group law
    let mut seen = std::collections::HashSet::new();
    for x in 0..8 {
        assert!(seen.insert(s.coordinates(x).to_vec()));
        for y in 0..8 {
            let (a, b, c) = (s.coordinates(x), s.coordinates(y), s.coordinates(c24.mul(x, y)));
            assert_eq!(c[0], (a[0] + b[0]) % 2);
            assert_eq!(c[1], (a[1] + b[1]) % 4);
        }
    }
    let c6c4 = direct_product(&cyclic(6), &cyclic(4));
    assert_eq!(abelian_structure(&c6c4).unwrap().invariant_factors(), &[2, 12]);
    assert_eq!(abelian_structure(&symmetric(3)).unwrap_err(), Error::NotAbelian);
}

#[test]
fn extensions() {
    let d8 = Group::new(dihedral(8));
    let ext = ExtensionData::new(d8.clone(), &[0, 1, 2, 3]).unwrap();
    let q = ext.quotient();
    assert_eq!(q.order() * ext.subgroup().len(), d8.order());
    assert_eq!(ext.section(0), 0);
    for g in 0..8 {
        for h in 0..8 {
            assert_eq!(ext.projection(d8.mul(g, h)), q.mul(ext.projection(g), ext.projection(h)));
        }
    }
    for p in 0..q.order() {
        assert_eq!(ext.projection(ext.section(p)), p);
    }
    assert_eq!(ExtensionData::new(d8.clone(), &[0, 4]).unwrap_err(), Error::NotNormal);
    let s3 = Group::new(symmetric(3));
    assert_eq!(ExtensionData::new(s3, &(0..6).collect::<Vec<_>>()).unwrap_err(), Error::NotAbelian);
}
