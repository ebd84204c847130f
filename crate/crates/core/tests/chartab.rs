use std::sync::Arc;

use repring::chartab::{
    abelian_character_table, character_table, character_table_seeded, induce_monomial, inner_product, restrict,
    CharacterTable, ClassFunction,
};
use repring::exact::{CycMatrix, Cyclotomic};
use repring::groups::{
    alternating, cyclic, dihedral, direct_product, klein, quaternion8, symmetric, ExtensionData, Group, Subgroup,
};
use repring::Error;

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn table(g: repring::groups::GroupTable) -> CharacterTable {
    character_table(Group::new(g)).unwrap()
}

fn check_orthogonality(t: &CharacterTable) {
    let g = t.group();
    let conj = g.conjugacy();
    let r = t.rank();
    for i in 0..r {
        for j in 0..r {
            let ip = inner_product(t.irreducible(i), t.irreducible(j)).unwrap();
            assert_eq!(ip, int(i64::from(i == j)), "{} rows {i},{j}", g.name());
        }
    }
    for a in 0..r {
        for b in 0..r {
            let mut s = Cyclotomic::zero();
            for i in 0..r {
                s += &(&t.value(i, a).conjugate() * t.value(i, b));
            }
            let expect = if a == b { conj.centralizer_order(a) as i64 } else { 0 };
            assert_eq!(s, int(expect), "{} columns {a},{b}", g.name());
        }
    }
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<usize>(), g.order());
}

#[test]
fn cyclic_two() {
    let t = table(cyclic(2));
    assert_eq!(t.irreducible(0).values(), &[int(1), int(1)]);
    assert_eq!(t.irreducible(1).values(), &[int(1), int(-1)]);
}

#[test]
fn d8_degrees() {
    let t = table(dihedral(8));
    assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
    check_orthogonality(&t);
}

#[test]
fn s3_standard_character() {
    // rotation by 2π/3 and a reflection, traced
    let s3 = Group::new(symmetric(3));
    let t = character_table(s3.clone()).unwrap();
    let conj = s3.conjugacy();
    let std = t.irreducible(2);
    for c in 0..3 {
        let o = conj.element_order(c);
        let expect = match o {
            1 => 2,
            2 => 0,
            3 => -1,
            _ => unreachable!(),
        };
        assert_eq!(std.value(c), &int(expect));
    }
    // ⟨χ²|1⟩ = 1
    let sq = std.mul(std).unwrap();
    assert_eq!(inner_product(&sq, t.irreducible(0)).unwrap(), int(1));
    assert_eq!(t.decompose(&sq).unwrap(), vec![1, 1, 1]);
}

#[test]
fn regular_character() {
    let g = Group::new(alternating(4));
    let t = character_table(g.clone()).unwrap();
    let reg = ClassFunction::from_element_fn(g.clone(), |x| int(if x == 0 { 12 } else { 0 }));
    assert_eq!(inner_product(t.irreducible(0), &reg).unwrap(), int(1));
    let dec = t.decompose(&reg).unwrap();
    assert_eq!(dec, t.degrees().iter().map(|&d| d as i64).collect::<Vec<_>>());
    let half = ClassFunction::from_element_fn(g, |x| int(if x == 0 { 6 } else { 0 }));
    assert!(matches!(t.decompose(&half), Err(Error::NotVirtualCharacter { .. })));
}

#[test]
fn orthogonality_across_groups() {
    for g in [
        cyclic(1),
        cyclic(7),
        cyclic(12),
        quaternion8(),
        dihedral(10),
        dihedral(12),
        alternating(4),
        symmetric(4),
        direct_product(&quaternion8(), &cyclic(2)),
        direct_product(&cyclic(3), &symmetric(3)),
    ] {
        check_orthogonality(&table(g));
    }
}

#[test]
fn seeds_do_not_change_the_table() {
    let g = Group::new(symmetric(4));
    let a = character_table_seeded(g.clone(), 0).unwrap();
    let b = character_table_seeded(g, 99).unwrap();
    assert_eq!(a, b);
}

#[test]
fn abelian_path_agrees_with_dixon() {
    for g in [cyclic(3), cyclic(8), klein(), direct_product(&cyclic(2), &cyclic(4)), direct_product(&cyclic(3), &cyclic(3))] {
        let grp = Group::new(g);
        let dixon = character_table(grp.clone()).unwrap();
        let direct = abelian_character_table(grp).unwrap();
        assert_eq!(dixon, direct.table);
    }
    let k = abelian_character_table(Group::new(klein())).unwrap();
    for chi in k.table.irreducibles() {
        assert!(chi.values().iter().all(|v| *v == int(1) || *v == int(-1)));
    }
    let c3 = abelian_character_table(Group::new(cyclic(3))).unwrap();
    for chi in c3.table.irreducibles() {
        assert!(chi.values().iter().all(|v| (0..3).any(|j| *v == Cyclotomic::zeta(3, j))));
    }
    let c24 = abelian_character_table(Group::new(direct_product(&cyclic(2), &cyclic(4)))).unwrap();
    assert_eq!(c24.exponents.len(), 8);
    assert_eq!(c24.structure.invariant_factors(), &[2, 4]);
}

#[test]
fn restriction_of_d8_to_klein() {
    let d8 = Group::new(dihedral(8));
    let t = character_table(d8.clone()).unwrap();
    let a = Subgroup::new(&d8, &[0, 1, 2, 3]).unwrap();
    let w = restrict(t.irreducible(4), &a).unwrap();
    let ta = character_table(a.group().clone()).unwrap();
    // W restricted to ⟨x, y⟩ is the sum of the two characters nontrivial on x
    let dec = ta.decompose(&w).unwrap();
    assert_eq!(dec.iter().sum::<i64>(), 2);
    assert!(dec.iter().all(|&c| c == 0 || c == 1));
}

#[test]
fn monomial_induction() {
    let d8 = Group::new(dihedral(8));
    let t = character_table(d8.clone()).unwrap();
    let ext = ExtensionData::new(d8.clone(), &[0, 1, 2, 3]).unwrap();
    let a = ext.abelian();
    let y_coords = a.coordinates(2).to_vec();
    for phi in a.coordinate_vectors() {
        let rep = induce_monomial(&ext, &phi).unwrap();
        assert!(rep.is_multiplicative());
        let chi = rep.character();
        let dec = t.decompose(&chi).unwrap();
        assert!(dec.iter().all(|&c| c >= 0));
        // q x q⁻¹ = xy, so φ is q-fixed exactly when φ(y) = 1; otherwise the
        // induced module is W
        let on_y: u64 = phi.iter().zip(&y_coords).map(|(p, c)| p * c).sum::<u64>() % 2;
        if on_y == 1 {
            assert_eq!(dec, vec![0, 0, 0, 0, 1]);
        } else {
            assert_eq!(dec.iter().sum::<i64>(), 2);
        }
    }
    // A = G abelian: one-dimensional, equal to φ
    let c4 = Group::new(cyclic(4));
    let ext = ExtensionData::new(c4.clone(), &[0, 1, 2, 3]).unwrap();
    let rep = induce_monomial(&ext, &[1]).unwrap();
    assert_eq!(rep.dim(), 1);
    let g = ext.abelian().generators()[0];
    assert_eq!(rep.matrix(g), &CycMatrix::from_rows(vec![vec![Cyclotomic::zeta(4, 1)]]));
    // trivial φ on the trivial subgroup of the trivial group
    let c1 = Group::new(cyclic(1));
    let ext = ExtensionData::new(c1, &[0]).unwrap();
    assert_eq!(induce_monomial(&ext, &[]).unwrap().dim(), 1);
}

#[test]
fn mismatched_groups() {
    let a = table(cyclic(2));
    let b: Arc<Group> = Group::new(cyclic(3));
    let f = ClassFunction::from_element_fn(b, |_| int(1));
    assert_eq!(inner_product(a.irreducible(0), &f).unwrap_err(), Error::MismatchedGroups);
}
