use std::sync::Arc;

use proptest::prelude::*;
use repring::chartab::{abelian_character_table, character_table, induce_monomial, CharacterTable, MatrixRep};
use repring::exact::{CycMatrix, Cyclotomic, IntMatrix, QmodZ, Rational};
use repring::groups::{
    all_subgroups, cyclic, dihedral, direct_product, klein, quaternion8, symmetric, ExtensionData, Group, GroupTable,
    Subgroup,
};
use repring::lambdaring::{
    adams, based_ring_isomorphisms, commutes_with_adams, exponent_from_ring, fs_indicator, hom_cyclic_trace,
    lambda_op, order_from_ring, restriction_matrix, trace_identity_check, twisted_adams_abelian, RepRingElement,
};
use repring::Error;

fn table(g: GroupTable) -> Arc<CharacterTable> {
    Arc::new(character_table(Group::new(g)).unwrap())
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

/// Index of the irreducible whose value at every element `g` is `f(g)`.
fn find(t: &CharacterTable, f: impl Fn(usize) -> i64) -> usize {
    let n = t.group().order();
    (0..t.rank())
        .find(|&i| (0..n).all(|g| *t.irreducible(i).at_element(g) == int(f(g))))
        .expect("character present")
}

/// D8 with `x^i y^j q^k` at index `i + 2j + 4k`; `V_ab(x^i y^j q^k) = (−1)^{a·i + b·k}`.
fn d8_labels(t: &CharacterTable) -> ([usize; 4], usize) {
    let v = |a: usize, b: usize| find(t, move |g| if (a * (g & 1) + b * (g >> 2)) % 2 == 0 { 1 } else { -1 });
    let w = (0..5).find(|&i| t.degrees()[i] == 2).unwrap();
    ([v(0, 0), v(1, 0), v(0, 1), v(1, 1)], w)
}

#[test]
fn psi_one_is_identity_and_psi_zero_is_dimension() {
    for g in [cyclic(6), dihedral(8), quaternion8(), symmetric(4)] {
        let t = table(g);
        assert!(adams(&t, 1).unwrap().matrix().is_identity());
        let z = adams(&t, 0).unwrap();
        for i in 0..t.rank() {
            for j in 0..t.rank() {
                let expect = if j == 0 { t.degrees()[i] as i64 } else { 0 };
                assert_eq!(z.entry(i, j), expect);
            }
        }
    }
}

#[test]
fn d8_psi_two_of_w() {
    let t = table(dihedral(8));
    let ([v00, v10, v01, v11], w) = d8_labels(&t);
    let row = adams(&t, 2).unwrap().row(w).to_vec();
    let mut expect = vec![0; 5];
    expect[v00] = 1;
    expect[v10] = 1;
    expect[v01] = 1;
    expect[v11] = -1;
    assert_eq!(row, expect);
}

#[test]
fn s3_psi_two_of_standard() {
    // χ(g²) on (1, transposition, 3-cycle) is (2, 2, −1)
    let t = table(symmetric(3));
    assert_eq!(adams(&t, 2).unwrap().row(2), &[1, -1, 1]);
}

#[test]
fn lambda_operations() {
    let t = table(dihedral(8));
    let ([_, _, _, v11], w) = d8_labels(&t);
    let wel = RepRingElement::basis(t.clone(), w);
    assert_eq!(lambda_op(&wel, 1).unwrap(), wel);
    assert_eq!(lambda_op(&wel, 0).unwrap(), RepRingElement::one(t.clone()));
    // oracle: (W² − Ψ²W)/2 classwise
    let sq = wel.mul(&wel).unwrap();
    let psi2 = wel.adams(2).unwrap();
    let half: Vec<i64> = (&sq - &psi2).coeffs().iter().map(|c| c / 2).collect();
    assert_eq!(lambda_op(&wel, 2).unwrap().coeffs(), half.as_slice());
    assert_eq!(lambda_op(&wel, 2).unwrap(), RepRingElement::basis(t.clone(), v11));
    for i in 0..4 {
        let line = RepRingElement::basis(t.clone(), i);
        for n in 2..5 {
            assert!(lambda_op(&line, n).unwrap().is_zero());
        }
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn lambda_dimensions_are_binomial() {
    let t = table(symmetric(4));
    let x = &RepRingElement::basis(t.clone(), 3) + &RepRingElement::basis(t.clone(), 1);
    let d = x.dim();
    for n in 0..=d as usize + 1 {
        let l = lambda_op(&x, n).unwrap();
        assert_eq!(l.dim(), binomial(d, n as i64));
        assert!(l.coeffs().iter().all(|&c| c >= 0));
    }
}

fn fs_oracle(t: &CharacterTable, k: i64, j: usize) -> Cyclotomic {
    let g = t.group();
    let n = g.order();
    let s: Cyclotomic = (0..n).map(|x| t.irreducible(j).at_element(g.pow(x, k)).clone()).sum();
    s.scale(&Rational::new(1.into(), n.into())).reduced()
}

#[test]
fn frobenius_schur() {
    let d8 = table(dihedral(8));
    for j in 0..5 {
        assert_eq!(fs_oracle(&d8, 2, j), int(1));
        assert_eq!(fs_indicator(&d8, 2, j).unwrap(), 1);
    }
    let q8 = table(quaternion8());
    let w = (0..5).find(|&i| q8.degrees()[i] == 2).unwrap();
    assert_eq!(fs_oracle(&q8, 2, w), int(-1));
    assert_eq!(fs_indicator(&q8, 2, w).unwrap(), -1);
    let c3 = table(cyclic(3));
    for t in [d8, q8, c3] {
        for j in 1..t.rank() {
            assert_eq!(fs_indicator(&t, 1, j).unwrap(), 0);
        }
        for j in 0..t.rank() {
            for k in 0..4 {
                assert_eq!(int(fs_indicator(&t, k, j).unwrap()), fs_oracle(&t, k, j));
            }
        }
    }
}

#[test]
fn order_and_exponent_recovery() {
    assert_eq!(order_from_ring(&table(cyclic(1))), 1);
    assert_eq!(order_from_ring(&table(symmetric(3))), 6);
    for g in [cyclic(4), klein(), dihedral(8), quaternion8(), symmetric(4), cyclic(12)] {
        let t = table(g.clone());
        assert_eq!(order_from_ring(&t), g.order() as u64);
        assert_eq!(exponent_from_ring(&t).unwrap(), g.exponent() as u64);
    }
    assert_eq!(exponent_from_ring(&table(cyclic(4))).unwrap(), 4);
    assert_eq!(exponent_from_ring(&table(klein())).unwrap(), 2);
    assert_eq!(exponent_from_ring(&table(dihedral(8))).unwrap(), 4);
}

#[test]
fn trace_identity_small_cases() {
    let f = CycMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), Cyclotomic::zeta(4, 1)]]);
    let one = trace_identity_check(&[f.clone()]).unwrap();
    assert!(one.equal);
    assert_eq!(one.lhs, f.trace());
    let flip = trace_identity_check(&[CycMatrix::identity(2), CycMatrix::identity(2)]).unwrap();
    assert_eq!((flip.lhs.clone(), flip.rhs.clone()), (int(2), int(2)));
    assert!(matches!(
        trace_identity_check(&[CycMatrix::identity(2), CycMatrix::identity(3)]),
        Err(Error::DimensionMismatch(_))
    ));
}

fn rational_matrix(d: usize) -> impl Strategy<Value = CycMatrix> {
    prop::collection::vec((-10i64..=10, 1i64..=10), d * d).prop_map(move |v| {
        let rows = v
            .chunks(d)
            .map(|r| r.iter().map(|&(a, b)| Cyclotomic::from_rational(Rational::new(a.into(), b.into()))).collect())
            .collect();
        CycMatrix::from_rows(rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn trace_identity_three_by_two(fs in prop::collection::vec(rational_matrix(2), 3)) {
        let c = trace_identity_check(&fs).unwrap();
        prop_assert!(c.equal);
    }
}

fn d8_reps() -> (Arc<CharacterTable>, Vec<MatrixRep>) {
    let g = Group::new(dihedral(8));
    let t = Arc::new(character_table(g.clone()).unwrap());
    // W is induced from the Klein subgroup; lines are taken as 1×1 matrices
    let klein = ExtensionData::new(g.clone(), &[0, 1, 2, 3]).unwrap();
    let whole_a = ExtensionData::new(g.clone(), &[0, 2, 4, 6]).unwrap();
    let mut reps: Vec<Option<MatrixRep>> = vec![None; t.rank()];
    for ext in [&klein, &whole_a] {
        for phi in ext.abelian().coordinate_vectors() {
            let rep = induce_monomial(ext, &phi).unwrap();
            let dec = t.decompose(&rep.character()).unwrap();
            if let Some(i) = (0..t.rank()).find(|&i| dec[i] == 1 && dec.iter().sum::<i64>() == 1) {
                reps[i].get_or_insert(rep);
            }
        }
    }
    for i in 0..t.rank() {
        if reps[i].is_none() && t.degrees()[i] == 1 {
            let chi = t.irreducible(i);
            let mats = (0..8).map(|x| CycMatrix::from_rows(vec![vec![chi.at_element(x).clone()]])).collect();
            reps[i] = Some(MatrixRep::new(g.clone(), mats).unwrap());
        }
    }
    (t, reps.into_iter().map(Option::unwrap).collect())
}

#[test]
fn hom_trace_matches_adams_on_d8() {
    let (t, reps) = d8_reps();
    let (_, w) = d8_labels(&t);
    for k in [2usize, 3] {
        let m = adams(&t, k as i64).unwrap();
        for j in 0..t.rank() {
            let tr = hom_cyclic_trace(&reps[w], &reps[j], k).unwrap();
            assert_eq!(tr, int(m.entry(w, j)), "k = {k}, j = {j}");
        }
    }
    assert!(matches!(hom_cyclic_trace(&reps[w], &reps[w], 12), Err(Error::SizeBoundExceeded(..))));
}

#[test]
fn hom_trace_on_abelian_groups() {
    let g = Group::new(cyclic(5));
    let lines: Vec<MatrixRep> = (0..5)
        .map(|a| {
            let mats = (0..5).map(|x| CycMatrix::from_rows(vec![vec![Cyclotomic::zeta(5, a * x as i64)]])).collect();
            MatrixRep::new(g.clone(), mats).unwrap()
        })
        .collect();
    for k in 1..6usize {
        for a in 0..5 {
            for b in 0..5 {
                let expect = i64::from((a * k) % 5 == b);
                assert_eq!(hom_cyclic_trace(&lines[a], &lines[b], k).unwrap(), int(expect));
            }
        }
    }
    let triv = Group::new(cyclic(1));
    let one = MatrixRep::new(triv, vec![CycMatrix::identity(1)]).unwrap();
    assert_eq!(hom_cyclic_trace(&one, &one, 5).unwrap(), int(1));
}

fn klein_pairing(t: &repring::chartab::AbelianCharacterTable, nontrivial: bool) -> Vec<Vec<QmodZ>> {
    let r = t.exponents.len();
    (0..r)
        .map(|p| {
            (0..r)
                .map(|q| {
                    let (a, b) = (&t.exponents[p], &t.exponents[q]);
                    if nontrivial {
                        QmodZ::new((a[0] * b[1] + a[1] * b[0]) as i64, 2)
                    } else {
                        QmodZ::ZERO
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn klein_twisted_adams() {
    let t = abelian_character_table(Group::new(klein())).unwrap();
    let s = klein_pairing(&t, true);
    for k in 0..4 {
        let tw = twisted_adams_abelian(&t, &s, k).unwrap();
        assert_eq!(tw, adams(&t.table, k).unwrap());
        if k % 2 == 1 {
            assert!(tw.matrix().is_identity());
        } else {
            assert!((0..4).all(|i| tw.row(i) == [1, 0, 0, 0]));
        }
        let zero = twisted_adams_abelian(&t, &klein_pairing(&t, false), k).unwrap();
        assert_eq!(zero, adams(&t.table, k).unwrap());
    }
    let mut bad = s.clone();
    bad[1][1] = QmodZ::new(1, 2);
    assert!(twisted_adams_abelian(&t, &bad, 3).is_err());
    let mut bad = s;
    bad[1][2] = bad[1][2] + QmodZ::new(1, 4);
    assert_eq!(twisted_adams_abelian(&t, &bad, 3).unwrap_err(), Error::PairingNotBiadditive);
}

#[test]
fn d8_and_q8_are_ring_isomorphic_but_not_lambda_isomorphic() {
    let d8 = table(dihedral(8));
    let q8 = table(quaternion8());
    let isos = based_ring_isomorphisms(&d8, &q8).unwrap();
    assert!(!isos.is_empty());
    for iso in &isos {
        assert!(!commutes_with_adams(&d8, &q8, iso, 2).unwrap());
        assert!(commutes_with_adams(&d8, &q8, iso, 3).unwrap());
    }
    let selfs = based_ring_isomorphisms(&d8, &d8).unwrap();
    assert!(selfs.contains(&(0..5).collect()));
    assert!(based_ring_isomorphisms(&d8, &table(cyclic(8))).unwrap().is_empty());
}

fn catalog_like() -> Vec<GroupTable> {
    vec![
        cyclic(1),
        cyclic(6),
        cyclic(8),
        klein(),
        symmetric(3),
        dihedral(8),
        quaternion8(),
        direct_product(&cyclic(2), &cyclic(4)),
        dihedral(12),
    ]
}

#[test]
fn adams_is_multiplicative_in_k() {
    for g in catalog_like() {
        let t = table(g);
        let e = t.exponent() as i64;
        for m in 0..e {
            for n in 0..e {
                let prod = adams(&t, m).unwrap().matrix() * adams(&t, n).unwrap().matrix();
                assert_eq!(&prod, adams(&t, m * n).unwrap().matrix());
            }
        }
    }
}

#[test]
fn frobenius_lift() {
    for g in catalog_like() {
        let t = table(g);
        for p in [2i64, 3, 5] {
            for i in 0..t.rank() {
                let x = RepRingElement::basis(t.clone(), i);
                let diff = &x.adams(p).unwrap() - &x.pow(p as u32).unwrap();
                assert!(diff.coeffs().iter().all(|c| c % p == 0));
            }
        }
    }
}

#[test]
fn naturality_under_restriction() {
    for g in [dihedral(8), quaternion8(), symmetric(4)] {
        let grp = Group::new(g);
        let tg = character_table(grp.clone()).unwrap();
        for s in all_subgroups(&grp) {
            let h = Subgroup::new(&grp, &s).unwrap();
            let th = character_table(h.group().clone()).unwrap();
            let r: IntMatrix = restriction_matrix(&tg, &th, &h).unwrap();
            for k in 0..tg.exponent() as i64 {
                let lhs = adams(&tg, k).unwrap().matrix() * &r;
                let rhs = &r * adams(&th, k).unwrap().matrix();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
