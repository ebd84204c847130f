//! The verification suite: ten numbered checks, each reporting pass/fail
//! with a one-line detail.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog, CATALOG};
use crate::chartab::{
    abelian_character_table, character_table, induce_monomial, inner_product, CharacterTable, MatrixRep,
};
use crate::error::Result;
use crate::exact::{CycMatrix, Cyclotomic, IntMatrix, QmodZ, Rational};
use crate::groups::{
    all_subgroups, dihedral, normal_abelian_subgroups, quaternion8, ExtensionData, Group, Subgroup,
};
use crate::lambdaring::{
    adams, based_ring_isomorphisms, commutes_with_adams, exponent_from_ring, hom_cyclic_trace, order_from_ring,
    restriction_matrix, trace_identity_check, twisted_adams_abelian, RepRingElement,
};
use crate::twist::{compare_adams, d8_basis, d8_example, klein_example, twisted_character, twists_over, TwistData};

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}: {} ({}; {:.2?})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

pub const NAMES: [&str; 10] = [
    "D8 twist golden data",
    "odd Adams operations preserved by twists",
    "D8 and Q8 separated by Psi^2",
    "Klein twisted symmetry",
    "order and exponent recovery",
    "lambda-ring laws",
    "trace identity, 200 seeded cases",
    "Hom-space cyclic trace against Adams",
    "twisted characters equal the originals",
    "character table integrity",
];

type Check = fn() -> Result<(bool, String)>;

const CHECKS: [Check; 10] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10];

pub fn run(id: usize) -> CriterionResult {
    assert!((1..=10).contains(&id), "criteria are numbered 1 to 10");
    let start = Instant::now();
    let (passed, detail) = match CHECKS[id - 1]() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name: NAMES[id - 1],
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=10).map(run).collect()
}

fn table(g: Arc<Group>) -> Result<Arc<CharacterTable>> {
    Ok(Arc::new(character_table(g)?))
}

fn c1() -> Result<(bool, String)> {
    let td = d8_example()?;
    let dual = td.dual();
    let alpha_ok = dual.characters().iter().enumerate().all(|(p, phi)| {
        dual.characters()
            .iter()
            .enumerate()
            .all(|(r, psi)| td.alpha().value(p, r) == QmodZ::new((phi[1] * psi[0]) as i64, 2))
    });
    // y is element 2, the generator q is Q's element 1
    let b_ok = td.b().value(1, 1) == 2;
    let z_normalized = td.cochains().iter().all(|c| td.action().fixed(c.q).iter().all(|&p| c.values[p].is_zero()));
    let (t, tb) = (table(td.group().clone())?, table(td.twisted().clone())?);
    let Some(basis) = d8_basis(&t) else {
        return Ok((false, "D8 characters not found".into()));
    };
    let w = basis[4];
    let psi = adams(&t, 2)?;
    let ours: Vec<i64> = basis.iter().map(|&j| psi.entry(w, j)).collect();
    let cmp = compare_adams(&t, &tb, 2)?;
    let theirs: Vec<i64> = basis.iter().map(|&j| psi.entry(w, j) + cmp.diff[(w, j)]).collect();
    let passed = alpha_ok && b_ok && z_normalized && ours == [1, 1, 1, -1, 0] && theirs == [1, -1, 1, 1, 0];
    Ok((
        passed,
        format!("alpha {alpha_ok}, b(q,q)=y {b_ok}, Psi2(W) {ours:?}, twisted {theirs:?}"),
    ))
}

fn is_klein(g: &Group, a: &[usize]) -> bool {
    a.len() == 4 && a.iter().all(|&x| g.element_order(x) <= 2)
}

/// Every twist over a normal Klein subgroup of a catalog group of order
/// at most 16.
fn catalog_klein_twists() -> Result<Vec<(String, TwistData)>> {
    let mut out = Vec::new();
    for g in catalog().into_iter().filter(|g| g.order() <= 16) {
        let name = g.name().to_string();
        let grp = Group::new(g);
        for a in normal_abelian_subgroups(&grp) {
            if is_klein(&grp, &a) {
                for td in twists_over(grp.clone(), &a)? {
                    out.push((name.clone(), td));
                }
            }
        }
    }
    Ok(out)
}

fn c2() -> Result<(bool, String)> {
    let td = d8_example()?;
    let (t, tb) = (table(td.group().clone())?, table(td.twisted().clone())?);
    let mut ok = true;
    for k in [1, 3, 5, 7] {
        ok &= compare_adams(&t, &tb, k)?.equal;
    }
    ok &= !compare_adams(&t, &tb, 2)?.equal;
    let twists = catalog_klein_twists()?;
    let mut comparisons = 0;
    let mut failures = Vec::new();
    for (name, td) in &twists {
        let (t, tb) = (table(td.group().clone())?, table(td.twisted().clone())?);
        for k in (1..t.exponent() as i64).step_by(2) {
            comparisons += 1;
            if !compare_adams(&t, &tb, k)?.equal {
                failures.push(format!("{name} k={k}"));
            }
        }
    }
    let passed = ok && failures.is_empty() && !twists.is_empty();
    Ok((
        passed,
        format!(
            "D8 verdicts {ok}; {} catalog twists, {comparisons} odd-k comparisons, {} mismatches",
            twists.len(),
            failures.len()
        ),
    ))
}

fn c3() -> Result<(bool, String)> {
    let d8 = table(Group::new(dihedral(8)))?;
    let q8 = table(Group::new(quaternion8()))?;
    let isos = based_ring_isomorphisms(&d8, &q8)?;
    let mut commuting = 0;
    for iso in &isos {
        if commutes_with_adams(&d8, &q8, iso, 2)? {
            commuting += 1;
        }
    }
    Ok((
        !isos.is_empty() && commuting == 0,
        format!("{} based isomorphisms, {commuting} commute with Psi2", isos.len()),
    ))
}

fn c4() -> Result<(bool, String)> {
    let (t, pairing) = klein_example()?;
    let trivial = t.exponents.iter().position(|e| e.iter().all(|&x| x == 0)).unwrap_or(0);
    let mut ok = true;
    for k in 0..=3i64 {
        let tw = twisted_adams_abelian(&t, &pairing, k)?;
        let plain = adams(&t.table, k)?;
        ok &= tw.matrix() == plain.matrix();
        if k % 2 == 1 {
            ok &= tw.matrix().is_identity();
        } else if k >= 2 {
            ok &= (0..4).all(|i| (0..4).all(|j| tw.entry(i, j) == i64::from(j == trivial)));
        }
    }
    Ok((ok, "k = 0..3 compared".into()))
}

fn c5() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for g in catalog() {
        let (n, e, name) = (g.order() as u64, g.exponent() as u64, g.name().to_string());
        let t = table(Group::new(g))?;
        if order_from_ring(&t) != n || exponent_from_ring(&t)? != e {
            bad.push(name);
        }
    }
    Ok((bad.is_empty(), format!("{} groups, mismatches {bad:?}", CATALOG.len())))
}

fn c6() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut subgroup_pairs = 0;
    for g in catalog() {
        let name = g.name().to_string();
        let grp = Group::new(g);
        let t = table(grp.clone())?;
        let e = t.exponent() as i64;
        let mats = (0..e).map(|k| adams(&t, k).map(|m| m.matrix().clone())).collect::<Result<Vec<_>>>()?;
        for m in 0..e {
            for n in 0..e {
                if &mats[m as usize] * &mats[n as usize] != *adams(&t, m * n)?.matrix() {
                    bad.push(format!("{name} composition {m},{n}"));
                }
            }
        }
        for p in [2i64, 3, 5] {
            for i in 0..t.rank() {
                let x = RepRingElement::basis(t.clone(), i);
                let d = &x.adams(p)? - &x.pow(p as u32)?;
                if d.coeffs().iter().any(|c| c % p != 0) {
                    bad.push(format!("{name} Frobenius p={p}"));
                }
            }
        }
        for s in all_subgroups(&grp) {
            subgroup_pairs += 1;
            let h = Subgroup::new(&grp, &s)?;
            let th = character_table(h.group().clone())?;
            let r: IntMatrix = restriction_matrix(&t, &th, &h)?;
            for k in 0..e {
                if adams(&t, k)?.matrix() * &r != &r * adams(&th, k)?.matrix() {
                    bad.push(format!("{name} naturality |H|={} k={k}", s.len()));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{subgroup_pairs} subgroup pairs; failures {bad:?}"),
    ))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Cyclotomic {
    let num: i64 = rng.gen_range(-10..=10);
    let den: i64 = rng.gen_range(1..=10);
    Cyclotomic::from_rational(Rational::new(num.into(), den.into()))
}

fn c7() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut failures = 0;
    for _ in 0..200 {
        let d = rng.gen_range(1..=3usize);
        let k = rng.gen_range(1..=4usize);
        let fs: Vec<CycMatrix> = (0..k)
            .map(|_| CycMatrix::from_rows((0..d).map(|_| (0..d).map(|_| random_rational(&mut rng)).collect()).collect()))
            .collect();
        if !trace_identity_check(&fs)?.equal {
            failures += 1;
        }
    }
    Ok((failures == 0, format!("200 cases, {failures} failures")))
}

/// Monomial matrix representations of every irreducible of D8: `W` induced
/// from a Klein subgroup, lines as 1×1 matrices.
fn d8_monomial_reps(t: &CharacterTable) -> Result<Vec<MatrixRep>> {
    let g = t.group().clone();
    let ext = ExtensionData::new(g.clone(), &[0, 1, 2, 3])?;
    let mut reps: Vec<Option<MatrixRep>> = vec![None; t.rank()];
    for phi in ext.abelian().coordinate_vectors() {
        let rep = induce_monomial(&ext, &phi)?;
        let dec = t.decompose(&rep.character())?;
        if let Some(i) = (0..t.rank()).find(|&i| dec[i] == 1 && dec.iter().sum::<i64>() == 1) {
            reps[i].get_or_insert(rep);
        }
    }
    for (i, slot) in reps.iter_mut().enumerate() {
        if slot.is_none() {
            let chi = t.irreducible(i);
            let mats = (0..g.order()).map(|x| CycMatrix::from_rows(vec![vec![chi.at_element(x).clone()]])).collect();
            *slot = Some(MatrixRep::new(g.clone(), mats)?);
        }
    }
    Ok(reps.into_iter().flatten().collect())
}

fn c8() -> Result<(bool, String)> {
    let t = table(Group::new(dihedral(8)))?;
    let reps = d8_monomial_reps(&t)?;
    let Some(w) = (0..t.rank()).find(|&i| t.degrees()[i] == 2) else {
        return Ok((false, "no 2-dimensional irreducible".into()));
    };
    let mut ok = reps[w].dim() == 2;
    let mut checked = 0;
    for k in [2usize, 3] {
        let m = adams(&t, k as i64)?;
        for (j, rep) in reps.iter().enumerate() {
            checked += 1;
            ok &= hom_cyclic_trace(&reps[w], rep, k)? == Cyclotomic::from_int(m.entry(w, j));
        }
    }
    Ok((ok, format!("{checked} entries compared")))
}

fn c9() -> Result<(bool, String)> {
    let mut twists = vec![("D8".to_string(), d8_example()?)];
    twists.extend(catalog_klein_twists()?);
    let mut values = 0;
    let mut bad = Vec::new();
    for (name, td) in &twists {
        let t = character_table(td.group().clone())?;
        for (i, chi) in t.irreducibles().iter().enumerate() {
            let chib = twisted_character(td, chi)?;
            values += chib.len();
            if chib.iter().enumerate().any(|(x, v)| v != chi.at_element(x)) {
                bad.push(format!("{name} irreducible {i}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} twists, {values} values; mismatches {bad:?}", twists.len()),
    ))
}

fn c10() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut abelian = 0;
    for g in catalog() {
        let name = g.name().to_string();
        let grp = Group::new(g);
        let t = character_table(grp.clone())?;
        let n = grp.order();
        let r = t.rank();
        let sum_sq: usize = t.degrees().iter().map(|d| d * d).sum();
        if sum_sq != n {
            bad.push(format!("{name} degrees"));
        }
        for i in 0..r {
            for j in 0..r {
                let ip = inner_product(t.irreducible(i), t.irreducible(j))?;
                if ip != Cyclotomic::from_int(i64::from(i == j)) {
                    bad.push(format!("{name} rows {i},{j}"));
                }
            }
        }
        let conj = grp.conjugacy();
        for c in 0..r {
            for d in 0..r {
                let s: Cyclotomic = (0..r).map(|i| t.value(i, c) * &t.value(i, d).conjugate()).sum();
                let expect = if c == d { conj.centralizer_order(c) as i64 } else { 0 };
                if s.reduced() != Cyclotomic::from_int(expect) {
                    bad.push(format!("{name} columns {c},{d}"));
                }
            }
        }
        if grp.is_abelian() {
            abelian += 1;
            if abelian_character_table(grp.clone())?.table != t {
                bad.push(format!("{name} abelian path"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} groups ({abelian} abelian); failures {bad:?}", CATALOG.len()),
    ))
}
