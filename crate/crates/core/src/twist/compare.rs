use super::construct::TwistData;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, IntMatrix, Rational};
use crate::lambdaring::adams;

/// `χ_b(g) = Σ_{φ∈B(ḡ)} ζ^{−z(ḡ)(ḡφ)} · tr(g·e_φ | V)` with
/// `tr(g·e_φ) = |A|⁻¹ Σ_a conj(φ(a)) χ(ga)`, indexed by element.
pub fn twisted_character(td: &TwistData, chi: &ClassFunction) -> Result<Vec<Cyclotomic>> {
    let ext = td.extension();
    let g = ext.group();
    if chi.group().table() != g.table() {
        return Err(Error::MismatchedGroups);
    }
    let dual = td.dual();
    let action = td.action();
    let inv_a = Rational::new(1.into(), dual.order().into());
    let out = (0..g.order())
        .map(|x| {
            let q = ext.projection(x);
            let mut total = Cyclotomic::zero();
            for phi in action.fixed(q) {
                let mut iso = Cyclotomic::zero();
                for &a in ext.subgroup() {
                    let w = (-dual.eval(phi, a)).to_cyclotomic();
                    iso += &(&w * chi.at_element(g.mul(x, a)));
                }
                let c = (-td.z(q).values[action.on_dual(q, phi)]).to_cyclotomic();
                total += &(&c * &iso.scale(&inv_a));
            }
            total.reduced()
        })
        .collect();
    Ok(out)
}

/// `g^{·_b k}` by repeated twisted multiplication.
pub fn twisted_power(td: &TwistData, g: usize, k: u64) -> usize {
    let gb = td.twisted();
    (0..k).fold(gb.identity(), |acc, _| gb.mul(acc, g))
}

/// The `a ∈ A` with `g^{·_b k} = a·gᵏ` in `G`.
pub fn power_discrepancy(td: &TwistData, g: usize, k: u64) -> Result<usize> {
    let grp = td.group();
    let a = grp.mul(twisted_power(td, g, k), grp.inv(grp.pow(g, k as i64)));
    if !td.extension().abelian().contains(a) {
        return Err(Error::NotClosed(format!("discrepancy {a} outside A")));
    }
    Ok(a)
}

/// Whether the discrepancy of `gᵏ` pairs trivially with every character
/// fixed by `ḡᵏ`.
pub fn discrepancy_is_invisible(td: &TwistData, g: usize, k: u64) -> Result<bool> {
    let a = power_discrepancy(td, g, k)?;
    let ext = td.extension();
    let qk = ext.projection(td.group().pow(g, k as i64));
    Ok(td.action().fixed(qk).iter().all(|&phi| td.dual().eval(phi, a).is_zero()))
}

/// Result of [`compare_adams`]: `matching[i]` is the irreducible of `G_b`
/// equal to `χᵢ` of `G` as a function on elements, and
/// `diff[i][j] = Ψᵏ_{G_b}[m(i)][m(j)] − Ψᵏ_G[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdamsComparison {
    pub k: i64,
    pub matching: Vec<usize>,
    pub equal: bool,
    pub diff: IntMatrix,
}

/// Matches irreducibles of two groups on the same element set.
pub fn match_irreducibles(t: &CharacterTable, tb: &CharacterTable) -> Result<Vec<usize>> {
    let n = t.group().order();
    if tb.group().order() != n || t.rank() != tb.rank() {
        return Err(Error::MismatchedGroups);
    }
    let mut used = vec![false; tb.rank()];
    let mut matching = Vec::with_capacity(t.rank());
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let j = (0..tb.rank())
            .find(|&j| !used[j] && (0..n).all(|x| chi.at_element(x) == tb.irreducible(j).at_element(x)))
            .ok_or_else(|| Error::NoCharacterMatching(format!("irreducible {i}")))?;
        used[j] = true;
        matching.push(j);
    }
    Ok(matching)
}

pub fn compare_adams(t: &CharacterTable, tb: &CharacterTable, k: i64) -> Result<AdamsComparison> {
    let matching = match_irreducibles(t, tb)?;
    let a = adams(t, k)?;
    let ab = adams(tb, k)?;
    let r = t.rank();
    let mut diff = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            diff[(i, j)] = ab.entry(matching[i], matching[j]) - a.entry(i, j);
        }
    }
    Ok(AdamsComparison {
        k,
        matching,
        equal: diff.is_zero(),
        diff,
    })
}
