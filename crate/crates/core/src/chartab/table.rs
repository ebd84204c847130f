use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use num_traits::ToPrimitive;

use super::classfn::{inner_product, same_group, ClassFunction};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, IntMatrix};
use crate::groups::{Group, Subgroup};

/// The irreducible characters of a group, canonically ordered.
///
/// Ordering: degree ascending, then values compared class by class with
/// [`Cyclotomic::canonical_cmp`]. The trivial character is always first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<Group>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<usize>,
    pub(crate) adams_cache: Vec<OnceLock<IntMatrix>>,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.irreducibles == other.irreducibles
    }
}

pub(crate) fn cmp_rows(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    let da = a[0].as_integer();
    let db = b[0].as_integer();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            match x.cmp_reduced(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl CharacterTable {
    /// Builds a table from character values (one row per irreducible, one
    /// column per class), sorting rows canonically. Checks the row count,
    /// that degrees are positive integers dividing `|G|` and that the squares
    /// of the degrees sum to `|G|`.
    pub fn from_values(group: Arc<Group>, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = group.conjugacy().num_classes();
        if rows.len() != r {
            return Err(Error::MalformedTable(format!("{} characters for {r} classes", rows.len())));
        }
        let mut rows: Vec<Vec<Cyclotomic>> =
            rows.into_iter().map(|row| row.iter().map(Cyclotomic::reduced).collect()).collect();
        let n = group.order();
        let mut degrees = Vec::with_capacity(r);
        for row in &rows {
            let d = row
                .first()
                .and_then(|v| v.as_integer())
                .and_then(|d| d.to_usize())
                .filter(|&d| d > 0 && n % d == 0)
                .ok_or_else(|| Error::MalformedTable("degree is not a positive divisor of |G|".into()))?;
            degrees.push(d);
        }
        if degrees.iter().map(|d| d * d).sum::<usize>() != n {
            return Err(Error::MalformedTable("squares of degrees do not sum to |G|".into()));
        }
        rows.sort_by(|a, b| cmp_rows(a, b));
        degrees.sort_unstable();
        let irreducibles = rows
            .into_iter()
            .map(|v| ClassFunction::new(group.clone(), v))
            .collect::<Result<Vec<_>>>()?;
        if !irreducibles[0].values().iter().all(Cyclotomic::is_one) {
            return Err(Error::MalformedTable("first character is not trivial".into()));
        }
        let e = group.conjugacy().exponent();
        Ok(CharacterTable {
            group,
            irreducibles,
            degrees,
            adams_cache: (0..e).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of irreducibles (= number of classes).
    pub fn rank(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn exponent(&self) -> usize {
        self.group.conjugacy().exponent()
    }

    /// Value of irreducible `i` at class `c`.
    pub fn value(&self, i: usize, c: usize) -> &Cyclotomic {
        self.irreducibles[i].value(c)
    }

    /// Coefficients `⟨χⱼ | f⟩`, which must all be rational integers.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<i64>> {
        self.irreducibles
            .iter()
            .enumerate()
            .map(|(j, chi)| {
                let c = inner_product(chi, f)?;
                c.as_integer()
                    .and_then(|x| x.to_i64())
                    .ok_or_else(|| Error::NotVirtualCharacter {
                        index: j,
                        coefficient: c.to_string(),
                    })
            })
            .collect()
    }

    /// `Σ cᵢ χᵢ`.
    pub fn combine(&self, coeffs: &[i64]) -> ClassFunction {
        let r = self.rank();
        let values = (0..r)
            .map(|c| {
                let mut acc = Cyclotomic::zero();
                for (i, &k) in coeffs.iter().enumerate() {
                    if k != 0 {
                        acc += &(self.value(i, c) * &Cyclotomic::from_int(k));
                    }
                }
                acc.reduced()
            })
            .collect();
        ClassFunction::new(self.group.clone(), values).expect("class count matches")
    }

    /// Index of the irreducible equal to `f`, if any.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|chi| chi == f)
    }
}

/// Restriction of a class function on `G` to the subgroup `H`.
pub fn restrict(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    let emb = h.embedding();
    if emb.iter().any(|&x| x >= chi.group().order()) {
        return Err(Error::NotClosed("subgroup does not live in this group".into()));
    }
    Ok(ClassFunction::from_element_fn(h.group().clone(), |x| chi.at_element(emb[x]).clone()))
}
