//! JSON formats for cyclotomics, groups, character tables and twist specs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, IntMatrix, QmodZ, Rational};
use crate::groups::{AbelianStructure, ExtensionData, Group, GroupTable};
use crate::twist::{Cochain1, Cocycle2, DualGroup, TwistData};

/// `{"order": n, "coeffs": [[exponent, "num/den"], ...]}`, the value
/// `Σ c·ζₙᵉ` in its minimal field, nonzero terms only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub order: u64,
    pub coeffs: Vec<(u64, String)>,
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(c: &Cyclotomic) -> Self {
        let r = c.reduced();
        let coeffs = r
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, x)| *x != &Rational::from_integer(0.into()))
            .map(|(e, x)| (e as u64, x.to_string()))
            .collect();
        CyclotomicJson { order: r.order(), coeffs }
    }
}

impl TryFrom<&CyclotomicJson> for Cyclotomic {
    type Error = Error;
    fn try_from(j: &CyclotomicJson) -> Result<Self> {
        if j.order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        let mut total = Cyclotomic::zero();
        for (e, s) in &j.coeffs {
            let r: BigRational = s
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad rational '{s}'")))?;
            total += &Cyclotomic::zeta(j.order, *e as i64).scale(&r);
        }
        Ok(total.reduced())
    }
}

/// Either a full table or permutation generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table {
        name: String,
        order: usize,
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Permutations {
        name: String,
        degree: usize,
        perm_gens: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn into_table(self, limit: usize) -> Result<GroupTable> {
        match self {
            GroupFile::Table { name, order, mul, labels } => {
                if mul.len() != order {
                    return Err(Error::MalformedTable(format!("order {order} but {} rows", mul.len())));
                }
                if order > limit {
                    return Err(Error::OrderExceedsLimit(limit));
                }
                let mut t = GroupTable::from_table(&mul)?.with_name(name);
                if let Some(l) = labels {
                    if l.len() != order {
                        return Err(Error::MalformedTable("label count differs from order".into()));
                    }
                    t = t.with_labels(l);
                }
                Ok(t)
            }
            GroupFile::Permutations { name, degree, perm_gens } => {
                Ok(GroupTable::from_permutations(degree, &perm_gens, limit)?.with_name(name))
            }
        }
    }

    pub fn from_table(g: &GroupTable) -> Self {
        GroupFile::Table {
            name: g.name().to_string(),
            order: g.order(),
            mul: g.rows(),
            labels: Some(g.labels().to_vec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep: String,
    pub size: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleJson {
    pub degree: usize,
    pub values: Vec<CyclotomicJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<IrreducibleJson>,
}

impl From<&CharacterTable> for TableJson {
    fn from(t: &CharacterTable) -> Self {
        let g = t.group();
        let conj = g.conjugacy();
        let classes = (0..conj.num_classes())
            .map(|c| ClassJson {
                rep: g.label(conj.representative(c)).to_string(),
                size: conj.class_size(c),
                order: conj.element_order(c),
            })
            .collect();
        let irreducibles = t
            .irreducibles()
            .iter()
            .zip(t.degrees())
            .map(|(chi, &degree)| IrreducibleJson {
                degree,
                values: chi.values().iter().map(CyclotomicJson::from).collect(),
            })
            .collect();
        TableJson {
            group: g.name().to_string(),
            classes,
            irreducibles,
        }
    }
}

/// Row-major integer matrix.
pub fn matrix_json(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
}

/// `{"group", "subgroup", "alpha", optional "z", optional "generators"}`.
/// `alpha` is indexed by the dual enumeration of `A` (first coordinate
/// fastest, against `A`'s invariant factors or the given generators).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub group: String,
    pub subgroup: Vec<usize>,
    pub alpha: Vec<Vec<QmodZ>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<BTreeMap<usize, Vec<QmodZ>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
}

impl TwistSpec {
    /// Builds the twist over an already loaded group. Cochains missing from
    /// `z` are solved for.
    pub fn build(&self, group: Arc<Group>) -> Result<TwistData> {
        let a = match &self.generators {
            Some(gens) => AbelianStructure::with_generators(&group, &self.subgroup, gens)?,
            None => AbelianStructure::new(&group, &self.subgroup)?,
        };
        let ext = ExtensionData::with_structure(group, a)?;
        let dual = DualGroup::new(ext.abelian().clone());
        let alpha = Cocycle2::new(&dual, self.alpha.clone())?;
        match &self.z {
            None => TwistData::new(ext, alpha),
            Some(given) => {
                let solved = TwistData::new(ext.clone(), alpha.clone())?;
                let z = (0..ext.quotient().order())
                    .map(|q| match given.get(&q) {
                        Some(values) => Cochain1 { q, values: values.clone() },
                        None => solved.z(q).clone(),
                    })
                    .collect();
                TwistData::with_cochains(ext, alpha, z)
            }
        }
    }

    /// The spec reproducing `td` exactly.
    pub fn from_twist(td: &TwistData, group: &str) -> Self {
        let a = td.extension().abelian();
        TwistSpec {
            group: group.to_string(),
            subgroup: a.elements().to_vec(),
            alpha: td.alpha().values().to_vec(),
            z: Some(td.cochains().iter().map(|c| (c.q, c.values.clone())).collect()),
            generators: Some(a.generators().to_vec()),
        }
    }
}
