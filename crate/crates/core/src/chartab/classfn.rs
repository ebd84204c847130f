use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational};
use crate::groups::Group;

/// A function constant on conjugacy classes, one value per class.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<Group>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

pub(crate) fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b) || a.table() == b.table()
}

impl ClassFunction {
    pub fn new(group: Arc<Group>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.conjugacy().num_classes() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} classes",
                values.len(),
                group.conjugacy().num_classes()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    /// Reads the value of each class from its representative.
    pub fn from_element_fn(group: Arc<Group>, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = (0..group.conjugacy().num_classes())
            .map(|c| f(group.conjugacy().representative(c)))
            .collect();
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.conjugacy().class_of(g)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::MismatchedGroups);
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b).reduced()).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = Cyclotomic::from_int(c);
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| (v * &c).reduced()).collect(),
        }
    }

    pub fn conjugate(&self) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.conjugate().reduced()).collect(),
        }
    }

    /// `g ↦ f(gᵏ)`.
    pub fn power(&self, k: i64) -> Self {
        let pm = self.group.conjugacy().power_map(k);
        ClassFunction {
            group: self.group.clone(),
            values: pm.iter().map(|&c| self.values[c].clone()).collect(),
        }
    }
}

/// `(1/|G|) Σ_g conj(α(g)) β(g)`, summed classwise.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    if !same_group(&a.group, &b.group) {
        return Err(Error::MismatchedGroups);
    }
    let conj = a.group.conjugacy();
    let mut acc = Cyclotomic::zero();
    for c in 0..conj.num_classes() {
        let t = &a.values[c].conjugate() * &b.values[c];
        acc += &t.scale(&Rational::from_integer(conj.class_size(c).into()));
    }
    Ok(acc.scale(&Rational::new(1.into(), a.group.order().into())).reduced())
}
