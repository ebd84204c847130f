use std::sync::Arc;

use super::{AbelianStructure, Group, GroupTable};
use crate::error::{Error, Result};

/// An extension `1 → A → G → Q → 1` with `A` normal and abelian.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    group: Arc<Group>,
    subgroup: Vec<usize>,
    abelian: AbelianStructure,
    quotient: GroupTable,
    section: Vec<usize>,
    projection: Vec<usize>,
}

impl ExtensionData {
    /// Cosets are ordered by their smallest element and represented by it,
    /// so the identity coset is `Q`'s element 0 with section value 0.
    pub fn new(group: Arc<Group>, subgroup: &[usize]) -> Result<Self> {
        let abelian = AbelianStructure::new(&group, subgroup)?;
        Self::with_structure(group, abelian)
    }

    /// As [`ExtensionData::new`], keeping a chosen basis of `A`.
    pub fn with_structure(group: Arc<Group>, abelian: AbelianStructure) -> Result<Self> {
        let a = abelian.elements().to_vec();
        if !group.is_normal(&a) {
            return Err(Error::NotNormal);
        }
        let n = group.order();
        let mut projection = vec![usize::MAX; n];
        let mut section = Vec::new();
        for g in 0..n {
            if projection[g] != usize::MAX {
                continue;
            }
            let q = section.len();
            for &x in &a {
                projection[group.mul(g, x)] = q;
            }
            section.push(g);
        }
        let m = section.len();
        let labels = section.iter().map(|&s| group.label(s).to_string()).collect();
        let quotient = GroupTable::from_fn(m, |p, q| projection[group.mul(section[p], section[q])], labels)?
            .with_name(format!("{}/A", group.name()));
        Ok(ExtensionData {
            group,
            subgroup: a,
            abelian,
            quotient,
            section,
            projection,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// Sorted element indices of `A`.
    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn abelian(&self) -> &AbelianStructure {
        &self.abelian
    }

    pub fn quotient(&self) -> &GroupTable {
        &self.quotient
    }

    pub fn section(&self, q: usize) -> usize {
        self.section[q]
    }

    pub fn projection(&self, g: usize) -> usize {
        self.projection[g]
    }

    /// The element `a ∈ A` with `g = a · s(ḡ)`.
    pub fn a_part(&self, g: usize) -> usize {
        self.group.mul(g, self.group.inv(self.section[self.projection[g]]))
    }
}

/// Free-function form of [`ExtensionData::new`].
pub fn extension(group: Arc<Group>, subgroup: &[usize]) -> Result<ExtensionData> {
    ExtensionData::new(group, subgroup)
}
