use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Group, GroupTable};
use crate::error::Result;

/// A subgroup as a group in its own right plus its embedding into the parent.
///
/// The subgroup's element `i` is the parent's element `embedding[i]`;
/// embeddings are increasing, so the identity stays at index 0.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Arc<Group>,
    embedding: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: &GroupTable, elements: &[usize]) -> Result<Self> {
        let (table, embedding) = parent.subgroup_table(elements)?;
        Ok(Subgroup {
            group: Group::new(table),
            embedding,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn order(&self) -> usize {
        self.embedding.len()
    }
}

fn ordered(sets: BTreeSet<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All normal subgroups, as closures of unions of conjugacy classes.
///
/// Sorted by order, then lexicographically.
pub fn normal_subgroups(g: &Group) -> Vec<Vec<usize>> {
    let conj = g.conjugacy();
    let mut found = BTreeSet::from([vec![0usize]]);
    let mut frontier = vec![vec![0usize]];
    while let Some(n) = frontier.pop() {
        for c in conj.classes() {
            if n.binary_search(&c[0]).is_ok() {
                continue;
            }
            let mut gens = n.clone();
            gens.extend_from_slice(c);
            let m = g.closure(&gens);
            if found.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    ordered(found)
}

/// Normal subgroups that are abelian.
pub fn normal_abelian_subgroups(g: &Group) -> Vec<Vec<usize>> {
    normal_subgroups(g).into_iter().filter(|s| g.is_abelian_set(s)).collect()
}

/// Every subgroup, found by adjoining one element at a time to known
/// subgroups. Sorted by order, then lexicographically.
pub fn all_subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let mut found = BTreeSet::from([vec![0usize]]);
    let mut frontier = vec![vec![0usize]];
    while let Some(h) = frontier.pop() {
        for x in 0..g.order() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let k = g.closure(&gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    ordered(found)
}
