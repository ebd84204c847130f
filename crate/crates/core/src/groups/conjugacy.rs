use std::ops::Deref;
use std::sync::Arc;

use num_integer::Integer;

use super::GroupTable;

/// Conjugacy classes with centralizer orders and power maps.
///
/// Classes are ordered by their smallest element index, so class 0 is always
/// the identity class. Class members are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    centralizer_orders: Vec<usize>,
    element_orders: Vec<usize>,
    exponent: usize,
    power_maps: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members: Vec<usize> = (0..n).map(|h| g.conjugate(h, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = c;
            }
            classes.push(members);
        }
        let centralizer_orders = classes.iter().map(|c| n / c.len()).collect();
        let element_orders: Vec<usize> = classes.iter().map(|c| g.element_order(c[0])).collect();
        let exponent = element_orders.iter().fold(1, |e, o| e.lcm(o));
        let power_maps = (0..exponent)
            .map(|k| classes.iter().map(|c| class_of[g.pow(c[0], k as i64)]).collect())
            .collect();
        ConjugacyData {
            classes,
            class_of,
            centralizer_orders,
            element_orders,
            exponent,
            power_maps,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Smallest element index in the class.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.centralizer_orders[c]
    }

    /// Order of the elements in class `c`.
    pub fn element_order(&self, c: usize) -> usize {
        self.element_orders[c]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Class of `gᵏ` for `g` in each class; `k` is read modulo the exponent.
    pub fn power_map(&self, k: i64) -> &[usize] {
        &self.power_maps[k.rem_euclid(self.exponent as i64) as usize]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(-1)[c]
    }
}

/// A validated group table bundled with its conjugacy data.
#[derive(Debug, PartialEq, Eq)]
pub struct Group {
    table: GroupTable,
    conj: ConjugacyData,
}

impl Group {
    pub fn new(table: GroupTable) -> Arc<Group> {
        let conj = ConjugacyData::new(&table);
        Arc::new(Group { table, conj })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }
}

impl Deref for Group {
    type Target = GroupTable;
    fn deref(&self) -> &GroupTable {
        &self.table
    }
}

/// Convenience wrapper for [`ConjugacyData::new`].
pub fn conjugacy_classes(g: &GroupTable) -> ConjugacyData {
    ConjugacyData::new(g)
}
