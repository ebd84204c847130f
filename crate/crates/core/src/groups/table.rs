use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default bound on group orders accepted by constructors.
pub const DEFAULT_ORDER_LIMIT: usize = 10_000;

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. Construction validates closure,
/// identity, inverses and associativity.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Validates a square table of element indices.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {i} has length {} instead of {n}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::MalformedTable(format!("entry {x} out of range in row {i}")));
                }
                mul.push(x as u32);
            }
        }
        Self::from_flat(mul, n, None)
    }

    fn from_flat(mul: Vec<u32>, n: usize, labels: Option<Vec<String>>) -> Result<Self> {
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        if identity != 0 {
            return Err(Error::IdentityNotFirst(identity));
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == 0 && at(y, x) == 0)
                .ok_or(Error::NoInverse(x))?;
            inv[x] = y as u32;
        }
        let table = GroupTable {
            name: String::new(),
            n,
            mul,
            inv,
            labels: labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect()),
        };
        table.check_associative()?;
        Ok(table)
    }

    /// Light's test: associativity only needs checking against a generating set.
    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut reached_list = vec![0usize];
        let mut gens = Vec::new();
        while let Some(g) = (0..n).find(|&x| !reached[x]) {
            gens.push(g);
            // left-normed products of generators
            let mut queue: VecDeque<usize> = reached_list.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !reached[y] {
                        reached[y] = true;
                        reached_list.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        for &s in &gens {
            for x in 0..n {
                let xs = self.mul(x, s);
                for y in 0..n {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return Err(Error::NotAssociative(x, s, y));
                    }
                }
            }
        }
        Ok(())
    }

    /// Closure of a set of permutations of `0..degree`, elements in
    /// breadth-first discovery order from the identity. Products compose
    /// right to left: `(g·h)(i) = g(h(i))`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], limit: usize) -> Result<Self> {
        for (k, g) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::NotAPermutation(k, degree));
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let p = compose(&elements[head], g);
                if !index.contains_key(&p) {
                    if elements.len() >= limit {
                        return Err(Error::OrderExceedsLimit(limit));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&compose(a, b)] as u32);
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        // the closure of permutations is a group; only the cheap checks run
        let mut inv = vec![0u32; n];
        for (i, p) in elements.iter().enumerate() {
            let mut q = vec![0; degree];
            for (k, &v) in p.iter().enumerate() {
                q[v] = k;
            }
            inv[i] = index[&q] as u32;
        }
        Ok(GroupTable {
            name: String::new(),
            n,
            mul,
            inv,
            labels,
        })
    }

    /// Builds a table from a multiplication closure on `0..n`, validating it.
    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize, labels: Vec<String>) -> Result<Self> {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(f(a, b) as u32);
            }
        }
        Self::from_flat(mul, n, Some(labels))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "label count mismatch");
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g·x·g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |e, g| e.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Row-major copy of the table.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let members: HashSet<usize> = set.iter().copied().collect();
        members.contains(&0)
            && set.iter().all(|&a| set.iter().all(|&b| members.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let members: HashSet<usize> = set.iter().copied().collect();
        (0..self.n).all(|g| set.iter().all(|&a| members.contains(&self.conjugate(g, a))))
    }

    pub fn is_abelian_set(&self, set: &[usize]) -> bool {
        set.iter().all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The multiplication table of a subgroup, re-indexed in increasing order
    /// of ambient index, together with the embedding into `self`.
    pub fn subgroup_table(&self, set: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        let mut elems = set.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::NotClosed(format!("{elems:?} is not a subgroup")));
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let m = elems.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                mul.push(pos[&self.mul(a, b)] as u32);
            }
        }
        let inv = elems.iter().map(|&a| pos[&self.inv(a)] as u32).collect();
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((
            GroupTable {
                name: String::new(),
                n: m,
                mul,
                inv,
                labels,
            },
            elems,
        ))
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_table() {
        let g = GroupTable::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn rejects_missing_inverse() {
        let err = GroupTable::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NoInverse(1));
        assert_eq!(err.to_string(), "no inverse for 1");
    }

    #[test]
    fn rejects_non_associative() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupTable::from_table(&t), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(GroupTable::from_table(&[vec![0, 1]]), Err(Error::MalformedTable(_))));
        assert!(matches!(GroupTable::from_table(&[vec![0, 2], vec![1, 0]]), Err(Error::MalformedTable(_))));
        assert_eq!(GroupTable::from_table(&[vec![1, 0], vec![0, 1]]).unwrap_err(), Error::IdentityNotFirst(1));
        assert_eq!(GroupTable::from_table(&[vec![1, 1], vec![1, 1]]).unwrap_err(), Error::NoIdentity);
    }

    #[test]
    fn klein_xor() {
        let rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let g = GroupTable::from_table(&rows).unwrap();
        assert_eq!(g.exponent(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn permutation_closure() {
        let c2 = GroupTable::from_permutations(2, &[vec![1, 0]], DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(c2.order(), 2);
        let s3 = GroupTable::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let trivial = GroupTable::from_permutations(3, &[], DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.label(0), "()");
        let err = GroupTable::from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 10).unwrap_err();
        assert_eq!(err, Error::OrderExceedsLimit(10));
        assert!(GroupTable::from_permutations(2, &[vec![0, 0]], 10).is_err());
    }

    #[test]
    fn powers_and_orders() {
        let s3 = GroupTable::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_ORDER_LIMIT).unwrap();
        for g in 0..6 {
            let o = s3.element_order(g) as i64;
            assert_eq!(s3.pow(g, o), 0);
            assert_eq!(s3.pow(g, -1), s3.inv(g));
        }
        assert_eq!(s3.exponent(), 6);
        assert_eq!(s3.center(), vec![0]);
    }
}
