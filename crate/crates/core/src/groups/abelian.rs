use std::collections::HashMap;

use super::GroupTable;
use crate::error::{Error, Result};
use crate::exact::{smith_with_inverse, IntMatrix, QmodZ};

/// A finite abelian group `A ≅ ⊕ ℤ/dᵢ` inside an ambient table.
///
/// `d₁ | d₂ | … | d_m`, every `dᵢ > 1`. Element coordinates are exponent
/// vectors against `generators`, reduced into `[0, dᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    invariant_factors: Vec<u64>,
    generators: Vec<usize>,
    elements: Vec<usize>,
    coords: HashMap<usize, Vec<u64>>,
    by_coords: HashMap<Vec<u64>, usize>,
}

impl AbelianStructure {
    /// Structure of the subgroup `elements` of `g` (which must be closed and
    /// abelian).
    ///
    /// Generators are picked greedily; the relation lattice they satisfy is
    /// brought to Smith form, whose column transform gives the invariant
    /// basis.
    pub fn new(g: &GroupTable, elements: &[usize]) -> Result<Self> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !g.is_subgroup(&elems) {
            return Err(Error::NotClosed(format!("{elems:?} is not a subgroup")));
        }
        if !g.is_abelian_set(&elems) {
            return Err(Error::NotAbelian);
        }
        // coordinates against the greedy generators, built coset by coset
        let mut gens: Vec<usize> = Vec::new();
        let mut rels: Vec<Vec<i64>> = Vec::new();
        let mut old: HashMap<usize, Vec<i64>> = HashMap::from([(0, vec![])]);
        for &a in &elems {
            if old.contains_key(&a) {
                continue;
            }
            let t = gens.len();
            let mut m = 1;
            let mut p = a;
            while !old.contains_key(&p) {
                p = g.mul(p, a);
                m += 1;
            }
            let mut rel: Vec<i64> = old[&p].iter().map(|&c| -c).collect();
            rel.push(m);
            rels.push(rel);
            gens.push(a);
            let mut next = HashMap::with_capacity(old.len() * m as usize);
            for (&h, c) in &old {
                let mut x = h;
                for j in 0..m {
                    let mut v = c.clone();
                    v.resize(t, 0);
                    v.push(j);
                    next.insert(x, v);
                    x = g.mul(x, a);
                }
            }
            old = next;
        }
        let t = gens.len();
        let rows: Vec<Vec<i64>> = rels
            .into_iter()
            .map(|mut r| {
                r.resize(t, 0);
                r
            })
            .collect();
        let (d, v, v_inv) = smith_with_inverse(&IntMatrix::from_rows(&rows));
        let keep: Vec<usize> = (0..t).filter(|&j| d[(j, j)] != 1).collect();
        let invariant_factors: Vec<u64> = keep.iter().map(|&j| d[(j, j)] as u64).collect();
        let generators: Vec<usize> = keep
            .iter()
            .map(|&j| {
                (0..t).fold(0, |acc, i| g.mul(acc, g.pow(gens[i], v_inv[(j, i)])))
            })
            .collect();
        let mut coords = HashMap::with_capacity(elems.len());
        let mut by_coords = HashMap::with_capacity(elems.len());
        for (&x, c) in &old {
            let y: Vec<u64> = keep
                .iter()
                .zip(&invariant_factors)
                .map(|(&j, &dj)| {
                    let s: i64 = (0..t).map(|i| c.get(i).copied().unwrap_or(0) * v[(i, j)]).sum();
                    s.rem_euclid(dj as i64) as u64
                })
                .collect();
            by_coords.insert(y.clone(), x);
            coords.insert(x, y);
        }
        let s = AbelianStructure {
            invariant_factors,
            generators,
            elements: elems,
            coords,
            by_coords,
        };
        s.check(g)?;
        Ok(s)
    }

    /// Uses the given generators as the basis. Their orders must form a
    /// divisibility chain and the coordinate map must be a bijection.
    pub fn with_generators(g: &GroupTable, elements: &[usize], generators: &[usize]) -> Result<Self> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !g.is_subgroup(&elems) {
            return Err(Error::NotClosed(format!("{elems:?} is not a subgroup")));
        }
        if !g.is_abelian_set(&elems) {
            return Err(Error::NotAbelian);
        }
        let factors: Vec<u64> = generators.iter().map(|&x| g.element_order(x) as u64).collect();
        if factors.windows(2).any(|w| w[1] % w[0] != 0) || factors.contains(&1) {
            return Err(Error::InvalidInput(format!("generator orders {factors:?} are not a divisibility chain")));
        }
        let total: u64 = factors.iter().product();
        if total as usize != elems.len() {
            return Err(Error::InvalidInput("generators do not give a basis".into()));
        }
        let mut coords = HashMap::new();
        let mut by_coords = HashMap::new();
        let mut c = vec![0u64; factors.len()];
        for _ in 0..total {
            let x = c
                .iter()
                .zip(generators)
                .fold(0, |acc, (&e, &gen)| g.mul(acc, g.pow(gen, e as i64)));
            if elems.binary_search(&x).is_err() || coords.insert(x, c.clone()).is_some() {
                return Err(Error::InvalidInput("generators do not give a basis".into()));
            }
            by_coords.insert(c.clone(), x);
            increment(&mut c, &factors);
        }
        Ok(AbelianStructure {
            invariant_factors: factors,
            generators: generators.to_vec(),
            elements: elems,
            coords,
            by_coords,
        })
    }

    fn check(&self, g: &GroupTable) -> Result<()> {
        let total: u64 = self.invariant_factors.iter().product();
        let ok = total as usize == self.elements.len()
            && self.by_coords.len() == self.elements.len()
            && self.invariant_factors.windows(2).all(|w| w[1] % w[0] == 0)
            && self.generators.iter().enumerate().all(|(i, &x)| {
                let c = &self.coords[&x];
                c.iter().enumerate().all(|(j, &v)| v == u64::from(i == j))
                    && g.element_order(x) as u64 == self.invariant_factors[i]
            });
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput("abelian structure failed its consistency check".into()))
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Sorted ambient indices of the members.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.coords.contains_key(&x)
    }

    /// Panics if `x` is not a member.
    pub fn coordinates(&self, x: usize) -> &[u64] {
        &self.coords[&x]
    }

    /// The member with the given coordinates (reduced modulo the factors).
    pub fn element(&self, coords: &[u64]) -> usize {
        let c: Vec<u64> = coords.iter().zip(&self.invariant_factors).map(|(&a, &d)| a % d).collect();
        self.by_coords[&c]
    }

    /// `φ(a) = Σ φᵢ·aᵢ/dᵢ` in ℚ/ℤ, for `φ` an exponent vector of the dual.
    pub fn pairing(&self, phi: &[u64], a: usize) -> QmodZ {
        self.coordinates(a)
            .iter()
            .zip(phi)
            .zip(&self.invariant_factors)
            .map(|((&x, &f), &d)| QmodZ::new(((x * f) % d) as i64, d as i64))
            .sum()
    }

    /// All coordinate vectors, first coordinate varying fastest.
    pub fn coordinate_vectors(&self) -> Vec<Vec<u64>> {
        enumerate_vectors(&self.invariant_factors)
    }
}

pub(crate) fn increment(c: &mut [u64], radices: &[u64]) {
    for (x, &d) in c.iter_mut().zip(radices) {
        *x += 1;
        if *x < d {
            return;
        }
        *x = 0;
    }
}

/// Mixed-radix enumeration of `∏ ℤ/dᵢ`, first coordinate fastest.
pub(crate) fn enumerate_vectors(radices: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = radices.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut c = vec![0u64; radices.len()];
    for _ in 0..total {
        out.push(c.clone());
        increment(&mut c, radices);
    }
    out
}

/// Structure of an abelian group given as a whole table.
pub fn abelian_structure(g: &GroupTable) -> Result<AbelianStructure> {
    let all: Vec<usize> = (0..g.order()).collect();
    AbelianStructure::new(g, &all)
}
