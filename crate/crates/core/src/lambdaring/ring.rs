use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use super::adams::adams;
use crate::chartab::{restrict, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::groups::Subgroup;

/// A virtual character, as integer coefficients over the irreducible basis.
#[derive(Clone, Debug)]
pub struct RepRingElement {
    table: Arc<CharacterTable>,
    coeffs: Vec<i64>,
}

impl PartialEq for RepRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table)
    }
}

impl RepRingElement {
    pub fn new(table: Arc<CharacterTable>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != table.rank() {
            return Err(Error::DimensionMismatch(format!("{} coefficients for rank {}", coeffs.len(), table.rank())));
        }
        Ok(RepRingElement { table, coeffs })
    }

    pub fn zero(table: Arc<CharacterTable>) -> Self {
        let r = table.rank();
        RepRingElement { table, coeffs: vec![0; r] }
    }

    /// The trivial character.
    pub fn one(table: Arc<CharacterTable>) -> Self {
        Self::basis(table, 0)
    }

    pub fn basis(table: Arc<CharacterTable>, i: usize) -> Self {
        let mut coeffs = vec![0; table.rank()];
        coeffs[i] = 1;
        RepRingElement { table, coeffs }
    }

    pub fn from_class_function(table: Arc<CharacterTable>, f: &ClassFunction) -> Result<Self> {
        let coeffs = table.decompose(f)?;
        Ok(RepRingElement { table, coeffs })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Virtual dimension `Σ cᵢ dᵢ`.
    pub fn dim(&self) -> i64 {
        self.coeffs.iter().zip(self.table.degrees()).map(|(&c, &d)| c * d as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_class_function(&self) -> ClassFunction {
        self.table.combine(&self.coeffs)
    }

    fn with(&self, coeffs: Vec<i64>) -> Self {
        RepRingElement {
            table: self.table.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        self.with(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Product via the pointwise product of characters.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let f = self.to_class_function().mul(&other.to_class_function())?;
        Ok(self.with(self.table.decompose(&f)?))
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(self.table.clone());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `Ψᵏ(self)` via the Adams matrix.
    pub fn adams(&self, k: i64) -> Result<Self> {
        let m = adams(&self.table, k)?;
        let r = self.coeffs.len();
        let coeffs = (0..r).map(|j| (0..r).map(|i| self.coeffs[i] * m.entry(i, j)).sum()).collect();
        Ok(self.with(coeffs))
    }

    /// `λⁿ(self)` from `n·λⁿ = Σ_{i=1}^{n} (−1)^{i−1} λ^{n−i} Ψⁱ`.
    pub fn lambda(&self, n: usize) -> Result<Self> {
        let mut lam = vec![Self::one(self.table.clone())];
        let psi = (1..=n).map(|i| self.adams(i as i64)).collect::<Result<Vec<_>>>()?;
        for m in 1..=n {
            let mut acc = Self::zero(self.table.clone());
            for i in 1..=m {
                let term = lam[m - i].mul(&psi[i - 1])?;
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            if acc.coeffs.iter().any(|&c| c % m as i64 != 0) {
                return Err(Error::NonIntegralLambda(m));
            }
            lam.push(acc.with(acc.coeffs.iter().map(|&c| c / m as i64).collect()));
        }
        Ok(lam.pop().unwrap())
    }
}

impl Add for &RepRingElement {
    type Output = RepRingElement;
    fn add(self, rhs: &RepRingElement) -> RepRingElement {
        self.with(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RepRingElement {
    type Output = RepRingElement;
    fn sub(self, rhs: &RepRingElement) -> RepRingElement {
        self.with(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RepRingElement {
    type Output = RepRingElement;
    fn neg(self) -> RepRingElement {
        self.scale(-1)
    }
}

/// `λⁿ(x)`.
pub fn lambda_op(x: &RepRingElement, n: usize) -> Result<RepRingElement> {
    x.lambda(n)
}

/// `Ψᵏ(x)`.
pub fn adams_apply(x: &RepRingElement, k: i64) -> Result<RepRingElement> {
    x.adams(k)
}

/// `N[i][j][l] = ⟨χ_l | χᵢχⱼ⟩`.
pub fn structure_constants(table: &CharacterTable) -> Result<Vec<Vec<Vec<i64>>>> {
    let r = table.rank();
    let mut n = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in i..r {
            let prod = table.irreducible(i).mul(table.irreducible(j))?;
            let row = table.decompose(&prod)?;
            n[j][i] = row.clone();
            n[i][j] = row;
        }
    }
    Ok(n)
}

/// Row `i` is the decomposition of `χᵢ` of `G` restricted to `H`.
pub fn restriction_matrix(tg: &CharacterTable, th: &CharacterTable, h: &Subgroup) -> Result<IntMatrix> {
    let rows = tg
        .irreducibles()
        .iter()
        .map(|chi| th.decompose(&restrict(chi, h)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_rows(&rows))
}

/// Every bijection `π` of irreducible bases (with `π(0) = 0`) such that
/// `N₁[i][j][l] = N₂[π i][π j][π l]`. `result[m][i]` is `π(i)`.
pub fn based_ring_isomorphisms(t1: &CharacterTable, t2: &CharacterTable) -> Result<Vec<Vec<usize>>> {
    if t1.rank() != t2.rank() {
        return Ok(Vec::new());
    }
    let n1 = structure_constants(t1)?;
    let n2 = structure_constants(t2)?;
    let r = t1.rank();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    perm[0] = 0;
    used[0] = true;
    search(1, &mut perm, &mut used, &n1, &n2, &mut out);
    Ok(out)
}

fn consistent(upto: usize, perm: &[usize], n1: &[Vec<Vec<i64>>], n2: &[Vec<Vec<i64>>]) -> bool {
    // every triple involving the newest index `upto`
    (0..=upto).all(|i| {
        (0..=upto).all(|j| {
            (0..=upto).all(|l| {
                if i != upto && j != upto && l != upto {
                    return true;
                }
                n1[i][j][l] == n2[perm[i]][perm[j]][perm[l]]
            })
        })
    })
}

fn search(
    t: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n1: &[Vec<Vec<i64>>],
    n2: &[Vec<Vec<i64>>],
    out: &mut Vec<Vec<usize>>,
) {
    let r = perm.len();
    if t == r {
        out.push(perm.clone());
        return;
    }
    for c in 0..r {
        if used[c] {
            continue;
        }
        perm[t] = c;
        used[c] = true;
        if consistent(t, perm, n1, n2) {
            search(t + 1, perm, used, n1, n2, out);
        }
        used[c] = false;
    }
    perm[t] = usize::MAX;
}

/// Whether `P·Ψᵏ(t1) = Ψᵏ(t2)·P` for the basis bijection `iso`, that is
/// `Ψᵏ(t2)[π i][π j] = Ψᵏ(t1)[i][j]` for all `i, j`.
pub fn commutes_with_adams(t1: &CharacterTable, t2: &CharacterTable, iso: &[usize], k: i64) -> Result<bool> {
    let a = adams(t1, k)?;
    let b = adams(t2, k)?;
    let r = t1.rank();
    Ok((0..r).all(|i| (0..r).all(|j| b.entry(iso[i], iso[j]) == a.entry(i, j))))
}
