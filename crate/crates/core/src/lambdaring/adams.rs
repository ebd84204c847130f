use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::chartab::{AbelianCharacterTable, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, IntMatrix, QmodZ};

/// The matrix of `Ψᵏ` in the irreducible basis: row `i` holds the
/// decomposition of `Ψᵏ(χᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdamsMatrix {
    k: i64,
    matrix: IntMatrix,
}

impl AdamsMatrix {
    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[(i, j)]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        self.matrix.row(i)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.matrix.to_rows()
    }
}

fn matrix_from_powers(table: &CharacterTable, k: i64, power_classes: &[usize]) -> Result<IntMatrix> {
    let r = table.rank();
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let chi = table.irreducible(i);
        let values = power_classes.iter().map(|&c| chi.value(c).clone()).collect();
        let psi = ClassFunction::new(table.group().clone(), values)?;
        let row = table.decompose(&psi).map_err(|e| match e {
            Error::NotVirtualCharacter { index, .. } => Error::NonIntegralAdams(i, index, k),
            other => other,
        })?;
        rows.push(row);
    }
    Ok(IntMatrix::from_rows(&rows))
}

/// `Ψᵏ` with entry `(i, j) = (1/|G|) Σ_g χⱼ(g⁻¹) χᵢ(gᵏ)`. Cached per `k`
/// modulo the exponent.
pub fn adams(table: &CharacterTable, k: i64) -> Result<AdamsMatrix> {
    let e = table.exponent() as i64;
    let slot = &table.adams_cache[k.rem_euclid(e) as usize];
    let matrix = match slot.get() {
        Some(m) => m.clone(),
        None => {
            let pm = table.group().conjugacy().power_map(k).to_vec();
            let m = matrix_from_powers(table, k, &pm)?;
            let _ = slot.set(m.clone());
            m
        }
    };
    Ok(AdamsMatrix { k, matrix })
}

/// `Ψᵏ` computed from `gᵏ` directly in the group table, bypassing both the
/// cache and the power maps (which are stored modulo the exponent).
pub fn adams_unreduced(table: &CharacterTable, k: i64) -> Result<AdamsMatrix> {
    let g = table.group();
    let conj = g.conjugacy();
    let pc: Vec<usize> = (0..conj.num_classes())
        .map(|c| conj.class_of(g.pow(conj.representative(c), k)))
        .collect();
    Ok(AdamsMatrix {
        k,
        matrix: matrix_from_powers(table, k, &pc)?,
    })
}

/// `(1/|G|) Σ_g χⱼ(gᵏ)`, the multiplicity of the trivial character in
/// `Ψᵏ(χⱼ)`.
pub fn fs_indicator(table: &CharacterTable, k: i64, j: usize) -> Result<i64> {
    Ok(adams(table, k)?.entry(j, 0))
}

/// Recovers `|G|` from the ring: for each class, `ε_g = Σⱼ χⱼ(g⁻¹)/|C_G(g)| · χⱼ`
/// and `n_g` is the least positive integer clearing all denominators (0 if
/// some coefficient is irrational). Returns `max n_g`.
pub fn order_from_ring(table: &CharacterTable) -> u64 {
    let conj = table.group().conjugacy();
    let mut best = 0u64;
    for c in 0..conj.num_classes() {
        let inv = conj.inverse_class(c);
        let z = BigInt::from(conj.centralizer_order(c));
        let mut n = BigInt::from(1);
        let mut rational = true;
        for j in 0..table.rank() {
            match table.value(j, inv).as_rational() {
                Ok(v) => {
                    let coeff = v / crate::exact::Rational::from_integer(z.clone());
                    n = n.lcm(coeff.denom());
                }
                Err(_) => {
                    rational = false;
                    break;
                }
            }
        }
        let n_g = if rational { n.abs().to_u64().unwrap_or(0) } else { 0 };
        best = best.max(n_g);
    }
    best
}

/// The period of `k ↦ Ψᵏ`, found by comparing unreduced Adams matrices for
/// `k = 0 … 2e` where `e` is the exponent of the group.
pub fn exponent_from_ring(table: &CharacterTable) -> Result<u64> {
    let e = table.group().exponent() as i64;
    let mats = (0..=2 * e)
        .map(|k| adams_unreduced(table, k).map(|m| m.matrix))
        .collect::<Result<Vec<_>>>()?;
    let f = (1..=e)
        .find(|&f| (0..=e).all(|k| mats[(k + f) as usize] == mats[k as usize]))
        .unwrap_or(e);
    Ok(f as u64)
}

fn dual_index(table: &CharacterTable, values: Vec<Cyclotomic>) -> Result<usize> {
    let f = ClassFunction::new(table.group().clone(), values)?;
    table
        .position(&f)
        .ok_or_else(|| Error::NotACharacter("product of linear characters not in the table".into()))
}

/// Adams operations of `Rep(A)` with the symmetry twisted by an alternating
/// bicharacter `s` on the irreducibles of an abelian `A` (indexed like the
/// table's irreducibles).
///
/// On a line `V_φ` the cyclic permutation of `V_φ^{⊗k}` is `k − 1` adjacent
/// swaps, each acting by `exp(2πi·s(φ,φ))`, so row `φ` of the result is that
/// scalar at position `kφ`.
pub fn twisted_adams_abelian(t: &AbelianCharacterTable, pairing: &[Vec<QmodZ>], k: i64) -> Result<AdamsMatrix> {
    let table = &t.table;
    let r = table.rank();
    if pairing.len() != r || pairing.iter().any(|row| row.len() != r) {
        return Err(Error::DimensionMismatch(format!("pairing must be {r} × {r}")));
    }
    if table.degrees().iter().any(|&d| d != 1) {
        return Err(Error::NotAbelian);
    }
    let sum_index = |a: usize, b: usize| -> Result<usize> {
        let vals = (0..r).map(|c| (table.value(a, c) * table.value(b, c)).reduced()).collect();
        dual_index(table, vals)
    };
    for a in 0..r {
        for b in 0..r {
            let ab = sum_index(a, b)?;
            for c in 0..r {
                if pairing[ab][c] != pairing[a][c] + pairing[b][c] || pairing[c][ab] != pairing[c][a] + pairing[c][b] {
                    return Err(Error::PairingNotBiadditive);
                }
            }
        }
    }
    if (0..r).any(|a| !pairing[a][a].is_zero()) {
        return Err(Error::PairingNotAlternating);
    }
    let mut m = IntMatrix::zeros(r, r);
    for i in 0..r {
        let vals: Vec<Cyclotomic> = (0..r)
            .map(|c| {
                let v = table.value(i, c);
                if k >= 0 {
                    v.pow(k as u32).reduced()
                } else {
                    v.conjugate().pow((-k) as u32).reduced()
                }
            })
            .collect();
        let j = dual_index(table, vals)?;
        let scalar = pairing[i][i].times(k - 1).to_cyclotomic();
        let s = scalar
            .as_integer()
            .and_then(|x| x.to_i64())
            .ok_or(Error::NonIntegralAdams(i, j, k))?;
        m[(i, j)] = s;
    }
    Ok(AdamsMatrix { k, matrix: m })
}
