//! Dixon's method: split the class-multiplication algebra over a prime field
//! and lift the resulting characters back to cyclotomics.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::{inv_mod, is_prime, nullspace, pow_mod, primitive_root};
use super::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::groups::Group;

const MAX_ATTEMPTS: usize = 8;
const RANDOM_COMBINATIONS: usize = 24;

/// Character table with the default seed 0.
pub fn character_table(group: Arc<Group>) -> Result<CharacterTable> {
    character_table_seeded(group, 0)
}

/// Character table; `seed` only affects the random combinations used when the
/// class matrices alone do not split an eigenspace.
pub fn character_table_seeded(group: Arc<Group>, seed: u64) -> Result<CharacterTable> {
    let n = group.order() as u64;
    let conj = group.conjugacy();
    let r = conj.num_classes();
    let e = conj.exponent() as u64;
    let p = (1..)
        .map(|t| t * e + 1)
        .find(|&p| p * p > 4 * n && is_prime(p))
        .expect("there are infinitely many primes in the progression");
    let mats = class_matrices(&group, p);
    let mut vectors = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        if let Some(v) = split(&mats, r, p, &mut rng) {
            vectors = Some(v);
            break;
        }
    }
    let vectors = vectors.ok_or(Error::SplittingFailed(MAX_ATTEMPTS))?;

    let sizes: Vec<u64> = (0..r).map(|c| conj.class_size(c) as u64).collect();
    let inv_class = conj.power_map(-1);
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let mut rows = Vec::with_capacity(r);
    for w in vectors {
        let w0 = inv_mod(w[0], p);
        let w: Vec<u64> = w.iter().map(|x| x * w0 % p).collect();
        let s = (0..r).fold(0, |acc, k| (acc + w[k] * w[inv_class[k]] % p * inv_mod(sizes[k] % p, p)) % p);
        let target = n % p * inv_mod(s, p) % p;
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| n % d == 0 && d * d % p == target)
            .ok_or_else(|| Error::MalformedTable("no admissible degree".into()))?;
        let theta: Vec<u64> = (0..r).map(|k| d * w[k] % p * inv_mod(sizes[k] % p, p) % p).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            row.push(lift(&theta, k, d, p, z, e, &group)?);
        }
        rows.push(row);
    }
    CharacterTable::from_values(group, rows)
}

/// `(M_i)_{jk}` = number of `x ∈ C_i` with `x⁻¹ z_k ∈ C_j`, reduced mod `p`.
fn class_matrices(group: &Group, p: u64) -> Vec<Vec<Vec<u64>>> {
    let conj = group.conjugacy();
    let r = conj.num_classes();
    (0..r)
        .map(|i| {
            let mut m = vec![vec![0u64; r]; r];
            for k in 0..r {
                let zk = conj.representative(k);
                for &x in conj.class(i) {
                    m[conj.class_of(group.mul(group.inv(x), zk))][k] += 1;
                }
            }
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x %= p;
                }
            }
            m
        })
        .collect()
}

fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p))
        .collect()
}

/// Common eigenvectors of the class matrices, one per irreducible.
fn split(mats: &[Vec<Vec<u64>>], r: usize, p: u64, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![identity];
    let mut done = Vec::with_capacity(r);
    while let Some(basis) = pending.pop() {
        if basis.len() == 1 {
            done.push(basis.into_iter().next().unwrap());
            continue;
        }
        let mut parts = None;
        for m in mats.iter().skip(1) {
            if let Some(ps) = eigen_split(m, &basis, p) {
                parts = Some(ps);
                break;
            }
        }
        if parts.is_none() {
            for _ in 0..RANDOM_COMBINATIONS {
                let coeffs: Vec<u64> = (0..mats.len()).map(|_| rng.gen_range(0..p)).collect();
                let mut m = vec![vec![0u64; r]; r];
                for (c, mi) in coeffs.iter().zip(mats) {
                    for (row, src) in m.iter_mut().zip(mi) {
                        for (x, y) in row.iter_mut().zip(src) {
                            *x = (*x + c * y) % p;
                        }
                    }
                }
                if let Some(ps) = eigen_split(&m, &basis, p) {
                    parts = Some(ps);
                    break;
                }
            }
        }
        pending.extend(parts?);
    }
    // deterministic order before canonical sorting downstream
    done.sort();
    Some(done)
}

/// Splits the invariant subspace spanned by `basis` into eigenspaces of `m`,
/// or `None` when `m` acts as a scalar there (or is not diagonalizable).
fn eigen_split(m: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let dim = basis.len();
    let r = m.len();
    let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(m, b, p)).collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        // rows of (M − λ)B, as an r × dim system in the coefficients
        let sys: Vec<Vec<u64>> = (0..r)
            .map(|i| (0..dim).map(|j| (images[j][i] + (p - lambda) * basis[j][i]) % p).collect())
            .collect();
        let ns = nullspace(sys, dim, p);
        if ns.is_empty() {
            continue;
        }
        if ns.len() == dim {
            return None;
        }
        found += ns.len();
        let space: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| (0..r).map(|i| (0..dim).fold(0, |acc, j| (acc + c[j] * basis[j][i]) % p)).collect())
            .collect();
        parts.push(space);
        if found == dim {
            break;
        }
    }
    (found == dim).then_some(parts)
}

/// Exact value at class `k` from the eigenvalue multiplicities of `ρ(g)`.
fn lift(theta: &[u64], k: usize, d: u64, p: u64, z: u64, e: u64, group: &Group) -> Result<Cyclotomic> {
    let conj = group.conjugacy();
    let o = conj.element_order(k) as u64;
    let zo = pow_mod(z, e / o, p);
    let inv_o = inv_mod(o % p, p);
    let mut mult = Vec::with_capacity(o as usize);
    for l in 0..o {
        let mut s = 0;
        for j in 0..o {
            let c = conj.power_map(j as i64)[k];
            let root = pow_mod(zo, (o - (j * l) % o) % o, p);
            s = (s + theta[c] * root) % p;
        }
        let m = s * inv_o % p;
        if m > d {
            return Err(Error::MalformedTable(format!("eigenvalue multiplicity {m} exceeds degree {d}")));
        }
        mult.push(m as i64);
    }
    Ok(Cyclotomic::from_int_poly(o, &mult).reduced())
}
