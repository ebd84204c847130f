use super::dual::{DualGroup, QAction};
use crate::error::{Error, Result};
use crate::exact::QmodZ;
use crate::groups::enumerate_vectors;

/// A normalized 2-cochain `α : A^∨ × A^∨ → ℚ/ℤ`, indexed by dual positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    values: Vec<Vec<QmodZ>>,
}

impl Cocycle2 {
    /// Validates the 2-cocycle identity
    /// `α(φ,ψ) + α(φ+ψ,χ) = α(ψ,χ) + α(φ,ψ+χ)`.
    pub fn new(dual: &DualGroup, values: Vec<Vec<QmodZ>>) -> Result<Self> {
        let n = dual.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("cocycle must be {n} × {n}")));
        }
        for p in 0..n {
            for q in 0..n {
                let pq = dual.add(p, q);
                for r in 0..n {
                    let lhs = values[p][q] + values[pq][r];
                    let rhs = values[q][r] + values[p][dual.add(q, r)];
                    if lhs != rhs {
                        return Err(Error::NotACocycle(p, q, r));
                    }
                }
            }
        }
        Ok(Cocycle2 { values })
    }

    pub fn from_fn(dual: &DualGroup, f: impl Fn(&[u64], &[u64]) -> QmodZ) -> Result<Self> {
        let chars = dual.characters();
        let values = chars.iter().map(|p| chars.iter().map(|q| f(p, q)).collect()).collect();
        Self::new(dual, values)
    }

    pub fn value(&self, p: usize, q: usize) -> QmodZ {
        self.values[p][q]
    }

    pub fn values(&self) -> &[Vec<QmodZ>] {
        &self.values
    }

    /// `(q·α)(φ,ψ) = α(q⁻¹φ, q⁻¹ψ)` where `qinv` is `q⁻¹` in `Q`.
    pub fn act(&self, action: &QAction, qinv: usize) -> Cocycle2 {
        let n = self.values.len();
        let values = (0..n)
            .map(|p| {
                (0..n)
                    .map(|r| self.values[action.on_dual(qinv, p)][action.on_dual(qinv, r)])
                    .collect()
            })
            .collect();
        Cocycle2 { values }
    }
}

/// `s(φ,ψ) = α(φ,ψ) − α(ψ,φ)`.
pub fn skew(alpha: &Cocycle2) -> Vec<Vec<QmodZ>> {
    let v = alpha.values();
    let n = v.len();
    (0..n).map(|p| (0..n).map(|q| v[p][q] - v[q][p]).collect()).collect()
}

/// Whether `φ ↦ s(φ, ·)` is injective.
pub fn is_nondegenerate(s: &[Vec<QmodZ>]) -> bool {
    s.iter().skip(1).all(|row| row.iter().any(|x| !x.is_zero()))
}

/// Whether the class of `α` is fixed by every `q ∈ Q`, tested on the skew form
/// (which determines the class for abelian `A^∨`).
pub fn is_invariant_class(alpha: &Cocycle2, action: &QAction, q_order: usize) -> bool {
    let s = skew(alpha);
    (0..q_order).all(|q| skew(&alpha.act(action, q)) == s)
}

/// All cohomology classes of `A^∨` that are `Q`-invariant and nondegenerate,
/// one bilinear representative `α(φ,ψ) = Σ_{i<j} φᵢψⱼ sᵢⱼ` each.
pub fn enumerate_invariant_nondegenerate(dual: &DualGroup, action: &QAction, q_order: usize) -> Result<Vec<Cocycle2>> {
    let d = dual.structure().invariant_factors().to_vec();
    let m = d.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let radices: Vec<u64> = pairs.iter().map(|&(i, j)| gcd(d[i], d[j])).collect();
    let mut out = Vec::new();
    for choice in enumerate_vectors(&radices) {
        let sij: Vec<QmodZ> = choice
            .iter()
            .zip(&radices)
            .map(|(&c, &r)| QmodZ::new(c as i64, r as i64))
            .collect();
        let alpha = Cocycle2::from_fn(dual, |p, q| {
            pairs
                .iter()
                .zip(&sij)
                .map(|(&(i, j), s)| s.times((p[i] * q[j]) as i64))
                .sum()
        })?;
        if is_nondegenerate(&skew(&alpha)) && is_invariant_class(&alpha, action, q_order) {
            out.push(alpha);
        }
    }
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}
