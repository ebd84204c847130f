use std::sync::Arc;

use super::ClassFunction;
use crate::error::{Error, Result};
use crate::exact::CycMatrix;
use crate::groups::{ExtensionData, Group};

/// An explicit matrix representation, one matrix per group element.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    group: Arc<Group>,
    dim: usize,
    mats: Vec<CycMatrix>,
}

impl MatrixRep {
    /// Checks shapes, `ρ(1) = I` and `ρ(g)ρ(h) = ρ(gh)` on all pairs.
    pub fn new(group: Arc<Group>, mats: Vec<CycMatrix>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::DimensionMismatch(format!("{} matrices for {} elements", mats.len(), group.order())));
        }
        let dim = mats[0].rows();
        if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("matrices are not all square of one size".into()));
        }
        let rep = MatrixRep { group, dim, mats };
        if !rep.is_multiplicative() {
            return Err(Error::InvalidInput("matrices do not form a representation".into()));
        }
        Ok(rep)
    }

    pub fn is_multiplicative(&self) -> bool {
        let g = &self.group;
        if self.mats[0] != CycMatrix::identity(self.dim) {
            return false;
        }
        (0..g.order()).all(|a| (0..g.order()).all(|b| &self.mats[a] * &self.mats[b] == self.mats[g.mul(a, b)]))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CycMatrix {
        &self.mats[g]
    }

    pub fn character(&self) -> ClassFunction {
        ClassFunction::from_element_fn(self.group.clone(), |g| self.mats[g].trace().reduced())
    }
}

/// The representation of `G` induced from the character `φ` of `A`
/// (an exponent vector against `A`'s invariant factors), in the coset basis
/// `{s(q)}`: `ρ(g)[q′, q] = φ(s(q′)⁻¹ g s(q))` where `q′` is the coset of `g·s(q)`.
pub fn induce_monomial(ext: &ExtensionData, phi: &[u64]) -> Result<MatrixRep> {
    let a = ext.abelian();
    if phi.len() != a.rank() || phi.iter().zip(a.invariant_factors()).any(|(&x, &d)| x >= d) {
        return Err(Error::InvalidInput(format!("{phi:?} is not a character of A")));
    }
    let g = ext.group();
    let m = ext.quotient().order();
    let mats = (0..g.order())
        .map(|x| {
            let mut mat = CycMatrix::zeros(m, m);
            for q in 0..m {
                let y = g.mul(x, ext.section(q));
                let q2 = ext.projection(y);
                let inner = g.mul(g.inv(ext.section(q2)), y);
                mat[(q2, q)] = a.pairing(phi, inner).to_cyclotomic();
            }
            mat
        })
        .collect::<Vec<_>>();
    // monomial by construction; only the identity entry is checked here
    debug_assert!(mats[0] == CycMatrix::identity(m) || m == 0);
    Ok(MatrixRep {
        group: g.clone(),
        dim: m,
        mats,
    })
}
