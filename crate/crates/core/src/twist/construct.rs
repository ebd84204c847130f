use std::sync::Arc;

use super::cocycle::Cocycle2;
use super::dual::{DualGroup, QAction};
use crate::error::{Error, Result};
use crate::exact::{solve_mod, IntMatrix, QmodZ};
use crate::groups::{ExtensionData, Group, GroupTable};

/// A 1-cochain `z(q) : A^∨ → ℚ/ℤ` for one `q ∈ Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    pub q: usize,
    pub values: Vec<QmodZ>,
}

/// `b : Q × Q → A`, stored as ambient element indices of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleB {
    table: Vec<Vec<usize>>,
}

impl CocycleB {
    pub fn value(&self, p: usize, q: usize) -> usize {
        self.table[p][q]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().flatten().all(|&a| a == 0)
    }
}

fn coboundary_rhs(alpha: &Cocycle2, action: &QAction, qinv: usize, p: usize, r: usize) -> QmodZ {
    alpha.value(action.on_dual(qinv, p), action.on_dual(qinv, r)) - alpha.value(p, r)
}

fn check_cochain(dual: &DualGroup, action: &QAction, alpha: &Cocycle2, q: usize, qinv: usize, z: &[QmodZ]) -> bool {
    let n = dual.order();
    let equation = (0..n).all(|p| {
        (0..n).all(|r| z[p] + z[r] - z[dual.add(p, r)] == coboundary_rhs(alpha, action, qinv, p, r))
    });
    equation && action.fixed(q).iter().all(|&p| z[p].is_zero())
}

/// Solves `z(φ) + z(ψ) − z(φ+ψ) = (q·α − α)(φ,ψ)`, then subtracts a
/// character of `A^∨` extending `z` on `B(q)` so that `z` vanishes there.
pub fn solve_z(ext: &ExtensionData, dual: &DualGroup, action: &QAction, alpha: &Cocycle2, q: usize) -> Result<Cochain1> {
    let n = dual.order();
    let qinv = ext.quotient().inv(q);
    let mut a = IntMatrix::zeros(n * n, n);
    let mut rhs = Vec::with_capacity(n * n);
    for p in 0..n {
        for r in 0..n {
            let row = p * n + r;
            a[(row, p)] += 1;
            a[(row, r)] += 1;
            a[(row, dual.add(p, r))] -= 1;
            rhs.push(coboundary_rhs(alpha, action, qinv, p, r));
        }
    }
    let mut z = solve_mod(&a, &rhs).ok_or(Error::CoboundaryUnsolvable(q))?;

    // z is additive on B(q); extend it to a homomorphism h on all of A^∨
    let d = dual.structure().invariant_factors();
    let m = d.len();
    let fixed = action.fixed(q);
    let mut rows: Vec<Vec<i64>> = fixed
        .iter()
        .map(|&p| dual.character(p).iter().map(|&x| x as i64).collect())
        .collect();
    let mut h_rhs: Vec<QmodZ> = fixed.iter().map(|&p| z[p]).collect();
    for (i, &di) in d.iter().enumerate() {
        let mut row = vec![0i64; m];
        row[i] = di as i64;
        rows.push(row);
        h_rhs.push(QmodZ::ZERO);
    }
    if m > 0 {
        let h = solve_mod(&IntMatrix::from_rows(&rows), &h_rhs).ok_or(Error::CoboundaryUnsolvable(q))?;
        for (p, zp) in z.iter_mut().enumerate() {
            let hp: QmodZ = dual.character(p).iter().zip(&h).map(|(&x, hi)| hi.times(x as i64)).sum();
            *zp = *zp - hp;
        }
    }
    if !check_cochain(dual, action, alpha, q, qinv, &z) {
        return Err(Error::CoboundaryUnsolvable(q));
    }
    Ok(Cochain1 { q, values: z })
}

/// `b(p,q)` is the element `a ∈ A` with
/// `φ(a) = z(pq)(φ) − z(p)(φ) − z(q)(p⁻¹·φ)` for every `φ`.
pub fn cocycle_b(ext: &ExtensionData, dual: &DualGroup, action: &QAction, z: &[Cochain1]) -> Result<CocycleB> {
    let quo = ext.quotient();
    let g = ext.group();
    let m = quo.order();
    if z.len() != m || z.iter().enumerate().any(|(q, c)| c.q != q) {
        return Err(Error::DimensionMismatch(format!("need one cochain per element of Q ({m})")));
    }
    if z[0].values.iter().any(|v| !v.is_zero()) {
        return Err(Error::InvalidInput("z(1) must vanish".into()));
    }
    let n = dual.order();
    let mut table = vec![vec![0; m]; m];
    for p in 0..m {
        let pinv = quo.inv(p);
        for q in 0..m {
            let pq = quo.mul(p, q);
            let f: Vec<QmodZ> = (0..n)
                .map(|phi| z[pq].values[phi] - z[p].values[phi] - z[q].values[action.on_dual(pinv, phi)])
                .collect();
            let additive = (0..n).all(|x| (0..n).all(|y| f[dual.add(x, y)] == f[x] + f[y]));
            if !additive {
                return Err(Error::NotACharacter(format!("b({p},{q}) is not additive on the dual")));
            }
            table[p][q] = ext
                .subgroup()
                .iter()
                .copied()
                .find(|&a| (0..n).all(|phi| dual.eval(phi, a) == f[phi]))
                .ok_or(Error::NoMatchingElement(p, q))?;
        }
    }
    // b(pq,r)·b(p,q) = b(p,qr)·(p·b(q,r))
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                let lhs = g.mul(table[quo.mul(p, q)][r], table[p][q]);
                let rhs = g.mul(table[p][quo.mul(q, r)], action.on_a(p, table[q][r]));
                if lhs != rhs {
                    return Err(Error::NotACocycle(p, q, r));
                }
            }
        }
    }
    if (0..m).any(|q| table[0][q] != 0 || table[q][0] != 0) {
        return Err(Error::InvalidInput("b is not normalized".into()));
    }
    Ok(CocycleB { table })
}

/// `g ·_b h = b(ḡ, h̄)·g·h` on the element set of `G`.
pub fn twisted_group(ext: &ExtensionData, b: &CocycleB) -> Result<GroupTable> {
    let g = ext.group();
    let t = GroupTable::from_fn(
        g.order(),
        |x, y| g.mul(b.value(ext.projection(x), ext.projection(y)), g.mul(x, y)),
        g.labels().to_vec(),
    )?;
    Ok(t.with_name(format!("{}_b", g.name())))
}

/// An extension with a cocycle on `A^∨`, its cochain family, the derived
/// `b` and the twisted group `G_b`.
#[derive(Clone, Debug)]
pub struct TwistData {
    ext: ExtensionData,
    dual: DualGroup,
    action: QAction,
    alpha: Cocycle2,
    z: Vec<Cochain1>,
    b: CocycleB,
    twisted: Arc<Group>,
}

impl TwistData {
    /// Solves for the cochain family.
    pub fn new(ext: ExtensionData, alpha: Cocycle2) -> Result<Self> {
        let dual = DualGroup::new(ext.abelian().clone());
        let action = QAction::new(&ext, &dual);
        let z = (0..ext.quotient().order())
            .map(|q| solve_z(&ext, &dual, &action, &alpha, q))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(ext, dual, action, alpha, z)
    }

    /// Uses the given cochains after checking the coboundary equation and
    /// normalization for each.
    pub fn with_cochains(ext: ExtensionData, alpha: Cocycle2, z: Vec<Cochain1>) -> Result<Self> {
        let dual = DualGroup::new(ext.abelian().clone());
        let action = QAction::new(&ext, &dual);
        let quo = ext.quotient();
        for c in &z {
            if c.q >= quo.order() || c.values.len() != dual.order() {
                return Err(Error::DimensionMismatch(format!("cochain for q = {}", c.q)));
            }
            if !check_cochain(&dual, &action, &alpha, c.q, quo.inv(c.q), &c.values) {
                return Err(Error::CoboundaryUnsolvable(c.q));
            }
        }
        Self::assemble(ext, dual, action, alpha, z)
    }

    fn assemble(ext: ExtensionData, dual: DualGroup, action: QAction, alpha: Cocycle2, z: Vec<Cochain1>) -> Result<Self> {
        let b = cocycle_b(&ext, &dual, &action, &z)?;
        let twisted = Group::new(twisted_group(&ext, &b)?);
        Ok(TwistData {
            ext,
            dual,
            action,
            alpha,
            z,
            b,
            twisted,
        })
    }

    pub fn extension(&self) -> &ExtensionData {
        &self.ext
    }

    pub fn dual(&self) -> &DualGroup {
        &self.dual
    }

    pub fn action(&self) -> &QAction {
        &self.action
    }

    pub fn alpha(&self) -> &Cocycle2 {
        &self.alpha
    }

    pub fn cochains(&self) -> &[Cochain1] {
        &self.z
    }

    pub fn z(&self, q: usize) -> &Cochain1 {
        &self.z[q]
    }

    pub fn b(&self) -> &CocycleB {
        &self.b
    }

    pub fn group(&self) -> &Arc<Group> {
        self.ext.group()
    }

    pub fn twisted(&self) -> &Arc<Group> {
        &self.twisted
    }
}
