use crate::chartab::MatrixRep;
use crate::error::{Error, Result};
use crate::exact::{CycMatrix, Cyclotomic, Rational};

/// Largest tensor space `hom_cyclic_trace` will build.
pub const HOM_TRACE_SIZE_BOUND: usize = 4096;

/// Both sides of `tr(σ ∘ (f₁ ⊗ ⋯ ⊗ f_k) | V^{⊗k}) = tr(f₁ ⋯ f_k | V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCheck {
    pub lhs: Cyclotomic,
    pub rhs: Cyclotomic,
    pub equal: bool,
}

/// Digits of `idx` in base `d`, most significant first (Kronecker order).
fn digits(mut idx: usize, d: usize, k: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for s in (0..k).rev() {
        t[s] = idx % d;
        idx /= d;
    }
    t
}

fn undigits(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

/// The cyclic shift `v₁⊗v₂⊗⋯⊗v_k ↦ v₂⊗⋯⊗v_k⊗v₁` on basis indices.
fn cyclic_shift(d: usize, k: usize) -> Vec<usize> {
    (0..d.pow(k as u32))
        .map(|i| {
            let mut t = digits(i, d, k);
            t.rotate_left(1);
            undigits(&t, d)
        })
        .collect()
}

/// Builds `f₁ ⊗ ⋯ ⊗ f_k` and the permutation `σ` explicitly, then compares
/// `tr(σ ∘ F)` with `tr(f₁ ⋯ f_k)`.
pub fn trace_identity_check(fs: &[CycMatrix]) -> Result<TraceCheck> {
    let Some(first) = fs.first() else {
        return Err(Error::DimensionMismatch("need at least one matrix".into()));
    };
    let d = first.rows();
    if fs.iter().any(|f| f.rows() != d || f.cols() != d) {
        return Err(Error::DimensionMismatch("matrices must be square of one size".into()));
    }
    let k = fs.len();
    let big = fs[1..].iter().fold(first.clone(), |acc, f| acc.kron(f));
    // σ sends basis vector j to shift[j]; (σF)[j][j] = F[σ⁻¹ j][j]
    let shift = cyclic_shift(d, k);
    let mut inv = vec![0; shift.len()];
    for (j, &s) in shift.iter().enumerate() {
        inv[s] = j;
    }
    let lhs: Cyclotomic = (0..shift.len()).map(|j| big[(inv[j], j)].clone()).sum::<Cyclotomic>().reduced();
    let prod = fs[1..].iter().fold(first.clone(), |acc, f| &acc * f);
    let rhs = prod.trace().reduced();
    let equal = lhs == rhs;
    Ok(TraceCheck { lhs, rhs, equal })
}

/// `tr(ε ∘ σ | V_j^* ⊗ V_i^{⊗k})` where `ε = |G|⁻¹ Σ_g g` and `σ` cyclically
/// permutes the `k` tensor legs of `V_i`. The image of `ε` is
/// `Hom_G(V_j, V_i^{⊗k})`.
///
/// Only diagonal entries of `ρ_j(g⁻¹)ᵀ ⊗ ρ_i(g)^{⊗k} ∘ (1 ⊗ σ)` are formed.
pub fn hom_cyclic_trace(rho_i: &MatrixRep, rho_j: &MatrixRep, k: usize) -> Result<Cyclotomic> {
    let g = rho_i.group();
    if g.table() != rho_j.group().table() {
        return Err(Error::MismatchedGroups);
    }
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let (di, dj) = (rho_i.dim(), rho_j.dim());
    let size = di.checked_pow(k as u32).and_then(|x| x.checked_mul(dj)).unwrap_or(usize::MAX);
    if size > HOM_TRACE_SIZE_BOUND {
        return Err(Error::SizeBoundExceeded(size, HOM_TRACE_SIZE_BOUND));
    }
    let legs = di.pow(k as u32);
    let shift = cyclic_shift(di, k);
    let mut total = Cyclotomic::zero();
    for x in 0..g.order() {
        let dual = rho_j.matrix(g.inv(x));
        let m = rho_i.matrix(x);
        let dual_trace = dual.trace();
        if dual_trace.is_zero() {
            continue;
        }
        // (ρ_i(g)^{⊗k} ∘ σ)[t][t] = ρ_i(g)^{⊗k}[t][σ t]
        let mut leg_trace = Cyclotomic::zero();
        for t in 0..legs {
            let a = digits(t, di, k);
            let b = digits(shift[t], di, k);
            let mut term = Cyclotomic::one();
            for s in 0..k {
                let e = &m[(a[s], b[s])];
                if e.is_zero() {
                    term = Cyclotomic::zero();
                    break;
                }
                term = &term * e;
            }
            leg_trace += &term;
        }
        total += &(&dual_trace * &leg_trace);
    }
    Ok(total.scale(&Rational::new(1.into(), g.order().into())).reduced())
}
