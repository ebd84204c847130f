use std::sync::Arc;

use super::cocycle::{enumerate_invariant_nondegenerate, Cocycle2};
use super::construct::{Cochain1, TwistData};
use super::dual::{DualGroup, QAction};
use crate::chartab::{abelian_character_table, AbelianCharacterTable, CharacterTable};
use crate::error::Result;
use crate::exact::{Cyclotomic, QmodZ};
use crate::groups::{dihedral, klein, normal_abelian_subgroups, AbelianStructure, ExtensionData, Group};

/// `D8 = ⟨x, y, q⟩` with `A = ⟨x, y⟩`, dual basis `ν, μ` (`ν(x) = μ(y) = 1/2`),
/// `α(ν^aμ^b, ν^cμ^d) = bc/2` and `z(q)(ν^aμ^b) = b/4`.
pub fn d8_example() -> Result<TwistData> {
    let g = Group::new(dihedral(8));
    let a = AbelianStructure::with_generators(&g, &[0, 1, 2, 3], &[1, 2])?;
    let ext = ExtensionData::with_structure(g, a)?;
    let dual = DualGroup::new(ext.abelian().clone());
    let alpha = Cocycle2::from_fn(&dual, |p, q| QmodZ::new((p[1] * q[0]) as i64, 2))?;
    let z = (0..ext.quotient().order())
        .map(|q| Cochain1 {
            q,
            values: dual
                .characters()
                .iter()
                .map(|phi| if q == 0 { QmodZ::ZERO } else { QmodZ::new(phi[1] as i64, 4) })
                .collect(),
        })
        .collect();
    TwistData::with_cochains(ext, alpha, z)
}

/// Irreducibles of D8 in the order `V₀₀, V₁₀, V₀₁, V₁₁, W`, where
/// `V_ab(x^i y^j q^k) = (−1)^{ai+bk}` and `W` is 2-dimensional.
pub fn d8_basis(t: &CharacterTable) -> Option<[usize; 5]> {
    if t.group().order() != 8 || t.rank() != 5 {
        return None;
    }
    let v = |a: usize, b: usize| {
        (0..t.rank()).find(|&i| {
            (0..8).all(|g| {
                let s: i64 = if (a * (g & 1) + b * (g >> 2)) % 2 == 0 { 1 } else { -1 };
                t.irreducible(i).at_element(g) == &Cyclotomic::from_int(s)
            })
        })
    };
    let w = (0..t.rank()).find(|&i| t.degrees()[i] == 2)?;
    Some([v(0, 0)?, v(1, 0)?, v(0, 1)?, v(1, 1)?, w])
}

/// The Klein four-group's table with the alternating pairing
/// `s(V_ij, V_kl) = (il + jk)/2`, indexed by the table's irreducibles.
pub fn klein_example() -> Result<(AbelianCharacterTable, Vec<Vec<QmodZ>>)> {
    let t = abelian_character_table(Group::new(klein()))?;
    let e = &t.exponents;
    let pairing = e
        .iter()
        .map(|a| e.iter().map(|b| QmodZ::new((a[0] * b[1] + a[1] * b[0]) as i64, 2)).collect())
        .collect();
    Ok((t, pairing))
}

/// Every twist of `G` over the normal abelian subgroup `A` by a standard
/// representative of each invariant nondegenerate class.
pub fn twists_over(group: Arc<Group>, subgroup: &[usize]) -> Result<Vec<TwistData>> {
    let ext = ExtensionData::new(group, subgroup)?;
    let dual = DualGroup::new(ext.abelian().clone());
    let action = QAction::new(&ext, &dual);
    enumerate_invariant_nondegenerate(&dual, &action, ext.quotient().order())?
        .into_iter()
        .map(|alpha| TwistData::new(ext.clone(), alpha))
        .collect()
}

/// All twists of `G` over normal abelian subgroups accepted by `keep`.
pub fn all_twists(group: Arc<Group>, keep: impl Fn(&[usize]) -> bool) -> Result<Vec<TwistData>> {
    let mut out = Vec::new();
    for a in normal_abelian_subgroups(&group) {
        if a.len() > 1 && keep(&a) {
            out.extend(twists_over(group.clone(), &a)?);
        }
    }
    Ok(out)
}
