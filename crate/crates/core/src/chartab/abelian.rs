use std::sync::Arc;

use super::table::cmp_rows;
use super::CharacterTable;
use crate::error::Result;
use crate::exact::Cyclotomic;
use crate::groups::{abelian_structure, AbelianStructure, Group};

/// Character table of an abelian group, built directly from its invariant
/// factors, with the exponent vector of every irreducible.
#[derive(Clone, Debug)]
pub struct AbelianCharacterTable {
    pub table: CharacterTable,
    pub structure: AbelianStructure,
    /// `exponents[i]` is the exponent vector of irreducible `i`.
    pub exponents: Vec<Vec<u64>>,
}

/// `φ(a) = exp(2πi Σ φᵢ aᵢ / dᵢ)` for every character `φ`; no Dixon step.
pub fn abelian_character_table(group: Arc<Group>) -> Result<AbelianCharacterTable> {
    let structure = abelian_structure(&group)?;
    let mut rows: Vec<(Vec<u64>, Vec<Cyclotomic>)> = structure
        .coordinate_vectors()
        .into_iter()
        .map(|phi| {
            // abelian: class c is the singleton {c}
            let values = (0..group.order())
                .map(|a| structure.pairing(&phi, a).to_cyclotomic().reduced())
                .collect();
            (phi, values)
        })
        .collect();
    rows.sort_by(|a, b| cmp_rows(&a.1, &b.1));
    let exponents = rows.iter().map(|r| r.0.clone()).collect();
    let table = CharacterTable::from_values(group, rows.into_iter().map(|r| r.1).collect())?;
    Ok(AbelianCharacterTable {
        table,
        structure,
        exponents,
    })
}
