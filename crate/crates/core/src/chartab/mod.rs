//! Exact character tables, class functions and monomial representations.

mod abelian;
mod classfn;
mod dixon;
mod matrep;
mod modp;
mod table;

pub use abelian::{abelian_character_table, AbelianCharacterTable};
pub use classfn::{inner_product, ClassFunction};
pub use dixon::{character_table, character_table_seeded};
pub use matrep::{induce_monomial, MatrixRep};
pub use table::{restrict, CharacterTable};
