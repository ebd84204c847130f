//! Finite groups as validated multiplication tables, with conjugacy data,
//! subgroups, abelian structure and extensions `A → G → Q`.

mod abelian;
mod conjugacy;
mod extension;
mod presets;
mod subgroups;
mod table;

pub use abelian::{abelian_structure, AbelianStructure};
pub(crate) use abelian::enumerate_vectors;
pub use conjugacy::{conjugacy_classes, ConjugacyData, Group};
pub use extension::{extension, ExtensionData};
pub use presets::{alternating, cyclic, dihedral, direct_product, klein, quaternion8, symmetric};
pub use subgroups::{all_subgroups, normal_abelian_subgroups, normal_subgroups, Subgroup};
pub use table::{GroupTable, DEFAULT_ORDER_LIMIT};

/// lcm of element orders.
pub fn exponent(g: &GroupTable) -> usize {
    g.exponent()
}

/// Elements commuting with everything.
pub fn center(g: &GroupTable) -> Vec<usize> {
    g.center()
}
