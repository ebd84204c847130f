//! Twisted groups `G_b` from an extension `A → G → Q` with `A` abelian and a
//! `Q`-invariant nondegenerate cocycle class on `A^∨`.
//!
//! Conventions: `Q` acts on `A` by `q·a = s(q) a s(q)⁻¹` and on `A^∨` by
//! `(q·φ)(a) = φ(q⁻¹·a)`; cocycles act by `(q·α)(φ,ψ) = α(q⁻¹φ, q⁻¹ψ)`.

mod cocycle;
mod compare;
mod construct;
mod dual;
mod examples;

pub use cocycle::{enumerate_invariant_nondegenerate, is_invariant_class, is_nondegenerate, skew, Cocycle2};
pub use compare::{
    compare_adams, discrepancy_is_invisible, match_irreducibles, power_discrepancy, twisted_character,
    twisted_power, AdamsComparison,
};
pub use construct::{cocycle_b, solve_z, twisted_group, Cochain1, CocycleB, TwistData};
pub use dual::{DualGroup, QAction};
pub use examples::{all_twists, d8_basis, d8_example, klein_example, twists_over};
