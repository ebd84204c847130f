//! The representation ring as a λ-ring: Adams operations, λ-operations,
//! Frobenius–Schur indicators, order and exponent recovery, trace identities
//! and based ring isomorphisms.

mod adams;
mod ring;
mod trace;

pub use adams::{
    adams, adams_unreduced, exponent_from_ring, fs_indicator, order_from_ring, twisted_adams_abelian, AdamsMatrix,
};
pub use ring::{
    adams_apply, based_ring_isomorphisms, commutes_with_adams, lambda_op, restriction_matrix, structure_constants,
    RepRingElement,
};
pub use trace::{hom_cyclic_trace, trace_identity_check, TraceCheck, HOM_TRACE_SIZE_BOUND};
