//! Exact arithmetic: rationals, cyclotomic numbers, roots of unity written
//! additively, and integer linear algebra.

mod cyclotomic;
mod matrix;
mod qmodz;
mod smith;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic};
pub use matrix::{CycMatrix, IntMatrix};
pub use qmodz::QmodZ;
pub use smith::{apply_mod, smith_normal_form, solve_mod, SmithDecomposition};
pub(crate) use smith::smith_with_inverse;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// ζₙᵏ.
pub fn zeta(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::zeta(n, k)
}

/// `a/b ↦ ζ_b^a`.
pub fn qmodz_to_cyclotomic(q: QmodZ) -> Cyclotomic {
    q.to_cyclotomic()
}
