//! Representation rings of finite groups as λ-rings, computed exactly.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, cyclotomic numbers, ℚ/ℤ values and Smith normal form.
//! * [`groups`]: finite groups as validated multiplication tables.
//! * [`chartab`]: character tables (Dixon's method), class functions, monomial
//!   representations.
//! * [`lambdaring`]: Adams operations, λ-operations, Frobenius–Schur
//!   indicators, order/exponent recovery and ring isomorphism search.
//! * [`twist`]: twisted groups `G_b` built from a normal abelian subgroup and a
//!   cocycle on its dual, with Adams-operation comparison.
//! * [`catalog`], [`io`], [`criteria`]: named groups, JSON formats and the
//!   verification suite used by the `selftest` command.

pub mod catalog;
pub mod chartab;
pub mod criteria;
pub mod error;
pub mod exact;
pub mod groups;
pub mod io;
pub mod lambdaring;
pub mod twist;

pub use error::{Error, Result};
