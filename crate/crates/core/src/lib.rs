//! Exact canonical-ideal invariants of numerical semigroup rings `k[[H]]`.
//!
//! Everything is computed in the value-set model: a monomial fractional ideal
//! of `k[[H]]` is a set `E` of integers with `E + H ⊆ E`, and lengths of
//! quotients are cardinalities of set differences. The crate covers
//!
//! - [`semigroup`]: construction, Apéry sets, pseudo-Frobenius numbers and the
//!   genus-graded semigroup tree,
//! - [`relideal`]: windowed arithmetic of relative ideals,
//! - [`invariants`]: canonical degree, canonical index, Hilbert coefficients and
//!   the almost-Gorenstein test,
//! - [`roots`]: monomial roots of the canonical ideal,
//! - [`idealization`]: invariants of `R ⋉ m` through the pair model,
//! - [`corpus`]: exhaustive verification sweeps and the on-disk cache,
//! - [`families`]: parametrised semigroup families with closed-form claims.

mod bits;
pub mod corpus;
mod error;
pub mod families;
pub mod idealization;
pub mod invariants;
pub mod relideal;
pub mod roots;
pub mod semigroup;

pub use corpus::{CheckStatus, PropertyCheckResult, VerificationReport};
pub use error::{Error, Result};
pub use invariants::InvariantReport;
pub use relideal::{Containment, IdealRecord, RelativeIdeal};
pub use roots::{RootWitness, Rootset};
pub use semigroup::NumericalSemigroup;
