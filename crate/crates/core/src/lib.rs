//! Computing with finite skew braces.
//!
//! Groups are Cayley tables over `0..n` with identity `0`; a skew brace is
//! a pair of such tables satisfying the brace identity. On top of that the
//! crate provides ideals and quotients, Huq and Smith commutators,
//! centralizers, the induced Yang–Baxter solutions, the θ-twist digroup
//! and exhaustive enumeration of small braces. Every closed-form
//! construction has a brute-force counterpart used as a cross-check.

pub mod brace;
pub mod commutator;
pub mod congruence;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod group;
pub mod ideal;
pub mod jacobson;
pub mod limits;
pub mod smith;
pub mod subset;
pub mod theta;
pub mod verdict;
pub mod ybe;

pub use brace::{Digroup, SkewBrace};
pub use error::{Error, Op, Result};
pub use group::FiniteGroup;
pub use limits::Limits;
pub use subset::Subset;
pub use verdict::Verdict;
