//! Finite preordered sets as a category: monotone maps, the Alexandroff
//! topology, prekernels and precokernels relative to trivial morphisms, the
//! stable category obtained by identifying maps that differ only on trivial
//! clopen parts, and the pretorsion theory of equivalence relations and
//! partial orders.
//!
//! Objects are small (carriers of a handful of elements) and most checks are
//! exhaustive, so every search takes an explicit budget and fails with
//! [`Error::BudgetExceeded`] instead of running away.

pub mod category;
pub mod decompose;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod exactness;
pub mod io;
pub mod partition;
pub mod pretorsion;
pub mod relation;
pub mod stable;
pub mod topology;

pub use category::{BuildMode, Morph, PreObj, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use partition::Partition;
pub use relation::Rel;
