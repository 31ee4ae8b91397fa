//! Finite semigroups, their ideals, and the Jacobson topology on primitive ideals.
//!
//! Semigroups are Cayley tables of order at most 64, and subsets of elements
//! are bitmasks. Primitive ideals are found as annihilators of simple modules
//! drawn from a bounded catalog of matrix actions over small prime fields.

pub mod catalog;
pub mod dot;
pub mod enumerate;
pub mod format;
pub mod ideals;
pub mod modact;
pub mod primitive;
pub mod semigroup;
pub mod subset;
pub mod topology;

pub use ideals::{Flavor, IdealError, IdealSet};
pub use modact::{ActionError, ActionWitness, ModuleSpace};
pub use primitive::{Bounds, PrimSearchReport, PrimitiveWitness};
pub use semigroup::{FiniteSemigroup, HomError, SemigroupHom, TableError};
pub use subset::ElemSet;
pub use topology::{PointSet, StructureSpace, TopologyError};
