//! Exhaustive verification algorithms for permutability phenomena in finite
//! groups, matrix groups over finite fields, modular group algebras and
//! Magnus-ordered free-group algebras.
//!
//! The crate is organized around four engines:
//!
//! * [`group`] / [`lattice`] / [`analysis`]: finite groups materialized as
//!   multiplication tables, full subgroup-lattice enumeration and the
//!   permutable / normal / subnormal predicate family.
//! * [`fq`] / [`matrix`] / [`gl`]: arithmetic in GF(q), the transvection and
//!   dilation generator calculus and the GL/SL verification procedures.
//! * [`algebra`] / [`radical`]: group algebras F_q[G], unit testing through
//!   the regular representation and Jacobson-radical computation.
//! * [`magnus`]: reduced free-group words, truncated Magnus expansions, the
//!   induced total bi-invariant order and the min-support valuation.
//!
//! [`suites`] bundles the named verification runs exposed by the `permuta`
//! CLI; [`corpus`] pins the deterministic group corpus they run over.

pub mod algebra;
pub mod analysis;
pub mod bitset;
pub mod corpus;
pub mod error;
pub mod fq;
pub mod gl;
pub mod group;
pub mod groupspec;
pub mod lattice;
pub mod linalg;
pub mod magnus;
pub mod matrix;
pub mod perm;
pub mod radical;
pub mod suites;

pub use algebra::{AlgebraElement, FiniteAlgebra, GroupAlgebra, IdealBasis};
pub use analysis::SubgroupReport;
pub use bitset::Bitset;
pub use error::{Error, Result};
pub use fq::Fq;
pub use group::{ElementRepr, FiniteGroup, SubgroupSet};
pub use magnus::{FreeWord, KgElement, MagnusExpansion};
pub use matrix::MatrixFq;
pub use perm::Perm;

/// Default cap for closure construction in [`group::generate_group`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
/// Default cap on group order for subgroup-lattice enumeration.
pub const DEFAULT_ORDER_CAP: usize = 500;
/// Group-order cap for group-algebra computations.
pub const ALGEBRA_GROUP_CAP: usize = 32;
/// Field-size cap for group-algebra computations.
pub const ALGEBRA_FIELD_CAP: usize = 9;

/// Runtime caps, overridable from the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    pub closure: usize,
    pub order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: DEFAULT_CLOSURE_CAP,
            order: DEFAULT_ORDER_CAP,
        }
    }
}
