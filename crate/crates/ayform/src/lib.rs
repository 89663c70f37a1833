//! Signed-permutation Weyl groups, D/B-Young tableaux, and the minimal
//! abstract-Young representations they span.
//!
//! The crate builds the tableau families T[λ,m,±], T[λ,⊠], T[λ,·|·,±],
//! T[λ,÷,±] (and the type-B analogues), turns them into representation
//! matrices through the generalized Young orthogonal form, and verifies the
//! enumeration, induction and decomposition identities exactly over
//! arbitrary-precision rationals. A continuous matrix family connects the
//! zero-diagonal representations to the classical induced form.

pub mod cells;
pub mod error;
pub mod group;
pub mod homotopy;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod shapes;
pub mod tableaux;

pub use error::AyError;
pub use group::{GroupFamily, GroupKind, Parabolic, Reflection, SignedPermutation};
pub use rep::{
    build_representation, characters_equal, direct_sum, induce_classical, specht_yof, Character,
    Normalization, Representation,
};
pub use scalar::{Rat, Scalar};
pub use shapes::{partitions, SkewShape};
pub use tableaux::{
    enumerate_family, enumerate_halves, lift_b_m, lift_b_zero, lift_m, lift_zero, FamilySpec,
    HalfTableau, Placement, Sign, SignedTableau, Variant,
};
