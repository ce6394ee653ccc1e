//! Exact integer classification of bidouble covers of `P¹ × P¹`.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised by topic:
//!
//! - [`covers`]: branch data, validation, classification and the 12-element
//!   symmetry group acting on types.
//! - [`invariants`]: `χ`, `K²`, `p_g`, canonical class divisibility, `π₁`
//!   and the homeomorphism signature.
//! - [`deformations`]: natural deformation degree data, the hypothesis check
//!   certifying that two simple covers are not deformation equivalent, and
//!   pair verdicts.
//! - [`singularities`]: cyclic quotient singularities of class T, their
//!   `Q`-Gorenstein smoothing families and lens space links.
//! - [`search`]: bounded enumeration of types up to symmetry and grouping by
//!   signature with a mergeable accumulator.
//!
//! IO, JSON, the command line front end and the parallel driver live in the
//! `bicover` crate.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod covers;
pub mod deformations;
pub mod invariants;
pub mod search;
pub mod singularities;

pub use covers::{BiDegree, CoverClass, CoverError, CoverType};
pub use deformations::{
    manetti_check, natural_deformation_profile, pair_verdict, HomeoStatus, ManettiCertificate,
    ManettiCondition, NaturalDeformationProfile, NondefStatus, PairVerdict,
};
pub use invariants::{
    DivisibilityVerdict, HalfInt, InvariantError, InvariantRecord, Pi1, Signature,
};
pub use search::{SearchConfig, SearchReport, SignatureGroup, SignatureTable, SkipSummary};
pub use singularities::{ClassTDatum, CyclicQuotient, SingularityError, SmoothingFamily};
