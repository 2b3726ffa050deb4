//! Finite biracks (equivalently, non-degenerate set-theoretic solutions
//! of the Yang-Baxter equation) on carriers `{0..n-1}`.
//!
//! The crate provides:
//!
//! - permutation arithmetic and materialized permutation groups with
//!   centers, commutator subgroups, lower central series and nilpotency
//!   classes ([`perm`], [`group`]);
//! - the [`birack::Birack`] type with axiom validation and structural
//!   predicates (distributivity by several independent routes,
//!   involutivity, idempotency, derived/permutational shape);
//! - constructions: permutational and projection biracks, derived
//!   biracks of racks, products, Wada switches on a catalog of small
//!   groups, and a six-element distributive fixture ([`construct`]);
//! - translation-kernel congruences, quotients and retract towers up to
//!   the multipermutation level ([`congruence`], [`retract`]);
//! - the solution view with the braid-relation oracle ([`solution`]);
//! - exhaustive censuses of small biracks and equivalence harnesses
//!   tying multipermutation level, reductivity, permutationality and
//!   nilpotency of multiplication groups together ([`census`],
//!   [`theorems`]).
//!
//! The crate is `no_std` (with `alloc`); everything is a pure function
//! of immutable inputs and safe to call concurrently.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod birack;
pub mod census;
pub mod congruence;
pub mod construct;
mod error;
pub mod group;
pub mod perm;
pub mod retract;
pub mod solution;
pub mod theorems;

pub use birack::{Birack, GroupFingerprint, PropertyReport};
pub use census::CensusEntry;
pub use congruence::{Congruence, CongruenceKind};
pub use construct::{FiniteGroup, Rack, RackSide};
pub use error::{Axiom, Error};
pub use group::{PermGroup, DEFAULT_GROUP_CAP};
pub use perm::Perm;
pub use retract::{RetractKind, RetractTower};
pub use solution::Solution;
pub use theorems::{TheoremKind, TheoremReport, Verdict};
