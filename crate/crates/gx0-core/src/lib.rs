//! Finite group actions, their congruence lattices, and the zero-augmented
//! action semigroup (G,X,0).
//!
//! The crate works entirely at desk scale — groups of order at most 16,
//! carriers of at most a dozen points — and trades asymptotics for
//! exhaustiveness: group axioms, G-set axioms, and semigroup associativity
//! are verified by full scans, congruence lattices are enumerated by two
//! independent methods that cross-check each other, and each structural
//! result relating a G-set to its (G,X,0) semigroup ships as an executable
//! verifier over a deterministic instance catalog.
//!
//! No IO, clocks, or platform services: the crate is `no_std` with `alloc`.
//! File formats and the command-line frontend live in the companion CLI
//! crate.

#![no_std]

#[macro_use]
extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod congruence;
pub mod group;
pub mod gset;
pub mod partition;
pub mod semigroup;
pub mod set;
pub mod theorems;

pub use congruence::{
    congruences_bruteforce, congruences_principal, gset_permutable, is_congruence, is_segregated,
    Permutability, Segregation,
};
pub use group::{builtin_groups, interval_subgroups, set_product, subgroups, FiniteGroup, Subgroup};
pub use gset::{catalog, coset_action, disjoint_union, CatalogBounds, GSet, DEFAULT_BOUNDS};
pub use partition::{compose, BitRelation, Partition};
pub use semigroup::{
    build_gx0, ideals, ideals_form_chain, is_sg_congruence, orbit_subsemigroups, sg_congruences,
    sg_congruences_bruteforce, sg_permutable, sg_segregated, FiniteSemigroup, Gx0, Role,
};
pub use set::ElemSet;
pub use theorems::{
    reproduce_example, run_catalog_suite, verify_lemma1, verify_lemma2, verify_lemma3,
    verify_thm1, verify_thm6, ClaimId, SuiteSummary, VerdictReport,
};
