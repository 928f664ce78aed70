//! Classification of the finite groups that occur as orientation-preserving
//! topological symmetry groups of embeddings of the complete graph `K_n` in
//! `S^3`.
//!
//! - [`group`]: symbolic group descriptors, canonical forms, names.
//! - [`classify`]: realizability of one group on `K_n`, and full enumeration.
//! - [`automorphism`]: realizability of a single automorphism by cycle type.
//! - [`catalog`]: published rows for `2 <= n <= 20` and `n = 140`, table output.
//! - [`cli`]: the `tsg` command.

pub mod arith;
pub mod automorphism;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod selftest;

pub use automorphism::{cycle_type_of, is_realizable, realizable_cycle_types, AutoVerdict, CycleType};
pub use catalog::{emit_table, known_groups, verify_against_catalog, CatalogEntry, DiffReport};
pub use classify::{check, enumerate, ClassificationResult, ClauseRef, Theorem};
pub use error::{Error, Result};
pub use group::{parse_group, Family, GroupDescriptor, GroupList, Polyhedral};
