//! Permutations of six letters, subgroups up to conjugacy, the outer
//! automorphism, and actions on projective points.

mod action;
mod catalog;
mod checks;
mod enumerate;
mod outer;
mod perm;
mod subgroup;

pub use action::{act_on_point, galois, orbit, stabilizer_order, Mode, Point};
pub use checks::{outer_automorphism_check, subgroup_enumeration_check, subgroup_names_check, ORACLE_MAX_ORDER};
pub use catalog::{class_names, classify_subgroup, display_name, resolve, SubgroupInfo};
pub use enumerate::{brute_force_counts, class_of, subgroup_classes, SubgroupClass};
pub use outer::{
    act_on_duad, act_on_syntheme, duad_index, duad_perm, duads, outer_automorphism, syntheme_index,
    syntheme_perm, synthemes, totals, Duad, OuterAut, Syntheme,
};
pub use perm::{all_perms, Perm, Table, CYCLE_TYPES, ORDER};
pub use subgroup::{ElemSet, Subgroup};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a permutation of 1..6: {0}")]
    NotAPermutation(String),
    #[error("points must have 6 or 7 coordinates, got {0}")]
    Dimension(usize),
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("unknown subgroup name {0}")]
    UnknownName(String),
    #[error("internal inconsistency: {0}")]
    Defect(String),
}
