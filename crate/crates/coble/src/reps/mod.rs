//! Characters of S6 and its subgroups: Murnaghan-Nakayama values, element-wise
//! class functions, induction and restriction, twists, and invariant ranks.

mod character;
mod checks;
mod partition;
mod tables;

pub use checks::{
    a5_restriction_check, a5_restriction_rows, a5_table_check, class_group_dimension_check, derived_class_group_check,
    derived_class_groups, frobenius_check, induction_check, induction_rows, orthogonality_check, outer_restriction_rows,
    outer_twist_check, pic_and_cubic_invariant_check, DerivedClassGroup, InductionRow, OuterRow,
};
pub use character::{format_decomposition, ClassFunction};
pub use partition::{mn_character, Partition};
pub use tables::{
    a32_sign, a5, a5_irreps, class_group_character, class_group_summands, classes_with_rank,
    invariant_rank_with_galois, pic_character, relative_class_group_inductions, s6, s6_irrep, sn_irreps,
    standard_symmetric, Action, Variety,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("partition of {0} evaluated on a cycle type of {1}")]
    WeightMismatch(usize, usize),
    #[error("bad partition {0}")]
    BadPartition(String),
    #[error("carrier mismatch: {0}")]
    Carrier(String),
    #[error("multiplicity {0} is not a nonnegative integer")]
    NotIntegral(String),
    #[error("decomposition leaves a nonzero residual")]
    Residual,
    #[error("unknown variety {0}")]
    UnknownVariety(String),
    #[error("unknown action {0}")]
    UnknownAction(String),
}
