//! Explicit rational maps between P2 x P2, the Perazzo cubic, the
//! hyperplane `sum x_i = 0` and the Coble fourfold, with exact checks of
//! the identities relating them.

mod catalog;
mod embedding;
mod verify;

pub use catalog::{
    has_no_common_factor, map_catalog, perazzo_involution, perazzo_swap, perazzo_to_hyperplane,
    plane_pair_involution, rho, rho_with_sign, segre_to_perazzo, MapSummary, RationalMap,
};
pub use embedding::{
    induced_embedding, induced_embedding_check, intertwiner, plane_pair_group, EmbeddedGenerator, InducedEmbedding,
    Intertwiner, PlanePairElement,
};
pub use verify::{
    catalog_content_check, determinant_form, double_cover_involution_compatibility, hyperplane_pullback,
    perazzo_involution_check, perazzo_swap_check, plane_pair_involution_check, rho_lands_in_coble,
    segre_lands_in_perazzo, verify_burkhardt_factorization, verify_hyperplane_pullbacks, verify_igusa_substitution,
    verify_involution, verify_lands_in, verra_pullback_check,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("degenerate map: {0}")]
    Degenerate(String),
    #[error("no intertwiner: {0}")]
    NoIntertwiner(String),
    #[error(transparent)]
    Algebra(AlgebraError),
}
