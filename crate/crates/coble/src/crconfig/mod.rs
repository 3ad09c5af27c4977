//! The Cremona-Richmond configuration of 15 lines and 15 points in the
//! hyperplane `sum x_i = 0`: combinatorics, realization, self-duality, jail
//! decompositions, the normalizing transformation and uniqueness of the
//! quartic singular along it.

mod combinatorics;
mod jail;
mod kernel;
mod quadric;
mod realization;
mod uniqueness;

pub use combinatorics::{
    commuting_incidence, incidence, incidence_check, incidence_matrix, preserves_incidence, self_duality_check,
    standard_a5,
};
pub use jail::{decomposition, jail_check, jail_decompositions, Decomposition, DecompositionRow};
pub use kernel::{condition_matrix, igusa_on_hyperplane, igusa_uniqueness_kernel, quartic_kernel, quartic_monomials};
pub use quadric::{quadric_meets_lines_check, quadric_on_line, QuadricLineRow};
pub use realization::{
    duad_point, intersection, on_line, realization_check, realize, satisfies_line_equations, CrRealization,
    RealizationSummary,
};
pub use uniqueness::{normalized_points, point_images, transform_matrix, uniqueness_transform_check, PointImage};
