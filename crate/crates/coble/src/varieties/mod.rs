//! The catalog of explicit varieties (the quartic pencil `X_t`, the Igusa
//! and Burkhardt quartics, the Coble fourfold and its sections `X_tau`, the
//! quadric `Q_inf`, the Perazzo cubic, Verra threefolds and the Wiman-Edge
//! pencil), the special orbit points, and singularity certification.

mod catalog;
mod conic;
mod orbits;
mod properties;
mod singular;
mod tau;
mod verra;
mod wiman_edge;

pub use catalog::{
    build, coble_ctx, coble_equation, coble_tau_ctx, hyperplane, igusa_quartic, pencil_quartic,
    pencil_quartic_symbolic, perazzo_branch_quartic, perazzo_cubic, q_infinity, section_equation_symbolic, uv_ctx,
    uv_tau_ctx, w_ctx, wiman_edge_p0, wiman_edge_pinf, ws_ctx, wtau_ctx, x_ctx, xt_ctx, yz_ctx, VarietyDef,
    VarietyId,
};
pub use conic::{
    component_action, component_action_check, conic_fiber, special_fiber_check, fiber_involution, fiber_matrix, proportional, split_rank_two, ComponentAction,
    ConicFiber, LinePair,
};
pub use orbits::{omega, orbit_catalog, NamedOrbit, OrbitCatalog};
pub use properties::{
    four_point_sign, generic_t_witnesses, igusa_line_check, igusa_line_points, orbit_table_check, s4_generators, section_splitting_check, special_t_values, symbolic_locus_check,
    tau_discriminant_check, tau_ramification_check, tau_table_check, verra_equivariance_check, OrbitRow,
};
pub use singular::{
    hyperplane_hessian_rank, is_node_at, is_singular_at, on_hyperplane, orbit_singularities, singular_parameter,
    OrbitStatus,
};
pub use tau::{
    discriminant_t, discriminant_tau, ds_numerator, ramification_points, s_of_tau, t_of_tau, tau_table, Ramification,
    TauColumn, Value,
};
pub use verra::{discriminant_identity_check, verra_matrices, verra_matrices_in};
pub use wiman_edge::{
    base_point_check, base_points, member, singular_members_check, wiman_edge_singular_params, zero_member_lines,
    SingularLocus, SingularWitness,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarietyError {
    #[error("unknown variety id {0:?}")]
    UnknownId(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("point {0} is not on the hyperplane sum x_i = 0")]
    NotOnHyperplane(String),
    #[error("point {0} is not singular")]
    NotSingular(String),
    #[error("the map does not preserve the conic")]
    NotPreserved,
    #[error("elimination degenerated: {0}")]
    Elimination(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
