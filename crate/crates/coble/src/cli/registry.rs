//! The closed list of named checks and the parallel runner.

use rayon::prelude::*;

use crate::report::{timed, CheckReport};
use crate::{crconfig, groups, maps, reps, varieties};

use super::tables::{expected_tables_check, rank1_check, rank2_check};
use super::CliError;

/// A registered check. `suite` groups checks by topic.
#[derive(Clone, Copy, Debug)]
pub struct CheckEntry {
    pub name: &'static str,
    pub suite: &'static str,
    run: fn(u64) -> CheckReport,
}

impl CheckEntry {
    pub fn run(&self, seed: u64) -> CheckReport {
        let r = timed(|| (self.run)(seed));
        debug_assert_eq!(r.name, self.name);
        r
    }
}

macro_rules! entries {
    ($($suite:literal: $name:literal => $run:expr,)*) => {
        &[$(CheckEntry { name: $name, suite: $suite, run: $run },)*]
    };
}

static REGISTRY: &[CheckEntry] = entries! {
    "identities": "perazzo_involution_squares_to_identity" => |_| maps::perazzo_involution_check(),
    "identities": "plane_pair_involution_squares_to_identity" => |_| maps::plane_pair_involution_check(),
    "identities": "perazzo_swap_is_involution" => |_| maps::perazzo_swap_check(),
    "identities": "segre_lands_in_perazzo" => |_| maps::segre_lands_in_perazzo(),
    "identities": "rho_lands_in_coble" => |_| maps::rho_lands_in_coble(),
    "identities": "igusa_pulls_back_to_branch_quartic" => maps::verify_igusa_substitution,
    "identities": "double_cover_involution_compatibility" => |_| maps::double_cover_involution_compatibility(),
    "identities": "hyperplane_pullbacks" => |_| maps::verify_hyperplane_pullbacks(),
    "identities": "verra_forms_pull_back_from_coble" => |_| maps::verra_pullback_check(),
    "identities": "burkhardt_factorization" => |_| maps::verify_burkhardt_factorization(),
    "identities": "map_catalog_well_formed" => |_| maps::catalog_content_check(),
    "identities": "induced_embedding_nonstandard" => |_| maps::induced_embedding_check(),
    "identities": "coble_section_splitting" => |_| varieties::section_splitting_check(),
    "identities": "verra_discriminant_identity" => |_| varieties::discriminant_identity_check(),
    "identities": "verra_pencil_equivariance" => |_| varieties::verra_equivariance_check(),
    "orbits": "orbit_singularity_table" => |_| varieties::orbit_table_check(),
    "orbits": "orbit_singular_parameters" => |_| varieties::symbolic_locus_check(),
    "orbits": "igusa_singular_along_lines" => |_| varieties::igusa_line_check(),
    "cremona-richmond": "cr_incidence_15_3" => |_| crconfig::incidence_check(),
    "cremona-richmond": "cr_self_duality" => |_| crconfig::self_duality_check(),
    "cremona-richmond": "cr_realization" => |_| crconfig::realization_check(),
    "cremona-richmond": "cr_jail_decompositions" => |_| crconfig::jail_check(),
    "cremona-richmond": "cr_uniqueness_transform" => |_| crconfig::uniqueness_transform_check(),
    "cremona-richmond": "cr_igusa_unique_quartic" => |_| crconfig::igusa_uniqueness_kernel(),
    "wiman-edge": "wiman_edge_base_points_double" => |_| varieties::base_point_check(),
    "wiman-edge": "wiman_edge_singular_members" => |_| varieties::singular_members_check(),
    "tau": "tau_discriminant_onto" => |_| varieties::tau_discriminant_check(),
    "tau": "tau_value_table" => |_| varieties::tau_table_check(),
    "tau": "tau_ramification_points" => |_| varieties::tau_ramification_check(),
    "representations": "sn_character_orthogonality" => |_| reps::orthogonality_check(),
    "representations": "a5_character_table" => |_| reps::a5_table_check(),
    "representations": "outer_twist_on_irreducibles" => |_| reps::outer_twist_check(),
    "representations": "s5_restrictions_to_a5" => |_| reps::a5_restriction_check(),
    "representations": "pic_and_unique_cubic_invariant" => |_| reps::pic_and_cubic_invariant_check(),
    "representations": "relative_class_group_inductions" => |_| reps::induction_check(),
    "representations": "class_group_dimensions" => |_| reps::class_group_dimension_check(),
    "representations": "class_groups_from_restrictions" => |_| reps::derived_class_group_check(),
    "representations": "frobenius_reciprocity" => reps::frobenius_check,
    "subgroups": "subgroup_classes_56" => |_| groups::subgroup_enumeration_check(),
    "subgroups": "outer_automorphism" => |_| groups::outer_automorphism_check(),
    "subgroups": "subgroup_name_catalog" => |_| groups::subgroup_names_check(),
    "subgroups": "rank1_subgroups" => |_| rank1_check(),
    "subgroups": "rank2_subgroups" => |_| rank2_check(),
    "conic": "conic_fibers_corank_one" => |_| varieties::special_fiber_check(),
    "conic": "conic_component_action" => |_| varieties::component_action_check(),
    "conic": "q_infinity_meets_cr_lines" => |_| crconfig::quadric_meets_lines_check(),
    "tables": "expected_tables_reproduced" => |_| expected_tables_check(),
};

/// Every registered check, in report order.
pub fn registry() -> &'static [CheckEntry] {
    REGISTRY
}

/// Resolves names (or `all`) to registry entries, in registry order.
/// Any unknown name fails the whole selection.
pub fn select(names: &[String]) -> Result<Vec<CheckEntry>, CliError> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(REGISTRY.to_vec());
    }
    let unknown: Vec<&str> =
        names.iter().filter(|n| !REGISTRY.iter().any(|e| e.name == n.as_str())).map(|n| n.as_str()).collect();
    if !unknown.is_empty() {
        return Err(CliError::UnknownCheck(unknown.join(", ")));
    }
    Ok(REGISTRY.iter().filter(|e| names.iter().any(|n| n == e.name)).copied().collect())
}

/// Runs `checks` on up to `jobs` worker threads; reports come back in the
/// order of `checks`.
pub fn run_checks(checks: &[CheckEntry], seed: u64, jobs: usize) -> Result<Vec<CheckReport>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(pool.install(|| checks.par_iter().map(|c| c.run(seed)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_distinct_and_enough() {
        let mut names: Vec<&str> = REGISTRY.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
        assert!(REGISTRY.len() >= 40);
    }

    #[test]
    fn unknown_names_are_rejected() {
        let err = select(&["cr_self_duality".into(), "no_such_check".into()]).unwrap_err();
        assert!(matches!(err, CliError::UnknownCheck(ref s) if s == "no_such_check"));
    }

    #[test]
    fn selection_keeps_registry_order() {
        let s = select(&["cr_self_duality".into(), "cr_incidence_15_3".into()]).unwrap();
        assert_eq!(s.iter().map(|e| e.name).collect::<Vec<_>>(), ["cr_incidence_15_3", "cr_self_duality"]);
    }
}
