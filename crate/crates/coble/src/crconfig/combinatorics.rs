//! Incidence between the 15 duads and the 15 synthemes of `{1..6}`, its
//! group-theoretic form, and the self-duality given by the outer
//! automorphism.

use crate::groups::{duad_perm, duads, outer_automorphism, syntheme_perm, synthemes, Perm, Subgroup};
use crate::report::CheckReport;

/// Whether duad `d` is one of the three pairs of syntheme `s` (indices into
/// [`duads`] and [`synthemes`]).
pub fn incidence(d: usize, s: usize) -> bool {
    synthemes()[s].contains(&d)
}

/// Incidence read off the permutations: the transposition of the duad
/// commutes with the triple transposition of the syntheme.
pub fn commuting_incidence(d: usize, s: usize) -> bool {
    let a = duad_perm(duads()[d]);
    let b = syntheme_perm(synthemes()[s]);
    a.compose(&b) == b.compose(&a)
}

/// The 15 x 15 incidence matrix, rows indexed by duads.
pub fn incidence_matrix() -> Vec<Vec<u8>> {
    (0..15).map(|d| (0..15).map(|s| incidence(d, s) as u8).collect()).collect()
}

/// Each duad lies in exactly 3 synthemes and each syntheme has 3 duads,
/// and the commuting criterion agrees with membership on all 225 pairs.
pub fn incidence_check() -> CheckReport {
    let mut r = CheckReport::new("cr_incidence_15_3");
    let m = incidence_matrix();
    for (d, row) in m.iter().enumerate() {
        let n: u8 = row.iter().sum();
        r.require(n == 3, || format!("duad {d} lies on {n} lines"));
    }
    for s in 0..15 {
        let n: u8 = m.iter().map(|row| row[s]).sum();
        r.require(n == 3, || format!("syntheme {s} has {n} points"));
    }
    let mut agree = 0;
    for d in 0..15 {
        for s in 0..15 {
            if incidence(d, s) == commuting_incidence(d, s) {
                agree += 1;
            } else {
                r.fail(format!("criteria disagree on duad {d}, syntheme {s}"));
            }
        }
    }
    r.detail("agreeing_pairs", agree);
    r
}

/// Whether the pair of maps (points to lines, lines to points) preserves
/// incidence in both directions.
pub fn preserves_incidence(point_to_line: &[usize], line_to_point: &[usize]) -> bool {
    (0..15).all(|d| (0..15).all(|s| incidence(d, s) == incidence(line_to_point[s], point_to_line[d])))
}

/// The outer automorphism exchanges duads and synthemes preserving
/// incidence; the identity labelling does not. A standard `A5` is
/// transitive on synthemes and its outer image is transitive on duads.
pub fn self_duality_check() -> CheckReport {
    let mut r = CheckReport::new("cr_self_duality");
    let a = outer_automorphism();
    let p2l: Vec<usize> = (0..15).map(|d| a.duad_to_syntheme(d)).collect();
    let l2p: Vec<usize> = (0..15).map(|s| a.syntheme_to_duad(s)).collect();
    let mut sorted = p2l.clone();
    sorted.sort_unstable();
    r.require(sorted == (0..15).collect::<Vec<_>>(), || "points do not map onto lines".into());
    r.require(preserves_incidence(&p2l, &l2p), || "outer automorphism breaks incidence".into());
    let id: Vec<usize> = (0..15).collect();
    let control = preserves_incidence(&id, &id);
    r.require(!control, || "identity labelling preserves incidence".into());
    r.detail("identity_labelling_preserves", control);

    let a5 = standard_a5();
    let line_orbit = orbit_size(&a5, |g, s| crate::groups::act_on_syntheme(g, synthemes()[s]), 0);
    let point_orbit_std = orbit_size(&a5, |g, d| crate::groups::act_on_duad(g, duads()[d]), 0);
    let twisted = a.apply_subgroup(&a5);
    let point_orbit = orbit_size(&twisted, |g, d| crate::groups::act_on_duad(g, duads()[d]), 0);
    r.require(line_orbit == 15, || format!("standard A5 has a line orbit of size {line_orbit}"));
    r.require(point_orbit == 15, || format!("non-standard A5 has a point orbit of size {point_orbit}"));
    r.detail("standard_a5_orbits", [("lines", line_orbit), ("points", point_orbit_std)]);
    r.detail("nonstandard_a5_point_orbit", point_orbit);
    r
}

/// The alternating group on `{1..5}`.
pub fn standard_a5() -> Subgroup {
    Subgroup::from_cycles(&["(1 2 3)", "(1 2 3 4 5)"])
}

fn orbit_size(h: &Subgroup, act: impl Fn(&Perm, usize) -> usize, start: usize) -> usize {
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        for g in h.generators() {
            let n = act(g, seen[i]);
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
        i += 1;
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{duad_index, syntheme_index};

    #[test]
    fn examples() {
        let s = syntheme_index([duad_index([0, 1]), duad_index([2, 3]), duad_index([4, 5])]);
        assert!(incidence(duad_index([0, 1]), s));
        assert!(!incidence(duad_index([0, 2]), s));
    }

    #[test]
    fn checks_pass() {
        for r in [incidence_check(), self_duality_check()] {
            assert!(r.passed, "{}: {:?}", r.name, r.witness);
        }
    }
}
