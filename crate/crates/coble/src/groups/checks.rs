//! Checks on the subgroup enumeration, the outer automorphism and the
//! subgroup name catalog.

use std::collections::BTreeMap;

use super::catalog::{class_names, classify_subgroup, resolve};
use super::enumerate::{brute_force_counts, subgroup_classes};
use super::outer::outer_automorphism;
use super::perm::{Perm, CYCLE_TYPES};
use crate::report::CheckReport;

/// Orders up to which the brute-force oracle is run.
pub const ORACLE_MAX_ORDER: usize = 24;

/// 56 classes and 1455 subgroups; per-order counts of subgroups and classes
/// agree with an enumeration that never reduces by conjugacy, for orders up
/// to [`ORACLE_MAX_ORDER`].
pub fn subgroup_enumeration_check() -> CheckReport {
    let mut r = CheckReport::new("subgroup_classes_56");
    let classes = subgroup_classes();
    r.require(classes.len() == 56, || format!("{} classes", classes.len()));
    let total: usize = classes.iter().map(|c| c.size).sum();
    r.require(total == 1455, || format!("{total} subgroups"));
    let mut by_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for c in classes {
        let e = by_order.entry(c.rep.order()).or_default();
        e.0 += c.size;
        e.1 += 1;
    }
    let oracle = brute_force_counts(ORACLE_MAX_ORDER);
    for &(order, subgroups, n) in &oracle {
        let got = by_order.get(&order).copied().unwrap_or_default();
        r.require(got == (subgroups, n), || format!("order {order}: {got:?} vs oracle ({subgroups}, {n})"));
    }
    let small = by_order.range(..=ORACLE_MAX_ORDER).count();
    r.require(small == oracle.len(), || format!("{small} small orders vs {} in the oracle", oracle.len()));
    r.detail("classes_by_order", by_order.iter().map(|(o, (s, n))| (*o, *s, *n)).collect::<Vec<_>>());
    r.detail("oracle_max_order", ORACLE_MAX_ORDER);
    r
}

/// The synthematic-total construction is an automorphism that is not inner,
/// whose square is inner, and which swaps the cycle types
/// `[2] <-> [2,2,2]`, `[3] <-> [3,3]`, `[6] <-> [3,2]`.
pub fn outer_automorphism_check() -> CheckReport {
    let mut r = CheckReport::new("outer_automorphism");
    let a = outer_automorphism();
    if let Err(e) = a.verify() {
        r.fail(e.to_string());
    }
    r.require(!a.is_inner(), || "the automorphism is inner".into());
    r.require(a.square_conjugator().is_some(), || "the square is not inner".into());
    let mut swaps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for ct in CYCLE_TYPES {
        let mut start = 1;
        let cycles: Vec<Vec<usize>> = ct
            .iter()
            .map(|&len| {
                let c: Vec<usize> = (start..start + len).collect();
                start += len;
                c
            })
            .collect();
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        let g = Perm::from_cycles(&refs).expect("disjoint cycles");
        swaps.push((g.cycle_type(), a.apply(&g).cycle_type()));
    }
    let pairs: [(&[usize], &[usize]); 3] =
        [(&[2, 1, 1, 1, 1], &[2, 2, 2]), (&[3, 1, 1, 1], &[3, 3]), (&[6], &[3, 2, 1])];
    for (x, y) in pairs {
        for (from, to) in [(x, y), (y, x)] {
            let ok = swaps.iter().any(|(p, q)| p == from && q == to);
            r.require(ok, || format!("{from:?} does not go to {to:?}"));
        }
    }
    let fixed = swaps.iter().filter(|(p, q)| p == q).count();
    r.require(fixed == 5, || format!("{fixed} cycle types fixed"));
    r.detail("cycle_types", swaps);
    r
}

/// Every catalog name resolves to its own class, and each `bar(..)` name
/// sits on the outer image of its base class.
pub fn subgroup_names_check() -> CheckReport {
    let mut r = CheckReport::new("subgroup_name_catalog");
    let classes = subgroup_classes();
    let names = class_names();
    let named = names.iter().filter(|n| !n.is_empty()).count();
    for (k, ns) in names.iter().enumerate() {
        for n in ns {
            r.require(resolve(n) == Some(k), || format!("{n} resolves to {:?}, expected {k}", resolve(n)));
        }
    }
    for (k, c) in classes.iter().enumerate() {
        let info = classify_subgroup(&c.rep);
        for n in &info.names {
            if let Some(base) = n.strip_prefix("bar(").and_then(|s| s.strip_suffix(')')) {
                let b = resolve(base);
                r.require(b == Some(info.outer_class), || format!("class {k}: {n} but outer image is {}", info.outer_class));
            }
        }
    }
    r.detail("named_classes", named);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_checks_pass() {
        for r in [subgroup_enumeration_check(), outer_automorphism_check(), subgroup_names_check()] {
            assert!(r.passed, "{}: {:?} {:?}", r.name, r.witness, r.details);
        }
    }
}
