//! Named subgroups and the classification record of a subgroup.
//!
//! Names follow the usual conventions: `S_{a,b}` is the product of symmetric
//! groups on consecutive blocks, `mu_d[c]` a cyclic group generated by a
//! permutation of cycle type `c`, and `bar(G)` the image of `G` under the
//! outer automorphism. Several names may denote one conjugacy class.

use std::sync::OnceLock;

use serde::Serialize;

use super::enumerate::{class_of, subgroup_classes};
use super::outer::outer_automorphism;
use super::perm::CYCLE_TYPES;
use super::subgroup::Subgroup;

/// Base names with explicit generators. `bar(..)` names are derived.
const BASE: &[(&str, &[&str])] = &[
    ("S6", &["(1 2)", "(1 2 3 4 5 6)"]),
    ("A6", &["(1 2 3)", "(2 3 4 5 6)"]),
    ("S5", &["(1 2)", "(1 2 3 4 5)"]),
    ("A5", &["(1 2 3)", "(1 2 3 4 5)"]),
    ("S3wrS2", &["(1 2)", "(1 2 3)", "(1 4)(2 5)(3 6)"]),
    ("S_{4,2}", &["(1 2)", "(1 2 3 4)", "(5 6)"]),
    ("A_{4,2}", &["(1 2 3)", "(2 3 4)", "(1 2)(5 6)"]),
    ("S_{3,3}", &["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"]),
    ("A4xS2", &["(1 2 3)", "(2 3 4)", "(5 6)"]),
    ("S4", &["(1 2)", "(1 2 3 4)"]),
    ("A4", &["(1 2 3)", "(2 3 4)"]),
    ("(mu3xmu3):mu4", &["(1 2 3)", "(4 5 6)", "(1 4 2 5)(3 6)"]),
    ("mu5:mu4", &["(1 2 3 4 5)", "(2 3 5 4)"]),
    ("S3xmu3", &["(1 2)", "(1 2 3)", "(4 5 6)"]),
    ("(mu3xmu3):mu2", &["(1 2 3)", "(4 5 6)", "(1 2)(4 5)"]),
    ("D8xS2", &["(1 2 3 4)", "(1 3)", "(5 6)"]),
    ("S_{3,2}", &["(1 2)", "(1 2 3)", "(4 5)"]),
    ("D12", &["(1 2 3 4 5 6)", "(2 6)(3 5)"]),
    ("D10", &["(1 2 3 4 5)", "(2 5)(3 4)"]),
    ("mu3xmu3", &["(1 2 3)", "(4 5 6)"]),
    ("mu4xmu2", &["(1 2 3 4)", "(5 6)"]),
    ("V4xmu2", &["(1 2)(3 4)", "(1 3)(2 4)", "(5 6)"]),
    ("D8", &["(1 2 3 4)", "(1 3)"]),
    ("D8^o", &["(1 2 3 4)", "(1 3)(5 6)"]),
    ("D8^+", &["(1 2 3 4)(5 6)", "(1 3)(5 6)"]),
    ("D8^x", &["(1 2 3 4)(5 6)", "(1 3)"]),
    ("mu2xmu2xmu2", &["(1 2)", "(3 4)", "(5 6)"]),
    ("S3", &["(1 2)", "(1 2 3)"]),
    ("A_{3,2}", &["(1 2 3)", "(1 2)(4 5)"]),
    ("mu6[6]", &["(1 2 3 4 5 6)"]),
    ("mu6[3,2]", &["(1 2 3)(4 5)"]),
    ("mu5", &["(1 2 3 4 5)"]),
    ("V_{4,2}", &["(1 2)(3 4)(5 6)", "(1 3)(2 4)"]),
    ("V4", &["(1 2)(3 4)", "(1 3)(2 4)"]),
    ("mu4[4]", &["(1 2 3 4)"]),
    ("mu4[4,2]", &["(1 2 3 4)(5 6)"]),
    ("mu2[2,2]xmu2[2]", &["(1 2)(3 4)", "(5 6)"]),
    ("mu2[2]xmu2[2]", &["(1 2)", "(3 4)"]),
    ("mu3[3]", &["(1 2 3)"]),
    ("mu3[3,3]", &["(1 2 3)(4 5 6)"]),
    ("mu2[2,2,2]", &["(1 2)(3 4)(5 6)"]),
    ("mu2[2,2]", &["(1 2)(3 4)"]),
    ("mu2[2]", &["(1 2)"]),
    ("1", &[]),
];

/// Alternative spellings accepted when resolving names.
const ALIASES: &[(&str, &str)] = &[("D8xmu2", "D8xS2"), ("mu2[2]xmu2[2]xmu2[2]", "mu2xmu2xmu2")];

/// Names attached to each subgroup class (indexed like `subgroup_classes()`).
pub fn class_names() -> &'static [Vec<String>] {
    static NAMES: OnceLock<Vec<Vec<String>>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let alpha = outer_automorphism();
        let mut names = vec![Vec::<String>::new(); subgroup_classes().len()];
        for (name, gens) in BASE {
            let h = Subgroup::from_cycles(gens);
            let k = class_of(&h);
            if !names[k].iter().any(|n| n == name) {
                names[k].push(name.to_string());
            }
        }
        for (name, gens) in BASE {
            let h = alpha.apply_subgroup(&Subgroup::from_cycles(gens));
            let k = class_of(&h);
            let bar = format!("bar({name})");
            names[k].push(bar);
        }
        names
    })
}

/// Resolves a name (including `bar(..)` forms and aliases) to a class index.
pub fn resolve(name: &str) -> Option<usize> {
    let name = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, b)| b);
    class_names().iter().position(|ns| ns.iter().any(|n| n == name))
}

/// Display name of a class: the first base name, else the first bar name,
/// else `unnamed(<census>)`.
pub fn display_name(class: usize) -> String {
    let ns = &class_names()[class];
    ns.first().cloned().unwrap_or_else(|| {
        format!("unnamed({})", subgroup_classes()[class].rep.census_label())
    })
}

/// Structural summary of a subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupInfo {
    pub class_index: usize,
    pub order: usize,
    pub abelian: bool,
    pub in_a6: bool,
    pub census: Vec<(String, u16)>,
    pub orbit_sizes: Vec<usize>,
    pub transitive: bool,
    /// Conjugate to its image under the outer automorphism.
    pub outer_invariant: bool,
    /// Class index of the outer image.
    pub outer_class: usize,
    pub names: Vec<String>,
    pub name: String,
    pub generators: Vec<String>,
}

pub fn classify_subgroup(h: &Subgroup) -> SubgroupInfo {
    let k = class_of(h);
    let outer = class_of(&outer_automorphism().apply_subgroup(h));
    let census = h
        .census()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            let ct: Vec<String> = CYCLE_TYPES[i].iter().map(|x| x.to_string()).collect();
            (format!("[{}]", ct.join(",")), c)
        })
        .collect();
    SubgroupInfo {
        class_index: k,
        order: h.order(),
        abelian: h.is_abelian(),
        in_a6: h.in_alternating(),
        census,
        orbit_sizes: h.point_orbits().iter().map(|o| o.len()).collect(),
        transitive: h.is_transitive(),
        outer_invariant: outer == k,
        outer_class: outer,
        names: class_names()[k].clone(),
        name: display_name(k),
        generators: h.generators().iter().map(|g| g.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_and_nonstandard_s5() {
        let s5 = resolve("S5").unwrap();
        let bar = resolve("bar(S5)").unwrap();
        assert_ne!(s5, bar);
        let info = classify_subgroup(&subgroup_classes()[bar].rep);
        assert!(info.transitive);
        assert!(!info.census.iter().any(|(c, _)| c == "[2,1,1,1,1]"));
    }

    #[test]
    fn aliases_in_notation() {
        assert_eq!(resolve("bar(D8)"), resolve("D8^o"));
        assert_eq!(resolve("bar(S_{3,2})"), resolve("D12"));
        assert_eq!(resolve("bar(S6)"), resolve("S6"));
    }
}
