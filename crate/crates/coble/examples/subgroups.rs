//! Lists the conjugacy classes of subgroups of S6 with their names,
//! censuses and behaviour under the outer automorphism.

use coble::groups::{classify_subgroup, subgroup_classes};

fn main() {
    for (k, class) in subgroup_classes().iter().enumerate() {
        let info = classify_subgroup(&class.rep);
        let outer = if info.outer_invariant { "self".to_string() } else { format!("#{}", info.outer_class) };
        println!(
            "#{k:<2} order {:<3} conjugates {:<3} outer {:<5} {:<28} {}",
            info.order,
            class.size,
            outer,
            info.names.join(" = "),
            class.rep.census_label()
        );
    }
}
