//! The 15_3 configuration of duads and synthemes: its exact realization on
//! the hyperplane, the ten jail decompositions, and the quartics singular
//! along all fifteen lines.

use coble::algebra::format_poly;
use coble::crconfig::{incidence_check, jail_decompositions, quartic_kernel, realization_check, self_duality_check};

fn main() {
    for r in [incidence_check(), self_duality_check(), realization_check()] {
        println!("{:<18} {}", r.name, if r.passed { "ok" } else { "FAILED" });
    }
    for d in jail_decompositions() {
        println!("K0 = {:?}, K1 = {:?}: jail lines {:?}", d.k0, d.k1, d.jail_lines);
    }
    let (dim, generator) = quartic_kernel(&(0..15).collect::<Vec<_>>());
    println!("quartics singular along the 15 lines: dimension {dim}");
    if let Some(g) = generator {
        println!("  spanned by {}", format_poly(&g));
    }
}
