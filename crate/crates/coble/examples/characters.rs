//! Class groups as S6-representations: the irreducible summands, their
//! images under the outer automorphism and the ranks of invariants.

use coble::reps::{class_group_character, format_decomposition, outer_restriction_rows, sn_irreps, Action, Variety};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let irr = sn_irreps(6);
    for v in Variety::ALL {
        let actions: &[Action] = if v.has_galois() { &[Action::Natural, Action::Twisted] } else { &[Action::Natural] };
        for &a in actions {
            let chi = class_group_character(v, a)?;
            println!("{:<7} {:<8} rank {:>2}: {}", v.id(), format!("{a:?}"), chi.dim(), format_decomposition(&chi.decompose(&irr)?));
        }
    }
    for row in outer_restriction_rows()? {
        println!("{:<18} -> {:<18} on S5: {}", row.irrep, row.outer, row.restriction);
    }
    Ok(())
}
