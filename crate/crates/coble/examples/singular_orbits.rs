//! Which special orbits are singular on `X_t`, first with `t` symbolic and
//! then at the special parameters.

use coble::algebra::Scalar;
use coble::varieties::{orbit_catalog, orbit_singularities, singular_parameter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = orbit_catalog();
    println!("{} points in {} orbits", catalog.total_points(), catalog.orbits.len());
    for o in &catalog.orbits {
        let p = singular_parameter(&o.representative)?;
        let locus = if p.is_zero() { "every t".to_string() } else { format!("{} = 0", p.display("t")) };
        println!("{:<10} {:>3} points, e.g. {}; singular for {locus}", o.name, o.points.len(), o.representative);
    }
    for t in [Scalar::int(2), Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(1, 6), Scalar::ratio(7, 10)] {
        let singular: Vec<String> = orbit_singularities(&t)?
            .into_iter()
            .filter(|s| s.singular > 0)
            .map(|s| format!("{} ({} nodes)", s.orbit, s.nodes))
            .collect();
        println!("t = {t}: {}", singular.join(", "));
    }
    Ok(())
}
