//! Fibers of the Verra conic bundle over `u = (0:1:1)`: corank one at
//! `tau = 0` and `tau = 1`, split into two lines over the base field.

use coble::algebra::Scalar;
use coble::varieties::{component_action, conic_fiber, fiber_involution};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fiber_involution();
    let u = [Scalar::zero(), Scalar::one(), Scalar::one()];
    for tau in [Scalar::zero(), Scalar::one(), Scalar::int(2)] {
        let f = conic_fiber(&tau, &u)?;
        println!("tau = {tau}: rank {}", f.rank);
        if let Some(p) = &f.factors {
            let line = |l: &[Scalar]| l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            println!("  {} * ({}) * ({})", p.scalar, line(&p.lines[0]), line(&p.lines[1]));
            match component_action(&g, &f) {
                Ok(a) => println!("  v -> (v1, v1 - v3, v1 - v2) {a:?} the two lines"),
                Err(e) => println!("  v -> (v1, v1 - v3, v1 - v2): {e}"),
            }
        }
    }
    Ok(())
}
