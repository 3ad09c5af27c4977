//! The special values of `tau` with their images `t(tau)` on the quartic
//! pencil and `s(tau)` on the Wiman-Edge pencil.

use coble::varieties::{ramification_points, tau_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for c in tau_table() {
        let show = |v: &[coble::varieties::Value]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        println!("tau = {:<14} s: {:<36} t: {}", c.label, show(&c.s), show(&c.t));
    }
    for r in ramification_points()? {
        println!("{}", serde_json::to_string(&r)?);
    }
    Ok(())
}
