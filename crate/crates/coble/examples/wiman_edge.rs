//! Singular members of the Wiman-Edge pencil, with a certified singular
//! point for each parameter.

use coble::varieties::wiman_edge_singular_params;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let locus = wiman_edge_singular_params()?;
    let factors: Vec<String> = locus.factors.iter().map(|f| format!("({f})")).collect();
    println!("singular parameters: {}", factors.join(" * "));
    for w in &locus.witnesses {
        println!("{}", serde_json::to_string(w)?);
    }
    if !locus.unconfirmed.is_empty() {
        println!("without a witness: {:?}", locus.unconfirmed);
    }
    Ok(())
}
