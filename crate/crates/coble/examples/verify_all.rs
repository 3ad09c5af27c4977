//! Runs every registered check on all available cores and prints one line
//! per check, in registry order.

use coble::cli::{registry, run_checks};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let reports = run_checks(registry(), 0, jobs)?;
    for r in &reports {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("{status} {:<45} {:>8.1} ms {}", r.name, r.elapsed_ms, r.witness.as_deref().unwrap_or(""));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
