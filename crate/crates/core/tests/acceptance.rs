use std::process::ExitCode;

use orbitgraph::verify::{acceptance, Bounds};

fn main() -> ExitCode {
    let bounds = match std::env::var("ORBITGRAPH_MAX_N") {
        Ok(v) => Bounds::capped(v.parse().expect("ORBITGRAPH_MAX_N must be an integer")),
        Err(_) => Bounds::default(),
    };
    let reports = acceptance(&bounds);
    println!();
    for r in &reports {
        println!("{r}");
        for f in r.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.id.as_str())
        .collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", reports.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
