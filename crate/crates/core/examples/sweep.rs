//! Exhaustive check of the structural theorems on every solution with `n`
//! points (default 3).

use std::time::Instant;

use birack::search::sweep_theorems;

fn main() -> Result<(), birack::Error> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let report = sweep_theorems(n)?;
    print!("{report}");
    println!("n={n} passed={} in {:.2?}", report.passed(), start.elapsed());
    Ok(())
}
