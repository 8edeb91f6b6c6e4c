//! Counts of racks, quandles and solutions by both enumeration methods.

use birack::search::{enumerate_racks, enumerate_solutions, Kind, Method, SearchSpec};

fn main() -> birack::Result<()> {
    println!("{:>11} {:>2} {:>8} {:>8} {:>10}", "kind", "n", "labelled", "classes", "agree");
    for kind in [Kind::Shelf, Kind::Rack, Kind::Quandle, Kind::Solution, Kind::Birack, Kind::Biquandle, Kind::Involutive] {
        for n in 1..=3 {
            let spec = SearchSpec::new(n, kind);
            let (labelled, agree) = if kind.is_table() {
                let a = enumerate_racks(&spec, Method::Structured)?;
                (a.len(), a == enumerate_racks(&spec, Method::BruteForce)?)
            } else {
                let a = enumerate_solutions(&spec, Method::Structured)?;
                (a.len(), a == enumerate_solutions(&spec, Method::BruteForce)?)
            };
            let iso = spec.up_to_iso();
            let classes = if kind.is_table() {
                enumerate_racks(&iso, Method::Structured)?.len()
            } else {
                enumerate_solutions(&iso, Method::Structured)?.len()
            };
            println!("{:>11} {n:>2} {labelled:>8} {classes:>8} {agree:>10}", kind.name());
        }
    }
    let racks4 = enumerate_racks(&SearchSpec::new(4, Kind::Rack).up_to_iso(), Method::Structured)?;
    println!("racks on 4 points up to isomorphism: {}", racks4.len());
    Ok(())
}
