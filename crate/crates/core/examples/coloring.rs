//! Count colorings of braid closures and check invariance under framed moves.

use birack::biracks::Solution;
use birack::coloring::{closure_colorings, framed_invariance_suite, kink_color, BraidWord};
use birack::racks::{rack_solution, RackTable};

fn main() -> birack::Result<()> {
    let d3 = rack_solution(&RackTable::dihedral(3));
    for (name, strands, word) in [
        ("unknot", 2, "1"),
        ("trefoil", 2, "1 1 1"),
        ("figure-eight", 3, "1 -2 1 -2"),
        ("Hopf link", 2, "1 1"),
    ] {
        let w = BraidWord::parse(strands, word)?;
        let r = closure_colorings(&d3, &w)?;
        println!("{name:>12}: colorings={} writhe={}", r.count, r.writhe);
    }

    let s = Solution::permutation(3, 1, 2);
    for x in 0..3 {
        let (a, out) = kink_color(&s, x)?;
        println!("kink entered with {x}: loop colored {a}, leaves with {out}");
    }

    let trefoil = BraidWord::parse(2, "1 1 1")?;
    let report = framed_invariance_suite(&d3, &trefoil, 200, 1)?;
    println!("{} rewrites, {} count changes, passed={}", report.rewrites, report.failures.len(), report.passed());
    Ok(())
}
