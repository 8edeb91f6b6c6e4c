//! Build solutions from a star table and a rack, and watch the three
//! conditions decide the braid equation.

use birack::biracks::{solution_from_ops, theorem1_conditions, OpsTriple};
use birack::tables::{OpTable, Permutation};

fn main() -> birack::Result<()> {
    let n = 3;
    // x ◁ y fixes 0 and swaps 1, 2 when y ≠ 0
    let tri = OpTable::from_rows(&[vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]])?;
    let mut holds = 0;
    let mut total = 0;
    for shift in 0..n {
        for twist in Permutation::all(n) {
            // x * y = twist(y) + shift
            let star = OpTable::from_fn(n, |_, y| (twist.apply(y) + shift) % n);
            let ops = OpsTriple::new(star, tri.clone())?;
            let report = theorem1_conditions(&ops);
            assert!(report.is_consistent());
            total += 1;
            if report.braid {
                holds += 1;
                println!("braid solution: G = {:?}", solution_from_ops(&ops).g().rows());
            } else {
                println!("no: first failing triples {:?} {:?} {:?}", report.cond1, report.cond2, report.cond3);
            }
        }
    }
    println!("{holds} of {total} star tables give solutions over this quandle");
    Ok(())
}
