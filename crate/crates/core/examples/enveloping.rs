//! Enveloping group presentations and their abelianizations.

use birack::biracks::Solution;
use birack::enveloping::{abelianization, envelope_proposition_check, enveloping_presentation, phi_quotient};
use birack::racks::{rack_solution, RackTable};
use birack::tables::Permutation;

fn main() -> birack::Result<()> {
    let cases = [
        ("flip on 2", Solution::flip(2)),
        ("dihedral 3", rack_solution(&RackTable::dihedral(3))),
        ("dihedral 4", rack_solution(&RackTable::dihedral(4))),
        ("constant shift 3", rack_solution(&RackTable::constant(&Permutation::shift(3, 1)))),
        ("(y+1, x+2) on 3", Solution::permutation(3, 1, 2)),
    ];
    for (name, s) in cases {
        let p = enveloping_presentation(&s)?;
        let q = phi_quotient(&s)?;
        println!(
            "{name:>18}: {} relations, G_X {}, classes {:?}, check {}",
            p.relations().len(),
            abelianization(&p),
            q.classes,
            envelope_proposition_check(&s)?
        );
    }
    print!("{}", enveloping_presentation(&Solution::flip(2))?.to_text());
    Ok(())
}
