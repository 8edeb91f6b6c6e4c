//! Twists of the first and second kind, and the untwisting of a birack into
//! a biquandle.

use birack::biracks::derived_rack;
use birack::racks::{rack_solution, RackTable};
use birack::tables::Permutation;
use birack::twisting::{automorphisms, twist_first, twist_left, untwist_to_biquandle};

fn main() -> birack::Result<()> {
    let d3 = rack_solution(&RackTable::dihedral(3));
    for k in automorphisms(&d3, 6)? {
        let cert = twist_first(&d3, &k)?;
        println!("k = {:?}: twisted star rows {:?}", k.image(), cert.twisted.g().rows());
    }

    let constant = rack_solution(&RackTable::constant(&Permutation::shift(2, 1)));
    let u = untwist_to_biquandle(&constant)?;
    println!("constant rack: φ = {:?}, biquandle G = {:?}", u.phi.image(), u.biquandle.g().rows());
    let back = twist_left(&u.biquandle, &u.phi)?;
    assert_eq!(back.twisted, constant);
    println!("re-twisted derived rack: {:?}", derived_rack(&back.twisted)?.rows());
    Ok(())
}
