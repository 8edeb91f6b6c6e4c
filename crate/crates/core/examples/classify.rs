//! Classify a few small maps and read off their derived racks.

use birack::biracks::{classify, derived_rack, inverse_solution, Solution};
use birack::racks::{rack_solution, RackTable};

fn show(name: &str, s: &Solution) {
    let c = classify(s);
    println!(
        "{name:>12}: braid={} left={} right={} bijective={} involutive={} biquandle={}",
        c.braid, c.left, c.right, c.bijective, c.involutive, c.biquandle
    );
    if let Ok(tri) = derived_rack(s) {
        println!("{:>14}derived ◁ rows: {:?}", "", tri.rows());
    }
    if let Ok(inv) = inverse_solution(s) {
        println!("{:>14}σ⁻¹ G rows: {:?}", "", inv.g().rows());
    }
}

fn main() {
    show("flip", &Solution::flip(3));
    show("(y+1, x)", &Solution::permutation(2, 1, 0));
    show("dihedral 3", &rack_solution(&RackTable::dihedral(3)));
    show("(y, 0)", &Solution::from_fn(2, |_, y| (y, 0)));
    show("(x+y, x)", &Solution::from_fn(2, |x, y| ((x + y) % 2, x)));
}
