//! Small named structures, also shipped as files under `fixtures/`.

use crate::biracks::{OpsTriple, Solution};
use crate::group::Group;
use crate::io::{BraceTables, TableFile};
use crate::racks::RackTable;
use crate::skew_braces::SkewBrace;
use crate::tables::{OpTable, Permutation};

/// Every fixture with its file stem.
pub fn all() -> Vec<(&'static str, TableFile)> {
    vec![
        ("flip", TableFile::Solution(Solution::flip(2))),
        ("swap_shift", TableFile::Solution(Solution::permutation(2, 1, 0))),
        ("dihedral3", TableFile::Rack(RackTable::dihedral(3))),
        ("constant2", TableFile::Rack(RackTable::constant(&Permutation::shift(2, 1)))),
        ("conj_s3", TableFile::Rack(crate::racks::conj_rack(&Group::symmetric3()))),
        (
            "shift_ops",
            TableFile::Ops(
                OpsTriple::new(OpTable::from_fn(2, |_, y| (y + 1) % 2), RackTable::trivial(2).into_table())
                    .expect("row bijective"),
            ),
        ),
        ("trivial_z3", TableFile::Brace(BraceTables::from(&SkewBrace::trivial(&Group::cyclic(3))))),
        ("trivial_s3", TableFile::Brace(BraceTables::from(&SkewBrace::trivial(&Group::symmetric3())))),
        ("z4_brace", TableFile::Brace(BraceTables::from(&SkewBrace::z4()))),
        ("shift2", TableFile::Permutation(Permutation::shift(2, 1))),
        ("double3", TableFile::Permutation(Permutation::from_fn(3, |x| (2 * x) % 3).expect("bijection"))),
    ]
}

pub fn named(name: &str) -> Option<TableFile> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, f)| f)
}
