use super::{braid_check, derived_with_dot, Solution};
use crate::error::{Error, Result};
use crate::racks::self_distributivity_witness;
use crate::tables::OpTable;

/// The `(*, ·, ◁)` presentation of a left non-degenerate map.
///
/// `dot` is always the row inverse of `star`: `x · z = y ⇔ x * y = z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpsTriple {
    star: OpTable,
    dot: OpTable,
    tri: OpTable,
}

impl OpsTriple {
    pub fn new(star: OpTable, tri: OpTable) -> Result<Self> {
        if star.n() != tri.n() {
            return Err(Error::SizeMismatch { expected: star.n(), found: tri.n() });
        }
        let dot = star.row_inverse()?;
        Ok(OpsTriple { star, dot, tri })
    }

    pub fn from_dot(dot: OpTable, tri: OpTable) -> Result<Self> {
        if dot.n() != tri.n() {
            return Err(Error::SizeMismatch { expected: dot.n(), found: tri.n() });
        }
        let star = dot.row_inverse()?;
        Ok(OpsTriple { star, dot, tri })
    }

    /// Accepts all three tables, checking that `dot` inverts `star`.
    pub fn with_dot(star: OpTable, dot: OpTable, tri: OpTable) -> Result<Self> {
        let triple = Self::new(star, tri)?;
        if triple.dot != dot {
            let n = dot.n();
            let bad = (0..n * n).find(|&i| dot.as_slice().get(i) != triple.dot.as_slice().get(i)).unwrap_or(0);
            return Err(Error::Validation { invariant: "dot = row_inverse(star)".into(), witness: vec![bad / n, bad % n] });
        }
        Ok(triple)
    }

    pub fn n(&self) -> usize {
        self.star.n()
    }

    pub fn star(&self) -> &OpTable {
        &self.star
    }

    pub fn dot(&self) -> &OpTable {
        &self.dot
    }

    pub fn tri(&self) -> &OpTable {
        &self.tri
    }
}

/// Reads off `x * y = g_x(y)`, its row inverse, and the derived rack.
pub fn ops_from_solution(s: &Solution) -> Result<OpsTriple> {
    let dot = s.g().row_inverse().map_err(|_| Error::NotLeftNondegenerate)?;
    let tri = derived_with_dot(s, &dot);
    Ok(OpsTriple { star: s.g().clone(), dot, tri })
}

/// `σ(x, y) = (x * y, (x * y) · (x ◁ (x * y)))`. No braid axiom is enforced.
pub fn solution_from_ops(ops: &OpsTriple) -> Solution {
    let (star, dot, tri) = (&ops.star, &ops.dot, &ops.tri);
    Solution::from_fn(ops.n(), |x, y| {
        let s = star.get(x, y);
        (s, dot.get(s, tri.get(x, s)))
    })
}

/// The three conditions characterising braid solutions among left
/// non-degenerate maps, each with its lexicographically least failing triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// `(y · (x ◁ y)) · (y · z) = (x · y) · (x · z)`
    pub cond1: Option<[usize; 3]>,
    /// `(x · y) ◁ (x · z) = x · (y ◁ z)`
    pub cond2: Option<[usize; 3]>,
    /// `(x ◁ y) ◁ z = (x ◁ z) ◁ (y ◁ z)`
    pub cond3: Option<[usize; 3]>,
    pub braid: bool,
}

impl TheoremReport {
    pub fn conditions_hold(&self) -> bool {
        self.cond1.is_none() && self.cond2.is_none() && self.cond3.is_none()
    }

    /// The braid equation holds exactly when all three conditions do.
    pub fn is_consistent(&self) -> bool {
        self.braid == self.conditions_hold()
    }
}

pub(crate) fn cond1_witness(dot: &OpTable, tri: &OpTable) -> Option<[usize; 3]> {
    let n = dot.n();
    for x in 0..n {
        for y in 0..n {
            let left = dot.get(y, tri.get(x, y));
            let right = dot.get(x, y);
            for z in 0..n {
                if dot.get(left, dot.get(y, z)) != dot.get(right, dot.get(x, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub(crate) fn cond2_witness(dot: &OpTable, tri: &OpTable) -> Option<[usize; 3]> {
    let n = dot.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if tri.get(dot.get(x, y), dot.get(x, z)) != dot.get(x, tri.get(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Evaluates all three conditions (never short-circuiting between them) and
/// the braid equation for the reconstructed map.
pub fn theorem1_conditions(ops: &OpsTriple) -> TheoremReport {
    TheoremReport {
        cond1: cond1_witness(&ops.dot, &ops.tri),
        cond2: cond2_witness(&ops.dot, &ops.tri),
        cond3: self_distributivity_witness(&ops.tri),
        braid: braid_check(&solution_from_ops(ops)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biracks::is_bijective;
    use crate::racks::{rack_solution, RackTable};
    use crate::tables::Permutation;

    fn right_projection(n: usize) -> OpTable {
        OpTable::from_fn(n, |_, y| y)
    }

    #[test]
    fn ops_from_solution_examples() {
        let ops = ops_from_solution(&Solution::flip(3)).unwrap();
        assert_eq!(ops.star(), &right_projection(3));
        assert_eq!(ops.dot(), &right_projection(3));
        assert_eq!(ops.tri(), RackTable::trivial(3).table());

        let ops = ops_from_solution(&Solution::permutation(2, 1, 0)).unwrap();
        let shift = OpTable::from_fn(2, |_, y| (y + 1) % 2);
        assert_eq!(ops.star(), &shift);
        assert_eq!(ops.dot(), &shift);
        assert_eq!(ops.tri(), RackTable::constant(&Permutation::shift(2, 1)).table());

        let d3 = RackTable::dihedral(3);
        let ops = ops_from_solution(&rack_solution(&d3)).unwrap();
        assert_eq!(ops.star(), &right_projection(3));
        assert_eq!(ops.tri(), d3.table());
    }

    #[test]
    fn solution_from_ops_examples() {
        let d3 = RackTable::dihedral(3);
        let ops = OpsTriple::new(right_projection(3), d3.table().clone()).unwrap();
        assert_eq!(solution_from_ops(&ops), rack_solution(&d3));

        // a shelf that is not a rack: braid but not bijective
        let ops = OpsTriple::new(right_projection(2), OpTable::from_fn(2, |_, _| 0)).unwrap();
        let s = solution_from_ops(&ops);
        assert_eq!(s, Solution::from_fn(2, |_, y| (y, 0)));
        assert!(braid_check(&s));
        assert!(!is_bijective(&s));

        let ops = OpsTriple::new(
            OpTable::from_fn(2, |_, y| (y + 1) % 2),
            RackTable::constant(&Permutation::shift(2, 1)).into_table(),
        )
        .unwrap();
        assert_eq!(solution_from_ops(&ops), Solution::permutation(2, 1, 0));
    }

    #[test]
    fn evaluated_form() {
        // σ(x, x · y) = (y, y · (x ◁ y))
        let s = Solution::permutation(3, 1, 2);
        let ops = ops_from_solution(&s).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let expected = (y, ops.dot().get(y, ops.tri().get(x, y)));
                assert_eq!(s.apply(x, ops.dot().get(x, y)), expected);
            }
        }
    }

    #[test]
    fn theorem1_examples() {
        let r = theorem1_conditions(&OpsTriple::new(right_projection(3), RackTable::dihedral(3).into_table()).unwrap());
        assert!(r.conditions_hold() && r.braid);

        let not_shelf = OpTable::from_fn(2, |x, y| (x + y) % 2);
        let r = theorem1_conditions(&OpsTriple::new(right_projection(2), not_shelf.clone()).unwrap());
        assert_eq!(r.cond3, self_distributivity_witness(&not_shelf));
        assert!(r.cond3.is_some());
        assert!(!r.braid);
        assert!(r.is_consistent());

        let r = theorem1_conditions(
            &OpsTriple::from_dot(
                OpTable::from_fn(2, |_, y| (y + 1) % 2),
                RackTable::constant(&Permutation::shift(2, 1)).into_table(),
            )
            .unwrap(),
        );
        assert!(r.conditions_hold() && r.braid);
    }

    #[test]
    fn with_dot_rejects_wrong_inverse() {
        let star = OpTable::from_fn(3, |_, y| (y + 1) % 3);
        let wrong = star.clone();
        assert!(matches!(
            OpsTriple::with_dot(star, wrong, RackTable::trivial(3).into_table()),
            Err(Error::Validation { .. })
        ));
    }
}
