//! Shelves, racks and quandles; the intrinsic bijection `φ(x) = x ◁ x`;
//! conjugation racks; rack-type solutions; skew-racks.

use crate::biracks::Solution;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::tables::{OpTable, Permutation};

/// Lexicographically least triple violating `(x◁y)◁z = (x◁z)◁(y◁z)`.
pub fn self_distributivity_witness(t: &OpTable) -> Option<[usize; 3]> {
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                if t.get(xy, z) != t.get(t.get(x, z), t.get(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn is_shelf(t: &OpTable) -> bool {
    self_distributivity_witness(t).is_none()
}

pub fn is_rack(t: &OpTable) -> bool {
    t.column_bijective() && is_shelf(t)
}

pub fn is_quandle(t: &OpTable) -> bool {
    (0..t.n()).all(|x| t.get(x, x) == x) && is_rack(t)
}

/// True iff `k(x◁y) = k(x)◁k(y)` for all pairs.
pub fn is_operation_automorphism(t: &OpTable, k: &Permutation) -> bool {
    let n = t.n();
    k.len() == n
        && (0..n).all(|x| (0..n).all(|y| k.apply(t.get(x, y)) == t.get(k.apply(x), k.apply(y))))
}

/// A validated rack: a self-distributive operation with bijective right
/// translations `(-) ◁ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RackTable {
    tri: OpTable,
}

impl RackTable {
    pub fn new(tri: OpTable) -> Result<Self> {
        if is_rack(&tri) {
            Ok(RackTable { tri })
        } else {
            Err(Error::NotARack)
        }
    }

    /// `x ◁ y = x`.
    pub fn trivial(n: usize) -> Self {
        RackTable { tri: OpTable::from_fn(n, |x, _| x) }
    }

    /// `x ◁ y = f(x)` for a fixed bijection `f`.
    pub fn constant(f: &Permutation) -> Self {
        RackTable { tri: OpTable::from_fn(f.len(), |x, _| f.apply(x)) }
    }

    /// The dihedral quandle `x ◁ y = 2y − x mod n`.
    pub fn dihedral(n: usize) -> Self {
        Self::new(OpTable::from_fn(n, |x, y| (2 * y + n - x) % n)).expect("dihedral quandle")
    }

    pub fn table(&self) -> &OpTable {
        &self.tri
    }

    pub fn into_table(self) -> OpTable {
        self.tri
    }

    pub fn n(&self) -> usize {
        self.tri.n()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.tri.get(x, y)
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.n()).all(|x| self.op(x, x) == x)
    }

    pub fn is_trivial(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (0..n).all(|y| self.op(x, y) == x))
    }

    /// `x ◁⁻¹ y`, the table with `(x ◁⁻¹ y) ◁ y = x`.
    pub fn inverse_table(&self) -> OpTable {
        self.tri.column_inverse().expect("racks are column bijective")
    }

    pub fn is_automorphism(&self, k: &Permutation) -> bool {
        is_operation_automorphism(&self.tri, k)
    }

    /// Orbits of `X` under the right translations `(-) ◁ y`, each sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, self.op(x, y)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[r]].push(x);
        }
        classes
    }
}

/// `φ(x) = x ◁ x`.
pub fn phi_map(rack: &RackTable) -> Permutation {
    Permutation::from_fn(rack.n(), |x| rack.op(x, x)).expect("x ◁ x is a bijection in a rack")
}

/// `Tw = i = φ⁻¹`, equivalently `i(x) = x ◁⁻¹ x`.
pub fn tw_map(rack: &RackTable) -> Permutation {
    phi_map(rack).inverse()
}

/// Untwists a rack by `φ`: `x ◁̃ y = φ⁻¹(x ◁ y)`, always a quandle.
pub fn untwist_to_quandle(rack: &RackTable) -> RackTable {
    let tw = tw_map(rack);
    let tri = OpTable::from_fn(rack.n(), |x, y| tw.apply(rack.op(x, y)));
    debug_assert!(is_quandle(&tri));
    RackTable { tri }
}

/// Re-twists a table by a bijection: `x ◁' y = f(x ◁ y)`.
pub fn twist_by(rack: &RackTable, f: &Permutation) -> Result<RackTable> {
    RackTable::new(OpTable::from_fn(rack.n(), |x, y| f.apply(rack.op(x, y))))
}

/// The conjugation quandle `x ◁ y = y⁻¹ x y` of a group.
pub fn conj_rack(group: &Group) -> RackTable {
    let tri = OpTable::from_fn(group.n(), |x, y| group.mul(group.mul(group.inv(y), x), y));
    RackTable::new(tri).expect("conjugation is a quandle operation")
}

/// Same as [`conj_rack`], re-verifying the group axioms on raw parts.
pub fn conj_rack_from_parts(mult: OpTable, inv: Permutation, e: usize) -> Result<RackTable> {
    Ok(conj_rack(&Group::new(mult, inv, e)?))
}

/// The rack-type solution `σ(x, y) = (y, x ◁ y)`.
pub fn rack_solution(rack: &RackTable) -> Solution {
    Solution::from_fn(rack.n(), |x, y| (y, rack.op(x, y)))
}

/// A skew-rack `(X, ▴, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRack {
    pub btri: OpTable,
    pub k: Permutation,
}

impl SkewRack {
    pub fn new(btri: OpTable, k: Permutation) -> Result<Self> {
        if btri.n() != k.len() {
            return Err(Error::SizeMismatch { expected: btri.n(), found: k.len() });
        }
        Ok(SkewRack { btri, k })
    }

    pub fn n(&self) -> usize {
        self.btri.n()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.btri.get(x, y)
    }

    /// Checks the three skew-rack axioms, reporting the first failure:
    ///
    /// * every `(-) ▴ y` is bijective,
    /// * `k(x ▴ y) = k(x) ▴ k(y)`,
    /// * `(x ▴ y) ▴ z = (x ▴ k(z)) ▴ (y ▴ z)`.
    ///
    /// The third axiom is exactly what makes `σ(x, y) = (k(y), x ▴ y)` satisfy
    /// the braid equation. Through the associated rack `a ◁ b = k(a) ▴ b` it
    /// reads `(x ▴ y) ▴ z = (k⁻¹(x) ▴ z) ◁ (y ▴ z)`.
    pub fn check(&self) -> Result<()> {
        let n = self.n();
        if let Some(y) = self.btri.non_bijective_column() {
            return Err(Error::SkewAxiomFailure { axiom: "column bijectivity", witness: vec![y] });
        }
        for x in 0..n {
            for y in 0..n {
                if self.k.apply(self.op(x, y)) != self.op(self.k.apply(x), self.k.apply(y)) {
                    return Err(Error::SkewAxiomFailure { axiom: "k-equivariance", witness: vec![x, y] });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.op(self.op(x, y), z);
                    let rhs = self.op(self.op(x, self.k.apply(z)), self.op(y, z));
                    if lhs != rhs {
                        return Err(Error::SkewAxiomFailure {
                            axiom: "twisted self-distributivity",
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// `σ(x, y) = (k(y), x ▴ y)`.
    pub fn solution(&self) -> Solution {
        Solution::from_fn(self.n(), |x, y| (self.k.apply(y), self.op(x, y)))
    }
}

pub fn skew_check(s: &SkewRack) -> bool {
    s.is_valid()
}

/// `x ▴ y = k⁻¹(x) ◁ y` for a rack automorphism `k`.
pub fn skew_from_rack(rack: &RackTable, k: &Permutation) -> Result<SkewRack> {
    if !rack.is_automorphism(k) {
        return Err(Error::NotAutomorphism);
    }
    let k_inv = k.inverse();
    let btri = OpTable::from_fn(rack.n(), |x, y| rack.op(k_inv.apply(x), y));
    let skew = SkewRack { btri, k: k.clone() };
    skew.check()?;
    Ok(skew)
}

/// The associated rack `x ◁ y = k(x) ▴ y`.
pub fn rack_from_skew(skew: &SkewRack) -> Result<RackTable> {
    skew.check()?;
    RackTable::new(OpTable::from_fn(skew.n(), |x, y| skew.op(skew.k.apply(x), y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shelf_examples() {
        assert!(is_shelf(&RackTable::trivial(3).into_table()));
        assert!(is_shelf(RackTable::dihedral(3).table()));
        // x ◁ y = y is self-distributive; the right-projection table
        // x ◁ y = x + y mod 2 is not
        assert!(is_shelf(&OpTable::from_fn(2, |_, y| y)));
        let t = OpTable::from_fn(2, |x, y| (x + y) % 2);
        assert_eq!(self_distributivity_witness(&t), Some([0, 0, 1]));
        assert!(!is_shelf(&t));
    }

    #[test]
    fn rack_and_quandle_examples() {
        let trivial = RackTable::trivial(2);
        assert!(is_rack(trivial.table()) && is_quandle(trivial.table()));
        let constant = RackTable::constant(&Permutation::shift(2, 1));
        assert!(is_rack(constant.table()));
        assert!(!is_quandle(constant.table()));
        assert!(is_quandle(RackTable::dihedral(3).table()));
        // a shelf that is not a rack
        assert!(!is_rack(&OpTable::from_fn(2, |_, _| 0)));
    }

    #[test]
    fn phi_and_tw() {
        assert!(phi_map(&RackTable::dihedral(3)).is_identity());
        let c2 = RackTable::constant(&Permutation::shift(2, 1));
        assert_eq!(phi_map(&c2), Permutation::shift(2, 1));
        assert_eq!(tw_map(&c2), Permutation::shift(2, 1));
        let c4 = RackTable::constant(&Permutation::shift(4, 1));
        assert_eq!(phi_map(&c4), Permutation::shift(4, 1));
        assert_eq!(tw_map(&c4), Permutation::shift(4, 3));
        // i(x) = x ◁⁻¹ x
        let inv = c4.inverse_table();
        for x in 0..4 {
            assert_eq!(tw_map(&c4).apply(x), inv.get(x, x));
        }
    }

    #[test]
    fn untwisting() {
        let d3 = RackTable::dihedral(3);
        assert_eq!(untwist_to_quandle(&d3), d3);
        for n in [2, 4] {
            let c = RackTable::constant(&Permutation::shift(n, 1));
            let q = untwist_to_quandle(&c);
            assert_eq!(q, RackTable::trivial(n));
            assert_eq!(twist_by(&q, &phi_map(&c)).unwrap(), c);
        }
    }

    #[test]
    fn conjugation_racks() {
        assert_eq!(conj_rack(&Group::cyclic(4)), RackTable::trivial(4));
        assert_eq!(conj_rack(&Group::cyclic(2)), RackTable::trivial(2));
        let s3 = conj_rack(&Group::symmetric3());
        assert!(s3.is_quandle());
        let mut sizes: Vec<usize> = s3.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let bad = OpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3);
        assert!(matches!(
            conj_rack_from_parts(bad, Permutation::identity(3), 0),
            Err(Error::NotAGroup { .. })
        ));
    }

    #[test]
    fn rack_solutions() {
        assert_eq!(rack_solution(&RackTable::trivial(2)).pair_map(), crate::tables::PairMap::flip(2));
        let d3 = rack_solution(&RackTable::dihedral(3));
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(d3.apply(x, y), (y, (2 * y + 3 - x) % 3));
            }
        }
        let c2 = rack_solution(&RackTable::constant(&Permutation::shift(2, 1)));
        assert_eq!(c2.apply(0, 1), (1, 1));
        assert_eq!(c2.apply(1, 1), (1, 0));
    }

    #[test]
    fn skew_racks() {
        // trivial rack, any k: x ▴ y = k⁻¹(x)
        let k = Permutation::new(vec![2, 0, 1]).unwrap();
        let s = skew_from_rack(&RackTable::trivial(3), &k).unwrap();
        assert!(skew_check(&s));
        for x in 0..3 {
            assert_eq!(s.op(x, 0), k.inverse().apply(x));
        }

        // dihedral with k(x) = 2x
        let d3 = RackTable::dihedral(3);
        let k = Permutation::from_fn(3, |x| (2 * x) % 3).unwrap();
        let s = skew_from_rack(&d3, &k).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(s.op(x, y), (2 * y + 2 * (3 - x)) % 3);
            }
        }
        assert_eq!(rack_from_skew(&s).unwrap(), d3);

        // k = id: the axioms are the rack axioms
        let id_skew = SkewRack::new(d3.table().clone(), Permutation::identity(3)).unwrap();
        assert!(id_skew.is_valid());
        let not_rack = SkewRack::new(OpTable::from_fn(2, |x, y| (x + y) % 2), Permutation::identity(2)).unwrap();
        assert!(!not_rack.is_valid());
    }

    #[test]
    fn skew_rack_with_order_three_twist() {
        // k(x) = x + 1 is an automorphism of the dihedral quandle with k² ≠ id
        let d3 = RackTable::dihedral(3);
        let k = Permutation::shift(3, 1);
        let s = skew_from_rack(&d3, &k).unwrap();
        assert!(crate::biracks::braid_check(&s.solution()));
        // the variant (x▴y)▴z = k(k(x)▴z) ▴ (y▴z) is violated here
        let n = 3;
        let literal = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| s.op(s.op(x, y), z) == s.op(k.apply(s.op(k.apply(x), z)), s.op(y, z)))
            })
        });
        assert!(!literal);
    }

    #[test]
    fn skew_requires_automorphism() {
        // the fixed-point quandle on 3 points: 0 acts by swapping 1 and 2
        let t = OpTable::from_rows(&[vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]).unwrap();
        let q = RackTable::new(t).unwrap();
        assert!(q.is_quandle());
        let k = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(skew_from_rack(&q, &k), Err(Error::NotAutomorphism));
    }
}
