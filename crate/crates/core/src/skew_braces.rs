//! Finite skew braces and their braid solutions
//!
//! ```text
//! r(x, y) = (−x + x∘y, (−x + x∘y)′ ∘ x ∘ y)
//! ```
//!
//! whose dot operation is `a · b = a′ ∘ (a + b)` and whose derived rack is
//! conjugation `x ◁ y = −y + x + y` in the additive group.

use crate::biracks::{braid_witness, derived_rack, is_bijective, nondegeneracy, ops_from_solution, Solution};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::racks::{conj_rack, RackTable};
use crate::tables::OpTable;

/// Two group structures `+` and `∘` on `0..n` sharing an identity and
/// satisfying `a ∘ (b + c) = a∘b − a + a∘c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    add: Group,
    circ: Group,
}

/// Reasons a pair of tables fails to be a skew brace, with the first witness.
pub fn brace_witness(add: &OpTable, circ: &OpTable, zero: usize) -> Result<()> {
    if add.n() != circ.n() {
        return Err(Error::SizeMismatch { expected: add.n(), found: circ.n() });
    }
    let as_brace_error = |axiom: &'static str| {
        move |e: Error| match e {
            Error::NotAGroup { witness, .. } => Error::NotASkewBrace { axiom, witness },
            other => other,
        }
    };
    let add = Group::from_table(add.clone()).map_err(as_brace_error("(+) is a group"))?;
    let circ = Group::from_table(circ.clone()).map_err(as_brace_error("(∘) is a group"))?;
    if add.identity() != zero || circ.identity() != zero {
        return Err(Error::NotASkewBrace { axiom: "shared identity", witness: vec![add.identity(), circ.identity()] });
    }
    compatibility_witness(&add, &circ)
}

fn compatibility_witness(add: &Group, circ: &Group) -> Result<()> {
    let n = add.n();
    for a in 0..n {
        let minus_a = add.inv(a);
        for b in 0..n {
            let ab = circ.mul(a, b);
            for c in 0..n {
                let lhs = circ.mul(a, add.mul(b, c));
                let rhs = add.mul(add.mul(ab, minus_a), circ.mul(a, c));
                if lhs != rhs {
                    return Err(Error::NotASkewBrace { axiom: "compatibility", witness: vec![a, b, c] });
                }
            }
        }
    }
    Ok(())
}

pub fn skew_brace_check(add: &OpTable, circ: &OpTable, zero: usize) -> bool {
    brace_witness(add, circ, zero).is_ok()
}

impl SkewBrace {
    pub fn new(add: OpTable, circ: OpTable, zero: usize) -> Result<Self> {
        brace_witness(&add, &circ, zero)?;
        Ok(SkewBrace { add: Group::from_table(add)?, circ: Group::from_table(circ)? })
    }

    pub fn from_groups(add: Group, circ: Group) -> Result<Self> {
        Self::new(add.table().clone(), circ.table().clone(), add.identity())
    }

    /// `∘ = +`.
    pub fn trivial(group: &Group) -> Self {
        SkewBrace { add: group.clone(), circ: group.clone() }
    }

    /// `a + b = b a` and `a ∘ b = a b`.
    pub fn opposite_trivial(group: &Group) -> Result<Self> {
        let add = OpTable::from_fn(group.n(), |a, b| group.mul(b, a));
        Self::new(add, group.table().clone(), group.identity())
    }

    /// `Z/4` with `a ∘ b = a + b + 2ab`.
    pub fn z4() -> Self {
        let circ = OpTable::from_fn(4, |a, b| (a + b + 2 * a * b) % 4);
        Self::new(OpTable::from_fn(4, |a, b| (a + b) % 4), circ, 0).expect("Z/4 brace")
    }

    pub fn n(&self) -> usize {
        self.add.n()
    }

    pub fn add_group(&self) -> &Group {
        &self.add
    }

    pub fn circ_group(&self) -> &Group {
        &self.circ
    }

    pub fn zero(&self) -> usize {
        self.add.identity()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    /// `a′`, the inverse for `∘`.
    #[inline]
    pub fn cinv(&self, a: usize) -> usize {
        self.circ.inv(a)
    }
}

/// The solution `r`, checked to be a non-degenerate bijective braid solution.
pub fn brace_solution(b: &SkewBrace) -> Result<Solution> {
    let r = Solution::from_fn(b.n(), |x, y| {
        let xy = b.circ(x, y);
        let u = b.add(b.neg(x), xy);
        (u, b.circ(b.cinv(u), xy))
    });
    if let Some(w) = braid_witness(&r) {
        return Err(Error::Validation { invariant: "brace solution satisfies the braid equation".into(), witness: w.to_vec() });
    }
    if nondegeneracy(&r) != (true, true) || !is_bijective(&r) {
        return Err(Error::FormulaMismatch("brace solution is degenerate".into()));
    }
    Ok(r)
}

/// `a · b = a′ ∘ (a + b)`, checked against the dot of [`brace_solution`].
pub fn brace_dot(b: &SkewBrace) -> Result<OpTable> {
    let dot = OpTable::from_fn(b.n(), |x, y| b.circ(b.cinv(x), b.add(x, y)));
    if ops_from_solution(&brace_solution(b)?)?.dot() != &dot {
        return Err(Error::FormulaMismatch("brace dot differs from the extracted dot".into()));
    }
    Ok(dot)
}

/// `x ◁ y = −y + x + y`, checked against the derived rack of [`brace_solution`].
pub fn brace_derived_rack(b: &SkewBrace) -> Result<RackTable> {
    let rack = conj_rack(b.add_group());
    if derived_rack(&brace_solution(b)?)? != *rack.table() {
        return Err(Error::FormulaMismatch("brace derived rack is not additive conjugation".into()));
    }
    Ok(rack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biracks::is_involutive;
    use crate::racks::rack_solution;
    use crate::tables::Permutation;

    #[test]
    fn check_examples() {
        let z3 = Group::cyclic(3);
        assert!(skew_brace_check(z3.table(), z3.table(), 0));
        let z4 = Group::cyclic(4);
        assert!(skew_brace_check(z4.table(), &OpTable::from_fn(4, |a, b| (a + b + 2 * a * b) % 4), 0));
        let bad = OpTable::from_fn(4, |a, b| (a + b + a * b) % 4);
        assert!(!skew_brace_check(z4.table(), &bad, 0));
        // 1 ∘ b = 1 + 2b is always odd, so 1 has no ∘-inverse
        assert_eq!(
            brace_witness(z4.table(), &bad, 0),
            Err(Error::NotASkewBrace { axiom: "(∘) is a group", witness: vec![1] })
        );
    }

    #[test]
    fn compatibility_failure() {
        // Z/4 relabelled by swapping 1 and 2 is a group with identity 0 but
        // not a brace over the usual addition
        let z4 = Group::cyclic(4);
        let p = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        let circ = z4.table().relabel(&p);
        assert!(Group::from_table(circ.clone()).is_ok());
        assert!(matches!(brace_witness(z4.table(), &circ, 0), Err(Error::NotASkewBrace { axiom: "compatibility", .. })));
    }

    #[test]
    fn trivial_braces() {
        let z3 = SkewBrace::trivial(&Group::cyclic(3));
        assert_eq!(brace_solution(&z3).unwrap(), Solution::flip(3));
        assert_eq!(brace_dot(&z3).unwrap(), OpTable::from_fn(3, |_, y| y));
        assert!(brace_derived_rack(&z3).unwrap().is_trivial());

        let s3 = Group::symmetric3();
        let b = SkewBrace::trivial(&s3);
        let r = brace_solution(&b).unwrap();
        assert_eq!(r, Solution::from_fn(6, |x, y| (y, s3.mul(s3.mul(s3.inv(y), x), y))));
        assert_eq!(r, rack_solution(&conj_rack(&s3)));
        assert_eq!(brace_derived_rack(&b).unwrap(), conj_rack(&s3));
        assert!(!is_involutive(&r));
    }

    #[test]
    fn z4_brace() {
        let b = SkewBrace::z4();
        let r = brace_solution(&b).unwrap();
        assert_eq!(r.apply(1, 1), (3, 3));
        assert_eq!(r.apply(3, 3), (1, 1));
        assert!(is_involutive(&r));
        let dot = brace_dot(&b).unwrap();
        assert_eq!(dot.get(1, 1), 3);
        assert_eq!(&dot, ops_from_solution(&r).unwrap().dot());
        assert!(brace_derived_rack(&b).unwrap().is_trivial());
    }

    #[test]
    fn opposite_brace_on_s3() {
        let s3 = Group::symmetric3();
        let b = SkewBrace::opposite_trivial(&s3).unwrap();
        let r = brace_solution(&b).unwrap();
        // −x + x∘y = x y x⁻¹ for the opposite addition
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(r.apply(x, y).0, s3.mul(s3.mul(x, y), s3.inv(x)));
            }
        }
        assert_eq!(&derived_rack(&r).unwrap(), brace_derived_rack(&b).unwrap().table());
        assert!(!brace_derived_rack(&b).unwrap().is_trivial());
    }
}
