//! Finite groups given by explicit multiplication tables.

use crate::error::{Error, Result};
use crate::tables::{OpTable, Permutation};

/// A group on `0..n`: multiplication table, inverse map and identity element.
///
/// Construction always re-verifies the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    mult: OpTable,
    inv: Permutation,
    identity: usize,
}

impl Group {
    pub fn new(mult: OpTable, inv: Permutation, identity: usize) -> Result<Self> {
        check_group(&mult, &inv, identity)?;
        Ok(Group { mult, inv, identity })
    }

    /// Builds a group from its table alone, deriving identity and inverses.
    pub fn from_table(mult: OpTable) -> Result<Self> {
        let n = mult.n();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult.get(e, x) == x && mult.get(x, e) == x))
            .ok_or(Error::NotAGroup { axiom: "identity", witness: vec![] })?;
        let inv: Vec<usize> = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| mult.get(x, y) == identity)
                    .ok_or(Error::NotAGroup { axiom: "inverse", witness: vec![x] })
            })
            .collect::<Result<_>>()?;
        let inv = Permutation::new(inv).map_err(|_| Error::NotAGroup { axiom: "inverse", witness: vec![] })?;
        Self::new(mult, inv, identity)
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let mult = OpTable::from_fn(n, |x, y| (x + y) % n);
        let inv = Permutation::from_fn(n, |x| (n - x) % n).expect("negation is a bijection");
        Group { mult, inv, identity: 0 }
    }

    /// The symmetric group on three letters.
    ///
    /// Element `i` is the `i`-th permutation of `{0,1,2}` in lexicographic
    /// order, so `0` is the identity, `{3, 4}` are the 3-cycles and
    /// `{1, 2, 5}` the transpositions. The product `a b` is the composite
    /// "apply `b`, then `a`".
    pub fn symmetric3() -> Self {
        let perms: Vec<Permutation> = Permutation::all(3).collect();
        let index = |p: &Permutation| perms.iter().position(|q| q == p).expect("closed");
        let mult = OpTable::from_fn(6, |a, b| index(&perms[a].compose(&perms[b])));
        Group::from_table(mult).expect("S3 is a group")
    }

    pub fn n(&self) -> usize {
        self.mult.n()
    }

    pub fn table(&self) -> &OpTable {
        &self.mult
    }

    pub fn inverses(&self) -> &Permutation {
        &self.inv
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv.apply(a)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Verifies associativity, identity and inverses; the error carries the
/// first failing triple (or pair / element).
pub fn check_group(mult: &OpTable, inv: &Permutation, e: usize) -> Result<()> {
    let n = mult.n();
    if inv.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: inv.len() });
    }
    if e >= n {
        return Err(Error::OutOfRange { value: e, n });
    }
    for x in 0..n {
        if mult.get(e, x) != x || mult.get(x, e) != x {
            return Err(Error::NotAGroup { axiom: "identity", witness: vec![x] });
        }
        if mult.get(x, inv.apply(x)) != e || mult.get(inv.apply(x), x) != e {
            return Err(Error::NotAGroup { axiom: "inverse", witness: vec![x] });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = mult.get(a, b);
            for c in 0..n {
                if mult.get(ab, c) != mult.get(a, mult.get(b, c)) {
                    return Err(Error::NotAGroup { axiom: "associativity", witness: vec![a, b, c] });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_group_of_order_six() {
        let g = Group::symmetric3();
        assert_eq!(g.n(), 6);
        assert_eq!(g.identity(), 0);
        assert!(!g.is_abelian());
        // 3-cycles have order 3, transpositions order 2
        for c in [3, 4] {
            assert_eq!(g.mul(c, g.mul(c, c)), 0);
        }
        for t in [1, 2, 5] {
            assert_eq!(g.mul(t, t), 0);
        }
    }

    #[test]
    fn rejects_non_groups() {
        let not_assoc = OpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3);
        assert!(Group::from_table(not_assoc).is_err());
        let z4 = Group::cyclic(4);
        assert!(z4.is_abelian());
        let bad_inv = Permutation::identity(4);
        assert!(matches!(
            Group::new(z4.table().clone(), bad_inv, 0),
            Err(Error::NotAGroup { axiom: "inverse", .. })
        ));
    }
}
