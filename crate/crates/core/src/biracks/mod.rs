//! Set-theoretic solutions `σ(x, y) = (g_x(y), f_y(x))` of the braid equation,
//! their derived rack, and the `(*, ·, ◁)` presentation.
//!
//! A left non-degenerate `σ` is determined by `x * y = g_x(y)`, its row
//! inverse `x · y`, and the derived rack `◁`:
//!
//! ```text
//! σ(x, y) = (x * y, (x * y) · (x ◁ (x * y)))
//! σ(x, x · y) = (y, y · (x ◁ y))
//! ```

mod ops;
mod sideways;
mod structure;

pub(crate) use ops::cond1_witness;
pub use ops::{ops_from_solution, solution_from_ops, theorem1_conditions, OpsTriple, TheoremReport};
pub use sideways::{diagonal_maps, sideways_map, strongly_invertible};
pub use structure::{
    circle_op, dual_fixed_pairing, inverse_solution, is_biquandle, is_birack, is_involutive, sqrt_map, square_map,
};

use crate::error::{Error, Result};
use crate::racks::{is_quandle, is_rack, RackTable};
use crate::tables::{OpTable, PairMap};

/// A map `σ: X² → X²` stored as `G[x][y] = g_x(y)` and `F[x][y] = f_y(x)`.
///
/// No axiom is assumed; the predicates in this module classify it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    g: OpTable,
    f: OpTable,
}

impl Solution {
    pub fn new(g: OpTable, f: OpTable) -> Result<Self> {
        if g.n() != f.n() {
            return Err(Error::SizeMismatch { expected: g.n(), found: f.n() });
        }
        Ok(Solution { g, f })
    }

    /// Panics if the closure leaves `0..n`.
    pub fn from_fn(n: usize, sigma: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        Self::from_pair_map(&PairMap::from_fn(n, sigma))
    }

    pub fn from_pair_map(p: &PairMap) -> Self {
        Solution { g: p.first_table(), f: p.second_table() }
    }

    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x, y))
    }

    /// The permutation solution `σ(x, y) = (y + a, x + b) mod n`.
    pub fn permutation(n: usize, a: usize, b: usize) -> Self {
        Self::from_fn(n, |x, y| ((y + a) % n, (x + b) % n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.g.n()
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.g.get(x, y), self.f.get(x, y))
    }

    /// `G[x][y] = g_x(y)`.
    pub fn g(&self) -> &OpTable {
        &self.g
    }

    /// `F[x][y] = f_y(x)`.
    pub fn f(&self) -> &OpTable {
        &self.f
    }

    pub fn pair_map(&self) -> PairMap {
        let n = self.n();
        PairMap::new(n, self.g.as_slice().to_vec(), self.f.as_slice().to_vec()).expect("tables share a carrier")
    }
}

/// Lexicographically least triple on which the two sides of the braid
/// equation disagree.
pub fn braid_witness(s: &Solution) -> Option<[usize; 3]> {
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            let (a0, b0) = s.apply(x, y);
            for z in 0..n {
                // (σ × id)(id × σ)(σ × id)
                let (b1, c1) = s.apply(b0, z);
                let (a1, b2) = s.apply(a0, b1);
                // (id × σ)(σ × id)(id × σ)
                let (q0, r0) = s.apply(y, z);
                let (p1, q1) = s.apply(x, q0);
                let (q2, r1) = s.apply(q1, r0);
                if (a1, b2, c1) != (p1, q2, r1) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn braid_check(s: &Solution) -> bool {
    braid_witness(s).is_none()
}

pub fn is_left_nondegenerate(s: &Solution) -> bool {
    s.g.row_bijective()
}

pub fn is_right_nondegenerate(s: &Solution) -> bool {
    s.f.column_bijective()
}

/// `(left, right)` non-degeneracy.
pub fn nondegeneracy(s: &Solution) -> (bool, bool) {
    (is_left_nondegenerate(s), is_right_nondegenerate(s))
}

pub fn is_bijective(s: &Solution) -> bool {
    s.pair_map().is_bijective()
}

/// The remarkable map `Φ(x, y) = (x, g_x(y))`.
pub fn remarkable_map(s: &Solution) -> Result<PairMap> {
    if !is_left_nondegenerate(s) {
        return Err(Error::NotLeftNondegenerate);
    }
    Ok(PairMap::from_fn(s.n(), |x, y| (x, s.g.get(x, y))))
}

/// The derived operation `x ◁ y = g_y(f_{g_x⁻¹(y)}(x))`.
///
/// Defined for every left non-degenerate `σ`; it is a rack exactly when `σ`
/// is additionally a bijective braid solution.
pub fn derived_rack(s: &Solution) -> Result<OpTable> {
    let dot = s.g.row_inverse().map_err(|_| Error::NotLeftNondegenerate)?;
    Ok(derived_with_dot(s, &dot))
}

pub(crate) fn derived_with_dot(s: &Solution, dot: &OpTable) -> OpTable {
    OpTable::from_fn(s.n(), |x, y| s.g.get(y, s.f.get(x, dot.get(x, y))))
}

/// The derived rack as a validated [`RackTable`].
pub fn derived_rack_table(s: &Solution) -> Result<RackTable> {
    RackTable::new(derived_rack(s)?).map_err(|_| Error::DerivedNotRack)
}

/// True iff `Φ ∘ σ = c_◁ ∘ Φ` with `c_◁(x, y) = (y, x ◁ y)`.
pub fn derived_diagram(s: &Solution) -> Result<bool> {
    let phi = remarkable_map(s)?;
    let tri = derived_rack(s)?;
    let c = PairMap::from_fn(s.n(), |x, y| (y, tri.get(x, y)));
    Ok(phi.compose(&s.pair_map()) == c.compose(&phi))
}

/// Summary of the classifying predicates of a map `X² → X²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub braid: bool,
    pub left: bool,
    pub right: bool,
    pub bijective: bool,
    pub involutive: bool,
    pub biquandle: bool,
    pub derived_rack: Option<bool>,
    pub derived_quandle: Option<bool>,
}

pub fn classify(s: &Solution) -> Classification {
    let braid = braid_check(s);
    let (left, right) = nondegeneracy(s);
    let bijective = is_bijective(s);
    let derived = derived_rack(s).ok();
    let biquandle = braid && left && right && bijective && matches!(is_biquandle(s), Ok(Some(_)));
    Classification {
        braid,
        left,
        right,
        bijective,
        involutive: is_involutive(s),
        biquandle,
        derived_rack: derived.as_ref().map(is_rack),
        derived_quandle: derived.as_ref().map(is_quandle),
    }
}
