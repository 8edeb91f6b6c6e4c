use super::{braid_check, braid_witness, is_bijective, nondegeneracy, ops_from_solution, Solution};
use crate::error::{Error, Result};
use crate::tables::{OpTable, Permutation};

/// Bijective, left and right non-degenerate solution of the braid equation.
pub fn is_birack(s: &Solution) -> bool {
    nondegeneracy(s) == (true, true) && is_bijective(s) && braid_check(s)
}

/// `σ⁻¹(x, y) = (a, a · x)` with `a = (x * y) ◁⁻¹ x`, checked against
/// composition with `σ` before it is returned.
pub fn inverse_solution(s: &Solution) -> Result<Solution> {
    let ops = ops_from_solution(s)?;
    if let Some(w) = braid_witness(s) {
        return Err(Error::Validation { invariant: "braid equation".into(), witness: w.to_vec() });
    }
    let tri_inv = ops.tri().column_inverse().map_err(|_| Error::DerivedNotRack)?;
    let inverse = Solution::from_fn(s.n(), |x, y| {
        let a = tri_inv.get(ops.star().get(x, y), x);
        (a, ops.dot().get(a, x))
    });
    let sigma = s.pair_map();
    let candidate = inverse.pair_map();
    if !sigma.compose(&candidate).is_identity() || !candidate.compose(&sigma).is_identity() {
        return Err(Error::FormulaMismatch("σ⁻¹ formula does not invert σ".into()));
    }
    Ok(inverse)
}

pub fn is_involutive(s: &Solution) -> bool {
    let p = s.pair_map();
    p.compose(&p).is_identity()
}

/// For every `a`, the unique `b` with `fixed(a, b)`, if each exists.
fn unique_fixed(n: usize, fixed: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n)
        .map(|a| {
            let mut hits = (0..n).filter(|&b| fixed(a, b));
            match (hits.next(), hits.next()) {
                (Some(b), None) => Some(b),
                _ => None,
            }
        })
        .collect()
}

/// For a birack, the pairing `s` with `σ(x, s(x)) = (x, s(x))` when every `x`
/// has exactly one such partner; `None` when the birack is not a biquandle.
pub fn is_biquandle(s: &Solution) -> Result<Option<Permutation>> {
    if !is_birack(s) {
        return Err(Error::NotABirack);
    }
    let fixed = |x: usize, y: usize| s.apply(x, y) == (x, y);
    match unique_fixed(s.n(), fixed) {
        None => Ok(None),
        Some(image) => Permutation::new(image)
            .map(Some)
            .map_err(|_| Error::FormulaMismatch("fixed pairing of a biquandle is not a bijection".into())),
    }
}

/// The dual pairing: for every `y` the unique `x` with `σ(x, y) = (x, y)`.
pub fn dual_fixed_pairing(s: &Solution) -> Option<Vec<usize>> {
    unique_fixed(s.n(), |y, x| s.apply(x, y) == (x, y))
}

/// `x ↦ x · x`.
pub fn square_map(s: &Solution) -> Result<Vec<usize>> {
    let dot = s.g().row_inverse().map_err(|_| Error::NotLeftNondegenerate)?;
    Ok((0..s.n()).map(|x| dot.get(x, x)).collect())
}

/// The inverse of the square map.
pub fn sqrt_map(s: &Solution) -> Result<Permutation> {
    Permutation::new(square_map(s)?).map(|p| p.inverse()).map_err(|_| Error::SquareNotBijective)
}

/// `y ∘ z = x ⇔ z = f_y(x)`, the inverse of the second coordinate.
pub fn circle_op(s: &Solution) -> Result<OpTable> {
    let inv = s.f().column_inverse().map_err(|_| Error::NotRightNondegenerate)?;
    Ok(OpTable::from_fn(s.n(), |y, z| inv.get(z, y)))
}
