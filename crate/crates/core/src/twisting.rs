//! Twisting solutions by automorphisms.
//!
//! * First kind: `σ_k = (k⁻¹ × id) σ (k × id)` for an automorphism `k`. The dot
//!   operation becomes `x ·_k y = k(x · y)` and the derived rack is unchanged.
//! * Second kind: `ᵠσ = σ (φ × id)` and `σᵠ = σ (id × φ)` for a linear
//!   automorphism `φ`. The first keeps `·` and turns `◁` into
//!   `x ◁_φ y = φ(x) ◁ y`.
//!
//! Each constructor checks the identities it advertises and returns an error
//! if one of them fails.

use crate::biracks::{
    braid_check, derived_rack, derived_rack_table, is_biquandle, is_birack, is_left_nondegenerate, ops_from_solution,
    OpsTriple, Solution,
};
use crate::error::{Error, Result};
use crate::racks::phi_map;
use crate::tables::{OpTable, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKind {
    First,
    LeftLinear,
    RightLinear,
}

/// A twisted solution together with what produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistCertificate {
    pub original: Solution,
    pub twisted: Solution,
    pub map: Permutation,
    pub kind: TwistKind,
}

fn mismatch(what: &str) -> Error {
    Error::FormulaMismatch(what.to_string())
}

/// `(k × k) σ = σ (k × k)`.
pub fn is_automorphism(k: &Permutation, s: &Solution) -> bool {
    k.len() == s.n() && s.pair_map().post_apply(k, k) == s.pair_map().pre_apply(k, k)
}

/// The operation-level form: `k(x · y) = k(x) · k(y)` and `k(x ◁ y) = k(x) ◁ k(y)`.
pub fn preserves_operations(k: &Permutation, ops: &OpsTriple) -> bool {
    let n = ops.n();
    let preserves = |t: &OpTable| {
        (0..n).all(|x| (0..n).all(|y| k.apply(t.get(x, y)) == t.get(k.apply(x), k.apply(y))))
    };
    preserves(ops.dot()) && preserves(ops.tri())
}

/// All automorphisms of `σ`, scanning every permutation of the carrier.
pub fn automorphisms(s: &Solution, bound: usize) -> Result<Vec<Permutation>> {
    if s.n() > bound {
        return Err(Error::BoundExceeded { n: s.n(), bound });
    }
    Ok(Permutation::all(s.n()).filter(|k| is_automorphism(k, s)).collect())
}

/// `σ_k = (k⁻¹ × id) σ (k × id)`.
pub fn twist_first(s: &Solution, k: &Permutation) -> Result<TwistCertificate> {
    if !is_left_nondegenerate(s) {
        return Err(Error::NotLeftNondegenerate);
    }
    if !is_automorphism(k, s) {
        return Err(Error::NotAutomorphism);
    }
    let id = Permutation::identity(s.n());
    let k_inv = k.inverse();
    let sigma = s.pair_map();
    let twisted_map = sigma.pre_apply(k, &id).post_apply(&k_inv, &id);
    if twisted_map != sigma.pre_apply(&id, &k_inv).post_apply(&id, k) {
        return Err(mismatch("the two expressions of σ_k differ"));
    }
    let twisted = Solution::from_pair_map(&twisted_map);
    if !braid_check(&twisted) {
        return Err(mismatch("σ_k fails the braid equation"));
    }
    let before = ops_from_solution(s)?;
    let after = ops_from_solution(&twisted)?;
    if after.tri() != before.tri() {
        return Err(mismatch("σ_k changed the derived rack"));
    }
    let n = s.n();
    let expected_dot = OpTable::from_fn(n, |x, y| k.apply(before.dot().get(x, y)));
    if after.dot() != &expected_dot {
        return Err(mismatch("σ_k dot is not k(x · y)"));
    }
    if !is_automorphism(k, &twisted) {
        return Err(mismatch("k is not an automorphism of σ_k"));
    }
    Ok(TwistCertificate { original: s.clone(), twisted, map: k.clone(), kind: TwistKind::First })
}

/// Checks the four identities
/// `φ(x·y) = x·φ(y)`, `φ(x)·y = x·y`, `φ(x◁y) = φ(x)◁y`, `x◁φ(y) = x◁y`,
/// returning the first failing pair.
pub fn linear_automorphism_witness(phi: &Permutation, ops: &OpsTriple) -> Option<(usize, usize)> {
    let n = ops.n();
    let (dot, tri) = (ops.dot(), ops.tri());
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| {
        phi.apply(dot.get(x, y)) != dot.get(x, phi.apply(y))
            || dot.get(phi.apply(x), y) != dot.get(x, y)
            || phi.apply(tri.get(x, y)) != tri.get(phi.apply(x), y)
            || tri.get(x, phi.apply(y)) != tri.get(x, y)
    })
}

pub fn is_linear_automorphism(phi: &Permutation, s: &Solution) -> bool {
    if phi.len() != s.n() {
        return false;
    }
    match ops_from_solution(s) {
        Ok(ops) => linear_automorphism_witness(phi, &ops).is_none(),
        Err(_) => false,
    }
}

/// The map-level form: `σ(id × φ) = (φ × id)σ` and `σ(φ × id) = (id × φ)σ`.
pub fn commutes_linearly(phi: &Permutation, s: &Solution) -> bool {
    let id = Permutation::identity(s.n());
    let p = s.pair_map();
    p.pre_apply(&id, phi) == p.post_apply(phi, &id) && p.pre_apply(phi, &id) == p.post_apply(&id, phi)
}

fn check_linear(phi: &Permutation, s: &Solution) -> Result<OpsTriple> {
    let ops = ops_from_solution(s)?;
    if phi.len() != s.n() || linear_automorphism_witness(phi, &ops).is_some() {
        return Err(Error::NotLinearAutomorphism);
    }
    Ok(ops)
}

/// `ᵠσ = σ (φ × id)`; `*` and `·` are unchanged, `x ◁_φ y = φ(x) ◁ y`.
pub fn twist_left(s: &Solution, phi: &Permutation) -> Result<TwistCertificate> {
    let ops = check_linear(phi, s)?;
    let id = Permutation::identity(s.n());
    let twisted = Solution::from_pair_map(&s.pair_map().pre_apply(phi, &id));
    let n = s.n();
    let tri = OpTable::from_fn(n, |x, y| ops.tri().get(phi.apply(x), y));
    let expected = OpsTriple::new(ops.star().clone(), tri)?;
    verify_second_kind(&twisted, &expected, phi)?;
    Ok(TwistCertificate { original: s.clone(), twisted, map: phi.clone(), kind: TwistKind::LeftLinear })
}

/// `σᵠ = σ (id × φ)`; `x ·' y = φ⁻¹(x · y)` and `x ◁' y = φ(x) ◁ y`.
pub fn twist_right(s: &Solution, phi: &Permutation) -> Result<TwistCertificate> {
    let ops = check_linear(phi, s)?;
    let id = Permutation::identity(s.n());
    let twisted = Solution::from_pair_map(&s.pair_map().pre_apply(&id, phi));
    let n = s.n();
    let phi_inv = phi.inverse();
    let dot = OpTable::from_fn(n, |x, y| phi_inv.apply(ops.dot().get(x, y)));
    let tri = OpTable::from_fn(n, |x, y| ops.tri().get(phi.apply(x), y));
    let expected = OpsTriple::from_dot(dot, tri)?;
    verify_second_kind(&twisted, &expected, phi)?;
    Ok(TwistCertificate { original: s.clone(), twisted, map: phi.clone(), kind: TwistKind::RightLinear })
}

fn verify_second_kind(twisted: &Solution, expected: &OpsTriple, phi: &Permutation) -> Result<()> {
    if !braid_check(twisted) {
        return Err(mismatch("second-kind twist fails the braid equation"));
    }
    if &ops_from_solution(twisted)? != expected {
        return Err(mismatch("second-kind twist has unexpected operations"));
    }
    if !is_linear_automorphism(phi, twisted) || !is_linear_automorphism(&phi.inverse(), twisted) {
        return Err(mismatch("φ is not a linear automorphism of the twist"));
    }
    Ok(())
}

/// `φ(x) = x ◁ x` of the derived rack, checked to be a linear automorphism.
pub fn phi_linear_check(s: &Solution) -> Result<bool> {
    if !is_birack(s) {
        return Err(Error::NotABirack);
    }
    let rack = derived_rack_table(s)?;
    let phi = phi_map(&rack);
    Ok(is_linear_automorphism(&phi, s) && is_linear_automorphism(&phi.inverse(), s))
}

/// A birack written as a second-kind twist of a biquandle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Untwisted {
    pub biquandle: Solution,
    pub phi: Permutation,
    /// `ⁱσ`, the twist producing the biquandle.
    pub certificate: TwistCertificate,
}

/// `ⁱσ = σ (i × id)` is a biquandle and `σ = ᵠ(ⁱσ)`.
pub fn untwist_to_biquandle(s: &Solution) -> Result<Untwisted> {
    if !is_birack(s) {
        return Err(Error::NotABirack);
    }
    let phi = phi_map(&derived_rack_table(s)?);
    let certificate = twist_left(s, &phi.inverse())?;
    let biquandle = certificate.twisted.clone();
    if !matches!(is_biquandle(&biquandle), Ok(Some(_))) {
        return Err(mismatch("untwisted solution is not a biquandle"));
    }
    if !crate::racks::is_quandle(&derived_rack(&biquandle)?) {
        return Err(mismatch("untwisted derived rack is not a quandle"));
    }
    if twist_left(&biquandle, &phi)?.twisted != *s {
        return Err(mismatch("re-twisting by φ does not recover σ"));
    }
    Ok(Untwisted { biquandle, phi, certificate })
}
