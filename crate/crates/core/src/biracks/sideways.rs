//! Sideways and diagonal maps of a solution, and strong invertibility.
//!
//! The sideways map `S` is characterised by `S(σ₁(x, y), x) = (σ₂(x, y), y)`.
//! Writing `y = x · u` it becomes `S(u, x) = (u · (x ◁ u), x · u)`, and on the
//! diagonal `S(x, x) = (φ(x · x), x · x)`.

use super::{is_bijective, is_left_nondegenerate, ops_from_solution, Solution};
use crate::error::Result;
use crate::tables::{PairMap, Permutation};

pub fn sideways_map(s: &Solution) -> Result<PairMap> {
    let ops = ops_from_solution(s)?;
    let (dot, tri) = (ops.dot(), ops.tri());
    Ok(PairMap::from_fn(s.n(), |u, x| (dot.get(u, tri.get(x, u)), dot.get(x, u))))
}

/// `(d1, d2)` with `S(x, x) = (d1(x), d2(x))`.
pub fn diagonal_maps(s: &Solution) -> Result<(Vec<usize>, Vec<usize>)> {
    let side = sideways_map(s)?;
    Ok(diagonals(&side))
}

fn diagonals(p: &PairMap) -> (Vec<usize>, Vec<usize>) {
    (0..p.n()).map(|x| p.apply(x, x)).unzip()
}

fn bijective(v: Vec<usize>) -> bool {
    Permutation::new(v).is_ok()
}

/// Invertible, sideways invertible, and with diagonally bijective `S` and
/// `S⁻¹`.
pub fn strongly_invertible(s: &Solution) -> bool {
    if !is_left_nondegenerate(s) || !is_bijective(s) {
        return false;
    }
    let Ok(side) = sideways_map(s) else { return false };
    let Ok(side_inv) = side.inverse() else { return false };
    let (d1, d2) = diagonals(&side);
    let (e1, e2) = diagonals(&side_inv);
    [d1, d2, e1, e2].into_iter().all(bijective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biracks::structure::square_map;
    use crate::racks::{rack_solution, RackTable};

    #[test]
    fn sideways_satisfies_defining_relation() {
        for s in [Solution::flip(3), Solution::permutation(3, 1, 2), rack_solution(&RackTable::dihedral(3))] {
            let side = sideways_map(&s).unwrap();
            for x in 0..3 {
                for y in 0..3 {
                    let (b1, b2) = s.apply(x, y);
                    assert_eq!(side.apply(b1, x), (b2, y));
                }
            }
        }
    }

    #[test]
    fn sideways_examples() {
        let side = sideways_map(&Solution::flip(2)).unwrap();
        assert_eq!(side, PairMap::flip(2));
        assert_eq!(diagonal_maps(&Solution::flip(2)).unwrap(), (vec![0, 1], vec![0, 1]));

        let s = Solution::permutation(2, 1, 0);
        let (d1, d2) = diagonal_maps(&s).unwrap();
        assert_eq!(d2, vec![1, 0]);
        assert_eq!(d2, square_map(&s).unwrap());
        assert_eq!(d1, vec![0, 1]);

        let (d1, d2) = diagonal_maps(&rack_solution(&RackTable::dihedral(3))).unwrap();
        assert_eq!(d1, vec![0, 1, 2]);
        assert_eq!(d2, vec![0, 1, 2]);
    }

    #[test]
    fn strong_invertibility_examples() {
        assert!(strongly_invertible(&Solution::flip(2)));
        assert!(!strongly_invertible(&Solution::from_fn(2, |_, y| (y, 0))));
        for a in 0..2 {
            for b in 0..2 {
                assert!(strongly_invertible(&Solution::permutation(2, a, b)));
            }
        }
    }
}
