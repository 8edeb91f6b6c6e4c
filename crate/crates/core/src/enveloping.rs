//! Enveloping groups `G_X = ⟨X | xy = zt whenever σ(x, y) = (z, t)⟩`.
//!
//! Words are sequences of signed, 1-based generator indices: `k` is the
//! `k`-th generator and `-k` its inverse. A relation is a word equal to the
//! identity.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::biracks::{derived_rack_table, is_birack, ops_from_solution, Solution};
use crate::error::{Error, Result};
use crate::racks::phi_map;
use crate::snf::invariant_factors;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relations: Vec<Vec<i32>>,
}

impl Presentation {
    /// Validates indices and normalises the relations: free reduction, empty
    /// words dropped, duplicates removed, sorted.
    pub fn new(generators: usize, relations: Vec<Vec<i32>>) -> Result<Self> {
        for (i, word) in relations.iter().enumerate() {
            if let Some(&bad) = word.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > generators) {
                return Err(Error::Validation {
                    invariant: format!("relation {i}: letter {bad} outside ±1..±{generators}"),
                    witness: vec![i],
                });
            }
        }
        let mut relations: Vec<Vec<i32>> =
            relations.into_iter().map(|w| free_reduce(&w)).filter(|w| !w.is_empty()).collect();
        relations.sort();
        relations.dedup();
        Ok(Presentation { generators, relations })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[Vec<i32>] {
        &self.relations
    }

    /// Relations × generators matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relations
            .iter()
            .map(|w| {
                let mut row = vec![0i64; self.generators];
                for &l in w {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                row.into_iter().map(BigInt::from).collect()
            })
            .collect()
    }

    /// Line 1 is the generator count; each further line one relation.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.generators);
        for w in &self.relations {
            let letters: Vec<String> = w.iter().map(i32::to_string).collect();
            out.push_str(&letters.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(Error::Parse { line: 1, reason: "missing generator count".into() })?;
        let generators = first
            .trim()
            .parse()
            .map_err(|e| Error::Parse { line: 1, reason: format!("generator count: {e}") })?;
        let relations = lines
            .map(|(i, l)| {
                l.split_whitespace()
                    .map(|t| t.parse::<i32>().map_err(|e| Error::Parse { line: i + 1, reason: format!("{t:?}: {e}") }))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::new(generators, relations)
    }
}

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn letter(x: usize) -> i32 {
    x as i32 + 1
}

/// Free rank and torsion coefficients of an abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// Each entry is greater than one and divides the next.
    pub torsion: Vec<BigUint>,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torsion: Vec<String> = self.torsion.iter().map(|t| t.to_string()).collect();
        write!(f, "rank={} torsion=[{}]", self.rank, torsion.join(","))
    }
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let factors = invariant_factors(&p.exponent_matrix());
    let torsion = factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_biguint().expect("invariant factors are positive"))
        .collect();
    AbelianInvariants { rank: p.generators - factors.len(), torsion }
}

/// `x (x·y) = y (y·(x◁y))` for every pair.
pub fn enveloping_presentation(s: &Solution) -> Result<Presentation> {
    let ops = ops_from_solution(s)?;
    let (dot, tri) = (ops.dot(), ops.tri());
    let n = s.n();
    let relations = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| vec![letter(x), letter(dot.get(x, y)), -letter(dot.get(y, tri.get(x, y))), -letter(y)])
        .collect();
    Presentation::new(n, relations)
}

/// `x y = z t` for `σ(x, y) = (z, t)`, read directly off the map.
pub fn raw_presentation(s: &Solution) -> Result<Presentation> {
    let n = s.n();
    let relations = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| {
            let (z, t) = s.apply(x, y);
            vec![letter(x), letter(y), -letter(t), -letter(z)]
        })
        .collect();
    Presentation::new(n, relations)
}

/// `X/∼` for the equivalence generated by `x ∼ φ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiQuotient {
    /// Orbits of `φ`, listed by least element.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[x]` is the index of the class containing `x`.
    pub class_of: Vec<usize>,
    /// The induced solution on the classes.
    pub solution: Solution,
}

impl PhiQuotient {
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// `G_{X/∼}`.
    pub fn presentation(&self) -> Result<Presentation> {
        raw_presentation(&self.solution)
    }
}

pub fn phi_quotient(s: &Solution) -> Result<PhiQuotient> {
    if !is_birack(s) {
        return Err(Error::NotABirack);
    }
    let phi = phi_map(&derived_rack_table(s)?);
    let classes = phi.orbits();
    let mut class_of = vec![0; s.n()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let m = classes.len();
    let solution = Solution::from_fn(m, |a, b| {
        let (z, t) = s.apply(classes[a][0], classes[b][0]);
        (class_of[z], class_of[t])
    });
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            let (z, t) = s.apply(x, y);
            if solution.apply(class_of[x], class_of[y]) != (class_of[z], class_of[t]) {
                return Err(Error::Validation { invariant: "σ respects x ∼ φ(x)".into(), witness: vec![x, y] });
            }
        }
    }
    Ok(PhiQuotient { classes, class_of, solution })
}

/// `x · φ(x) = φ(x · x)` pointwise, and `G_X`, `G_{X/∼}` have the same
/// abelianization.
pub fn envelope_proposition_check(s: &Solution) -> Result<bool> {
    let quotient = phi_quotient(s)?;
    let ops = ops_from_solution(s)?;
    let phi = phi_map(&derived_rack_table(s)?);
    let pointwise = (0..s.n()).all(|x| ops.dot().get(x, phi.apply(x)) == phi.apply(ops.dot().get(x, x)));
    let full = abelianization(&enveloping_presentation(s)?);
    let reduced = abelianization(&quotient.presentation()?);
    Ok(pointwise && full == reduced)
}
