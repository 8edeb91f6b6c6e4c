//! Colorings of framed links, given as braid closures, by a birack.
//!
//! A letter `±i` of a braid word on `s` strands applies `σ` (or `σ⁻¹`) to the
//! colors on strands `i` and `i + 1`. A coloring of the closure is a tuple in
//! `X^s` fixed by the whole word.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biracks::{derived_rack_table, inverse_solution, is_birack, sqrt_map, Solution};
use crate::error::{Error, Result};
use crate::racks::phi_map;
use crate::tables::Permutation;

/// Largest `n^s` accepted when enumerating color tuples.
pub const MAX_TUPLES: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::EmptyCarrier);
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::BadLetter { letter: bad, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Space-separated signed letters, e.g. `"1 -2 1 -2"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse { line: 1, reason: format!("braid letter {t:?}: {e}") }))
            .collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// `w` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch { expected: self.strands, found: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The same word on `strands` strands, `strands ≥ self.strands()`.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "[{}] on {} strands", letters.join(" "), self.strands)
    }
}

/// A birack together with its inverse, ready to act on color tuples.
#[derive(Debug, Clone)]
pub struct Colorer {
    sigma: Solution,
    inverse: Solution,
}

impl Colorer {
    pub fn new(s: &Solution) -> Result<Self> {
        if !is_birack(s) {
            return Err(Error::NotABirack);
        }
        Ok(Colorer { sigma: s.clone(), inverse: inverse_solution(s)? })
    }

    pub fn solution(&self) -> &Solution {
        &self.sigma
    }

    /// Applies one letter in place.
    #[inline]
    pub fn apply_letter(&self, colors: &mut [usize], letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let map = if letter > 0 { &self.sigma } else { &self.inverse };
        let (a, b) = map.apply(colors[i], colors[i + 1]);
        colors[i] = a;
        colors[i + 1] = b;
    }

    /// Applies the letters left to right.
    pub fn apply_word(&self, colors: &mut [usize], w: &BraidWord) {
        for &l in w.letters() {
            self.apply_letter(colors, l);
        }
    }

    pub fn closure_colorings(&self, w: &BraidWord, list: bool) -> Result<ColoringReport> {
        let n = self.sigma.n();
        let s = w.strands();
        let total = (n as u64).checked_pow(s as u32).filter(|&t| t <= MAX_TUPLES);
        if total.is_none() {
            return Err(Error::BoundExceeded { n: s, bound: max_strands(n) });
        }
        let mut tuple = vec![0usize; s];
        let mut image = vec![0usize; s];
        let mut count = 0u64;
        let mut fixed = Vec::new();
        loop {
            image.copy_from_slice(&tuple);
            self.apply_word(&mut image, w);
            if image == tuple {
                count += 1;
                if list {
                    fixed.push(tuple.clone());
                }
            }
            if !advance(&mut tuple, n) {
                break;
            }
        }
        Ok(ColoringReport { count, writhe: w.writhe(), fixed_colorings: list.then_some(fixed) })
    }
}

fn max_strands(n: usize) -> usize {
    (1..).take_while(|&s| (n as u64).checked_pow(s as u32).is_some_and(|t| t <= MAX_TUPLES)).last().unwrap_or(1)
}

/// Lexicographic successor; false after the last tuple.
fn advance(tuple: &mut [usize], n: usize) -> bool {
    for c in tuple.iter_mut().rev() {
        *c += 1;
        if *c < n {
            return true;
        }
        *c = 0;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    pub count: u64,
    pub writhe: i64,
    /// Fixed tuples in lexicographic order, when requested.
    pub fixed_colorings: Option<Vec<Vec<usize>>>,
}

/// The action of one letter on all of `X^s`, tuples indexed lexicographically.
pub fn generator_map(s: &Solution, strands: usize, letter: i32) -> Result<Vec<usize>> {
    let w = BraidWord::new(strands, vec![letter])?;
    braid_map(s, &w)
}

/// The action of a whole word on `X^s`, letters applied left to right.
pub fn braid_map(s: &Solution, w: &BraidWord) -> Result<Vec<usize>> {
    let colorer = Colorer::new(s)?;
    let n = s.n();
    let mut tuple = vec![0usize; w.strands()];
    let mut out = Vec::new();
    loop {
        let mut image = tuple.clone();
        colorer.apply_word(&mut image, w);
        out.push(image.iter().fold(0, |acc, &c| acc * n + c));
        if !advance(&mut tuple, n) {
            break;
        }
    }
    Ok(out)
}

pub fn closure_colorings(s: &Solution, w: &BraidWord) -> Result<ColoringReport> {
    Colorer::new(s)?.closure_colorings(w, false)
}

pub fn closure_colorings_listed(s: &Solution, w: &BraidWord) -> Result<ColoringReport> {
    Colorer::new(s)?.closure_colorings(w, true)
}

/// `φ(x) = x ◁ x` of the derived rack: the color change across a kink.
pub fn kink_map(s: &Solution) -> Result<Permutation> {
    if !is_birack(s) {
        return Err(Error::NotABirack);
    }
    Ok(phi_map(&derived_rack_table(s)?))
}

/// The coloring of a positive kink entered with color `x`: the loop carries
/// `a = √x` and the strand leaves with `φ(x)`, so `σ(a, x) = (a, φ(x))`.
pub fn kink_color(s: &Solution, x: usize) -> Result<(usize, usize)> {
    let phi = kink_map(s)?;
    let a = sqrt_map(s)?.apply(x);
    let (left, out) = s.apply(a, x);
    if left != a || out != phi.apply(x) {
        return Err(Error::FormulaMismatch(format!("kink coloring at {x}")));
    }
    let loops: Vec<usize> = (0..s.n()).filter(|&b| s.apply(b, x).0 == b).collect();
    if loops != [a] {
        return Err(Error::FormulaMismatch(format!("kink at {x} has loop colors {loops:?}")));
    }
    Ok((a, out))
}

/// The negative kink: `a = √(i(x))` with `σ⁻¹(a, x) = (a, i(x))`, `i = φ⁻¹`.
pub fn mirror_kink_color(s: &Solution, x: usize) -> Result<(usize, usize)> {
    let i = kink_map(s)?.inverse();
    let a = sqrt_map(s)?.apply(i.apply(x));
    let inv = inverse_solution(s)?;
    let (left, out) = inv.apply(a, x);
    if left != a || out != i.apply(x) {
        return Err(Error::FormulaMismatch(format!("mirror kink coloring at {x}")));
    }
    let loops: Vec<usize> = (0..s.n()).filter(|&b| inv.apply(b, x).0 == b).collect();
    if loops != [a] {
        return Err(Error::FormulaMismatch(format!("mirror kink at {x} has loop colors {loops:?}")));
    }
    Ok((a, out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    R2Insert,
    R2Delete,
    R3,
    FarCommutation,
    Conjugation,
    Rotation,
}

/// A rewrite whose coloring count or writhe differed from the original word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveFailure {
    pub kind: Move,
    pub word: Vec<i32>,
    pub count: u64,
    pub writhe: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub base: ColoringReport,
    pub rewrites: usize,
    pub failures: Vec<MoveFailure>,
    /// Writhe of `w·[+s]` and `w·[−s]` on `s + 1` strands.
    pub stabilized_writhes: (i64, i64),
    /// Coloring count of `w·[+s]·[−(s+1)]` on `s + 2` strands.
    pub double_stabilized_count: u64,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.stabilized_writhes == (self.base.writhe + 1, self.base.writhe - 1)
            && self.double_stabilized_count == self.base.count
    }
}

/// Random walk of `trials` framed-isotopy rewrites starting at `w`, comparing
/// every coloring count with that of `w`.
pub fn framed_invariance_suite(s: &Solution, w: &BraidWord, trials: usize, seed: u64) -> Result<InvarianceReport> {
    let colorer = Colorer::new(s)?;
    let base = colorer.closure_colorings(w, false)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strands = w.strands();
    let mut current = w.letters().to_vec();
    let mut failures = Vec::new();
    for _ in 0..trials {
        if current.len() > 16 {
            current = w.letters().to_vec();
        }
        let kind = *[Move::R2Insert, Move::R2Delete, Move::R3, Move::FarCommutation, Move::Conjugation, Move::Rotation]
            .choose(&mut rng)
            .expect("non-empty");
        current = rewrite(&current, strands, kind, &mut rng);
        let word = BraidWord::new(strands, current.clone())?;
        let report = colorer.closure_colorings(&word, false)?;
        if report.count != base.count || report.writhe != base.writhe {
            failures.push(MoveFailure { kind, word: current.clone(), count: report.count, writhe: report.writhe });
        }
    }
    let top = strands as i32;
    let plus = BraidWord::new(strands + 1, [w.letters(), &[top]].concat())?;
    let minus = BraidWord::new(strands + 1, [w.letters(), &[-top]].concat())?;
    let double = BraidWord::new(strands + 2, [w.letters(), &[top, -(top + 1)]].concat())?;
    Ok(InvarianceReport {
        base,
        rewrites: trials,
        failures,
        stabilized_writhes: (plus.writhe(), minus.writhe()),
        double_stabilized_count: colorer.closure_colorings(&double, false)?.count,
    })
}

fn random_letter(strands: usize, rng: &mut ChaCha8Rng) -> i32 {
    let i = rng.gen_range(1..strands as i32);
    if rng.gen_bool(0.5) {
        i
    } else {
        -i
    }
}

/// One isotopy move. Moves that find nothing to rewrite insert a trivial
/// pattern built from the same relation instead.
fn rewrite(w: &[i32], strands: usize, kind: Move, rng: &mut ChaCha8Rng) -> Vec<i32> {
    let mut out = w.to_vec();
    if strands < 2 {
        return out;
    }
    let pos = rng.gen_range(0..=out.len());
    match kind {
        Move::R2Insert => {
            let e = random_letter(strands, rng);
            out.splice(pos..pos, [e, -e]);
        }
        Move::R2Delete => {
            let spots: Vec<usize> = (0..out.len().saturating_sub(1)).filter(|&k| out[k] == -out[k + 1]).collect();
            match spots.choose(rng) {
                Some(&k) => {
                    out.drain(k..k + 2);
                }
                None => return rewrite(w, strands, Move::R2Insert, rng),
            }
        }
        Move::R3 => {
            if strands < 3 {
                return rewrite(w, strands, Move::R2Insert, rng);
            }
            let spots: Vec<usize> = (0..out.len().saturating_sub(2))
                .filter(|&k| {
                    let (a, b, c) = (out[k], out[k + 1], out[k + 2]);
                    a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1
                })
                .collect();
            match spots.choose(rng) {
                Some(&k) => {
                    let (a, b) = (out[k], out[k + 1]);
                    out[k..k + 3].copy_from_slice(&[b, a, b]);
                }
                None => {
                    let i = rng.gen_range(1..strands as i32 - 1);
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    let (a, b) = (sign * i, sign * (i + 1));
                    out.splice(pos..pos, [a, b, a, -b, -a, -b]);
                }
            }
        }
        Move::FarCommutation => {
            if strands < 4 {
                return rewrite(w, strands, Move::Rotation, rng);
            }
            let spots: Vec<usize> =
                (0..out.len().saturating_sub(1)).filter(|&k| (out[k].abs() - out[k + 1].abs()).abs() >= 2).collect();
            match spots.choose(rng) {
                Some(&k) => out.swap(k, k + 1),
                None => {
                    let a = random_letter(strands, rng);
                    let far: Vec<i32> = (1..strands as i32).filter(|j| (j - a.abs()).abs() >= 2).collect();
                    let b = *far.choose(rng).expect("four strands leave a far generator");
                    out.splice(pos..pos, [a, b, -a, -b]);
                }
            }
        }
        Move::Conjugation => {
            let u = random_letter(strands, rng);
            out.insert(0, u);
            out.push(-u);
        }
        Move::Rotation => {
            if !out.is_empty() {
                out.rotate_left(1);
            }
        }
    }
    out
}

/// `[i, i+1, i]` and `[i+1, i, i+1]` act identically on `X^s` for every `i`.
pub fn braid_relations_hold(s: &Solution, strands: usize) -> Result<bool> {
    for i in 1..strands.saturating_sub(1) as i32 {
        let left = braid_map(s, &BraidWord::new(strands, vec![i, i + 1, i])?)?;
        let right = braid_map(s, &BraidWord::new(strands, vec![i + 1, i, i + 1])?)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}
