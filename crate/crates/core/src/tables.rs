//! Carrier-level primitives: permutations, binary-operation tables and maps
//! `X² → X²`.
//!
//! Elements of a carrier of size `n` are the integers `0..n`. Tables are stored
//! flat in row-major order, so the pair `(x, y)` lives at index `x * n + y`.

use crate::error::{Error, Result};

/// Flat index of the pair `(x, y)` on a carrier of size `n`.
#[inline]
pub fn pair_index(n: usize, x: usize, y: usize) -> usize {
    x * n + y
}

fn check_values(n: usize, values: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    match values.iter().find(|&&v| v >= n) {
        Some(&value) => Err(Error::OutOfRange { value, n }),
        None => Ok(()),
    }
}

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        check_values(n, &image)?;
        let mut seen = vec![false; n];
        for &v in &image {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(v));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// `x ↦ x + k mod n`.
    pub fn shift(n: usize, k: usize) -> Self {
        Permutation { image: (0..n).map(|x| (x + k) % n).collect() }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &v)| x == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (x, &v) in self.image.iter().enumerate() {
            inv[v] = x;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    /// Orbits (cycles) of the permutation, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = self.image[x];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations { next: Some((0..n).collect()) }
    }
}

/// Lexicographic iterator over the permutations of `0..n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { image: current })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// An `n × n` table of a binary operation on `0..n`; `get(x, y)` is `x ∘ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    data: Vec<usize>,
}

impl OpTable {
    pub fn new(n: usize, data: Vec<usize>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, found: data.len() });
        }
        check_values(n, &data)?;
        Ok(OpTable { n, data })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch { expected: n, found: bad.len() });
        }
        Self::new(n, rows.concat())
    }

    /// Builds a table from a closure. Panics if the closure leaves `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let data: Vec<usize> = (0..n * n).map(|i| f(i / n, i % n)).collect();
        assert!(data.iter().all(|&v| v < n), "OpTable::from_fn produced an out-of-range entry");
        OpTable { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.data[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.data
    }

    /// First row `x` for which `y ↦ t[x][y]` is not a bijection.
    pub fn non_bijective_row(&self) -> Option<usize> {
        (0..self.n).find(|&x| !is_bijection(self.n, self.row(x).iter().copied()))
    }

    /// First column `y` for which `x ↦ t[x][y]` is not a bijection.
    pub fn non_bijective_column(&self) -> Option<usize> {
        (0..self.n).find(|&y| !is_bijection(self.n, (0..self.n).map(|x| self.get(x, y))))
    }

    pub fn row_bijective(&self) -> bool {
        self.non_bijective_row().is_none()
    }

    pub fn column_bijective(&self) -> bool {
        self.non_bijective_column().is_none()
    }

    /// `u[x][t[x][y]] = y`: turns `*` into `·` and back.
    pub fn row_inverse(&self) -> Result<OpTable> {
        if let Some(x) = self.non_bijective_row() {
            return Err(Error::NotRowBijective(x));
        }
        let n = self.n;
        let mut data = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                data[x * n + self.get(x, y)] = y;
            }
        }
        Ok(OpTable { n, data })
    }

    /// `u[t[x][y]][y] = x`: the table of `◁⁻¹`.
    pub fn column_inverse(&self) -> Result<OpTable> {
        if let Some(y) = self.non_bijective_column() {
            return Err(Error::NotColumnBijective(y));
        }
        let n = self.n;
        let mut data = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                data[self.get(x, y) * n + y] = x;
            }
        }
        Ok(OpTable { n, data })
    }

    /// Relabels the table along `p`: the result satisfies `u[p x][p y] = p(t[x][y])`.
    pub fn relabel(&self, p: &Permutation) -> OpTable {
        let n = self.n;
        let mut data = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                data[p.apply(x) * n + p.apply(y)] = p.apply(self.get(x, y));
            }
        }
        OpTable { n, data }
    }
}

fn is_bijection(n: usize, values: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    true
}

/// A map `X² → X²` stored as its two coordinate tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap {
    n: usize,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl PairMap {
    pub fn new(n: usize, first: Vec<usize>, second: Vec<usize>) -> Result<Self> {
        for t in [&first, &second] {
            if t.len() != n * n {
                return Err(Error::SizeMismatch { expected: n * n, found: t.len() });
            }
        }
        check_values(n, &first)?;
        check_values(n, &second)?;
        Ok(PairMap { n, first, second })
    }

    /// Panics if the closure leaves `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let (first, second): (Vec<usize>, Vec<usize>) = (0..n * n).map(|i| f(i / n, i % n)).unzip();
        assert!(
            first.iter().chain(&second).all(|&v| v < n),
            "PairMap::from_fn produced an out-of-range entry"
        );
        PairMap { n, first, second }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x, y))
    }

    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let i = x * self.n + y;
        (self.first[i], self.second[i])
    }

    pub fn first_table(&self) -> OpTable {
        OpTable { n: self.n, data: self.first.clone() }
    }

    pub fn second_table(&self) -> OpTable {
        OpTable { n: self.n, data: self.second.clone() }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n * self.n).all(|i| self.first[i] == i / self.n && self.second[i] == i % self.n)
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.n;
        is_bijection(n * n, self.first.iter().zip(&self.second).map(|(&a, &b)| a * n + b))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PairMap) -> PairMap {
        assert_eq!(self.n, other.n, "composing pair maps of different size");
        Self::from_fn(self.n, |x, y| {
            let (a, b) = other.apply(x, y);
            self.apply(a, b)
        })
    }

    pub fn inverse(&self) -> Result<PairMap> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let n = self.n;
        let mut first = vec![0; n * n];
        let mut second = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.apply(x, y);
                first[a * n + b] = x;
                second[a * n + b] = y;
            }
        }
        Ok(PairMap { n, first, second })
    }

    /// `(p × q) ∘ self`.
    pub fn post_apply(&self, p: &Permutation, q: &Permutation) -> PairMap {
        Self::from_fn(self.n, |x, y| {
            let (a, b) = self.apply(x, y);
            (p.apply(a), q.apply(b))
        })
    }

    /// `self ∘ (p × q)`.
    pub fn pre_apply(&self, p: &Permutation, q: &Permutation) -> PairMap {
        Self::from_fn(self.n, |x, y| self.apply(p.apply(x), q.apply(y)))
    }
}
