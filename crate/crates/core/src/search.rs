//! Exhaustive enumeration at small cardinality.
//!
//! Every kind can be enumerated two ways:
//!
//! * [`Method::BruteForce`] filters every candidate table or every bijection
//!   of the `n²` pairs;
//! * [`Method::Structured`] backtracks over partial tables (shelves, racks,
//!   quandles) or builds solutions from a shelf `◁` and dot rows drawn from
//!   its automorphisms, keeping those that satisfy the remaining condition
//!   `(y·(x◁y))·(y·z) = (x·y)·(x·z)`.
//!
//! The two are independent and serve as each other's oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::biracks::{
    braid_check, circle_op, cond1_witness, derived_rack, inverse_solution, is_biquandle, is_bijective,
    is_involutive, is_left_nondegenerate, is_right_nondegenerate, ops_from_solution, solution_from_ops, square_map,
    theorem1_conditions, OpsTriple, Solution,
};
use crate::coloring::{kink_color, kink_map, mirror_kink_color};
use crate::enveloping::{envelope_proposition_check, enveloping_presentation, raw_presentation};
use crate::error::{Error, Result};
use crate::racks::{is_quandle, is_rack, is_shelf, phi_map, RackTable};
use crate::tables::{OpTable, PairMap, Permutation};
use crate::twisting::{phi_linear_check, twist_left, untwist_to_biquandle};

/// Environment variable overriding [`Bounds::pair_maps`].
pub const BOUND_VAR: &str = "BIRACK_EXHAUSTIVE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Brute force over all tables or all bijections of `X²`.
    pub pair_maps: usize,
    /// Backtracking and the structured solution generator.
    pub structured: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { pair_maps: 3, structured: 4 }
    }
}

impl Bounds {
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        if let Some(v) = std::env::var(BOUND_VAR).ok().and_then(|v| v.trim().parse().ok()) {
            b.pair_maps = v;
            b.structured = b.structured.max(v);
        }
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Shelf,
    Rack,
    Quandle,
    /// Left non-degenerate braid solutions, bijective or not.
    Solution,
    /// Bijective braid solutions, degenerate or not.
    Bijective,
    Birack,
    Biquandle,
    /// Involutive biracks.
    Involutive,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Shelf,
        Kind::Rack,
        Kind::Quandle,
        Kind::Solution,
        Kind::Bijective,
        Kind::Birack,
        Kind::Biquandle,
        Kind::Involutive,
    ];

    pub fn is_table(self) -> bool {
        matches!(self, Kind::Shelf | Kind::Rack | Kind::Quandle)
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Shelf => "shelf",
            Kind::Rack => "rack",
            Kind::Quandle => "quandle",
            Kind::Solution => "solution",
            Kind::Bijective => "bijective",
            Kind::Birack => "birack",
            Kind::Biquandle => "biquandle",
            Kind::Involutive => "involutive",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse { line: 1, reason: format!("unknown kind {s:?}") })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub kind: Kind,
    pub up_to_iso: bool,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(n: usize, kind: Kind) -> Self {
        SearchSpec { n, kind, up_to_iso: false, limit: None }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

fn finish<T: Ord + Clone>(mut items: Vec<T>, spec: &SearchSpec, canonical: impl Fn(&T) -> T) -> Vec<T> {
    if spec.up_to_iso {
        items = items.iter().map(canonical).collect::<BTreeSet<_>>().into_iter().collect();
    } else {
        items.sort();
        items.dedup();
    }
    if let Some(limit) = spec.limit {
        items.truncate(limit);
    }
    items
}

/// Lexicographically least relabelling `u[p x][p y] = p(t[x][y])`.
pub fn canonical_table(t: &OpTable) -> OpTable {
    Permutation::all(t.n()).map(|p| t.relabel(&p)).min().expect("S_n is non-empty")
}

/// Lexicographically least `(p × p) σ (p⁻¹ × p⁻¹)`.
pub fn canonical_solution(s: &Solution) -> Solution {
    Permutation::all(s.n()).map(|p| relabel_solution(s, &p)).min().expect("S_n is non-empty")
}

pub fn relabel_solution(s: &Solution, p: &Permutation) -> Solution {
    Solution::new(s.g().relabel(p), s.f().relabel(p)).expect("same carrier")
}

fn table_matches(kind: Kind, t: &OpTable) -> bool {
    match kind {
        Kind::Shelf => is_shelf(t),
        Kind::Rack => is_rack(t),
        Kind::Quandle => is_quandle(t),
        _ => false,
    }
}

/// Shelves, racks or quandles on `0..n`.
pub fn enumerate_racks(spec: &SearchSpec, method: Method) -> Result<Vec<OpTable>> {
    if !spec.kind.is_table() {
        return Err(Error::Validation { invariant: format!("{} is not a table kind", spec.kind), witness: vec![] });
    }
    let bounds = Bounds::from_env();
    let found = match method {
        Method::BruteForce => {
            check_bound(spec.n, bounds.pair_maps)?;
            all_tables(spec.n).filter(|t| table_matches(spec.kind, t)).collect()
        }
        Method::Structured => {
            check_bound(spec.n, bounds.structured)?;
            backtrack_tables(spec.n, spec.kind)
        }
    };
    Ok(finish(found, spec, canonical_table))
}

/// Every `n × n` table in lexicographic order.
pub fn all_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let mut next = Some(vec![0usize; n * n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ, n) {
            next = Some(succ);
        }
        Some(OpTable::new(n, current).expect("entries in range"))
    })
}

/// Every row-bijective `n × n` table in lexicographic order.
pub fn row_bijective_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let total = perms.len();
    let mut next = Some(vec![0usize; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ, total) {
            next = Some(succ);
        }
        let data = current.iter().flat_map(|&i| perms[i].image().to_vec()).collect();
        Some(OpTable::new(n, data).expect("entries in range"))
    })
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

const UNSET: usize = usize::MAX;

fn backtrack_tables(n: usize, kind: Kind) -> Vec<OpTable> {
    let mut cells = vec![UNSET; n * n];
    let mut out = Vec::new();
    fill(n, kind, 0, &mut cells, &mut out);
    out
}

fn fill(n: usize, kind: Kind, pos: usize, cells: &mut [usize], out: &mut Vec<OpTable>) {
    if pos == n * n {
        out.push(OpTable::new(n, cells.to_vec()).expect("entries in range"));
        return;
    }
    let (x, y) = (pos / n, pos % n);
    for v in 0..n {
        if kind == Kind::Quandle && x == y && v != x {
            continue;
        }
        if kind != Kind::Shelf && (0..x).any(|r| cells[r * n + y] == v) {
            continue;
        }
        cells[pos] = v;
        if distributive_so_far(n, cells) {
            fill(n, kind, pos + 1, cells, out);
        }
    }
    cells[pos] = UNSET;
}

/// No fully determined instance of `(a◁b)◁c = (a◁c)◁(b◁c)` fails.
fn distributive_so_far(n: usize, t: &[usize]) -> bool {
    let at = |a: usize, b: usize| if a == UNSET || b == UNSET { UNSET } else { t[a * n + b] };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = at(at(a, b), c);
                let rhs = at(at(a, c), at(b, c));
                if lhs != UNSET && rhs != UNSET && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn solution_matches(kind: Kind, s: &Solution) -> bool {
    let birack = || is_left_nondegenerate(s) && is_right_nondegenerate(s) && is_bijective(s);
    braid_check(s)
        && match kind {
            Kind::Solution => is_left_nondegenerate(s),
            Kind::Bijective => is_bijective(s),
            Kind::Birack => birack(),
            Kind::Biquandle => birack() && matches!(is_biquandle(s), Ok(Some(_))),
            Kind::Involutive => birack() && is_involutive(s),
            _ => false,
        }
}

/// Solutions of the braid equation of the requested kind.
pub fn enumerate_solutions(spec: &SearchSpec, method: Method) -> Result<Vec<Solution>> {
    if spec.kind.is_table() {
        return Err(Error::Validation { invariant: format!("{} is not a solution kind", spec.kind), witness: vec![] });
    }
    let bounds = Bounds::from_env();
    let n = spec.n;
    let found: Vec<Solution> = match (method, spec.kind) {
        (Method::BruteForce, Kind::Solution) => {
            check_bound(n, bounds.pair_maps)?;
            left_nondegenerate_maps(n).filter(braid_check).collect()
        }
        (Method::BruteForce, kind) => {
            check_bound(n, bounds.pair_maps)?;
            bijective_maps(n).filter(|s| solution_matches(kind, s)).collect()
        }
        (Method::Structured, Kind::Bijective) => {
            return Err(Error::Validation {
                invariant: "left-degenerate solutions have no structured enumeration".into(),
                witness: vec![],
            })
        }
        (Method::Structured, kind) => {
            check_bound(n, bounds.structured)?;
            let shelves = if kind == Kind::Solution { Kind::Shelf } else { Kind::Rack };
            let mut out = Vec::new();
            for tri in backtrack_tables(n, shelves) {
                for s in generate_from_shelf(&tri) {
                    if solution_matches(kind, &s) {
                        out.push(s);
                    }
                }
            }
            out
        }
    };
    Ok(finish(found, spec, canonical_solution))
}

/// Every map `σ(x, y) = (x * y, …)` with `*` row bijective, as `(*, ◁)` pairs.
pub fn left_nondegenerate_maps(n: usize) -> impl Iterator<Item = Solution> {
    row_bijective_tables(n).flat_map(move |star| {
        all_tables(n).map(move |tri| solution_from_ops(&OpsTriple::new(star.clone(), tri).expect("row bijective")))
    })
}

/// Every bijection of `X²`, read as a map `σ`.
pub fn bijective_maps(n: usize) -> impl Iterator<Item = Solution> {
    Permutation::all(n * n).map(move |p| {
        let pairs = PairMap::new(n, p.image().iter().map(|&i| i / n).collect(), p.image().iter().map(|&i| i % n).collect())
            .expect("entries in range");
        Solution::from_pair_map(&pairs)
    })
}

/// Solutions with derived operation `tri`: every dot row is an automorphism
/// of `tri`, and the first condition is checked on the assembled tables.
fn generate_from_shelf(tri: &OpTable) -> Vec<Solution> {
    let n = tri.n();
    let autos: Vec<Permutation> = Permutation::all(n).filter(|p| crate::racks::is_operation_automorphism(tri, p)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let data: Vec<usize> = choice.iter().flat_map(|&i| autos[i].image().to_vec()).collect();
        let dot = OpTable::new(n, data).expect("entries in range");
        if cond1_witness(&dot, tri).is_none() {
            let ops = OpsTriple::from_dot(dot, tri.clone()).expect("rows are permutations");
            out.push(solution_from_ops(&ops));
        }
        if !advance(&mut choice, autos.len()) {
            break;
        }
    }
    out
}

/// A failed assertion of the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub solution: Solution,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepReport {
    pub n: usize,
    /// Left non-degenerate maps examined for the three-condition criterion.
    pub maps: usize,
    /// Left non-degenerate braid solutions.
    pub solutions: usize,
    /// Bijective braid solutions found among all bijections of `X²`.
    pub bijective: usize,
    pub biracks: usize,
    pub biquandles: usize,
    pub involutive: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "maps examined:          {}", self.maps)?;
        writeln!(f, "left non-degenerate:    {}", self.solutions)?;
        writeln!(f, "bijective (raw):        {}", self.bijective)?;
        writeln!(f, "biracks:                {}", self.biracks)?;
        writeln!(f, "biquandles:             {}", self.biquandles)?;
        writeln!(f, "involutive:             {}", self.involutive)?;
        for v in &self.violations {
            writeln!(f, "VIOLATION {}: {} ({:?})", v.check, v.detail, v.solution)?;
        }
        Ok(())
    }
}

/// Checks, over every solution on `n` points, the characterisation of braid
/// solutions by three conditions and the structural statements built on it.
pub fn sweep_theorems(n: usize) -> Result<SweepReport> {
    check_bound(n, Bounds::from_env().pair_maps)?;
    let mut report = SweepReport { n, ..Default::default() };
    let mut violations = Vec::new();
    let mut flag = |check: &'static str, s: &Solution, detail: String| {
        violations.push(Violation { check, solution: s.clone(), detail });
    };

    let mut solutions = Vec::new();
    for s in left_nondegenerate_maps(n) {
        report.maps += 1;
        let r = theorem1_conditions(&ops_from_solution(&s)?);
        if r.braid != braid_check(&s) || !r.is_consistent() {
            flag("three conditions ⇔ braid", &s, format!("{r:?}"));
        }
        if r.braid {
            solutions.push(s);
        }
    }
    report.solutions = solutions.len();

    let bijective: Vec<Solution> = bijective_maps(n).filter(braid_check).collect();
    report.bijective = bijective.len();
    let raw: BTreeSet<&Solution> = bijective.iter().filter(|s| is_left_nondegenerate(s)).collect();
    let generated: BTreeSet<&Solution> = solutions.iter().filter(|s| is_bijective(s)).collect();
    if raw != generated {
        let s = raw.symmetric_difference(&generated).next().copied().cloned().expect("sets differ");
        flag("pair-map oracle agrees", &s, "raw and generated solution sets differ".into());
    }

    for s in &solutions {
        check_solution(s, &mut report, &mut flag);
    }
    report.violations = violations;
    Ok(report)
}

fn check_solution(s: &Solution, report: &mut SweepReport, flag: &mut impl FnMut(&'static str, &Solution, String)) {
    let derived = match derived_rack(s) {
        Ok(t) => t,
        Err(e) => return flag("derived operation", s, e.to_string()),
    };
    match (enveloping_presentation(s), raw_presentation(s)) {
        (Ok(a), Ok(b)) if a == b => {}
        _ => flag("dot-form relations = raw relations", s, String::new()),
    }
    let bijective = is_bijective(s);
    if bijective != is_rack(&derived) {
        flag("bijective ⇔ derived rack", s, format!("bijective={bijective}"));
    }
    if !bijective {
        return;
    }
    let right = is_right_nondegenerate(s);
    let square_bijective = square_map(s).is_ok_and(|sq| Permutation::new(sq).is_ok());
    if right != square_bijective {
        flag("right non-degenerate ⇔ square bijective", s, format!("right={right}"));
    }
    match inverse_solution(s) {
        Ok(inv) if s.pair_map().compose(&inv.pair_map()).is_identity() => {}
        other => flag("closed-form inverse", s, format!("{other:?}")),
    }
    if !right {
        return;
    }
    report.biracks += 1;
    let rack = RackTable::new(derived.clone()).expect("checked above");
    let phi = phi_map(&rack);
    if let Err(detail) = circle_identity(s, &phi) {
        flag("x² ∘ φ(x²) = x", s, detail);
    }
    if !phi_linear_check(s).unwrap_or(false) {
        flag("φ and i linear", s, String::new());
    }
    let biquandle = matches!(is_biquandle(s), Ok(Some(_)));
    if biquandle != is_quandle(&derived) {
        flag("biquandle ⇔ derived quandle", s, format!("biquandle={biquandle}"));
    }
    report.biquandles += biquandle as usize;
    report.involutive += is_involutive(s) as usize;
    match untwist_to_biquandle(s) {
        Ok(u) if twist_left(&u.biquandle, &phi).is_ok_and(|c| c.twisted == *s) => {}
        other => flag("σ = ᵠ(ⁱσ)", s, format!("{:?}", other.err())),
    }
    if kink_map(s).ok() != Some(phi.clone()) {
        flag("kink = derived φ", s, String::new());
    }
    for x in 0..s.n() {
        if kink_color(s, x).is_err() || mirror_kink_color(s, x).is_err() {
            flag("kink colorings", s, format!("x={x}"));
        }
    }
    if !envelope_proposition_check(s).unwrap_or(false) {
        flag("envelope abelianization", s, String::new());
    }
}

fn circle_identity(s: &Solution, phi: &Permutation) -> std::result::Result<(), String> {
    let circle = circle_op(s).map_err(|e| e.to_string())?;
    let sq = square_map(s).map_err(|e| e.to_string())?;
    match (0..s.n()).find(|&x| circle.get(sq[x], phi.apply(sq[x])) != x) {
        Some(x) => Err(format!("x={x}")),
        None => Ok(()),
    }
}
