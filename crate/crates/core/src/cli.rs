//! Report builders behind the `birack` command-line tool.
//!
//! Each returns a plain-text body and one `RESULT:` summary line. Exit codes:
//! 0 when the checked property holds, 1 when it fails, 2 on errors.

use std::fmt::Write as _;

use crate::biracks::{classify, derived_rack, inverse_solution, is_birack, ops_from_solution, Solution};
use crate::coloring::{BraidWord, Colorer};
use crate::enveloping::{abelianization, envelope_proposition_check, enveloping_presentation};
use crate::error::{Error, Result};
use crate::io::TableFile;
use crate::racks::{is_quandle, is_rack, RackTable};
use crate::search::{enumerate_racks, enumerate_solutions, sweep_theorems, Kind, Method, SearchSpec};
use crate::skew_braces::{brace_derived_rack, brace_dot, brace_solution};
use crate::tables::{OpTable, Permutation};
use crate::twisting::{twist_first, twist_left, twist_right, untwist_to_biquandle, TwistCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds = 0,
    Fails = 1,
    Error = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    /// The summary line without its `RESULT: ` prefix.
    pub result: String,
    pub status: Status,
}

impl Report {
    fn new(body: String, result: String, holds: bool) -> Self {
        Report { body, result, status: if holds { Status::Holds } else { Status::Fails } }
    }

    pub fn error(e: &Error) -> Self {
        Report { body: format!("error: {e}\n"), result: "error".into(), status: Status::Error }
    }

    pub fn exit_code(&self) -> i32 {
        self.status as i32
    }

    /// Body followed by the `RESULT:` line.
    pub fn render(&self) -> String {
        format!("{}RESULT: {}\n", self.body, self.result)
    }
}

fn table_block(name: &str, t: &OpTable) -> String {
    let mut out = format!("{name}:\n");
    for r in t.rows() {
        let cells: Vec<String> = r.iter().map(usize::to_string).collect();
        writeln!(out, "  {}", cells.join(" ")).expect("writing to a string");
    }
    out
}

fn perm_line(p: &Permutation) -> String {
    let cells: Vec<String> = p.image().iter().map(usize::to_string).collect();
    format!("[{}]", cells.join(","))
}

pub fn verify(file: &TableFile) -> Result<Report> {
    let s = file.as_solution()?;
    let c = classify(&s);
    let mut body = format!("n = {}\n", s.n());
    if let (Some(rack), Some(quandle)) = (c.derived_rack, c.derived_quandle) {
        writeln!(body, "derived operation: rack={rack} quandle={quandle}").expect("writing to a string");
    }
    let result = format!(
        "braid={} left={} right={} bijective={} involutive={} biquandle={}",
        c.braid, c.left, c.right, c.bijective, c.involutive, c.biquandle
    );
    Ok(Report::new(body, result, c.braid))
}

pub fn derive(file: &TableFile) -> Result<Report> {
    let s = file.as_solution()?;
    let ops = ops_from_solution(&s)?;
    let tri = derived_rack(&s)?;
    let mut body = String::new();
    body.push_str(&table_block("star", ops.star()));
    body.push_str(&table_block("dot", ops.dot()));
    body.push_str(&table_block("tri", ops.tri()));
    let (rack, quandle) = (is_rack(&tri), is_quandle(&tri));
    if rack {
        body.push_str(&TableFile::Rack(RackTable::new(tri).expect("checked")).emit());
    }
    Ok(Report::new(body, format!("rack={rack} quandle={quandle}"), true))
}

pub fn invert(file: &TableFile) -> Result<Report> {
    let s = file.as_solution()?;
    let inv = inverse_solution(&s)?;
    let ok = s.pair_map().compose(&inv.pair_map()).is_identity() && inv.pair_map().compose(&s.pair_map()).is_identity();
    Ok(Report::new(TableFile::Solution(inv).emit(), format!("inverse_verified={ok}"), ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistMode {
    First,
    Left,
    Right,
}

pub fn twist(file: &TableFile, map: &Permutation, mode: TwistMode) -> Result<Report> {
    let s = file.as_solution()?;
    let cert: Result<TwistCertificate> = match mode {
        TwistMode::First => twist_first(&s, map),
        TwistMode::Left => twist_left(&s, map),
        TwistMode::Right => twist_right(&s, map),
    };
    match cert {
        Ok(c) => {
            let c_class = classify(&c.twisted);
            Ok(Report::new(
                TableFile::Solution(c.twisted).emit(),
                format!("twisted=true braid={} biquandle={}", c_class.braid, c_class.biquandle),
                true,
            ))
        }
        Err(e @ (Error::NotAutomorphism | Error::NotLinearAutomorphism)) => {
            Ok(Report::new(format!("{e}\n"), "twisted=false".into(), false))
        }
        Err(e) => Err(e),
    }
}

pub fn untwist(file: &TableFile) -> Result<Report> {
    let s = file.as_solution()?;
    if !is_birack(&s) {
        return Ok(Report::new(String::new(), "birack=false".into(), false));
    }
    let u = untwist_to_biquandle(&s)?;
    let mut body = format!("phi = {}\n", perm_line(&u.phi));
    body.push_str(&TableFile::Solution(u.biquandle).emit());
    Ok(Report::new(body, format!("birack=true phi={} retwist=true", perm_line(&u.phi)), true))
}

pub fn brace(file: &TableFile) -> Result<Report> {
    let TableFile::Brace(tables) = file else {
        return Err(Error::Validation { invariant: format!("expected a brace file, found {}", file.kind()), witness: vec![] });
    };
    let b = match tables.brace() {
        Ok(b) => b,
        Err(e @ Error::NotASkewBrace { .. }) => return Ok(Report::new(format!("{e}\n"), "brace=false".into(), false)),
        Err(e) => return Err(e),
    };
    let r = brace_solution(&b)?;
    let dot = brace_dot(&b)?;
    let rack = brace_derived_rack(&b)?;
    let c = classify(&r);
    let mut body = TableFile::Solution(r).emit();
    body.push_str(&table_block("dot", &dot));
    body.push_str(&table_block("tri", rack.table()));
    let result = format!(
        "brace=true braid={} involutive={} derived_trivial={} additive_abelian={}",
        c.braid,
        c.involutive,
        rack.is_trivial(),
        b.add_group().is_abelian()
    );
    Ok(Report::new(body, result, true))
}

pub fn envelope(file: &TableFile, with_abelianization: bool) -> Result<Report> {
    let s = file.as_solution()?;
    let p = enveloping_presentation(&s)?;
    let mut result = format!("generators={} relations={}", p.generators(), p.relations().len());
    let mut holds = true;
    if with_abelianization {
        write!(result, " {}", abelianization(&p)).expect("writing to a string");
        if is_birack(&s) {
            holds = envelope_proposition_check(&s)?;
            write!(result, " quotient_agrees={holds}").expect("writing to a string");
        }
    }
    Ok(Report::new(p.to_text(), result, holds))
}

pub fn color(file: &TableFile, strands: usize, word: &str, list: bool) -> Result<Report> {
    let s: Solution = file.as_solution()?;
    let w = BraidWord::parse(strands, word)?;
    let r = Colorer::new(&s)?.closure_colorings(&w, list)?;
    let mut body = String::new();
    for c in r.fixed_colorings.iter().flatten() {
        let cells: Vec<String> = c.iter().map(usize::to_string).collect();
        writeln!(body, "{}", cells.join(" ")).expect("writing to a string");
    }
    Ok(Report::new(body, format!("colorings={} writhe={}", r.count, r.writhe), true))
}

pub fn enumerate(spec: &SearchSpec, method: Method, list: bool) -> Result<Report> {
    let mut body = String::new();
    let count = if spec.kind.is_table() {
        let tables = enumerate_racks(spec, method)?;
        if list {
            for t in &tables {
                body.push_str(&table_block(spec.kind.name(), t));
            }
        }
        tables.len()
    } else {
        let sols = enumerate_solutions(spec, method)?;
        if list {
            for s in &sols {
                body.push_str(&table_block("G", s.g()));
                body.push_str(&table_block("F", s.f()));
            }
        }
        sols.len()
    };
    Ok(Report::new(body, format!("count={count}"), true))
}

pub fn sweep(n: usize) -> Result<Report> {
    let r = sweep_theorems(n)?;
    let result = format!("solutions={} biracks={} violations={}", r.solutions, r.biracks, r.violations.len());
    Ok(Report::new(r.to_string(), result, r.passed()))
}

/// The kind names accepted by `enumerate --kind`.
pub fn kind_names() -> Vec<&'static str> {
    Kind::ALL.iter().map(|k| k.name()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::io::BraceTables;
    use crate::skew_braces::SkewBrace;

    #[test]
    fn golden_lines() {
        let flip = TableFile::Solution(Solution::flip(2));
        assert_eq!(
            verify(&flip).unwrap().result,
            "braid=true left=true right=true bijective=true involutive=true biquandle=true"
        );
        let d3 = TableFile::Rack(RackTable::dihedral(3));
        assert_eq!(color(&d3, 2, "1 1 1", false).unwrap().result, "colorings=9 writhe=3");
        let spec = SearchSpec::new(3, Kind::Quandle).up_to_iso();
        assert_eq!(enumerate(&spec, Method::Structured, false).unwrap().result, "count=3");
    }

    #[test]
    fn property_failures_exit_one() {
        let bad = TableFile::Solution(Solution::from_fn(2, |x, y| ((x + y) % 2, x)));
        assert_eq!(verify(&bad).unwrap().exit_code(), 1);
        let d3 = TableFile::Rack(RackTable::dihedral(3));
        let double = Permutation::from_fn(3, |x| (2 * x) % 3).unwrap();
        assert_eq!(twist(&d3, &double, TwistMode::Left).unwrap().exit_code(), 1);
        assert_eq!(twist(&d3, &double, TwistMode::First).unwrap().exit_code(), 0);
        let z4 = Group::cyclic(4);
        let not_brace = TableFile::Brace(BraceTables {
            add: z4.table().clone(),
            circ: OpTable::from_fn(4, |a, b| (a + b + a * b) % 4),
            zero: 0,
        });
        assert_eq!(brace(&not_brace).unwrap().result, "brace=false");
    }

    #[test]
    fn brace_and_envelope_reports() {
        let z4 = TableFile::Brace(BraceTables::from(&SkewBrace::z4()));
        assert_eq!(
            brace(&z4).unwrap().result,
            "brace=true braid=true involutive=true derived_trivial=true additive_abelian=true"
        );
        let flip = TableFile::Solution(Solution::flip(2));
        assert_eq!(
            envelope(&flip, true).unwrap().result,
            "generators=2 relations=2 rank=2 torsion=[] quotient_agrees=true"
        );
    }
}
