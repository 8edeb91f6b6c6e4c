//! The table file format.
//!
//! A JSON object with a `"kind"` tag and `"n"`, plus tables as arrays of rows:
//!
//! ```text
//! {"kind": "rack",        "n": 3, "tri": [[..], ..]}
//! {"kind": "solution",    "n": 2, "G": [[..], ..], "F": [[..], ..]}
//! {"kind": "ops",         "n": 2, "star": [..], "dot": [..], "tri": [..]}   ("dot" optional)
//! {"kind": "brace",       "n": 4, "add": [..], "circ": [..], "zero": 0}
//! {"kind": "permutation", "n": 3, "map": [1, 2, 0]}
//! ```
//!
//! `G[x][y] = g_x(y)` and `F[x][y] = f_y(x)`.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::biracks::{solution_from_ops, OpsTriple, Solution};
use crate::error::{Error, Result};
use crate::racks::{rack_solution, RackTable};
use crate::skew_braces::{brace_solution, SkewBrace};
use crate::tables::{OpTable, Permutation};

/// Two tables and an identity, not yet checked to form a skew brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceTables {
    pub add: OpTable,
    pub circ: OpTable,
    pub zero: usize,
}

impl BraceTables {
    pub fn brace(&self) -> Result<SkewBrace> {
        SkewBrace::new(self.add.clone(), self.circ.clone(), self.zero)
    }
}

impl From<&SkewBrace> for BraceTables {
    fn from(b: &SkewBrace) -> Self {
        BraceTables { add: b.add_group().table().clone(), circ: b.circ_group().table().clone(), zero: b.zero() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableFile {
    Rack(RackTable),
    Solution(Solution),
    Ops(OpsTriple),
    Brace(BraceTables),
    Permutation(Permutation),
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Raw {
    Rack {
        n: usize,
        tri: Vec<Vec<usize>>,
    },
    Solution {
        n: usize,
        #[serde(rename = "G")]
        g: Vec<Vec<usize>>,
        #[serde(rename = "F")]
        f: Vec<Vec<usize>>,
    },
    Ops {
        n: usize,
        star: Vec<Vec<usize>>,
        dot: Option<Vec<Vec<usize>>>,
        tri: Vec<Vec<usize>>,
    },
    Brace {
        n: usize,
        add: Vec<Vec<usize>>,
        circ: Vec<Vec<usize>>,
        zero: usize,
    },
    Permutation {
        n: usize,
        map: Vec<usize>,
    },
}

fn invalid(invariant: impl Into<String>, witness: Vec<usize>) -> Error {
    Error::Validation { invariant: invariant.into(), witness }
}

fn table(name: &str, n: usize, rows: Vec<Vec<usize>>) -> Result<OpTable> {
    if n == 0 {
        return Err(invalid("n ≥ 1", vec![]));
    }
    if rows.len() != n {
        return Err(invalid(format!("{name} has {n} rows"), vec![rows.len()]));
    }
    if let Some(x) = rows.iter().position(|r| r.len() != n) {
        return Err(invalid(format!("{name} row {x} has {n} entries"), vec![x]));
    }
    for (x, row) in rows.iter().enumerate() {
        if let Some(y) = row.iter().position(|&v| v >= n) {
            return Err(invalid(format!("{name} entries lie in 0..{n}"), vec![x, y]));
        }
    }
    OpTable::from_rows(&rows)
}

fn permutation(n: usize, map: Vec<usize>) -> Result<Permutation> {
    if map.len() != n {
        return Err(invalid(format!("map has {n} entries"), vec![map.len()]));
    }
    if let Some(x) = map.iter().position(|&v| v >= n) {
        return Err(invalid(format!("map entries lie in 0..{n}"), vec![x]));
    }
    Permutation::new(map).map_err(|e| match e {
        Error::NotAPermutation(v) => invalid("map is a bijection", vec![v]),
        other => other,
    })
}

impl TableFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line().max(1), reason: e.to_string() })?;
        Ok(match raw {
            Raw::Rack { n, tri } => {
                let tri = table("tri", n, tri)?;
                let rack = RackTable::new(tri.clone()).map_err(|e| {
                    let witness = crate::racks::self_distributivity_witness(&tri)
                        .map(|w| w.to_vec())
                        .or(tri.non_bijective_column().map(|y| vec![y]))
                        .unwrap_or_default();
                    invalid(format!("tri is a rack ({e})"), witness)
                })?;
                TableFile::Rack(rack)
            }
            Raw::Solution { n, g, f } => TableFile::Solution(Solution::new(table("G", n, g)?, table("F", n, f)?)?),
            Raw::Ops { n, star, dot, tri } => {
                let star = table("star", n, star)?;
                let tri = table("tri", n, tri)?;
                if let Some(x) = star.non_bijective_row() {
                    return Err(invalid("star rows are bijections", vec![x]));
                }
                let ops = match dot {
                    Some(dot) => OpsTriple::with_dot(star, table("dot", n, dot)?, tri)?,
                    None => OpsTriple::new(star, tri)?,
                };
                TableFile::Ops(ops)
            }
            Raw::Brace { n, add, circ, zero } => {
                if zero >= n {
                    return Err(invalid(format!("zero lies in 0..{n}"), vec![zero]));
                }
                TableFile::Brace(BraceTables { add: table("add", n, add)?, circ: table("circ", n, circ)?, zero })
            }
            Raw::Permutation { n, map } => TableFile::Permutation(permutation(n, map)?),
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.emit())?;
        Ok(())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            TableFile::Rack(_) => "rack",
            TableFile::Solution(_) => "solution",
            TableFile::Ops(_) => "ops",
            TableFile::Brace(_) => "brace",
            TableFile::Permutation(_) => "permutation",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            TableFile::Rack(r) => r.n(),
            TableFile::Solution(s) => s.n(),
            TableFile::Ops(o) => o.n(),
            TableFile::Brace(b) => b.add.n(),
            TableFile::Permutation(p) => p.len(),
        }
    }

    /// One row per line.
    pub fn emit(&self) -> String {
        let mut out = format!("{{\n  \"kind\": \"{}\",\n  \"n\": {}", self.kind(), self.n());
        let mut field = |name: &str, t: &OpTable| {
            let rows: Vec<String> = t.rows().iter().map(|r| format!("    {}", row(r))).collect();
            write!(out, ",\n  \"{name}\": [\n{}\n  ]", rows.join(",\n")).expect("writing to a string");
        };
        match self {
            TableFile::Rack(r) => field("tri", r.table()),
            TableFile::Solution(s) => {
                field("G", s.g());
                field("F", s.f());
            }
            TableFile::Ops(o) => {
                field("star", o.star());
                field("dot", o.dot());
                field("tri", o.tri());
            }
            TableFile::Brace(b) => {
                field("add", &b.add);
                field("circ", &b.circ);
                write!(out, ",\n  \"zero\": {}", b.zero).expect("writing to a string");
            }
            TableFile::Permutation(p) => {
                write!(out, ",\n  \"map\": {}", row(p.image())).expect("writing to a string");
            }
        }
        out.push_str("\n}\n");
        out
    }

    /// The braid solution the file describes.
    pub fn as_solution(&self) -> Result<Solution> {
        match self {
            TableFile::Rack(r) => Ok(rack_solution(r)),
            TableFile::Solution(s) => Ok(s.clone()),
            TableFile::Ops(o) => Ok(solution_from_ops(o)),
            TableFile::Brace(b) => brace_solution(&b.brace()?),
            TableFile::Permutation(_) => Err(invalid("file describes a solution, not a permutation", vec![])),
        }
    }

    pub fn as_permutation(&self) -> Result<Permutation> {
        match self {
            TableFile::Permutation(p) => Ok(p.clone()),
            other => Err(invalid(format!("expected a permutation file, found {}", other.kind()), vec![])),
        }
    }
}

fn row(r: &[usize]) -> String {
    let cells: Vec<String> = r.iter().map(usize::to_string).collect();
    format!("[{}]", cells.join(", "))
}
