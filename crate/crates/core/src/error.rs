use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("entry {value} out of range 0..{n}")]
    OutOfRange { value: usize, n: usize },
    #[error("not a permutation: value {0} repeated")]
    NotAPermutation(usize),
    #[error("operation is not row bijective (row {0})")]
    NotRowBijective(usize),
    #[error("operation is not column bijective (column {0})")]
    NotColumnBijective(usize),
    #[error("pair map is not bijective")]
    NotBijective,
    #[error("table is not a rack")]
    NotARack,
    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: &'static str, witness: Vec<usize> },
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("map is not a linear automorphism")]
    NotLinearAutomorphism,
    #[error("skew-rack axiom `{axiom}` fails at {witness:?}")]
    SkewAxiomFailure { axiom: &'static str, witness: Vec<usize> },
    #[error("solution is not left non-degenerate")]
    NotLeftNondegenerate,
    #[error("solution is not right non-degenerate")]
    NotRightNondegenerate,
    #[error("derived table is not a rack, so the solution is not bijective")]
    DerivedNotRack,
    #[error("internal consistency failure: {0}")]
    FormulaMismatch(String),
    #[error("square map x -> x.x is not bijective")]
    SquareNotBijective,
    #[error("solution is not a birack")]
    NotABirack,
    #[error("not a skew brace: {axiom} fails at {witness:?}")]
    NotASkewBrace { axiom: &'static str, witness: Vec<usize> },
    #[error("bad braid letter {letter} for {strands} strands")]
    BadLetter { letter: i32, strands: usize },
    #[error("n = {n} exceeds the exhaustive bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("validation failed: {invariant} (witness {witness:?})")]
    Validation { invariant: String, witness: Vec<usize> },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
