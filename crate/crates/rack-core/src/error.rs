use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RackError {
    #[error("axiom (i) fails: column {column} is not a permutation")]
    AxiomIViolation { column: usize },
    #[error("rack identity fails at (a,b,c) = ({a},{b},{c})")]
    AxiomIIViolation { a: usize, b: usize, c: usize },
    #[error("table entry {value} at ({row},{col}) out of range for size {size}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("table is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("empty table")]
    EmptyTable,
    #[error("polynomial is not monic (leading coefficient {lead} mod {modulus})")]
    NonMonic { lead: u64, modulus: u64 },
    #[error("constant term {constant} is not a unit mod {modulus}")]
    NonUnitConstantTerm { constant: u64, modulus: u64 },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("unknown rack spec `{0}`")]
    UnknownSpec(String),
    #[error("invalid group table: {0}")]
    GroupTableInvalid(String),
    #[error("invalid rack table file: {0}")]
    TableFileInvalid(String),
    #[error("cannot parse polynomial `{0}`")]
    BadPolynomial(String),
    #[error("k = {k} is not coprime to n = {n}")]
    NotCoprime { n: u64, k: u64 },
    #[error("n = {0} is not divisible by 4")]
    NotDivisibleBy4(u64),
    #[error("map is not a rack homomorphism: f({a}^{b}) != f({a})^f({b})")]
    NotAHomomorphism { a: usize, b: usize },
}
