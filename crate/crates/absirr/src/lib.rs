//! Exact decision procedures for absolute irreducibility of multivariate
//! polynomials over finite fields, based on degree gaps between graded forms
//! and numerical-semigroup membership, plus a brute-force oracle for
//! desk-scale ground truth.

pub mod audit;
pub mod cli;
pub mod criteria;
pub mod gcd;
pub mod gf;
pub mod mpoly;
pub mod oracle;
pub mod parser;
pub mod semigroup;

pub use parser::ParseError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode the library reports; CLI exit codes map onto these.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no embedding of GF({p}^{from_degree}) into GF({p}^{to_degree})")]
    EmbeddingIncompatible {
        p: u64,
        from_degree: usize,
        to_degree: usize,
    },
    #[error("variable index {index} out of range for arity {arity}")]
    VariableIndex { index: usize, arity: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("not a p-th power")]
    NotAPthPower,
    #[error("empty polynomial list")]
    EmptyList,
    #[error("out of scope: {what} needs {needed} candidates, budget is {budget}")]
    ScopeExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("{0}")]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for errors that mean "declined, too large", never "wrong input".
    pub fn is_scope(&self) -> bool {
        matches!(self, Error::ScopeExceeded { .. })
    }
}
