//! Error types shared across the crate.

use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime number")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings ({0} vs {1})")]
    RingMismatch(String, String),
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("q = {q} exceeds the configured cap {cap}")]
    QCapExceeded { q: u128, cap: u64 },
    #[error("{q} is not a power of p = {p}")]
    NotPowerOfP { q: u64, p: u64 },
    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("quotient is not zero-dimensional: variable {free_variable} has no pure power among the leading terms")]
    NotZeroDimensional { free_variable: String },
    #[error("not a system of parameters: {0}")]
    NotSystemOfParameters(String),
    #[error("budget exceeded during {phase}: {detail}")]
    BudgetExceeded { phase: String, detail: String },
    #[error("precondition failed for {element}: {check}")]
    PreconditionFailed { element: String, check: String },
    #[error("level {level} exceeds the configured cap {cap}")]
    LevelCapExceeded { level: u64, cap: u64 },
    #[error("range error: {0}")]
    Range(String),
    #[error("counterexample check failed at step: {step}")]
    CounterexampleFailed { step: String },
    #[error("{0}")]
    Parse(Diagnostic),
    #[error("unbound name: {0}")]
    UnboundName(String),
    #[error("type error: {0}")]
    ValueType(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 1,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

/// A located parse diagnostic. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}
