use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    ZeroDegree,
    /// Field order above the table-driven arithmetic limit.
    FieldTooLarge(u64),
    NotPrimePower(u64),
    FieldMismatch,
    DivisionByZero,
    /// Encoding outside `[0, q)`.
    InvalidEncoding {
        value: u64,
        order: u32,
    },
    NotCoprime {
        a: u64,
        b: u64,
    },
    DegreeTooSmall {
        degree: usize,
        min: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    NotDivisible {
        n: usize,
        by: usize,
    },
    NotQuasiCyclic(usize),
    /// Exhaustive enumeration would visit more codewords than allowed.
    BudgetExceeded {
        needed: u128,
        budget: u128,
    },
    EmptyCode,
    NoSubfieldEmbedding,
    /// A caller-side precondition of a construction or pipeline failed.
    Precondition(String),
    /// A structural theorem check failed on an input that satisfies its
    /// hypotheses. Always an implementation defect.
    TheoremViolation(String),
}

impl Error {
    /// True for errors that indicate a defect rather than bad input.
    pub fn is_defect(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroDegree => f.write_str("extension degree must be at least 1"),
            Error::FieldTooLarge(q) => write!(f, "field order {q} exceeds the supported maximum"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::FieldMismatch => f.write_str("operands live in different fields"),
            Error::DivisionByZero => f.write_str("inversion of zero"),
            Error::InvalidEncoding { value, order } => {
                write!(f, "encoding {value} out of range for a field of order {order}")
            }
            Error::NotCoprime { a, b } => write!(f, "gcd({a}, {b}) != 1"),
            Error::DegreeTooSmall { degree, min } => {
                write!(f, "degree {degree} is below the minimum {min}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Error::NotDivisible { n, by } => write!(f, "{by} does not divide {n}"),
            Error::NotQuasiCyclic(l) => write!(f, "code is not {l}-quasi-cyclic"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration of {needed} codewords exceeds the budget of {budget}")
            }
            Error::EmptyCode => f.write_str("code has dimension 0"),
            Error::NoSubfieldEmbedding => f.write_str("no subfield embedding into the target field"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::TheoremViolation(msg) => write!(f, "theorem check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
