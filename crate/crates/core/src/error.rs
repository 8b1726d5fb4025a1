use num_rational::BigRational;
use thiserror::Error;

use crate::arith::Poly;

/// Every failure mode of the library.
///
/// Variants split into two families: input/usage problems (bad parameters,
/// degenerate arguments) and invariant violations, which mean an identity
/// that must hold exactly did not. The CLI maps them to exit codes 2 and 1.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("INVALID_SYSTEM: exponents {0} and {1} differ by an integer")]
    InvalidSystem(BigRational, BigRational),
    #[error("SINGULAR_SYSTEM: null space of the order conditions has dimension {0}, expected 1")]
    SingularSystem(usize),
    #[error("NON_DIVISIBLE: nonzero remainder {remainder}")]
    NonDivisible { remainder: Poly },
    #[error("NOT_APPLICABLE: {0}")]
    NotApplicable(String),
    #[error("IDENTITY_VIOLATION: {0}")]
    IdentityViolation(String),
    #[error("BAD_PARAMS: {0}")]
    BadParams(String),
    #[error("ROOT_OF_UNITY: x^n = 1, x is an n-th root of unity")]
    RootOfUnity,
    #[error("ALL_ZERO: every U_h vanishes at w = {w}, y = {y}")]
    AllZero { w: BigRational, y: BigRational },
    #[error("DIVISION_BY_ZERO: factor j = {index} vanishes")]
    DivisionByZero { index: u64 },
    #[error("NOT_DEGREE_N: ({a}/{b})^(1/{n}) is not of degree {n}")]
    NotDegreeN { a: u64, b: u64, n: u32 },
    #[error("Q1_IS_ONE: q1 = 1 makes the rho sandwich degenerate")]
    Q1IsOne,
    #[error("INVARIANT_VIOLATION: {0}")]
    InvariantViolation(String),
    #[error("INDETERMINATE: {0} unresolved at the precision cap")]
    Indeterminate(String),
    #[error("INDETERMINATE_PARTIAL_QUOTIENT: partial quotient {index} unresolved at the precision cap")]
    IndeterminatePartialQuotient { index: usize },
    #[error("PRECONDITION: {0}")]
    Precondition(String),
    #[error("PARSE: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that indicate an internal identity did not hold.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::SingularSystem(_)
                | Error::NonDivisible { .. }
                | Error::IdentityViolation(_)
                | Error::AllZero { .. }
                | Error::InvariantViolation(_)
        )
    }

    /// Process exit code: 1 for invariant violations, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        if self.is_invariant_violation() {
            1
        } else {
            2
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
