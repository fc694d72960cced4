//! Arbitrary-precision rationals and the errors shared by the exact kernel.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact rational number, always in canonical form: positive denominator,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
pub type Rational = num_rational::BigRational;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Division by zero in rational arithmetic.
    DivisionByZero,
    /// Root counting requested for the zero polynomial.
    IndeterminateRootCount,
    /// Determinant of a non-square matrix.
    NonSquareMatrix { rows: usize, cols: usize },
    /// Resultant of a constant polynomial.
    ConstantResultant,
    /// A token could not be read as a rational number.
    ParseRational(String),
    /// Exact division left a nonzero remainder.
    InexactDivision,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::IndeterminateRootCount => {
                write!(f, "indeterminate root count: zero polynomial")
            }
            AlgebraError::NonSquareMatrix { rows, cols } => {
                write!(f, "determinant of non-square {rows}x{cols} matrix")
            }
            AlgebraError::ConstantResultant => {
                write!(f, "resultant requires both polynomials to have degree >= 1")
            }
            AlgebraError::ParseRational(tok) => write!(f, "cannot parse rational '{tok}'"),
            AlgebraError::InexactDivision => write!(f, "exact division left a remainder"),
        }
    }
}

impl std::error::Error for AlgebraError {}

/// Rational from an integer pair. Panics when `den == 0`; intended for
/// literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat() with zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Division with an explicit error instead of a panic on zero divisor.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, AlgebraError> {
    if b.is_zero() {
        Err(AlgebraError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Sign of a rational: -1, 0 or +1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Renders as `p/q`, omitting `/q` when the denominator is one.
pub fn render_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_rational(token: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::ParseRational(token.to_string());
    let mut parts = token.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(num)),
        Some(den_str) => {
            let den: BigInt = den_str.parse().map_err(|_| bad())?;
            if den.is_zero() {
                Err(bad())
            } else {
                Ok(Rational::new(num, den))
            }
        }
    }
}
