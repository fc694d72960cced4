//! Exact-arithmetic substrate: rationals, univariate polynomials with Sturm
//! chains and resultants, sparse multivariate polynomials over the five
//! coefficient generators, and fraction-free determinants.

mod matrix;
mod multipoly;
mod rational;
mod unipoly;

pub use matrix::{
    bareiss_determinant, discriminant, sylvester_matrix, sylvester_resultant, PolyMatrix,
};
pub use multipoly::{Exponents, MultiPoly, GENERATOR_NAMES};
pub use rational::{
    checked_div, parse_rational, rat, rat_int, render_rational, sign, AlgebraError, Rational,
};
pub use unipoly::{sturm_count_real_roots, UniPoly};

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Neg, Sub};

/// Exact commutative ring with decidable exact division, the coefficient
/// abstraction shared by polynomials, matrices and the tensor engine.
/// Implemented by [`Rational`] and [`MultiPoly`].
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Exact division: `Some(q)` with `self == q * rhs`, `None` otherwise.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Product of `coef` and the given factors; convenience for transcribing
/// closed-form polynomial expressions generically over the ring.
pub fn term<R: Ring>(coef: i64, factors: &[&R]) -> R {
    let mut acc = R::from_int(coef);
    for f in factors {
        acc = acc * (*f).clone();
    }
    acc
}
