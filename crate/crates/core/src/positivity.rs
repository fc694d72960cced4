//! The decision procedures: the classical no-real-roots tests for depressed
//! quartics and the two invariant-based strict-positivity criteria for
//! binary quartic forms.

use crate::algebra::{rat_int, Rational};
use crate::invariants::{compute_invariants, FormCoefficients, InvariantSet, ReducedQuartic};
use num_traits::Zero;
use std::fmt;

/// Which clause of which criterion decided the verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConditionPath {
    T41Cond1,
    T41Cond2,
    T41Cond3,
    T41Cond4,
    T41PreconditionFailed,
    T42Cond1,
    T42Cond2,
    T42Cond3,
    T42Cond4,
    T42PreconditionFailed,
}

impl ConditionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionPath::T41Cond1 => "T41-1",
            ConditionPath::T41Cond2 => "T41-2",
            ConditionPath::T41Cond3 => "T41-3",
            ConditionPath::T41Cond4 => "T41-4",
            ConditionPath::T41PreconditionFailed => "T41-precondition-failed",
            ConditionPath::T42Cond1 => "T42-1",
            ConditionPath::T42Cond2 => "T42-2",
            ConditionPath::T42Cond3 => "T42-3",
            ConditionPath::T42Cond4 => "T42-4",
            ConditionPath::T42PreconditionFailed => "T42-precondition-failed",
        }
    }
}

impl fmt::Display for ConditionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one criterion on its own.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TheoremVerdict {
    pub positive: bool,
    pub path: ConditionPath,
}

/// Full decision record: the first-criterion verdict, agreement of the two
/// criteria, and the invariants everything was decided from.
#[derive(Clone, PartialEq, Debug)]
pub struct Verdict {
    pub positive: bool,
    pub path: ConditionPath,
    pub theorems_agree: bool,
    pub invariants: InvariantSet,
}

/// The two criteria disagreed: either a transcription bug or a genuine
/// boundary defect. Never resolved silently.
#[derive(Clone, PartialEq, Debug)]
pub struct Disagreement {
    pub form: FormCoefficients,
    pub t41: TheoremVerdict,
    pub t42: TheoremVerdict,
    pub invariants: InvariantSet,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criteria disagree on {}: first says {} ({}), second says {} ({})",
            self.form, self.t41.positive, self.t41.path, self.t42.positive, self.t42.path
        )
    }
}

impl std::error::Error for Disagreement {}

/// Wrong test for the given depressed quartic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReducedTestError {
    /// r = 0: use the even-quartic test instead.
    UseReesTest,
    /// r != 0: use the general test instead.
    UseDicksonTest,
}

impl fmt::Display for ReducedTestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedTestError::UseReesTest => write!(f, "r = 0: use the Rees test"),
            ReducedTestError::UseDicksonTest => write!(f, "r != 0: use the Dickson test"),
        }
    }
}

impl std::error::Error for ReducedTestError {}

/// Dickson's test for z^4 + q z^2 + r z + s with r != 0: no real roots iff
/// the quartic discriminant is positive and either 4s >= q^2, or 4s < q^2
/// with q >= 0.
pub fn dickson_no_real_roots(rq: &ReducedQuartic<Rational>) -> Result<bool, ReducedTestError> {
    if rq.r.is_zero() {
        return Err(ReducedTestError::UseReesTest);
    }
    let d4 = crate::invariants::quartic_discriminant(rq);
    let four_s = rat_int(4) * &rq.s;
    let q_sq = &rq.q * &rq.q;
    Ok(d4 > Rational::zero() && (four_s >= q_sq || rq.q >= Rational::zero()))
}

/// Rees's test for the even case r = 0: no real roots iff 4s > q^2, or
/// 0 < 4s <= q^2 with q > 0.
pub fn rees_no_real_roots(rq: &ReducedQuartic<Rational>) -> Result<bool, ReducedTestError> {
    if !rq.r.is_zero() {
        return Err(ReducedTestError::UseDicksonTest);
    }
    let four_s = rat_int(4) * &rq.s;
    let q_sq = &rq.q * &rq.q;
    Ok(four_s > q_sq || (four_s > Rational::zero() && four_s <= q_sq && rq.q > Rational::zero()))
}

/// First criterion: positive iff a1111 > 0 and one of
///   1) I1 != 0, I0 > 0, I7 <= 0
///   2) I1 != 0, I0 > 0, I7 > 0, I3 >= 0
///   3) I1 = 0, I7 < 0
///   4) I1 = 0, I7 >= 0, I3 > 0, I5 > 0
///
/// holds; the path records the first matching condition in this order.
pub fn positive_by_t41(c: &FormCoefficients, inv: &InvariantSet) -> TheoremVerdict {
    use ConditionPath::*;
    theorem_verdict(
        &c.a1111,
        &inv.i1,
        &inv.i0,
        &inv.i7,
        &inv.i3,
        &inv.i5,
        [
            T41Cond1,
            T41Cond2,
            T41Cond3,
            T41Cond4,
            T41PreconditionFailed,
        ],
    )
}

/// Mirror criterion over a2222, I2, I8, I4, I6.
pub fn positive_by_t42(c: &FormCoefficients, inv: &InvariantSet) -> TheoremVerdict {
    use ConditionPath::*;
    theorem_verdict(
        &c.a2222,
        &inv.i2,
        &inv.i0,
        &inv.i8,
        &inv.i4,
        &inv.i6,
        [
            T42Cond1,
            T42Cond2,
            T42Cond3,
            T42Cond4,
            T42PreconditionFailed,
        ],
    )
}

fn theorem_verdict(
    lead: &Rational,
    i_r: &Rational,
    i0: &Rational,
    i_d2: &Rational,
    i_q: &Rational,
    i_s: &Rational,
    paths: [ConditionPath; 5],
) -> TheoremVerdict {
    let zero = Rational::zero();
    let [cond1, cond2, cond3, cond4, failed] = paths;
    if lead <= &zero {
        return TheoremVerdict {
            positive: false,
            path: failed,
        };
    }
    let path = if !i_r.is_zero() && i0 > &zero && i_d2 <= &zero {
        Some(cond1)
    } else if !i_r.is_zero() && i0 > &zero && i_d2 > &zero && i_q >= &zero {
        Some(cond2)
    } else if i_r.is_zero() && i_d2 < &zero {
        Some(cond3)
    } else if i_r.is_zero() && i_d2 >= &zero && i_q > &zero && i_s > &zero {
        Some(cond4)
    } else {
        None
    };
    match path {
        Some(p) => TheoremVerdict {
            positive: true,
            path: p,
        },
        None => TheoremVerdict {
            positive: false,
            path: failed,
        },
    }
}

/// Runs both criteria and checks they agree. Disagreement is surfaced as an
/// error carrying both verdicts and the invariants, never resolved silently.
pub fn decide(c: &FormCoefficients) -> Result<Verdict, Box<Disagreement>> {
    let invariants = compute_invariants(c);
    let t41 = positive_by_t41(c, &invariants);
    let t42 = positive_by_t42(c, &invariants);
    if t41.positive != t42.positive {
        return Err(Box::new(Disagreement {
            form: c.clone(),
            t41,
            t42,
            invariants,
        }));
    }
    Ok(Verdict {
        positive: t41.positive,
        path: t41.path,
        theorems_agree: true,
        invariants,
    })
}
