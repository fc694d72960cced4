//! Closed-form invariants of a binary quartic form: the discriminant-scale
//! quantity `I0`, the eight testing parameters `I1..I8`, the pseudoscalars
//! `beta` and `gamma`, and the depressed-quartic reductions they come from.

use crate::algebra::{
    parse_rational, rat_int, render_rational, term, AlgebraError, MultiPoly, Rational, Ring,
    UniPoly,
};
use num_traits::Zero;
use std::fmt;

/// The five independent components of the symmetric coefficient tensor.
/// These are tensor components: the binomial weights 4, 6, 4 of the mixed
/// monomials are *not* folded in.
#[derive(Clone, PartialEq, Debug)]
pub struct FormCoefficients {
    pub a1111: Rational,
    pub a1112: Rational,
    pub a1122: Rational,
    pub a1222: Rational,
    pub a2222: Rational,
}

/// Errors from the reduction operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    /// The pivot coefficient for the requested reduction vanishes.
    Undefined { pivot: &'static str },
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::Undefined { pivot } => {
                write!(f, "reduction undefined: {pivot} = 0")
            }
        }
    }
}

impl std::error::Error for ReductionError {}

impl FormCoefficients {
    pub fn new(
        a1111: Rational,
        a1112: Rational,
        a1122: Rational,
        a1222: Rational,
        a2222: Rational,
    ) -> Self {
        FormCoefficients {
            a1111,
            a1112,
            a1122,
            a1222,
            a2222,
        }
    }

    pub fn from_array(a: [Rational; 5]) -> Self {
        let [a1111, a1112, a1122, a1222, a2222] = a;
        FormCoefficients {
            a1111,
            a1112,
            a1122,
            a1222,
            a2222,
        }
    }

    /// Convenience constructor from integers, mostly for tests.
    pub fn from_ints(a: [i64; 5]) -> Self {
        Self::from_array(a.map(rat_int))
    }

    /// Reads raw monomial coefficients (of x^4, x^3y, x^2y^2, xy^3, y^4)
    /// and divides out the binomial weights 1, 4, 6, 4, 1.
    pub fn from_monomial_coeffs(m: [Rational; 5]) -> Self {
        let [m0, m1, m2, m3, m4] = m;
        FormCoefficients {
            a1111: m0,
            a1112: m1 / rat_int(4),
            a1122: m2 / rat_int(6),
            a1222: m3 / rat_int(4),
            a2222: m4,
        }
    }

    pub fn to_array(&self) -> [Rational; 5] {
        [
            self.a1111.clone(),
            self.a1112.clone(),
            self.a1122.clone(),
            self.a1222.clone(),
            self.a2222.clone(),
        ]
    }

    /// Value of the form at (x, y).
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let x2 = x * x;
        let y2 = y * y;
        &self.a1111 * &x2 * &x2
            + rat_int(4) * &self.a1112 * &x2 * x * y
            + rat_int(6) * &self.a1122 * &x2 * &y2
            + rat_int(4) * &self.a1222 * x * &y2 * y
            + &self.a2222 * &y2 * &y2
    }

    /// The univariate polynomial `a(t, 1)` with the binomial weights made
    /// explicit; the form is positive iff `a1111 > 0` and this polynomial
    /// has no real roots.
    pub fn dehomogenized_first(&self) -> UniPoly<Rational> {
        UniPoly::from_coeffs(vec![
            self.a2222.clone(),
            rat_int(4) * &self.a1222,
            rat_int(6) * &self.a1122,
            rat_int(4) * &self.a1112,
            self.a1111.clone(),
        ])
    }

    /// Mirror image `a(1, t)`.
    pub fn dehomogenized_second(&self) -> UniPoly<Rational> {
        UniPoly::from_coeffs(vec![
            self.a1111.clone(),
            rat_int(4) * &self.a1112,
            rat_int(6) * &self.a1122,
            rat_int(4) * &self.a1222,
            self.a2222.clone(),
        ])
    }

    /// Swaps the two variables: (a1111, a1112, a1122, a1222, a2222)
    /// becomes (a2222, a1222, a1122, a1112, a1111).
    pub fn swapped(&self) -> Self {
        FormCoefficients {
            a1111: self.a2222.clone(),
            a1112: self.a1222.clone(),
            a1122: self.a1122.clone(),
            a1222: self.a1112.clone(),
            a2222: self.a1111.clone(),
        }
    }

    /// One form per line: five rationals separated by whitespace or commas;
    /// `#` starts a comment; blank lines are skipped (Ok(None)).
    pub fn parse_line(line: &str) -> Result<Option<Self>, AlgebraError> {
        let uncommented = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = uncommented
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Ok(None);
        }
        if tokens.len() != 5 {
            return Err(AlgebraError::ParseRational(format!(
                "expected 5 coefficients, found {}",
                tokens.len()
            )));
        }
        let mut vals = Vec::with_capacity(5);
        for t in &tokens {
            vals.push(parse_rational(t)?);
        }
        Ok(Some(Self::from_array(
            vals.try_into().expect("exactly five values"),
        )))
    }

    /// Inverse of [`FormCoefficients::parse_line`]: space-separated exact
    /// rationals.
    pub fn format_line(&self) -> String {
        self.to_array()
            .iter()
            .map(render_rational)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FormCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format_line().replace(' ', ", "))
    }
}

/// Depressed quartic z^4 + q z^2 + r z + s.
#[derive(Clone, PartialEq, Debug)]
pub struct ReducedQuartic<R: Ring> {
    pub q: R,
    pub r: R,
    pub s: R,
}

impl<R: Ring> ReducedQuartic<R> {
    pub fn new(q: R, r: R, s: R) -> Self {
        ReducedQuartic { q, r, s }
    }
}

/// Discriminant of the depressed quartic:
/// 256 s^3 - 4 q^3 r^2 - 27 r^4 + 16 q^4 s - 128 q^2 s^2 + 144 q s r^2.
pub fn quartic_discriminant<R: Ring>(rq: &ReducedQuartic<R>) -> R {
    let ReducedQuartic { q, r, s } = rq;
    term(256, &[s, s, s])
        + term(-4, &[q, q, q, r, r])
        + term(-27, &[r, r, r, r])
        + term(16, &[q, q, q, q, s])
        + term(-128, &[q, q, s, s])
        + term(144, &[q, s, r, r])
}

/// Depresses `a(t,1)` by the shift t = z - a1112/a1111; requires a1111 != 0.
pub fn reduce_first(c: &FormCoefficients) -> Result<ReducedQuartic<Rational>, ReductionError> {
    if c.a1111.is_zero() {
        return Err(ReductionError::Undefined { pivot: "a1111" });
    }
    reduce(&c.a1111, &c.a1112, &c.a1122, &c.a1222, &c.a2222)
}

/// Mirror reduction of `a(1,t)` by t = z - a1222/a2222; requires a2222 != 0.
pub fn reduce_second(c: &FormCoefficients) -> Result<ReducedQuartic<Rational>, ReductionError> {
    if c.a2222.is_zero() {
        return Err(ReductionError::Undefined { pivot: "a2222" });
    }
    reduce(&c.a2222, &c.a1222, &c.a1122, &c.a1112, &c.a1111)
}

fn reduce(
    lead: &Rational,
    odd3: &Rational,
    mid: &Rational,
    odd1: &Rational,
    tail: &Rational,
) -> Result<ReducedQuartic<Rational>, ReductionError> {
    let l2 = lead * lead;
    let l3 = &l2 * lead;
    let l4 = &l3 * lead;
    let q = rat_int(6) * mid / lead - rat_int(6) * odd3 * odd3 / &l2;
    let r = rat_int(4) * odd1 / lead - rat_int(12) * mid * odd3 / &l2
        + rat_int(8) * odd3 * odd3 * odd3 / &l3;
    let s = tail / lead - rat_int(4) * odd1 * odd3 / &l2 + rat_int(6) * mid * odd3 * odd3 / &l3
        - rat_int(3) * odd3 * odd3 * odd3 * odd3 / &l4;
    Ok(ReducedQuartic::new(q, r, s))
}

/// The eleven polynomial invariants, generic over the scalar ring so the
/// same transcription serves numeric evaluation and symbolic proofs.
#[derive(Clone, PartialEq, Debug)]
pub struct ClosedInvariants<R: Ring> {
    pub i0: R,
    pub i1: R,
    pub i2: R,
    pub i3: R,
    pub i4: R,
    pub i5: R,
    pub i6: R,
    pub i7: R,
    pub i8: R,
    pub beta: R,
    pub gamma: R,
}

/// Evaluates all eleven closed forms at the given generator values
/// (a1111, a1112, a1122, a1222, a2222). Total polynomial functions: no
/// divisions anywhere.
pub fn closed_invariants<R: Ring>(g: &[R; 5]) -> ClosedInvariants<R> {
    let [a, b, c, d, e] = g;
    ClosedInvariants {
        i0: i0_poly_at(a, b, c, d, e),
        i1: term(1, &[a, a, d]) + term(-3, &[a, b, c]) + term(2, &[b, b, b]),
        i2: term(1, &[e, e, b]) + term(-3, &[e, d, c]) + term(2, &[d, d, d]),
        i3: term(1, &[a, c]) + term(-1, &[b, b]),
        i4: term(1, &[e, c]) + term(-1, &[d, d]),
        i5: term(6, &[a, c, b, b])
            + term(-3, &[b, b, b, b])
            + term(-4, &[a, a, d, b])
            + term(1, &[a, a, a, e]),
        i6: term(6, &[e, c, d, d])
            + term(-3, &[d, d, d, d])
            + term(-4, &[e, e, b, d])
            + term(1, &[e, e, e, a]),
        i7: term(9, &[c, c, a, a])
            + term(-24, &[a, c, b, b])
            + term(12, &[b, b, b, b])
            + term(4, &[a, a, d, b])
            + term(-1, &[a, a, a, e]),
        i8: term(9, &[e, e, c, c])
            + term(-24, &[e, c, d, d])
            + term(12, &[d, d, d, d])
            + term(4, &[e, e, b, d])
            + term(-1, &[e, e, e, a]),
        beta: term(8, &[b, d]) + term(-6, &[c, c]) + term(-2, &[a, e]),
        gamma: term(12, &[b, c, d])
            + term(6, &[a, c, e])
            + term(-6, &[c, c, c])
            + term(-6, &[b, b, e])
            + term(-6, &[a, d, d]),
    }
}

/// The sixteen-term closed form of I0 (1/256 of the quartic discriminant of
/// either dehomogenization).
fn i0_poly_at<R: Ring>(a: &R, b: &R, c: &R, d: &R, e: &R) -> R {
    term(81, &[a, c, c, c, c, e])
        + term(-18, &[a, a, e, e, c, c])
        + term(-27, &[b, b, b, b, e, e])
        + term(-12, &[a, a, b, d, e, e])
        + term(-54, &[a, c, c, c, d, d])
        + term(108, &[a, b, d, d, d, c])
        + term(-64, &[b, b, b, d, d, d])
        + term(54, &[a, e, e, c, b, b])
        + term(1, &[a, a, a, e, e, e])
        + term(54, &[a, a, e, c, d, d])
        + term(36, &[c, c, b, b, d, d])
        + term(-54, &[c, c, c, b, b, e])
        + term(-27, &[a, a, d, d, d, d])
        + term(-180, &[a, b, d, c, c, e])
        + term(108, &[b, b, b, d, c, e])
        + term(-6, &[a, b, b, d, d, e])
}

/// The closed invariants as symbolic polynomials in the five generators.
pub fn symbolic_invariants() -> ClosedInvariants<MultiPoly> {
    closed_invariants(&MultiPoly::generators())
}

/// All named invariants of one form: the eleven closed forms plus, where
/// the reductions exist, the depressed-quartic coefficients and their
/// quadratic discriminants q^2 - 4s.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantSet {
    pub i0: Rational,
    pub i1: Rational,
    pub i2: Rational,
    pub i3: Rational,
    pub i4: Rational,
    pub i5: Rational,
    pub i6: Rational,
    pub i7: Rational,
    pub i8: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// First reduction (exists iff a1111 != 0).
    pub first: Option<ReducedQuartic<Rational>>,
    /// q1^2 - 4 s1, when the first reduction exists.
    pub d2_first: Option<Rational>,
    /// Second reduction (exists iff a2222 != 0).
    pub second: Option<ReducedQuartic<Rational>>,
    /// q2^2 - 4 s2, when the second reduction exists.
    pub d2_second: Option<Rational>,
}

/// Computes every invariant of the form.
pub fn compute_invariants(c: &FormCoefficients) -> InvariantSet {
    let closed = closed_invariants(&c.to_array());
    let first = reduce_first(c).ok();
    let second = reduce_second(c).ok();
    let d2 = |rq: &ReducedQuartic<Rational>| &rq.q * &rq.q - rat_int(4) * &rq.s;
    let d2_first = first.as_ref().map(d2);
    let d2_second = second.as_ref().map(d2);
    InvariantSet {
        i0: closed.i0,
        i1: closed.i1,
        i2: closed.i2,
        i3: closed.i3,
        i4: closed.i4,
        i5: closed.i5,
        i6: closed.i6,
        i7: closed.i7,
        i8: closed.i8,
        beta: closed.beta,
        gamma: closed.gamma,
        first,
        d2_first,
        second,
        d2_second,
    }
}

impl InvariantSet {
    /// Flat key-value view with exact rational strings; reduction fields are
    /// present only when the corresponding reduction exists.
    pub fn key_values(&self) -> Vec<(&'static str, String)> {
        let mut kv: Vec<(&'static str, String)> = vec![
            ("i0", render_rational(&self.i0)),
            ("i1", render_rational(&self.i1)),
            ("i2", render_rational(&self.i2)),
            ("i3", render_rational(&self.i3)),
            ("i4", render_rational(&self.i4)),
            ("i5", render_rational(&self.i5)),
            ("i6", render_rational(&self.i6)),
            ("i7", render_rational(&self.i7)),
            ("i8", render_rational(&self.i8)),
            ("beta", render_rational(&self.beta)),
            ("gamma", render_rational(&self.gamma)),
        ];
        if let Some(rq) = &self.first {
            kv.push(("q1", render_rational(&rq.q)));
            kv.push(("r1", render_rational(&rq.r)));
            kv.push(("s1", render_rational(&rq.s)));
        }
        if let Some(rq) = &self.second {
            kv.push(("q2", render_rational(&rq.q)));
            kv.push(("r2", render_rational(&rq.r)));
            kv.push(("s2", render_rational(&rq.s)));
        }
        kv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn form(v: [(i64, i64); 5]) -> FormCoefficients {
        FormCoefficients::from_array(v.map(|(n, d)| rat(n, d)))
    }

    #[test]
    fn reduce_first_examples() {
        // (x^2+y^2)^2: z^4 + 2z^2 + 1 = (z^2+1)^2
        let rq = reduce_first(&form([(1, 1), (0, 1), (1, 3), (0, 1), (1, 1)])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(2), rat_int(0), rat_int(1)));
        // x^4 + y^4: no odd terms, no shift
        let rq = reduce_first(&FormCoefficients::from_ints([1, 0, 0, 0, 1])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(0), rat_int(0), rat_int(1)));
        // zero shift with r = 4 a1222 / a1111
        let rq = reduce_first(&FormCoefficients::from_ints([1, 0, 0, 1, 1])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(0), rat_int(4), rat_int(1)));
        // vanishing pivot
        assert_eq!(
            reduce_first(&FormCoefficients::from_ints([0, 0, 0, 0, 1])),
            Err(ReductionError::Undefined { pivot: "a1111" })
        );
    }

    #[test]
    fn reduce_second_examples() {
        let rq = reduce_second(&form([(1, 1), (0, 1), (1, 3), (0, 1), (1, 1)])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(2), rat_int(0), rat_int(1)));
        let rq = reduce_second(&FormCoefficients::from_ints([1, 0, 0, 0, 1])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(0), rat_int(0), rat_int(1)));
        let rq = reduce_second(&FormCoefficients::from_ints([1, 1, 0, 0, 1])).unwrap();
        assert_eq!((rq.q, rq.r, rq.s), (rat_int(0), rat_int(4), rat_int(1)));
        assert!(reduce_second(&FormCoefficients::from_ints([1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn discriminant_examples() {
        let d = |q: i64, r: i64, s: i64| {
            quartic_discriminant(&ReducedQuartic::new(rat_int(q), rat_int(r), rat_int(s)))
        };
        assert_eq!(d(0, 0, 1), rat_int(256));
        assert_eq!(d(0, 1, 0), rat_int(-27));
        assert_eq!(d(2, 0, 1), rat_int(0)); // 16*s*(q^2-4s)^2 at r=0
    }

    #[test]
    fn invariants_x4_plus_y4() {
        let inv = compute_invariants(&FormCoefficients::from_ints([1, 0, 0, 0, 1]));
        assert_eq!(inv.i0, rat_int(1));
        assert_eq!(inv.i1, rat_int(0));
        assert_eq!(inv.i2, rat_int(0));
        assert_eq!(inv.i3, rat_int(0));
        assert_eq!(inv.i4, rat_int(0));
        assert_eq!(inv.i5, rat_int(1));
        assert_eq!(inv.i6, rat_int(1));
        assert_eq!(inv.i7, rat_int(-1));
        assert_eq!(inv.i8, rat_int(-1));
        assert_eq!(inv.beta, rat_int(-2));
        assert_eq!(inv.gamma, rat_int(0));
    }

    #[test]
    fn invariants_square_of_circle() {
        let inv = compute_invariants(&form([(1, 1), (0, 1), (1, 3), (0, 1), (1, 1)]));
        assert_eq!(inv.i0, rat_int(0));
        assert_eq!(inv.i1, rat_int(0));
        assert_eq!(inv.i2, rat_int(0));
        assert_eq!(inv.i3, rat(1, 3));
        assert_eq!(inv.i4, rat(1, 3));
        assert_eq!(inv.i5, rat_int(1));
        assert_eq!(inv.i6, rat_int(1));
        assert_eq!(inv.i7, rat_int(0));
        assert_eq!(inv.i8, rat_int(0));
        assert_eq!(inv.beta, rat(-8, 3));
        assert_eq!(inv.gamma, rat(16, 9));
    }

    #[test]
    fn invariants_fourth_power_all_vanish() {
        let inv = compute_invariants(&FormCoefficients::from_ints([1, -1, 1, -1, 1]));
        for v in [
            &inv.i0, &inv.i1, &inv.i2, &inv.i3, &inv.i4, &inv.i5, &inv.i6, &inv.i7, &inv.i8,
            &inv.beta, &inv.gamma,
        ] {
            assert!(v.is_zero(), "expected zero, got {v}");
        }
    }

    #[test]
    fn invariants_asymmetric_negative_i0() {
        let inv = compute_invariants(&FormCoefficients::from_ints([1, 0, 0, 1, 1]));
        assert_eq!(inv.i0, rat_int(-26));
        assert_eq!(inv.i1, rat_int(1));
        assert_eq!(inv.i2, rat_int(2));
        assert_eq!(inv.beta, rat_int(-2));
        assert_eq!(inv.gamma, rat_int(-6));
    }

    #[test]
    fn invariants_frozen_asymmetric_rational_form() {
        // independently computed with exact arithmetic outside this crate
        let inv = compute_invariants(&form([(1, 1), (1, 2), (1, 3), (1, 4), (2, 1)]));
        assert_eq!(inv.i0, rat(1421, 256));
        assert_eq!(inv.i1, rat_int(0));
        assert_eq!(inv.i2, rat(49, 32));
        assert_eq!(inv.i3, rat(1, 12));
        assert_eq!(inv.i4, rat(29, 48));
        assert_eq!(inv.i5, rat(29, 16));
        assert_eq!(inv.i6, rat(1597, 256));
        assert_eq!(inv.i7, rat(-7, 4));
        assert_eq!(inv.i8, rat(-189, 64));
        assert_eq!(inv.beta, rat(-11, 3));
        assert_eq!(inv.gamma, rat(65, 72));
    }

    #[test]
    fn i0_satisfies_beta_gamma_relation() {
        // i0 = -beta^3/8 - (3/4) gamma^2 on a few numeric forms
        for f in [
            FormCoefficients::from_ints([1, 0, 0, 0, 1]),
            FormCoefficients::from_ints([1, 0, 0, 1, 1]),
            form([(1, 1), (1, 2), (1, 3), (1, 4), (2, 1)]),
            form([(3, 2), (-1, 5), (2, 7), (0, 1), (4, 3)]),
        ] {
            let inv = compute_invariants(&f);
            let rhs = -(&inv.beta * &inv.beta * &inv.beta) / rat_int(8)
                - rat(3, 4) * &inv.gamma * &inv.gamma;
            assert_eq!(inv.i0, rhs);
        }
    }

    #[test]
    fn d2_links_to_i7_i8() {
        let c = form([(1, 1), (1, 2), (1, 3), (1, 4), (2, 1)]);
        let inv = compute_invariants(&c);
        let a4 = &c.a1111 * &c.a1111 * &c.a1111 * &c.a1111;
        let e4 = &c.a2222 * &c.a2222 * &c.a2222 * &c.a2222;
        assert_eq!(rat_int(4) * &inv.i7, a4 * inv.d2_first.clone().unwrap());
        assert_eq!(rat_int(4) * &inv.i8, e4 * inv.d2_second.clone().unwrap());
    }

    #[test]
    fn parse_and_format_lines() {
        let c = FormCoefficients::parse_line(" 1, -1 1/3\t-1 1 # a comment")
            .unwrap()
            .unwrap();
        assert_eq!(c.a1122, rat(1, 3));
        assert_eq!(
            FormCoefficients::parse_line("# only comment").unwrap(),
            None
        );
        assert_eq!(FormCoefficients::parse_line("").unwrap(), None);
        assert!(FormCoefficients::parse_line("1 2 3").is_err());
        assert!(FormCoefficients::parse_line("1 2 x 4 5").is_err());
        let round = FormCoefficients::parse_line(&c.format_line())
            .unwrap()
            .unwrap();
        assert_eq!(round, c);
    }

    #[test]
    fn monomial_convention() {
        // (x+y)^4 has monomial coefficients 1,4,6,4,1 -> all tensor components 1
        let c = FormCoefficients::from_monomial_coeffs([
            rat_int(1),
            rat_int(4),
            rat_int(6),
            rat_int(4),
            rat_int(1),
        ]);
        assert_eq!(c, FormCoefficients::from_ints([1, 1, 1, 1, 1]));
    }

    #[test]
    fn symbolic_transcriptions_evaluate_like_the_closed_forms() {
        let sym = symbolic_invariants();
        let point = [rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(sym.beta.eval(&point), rat_int(-2));
        assert_eq!(sym.i0.eval(&point), rat_int(1));
        // canonical graded-lex rendering carries the signed terms
        let rendered = sym.i0.to_string();
        assert!(rendered.contains("+ 81*A1111*A1122^4*A2222"));
        assert!(rendered.contains("- 18*A1111^2*A1122^2*A2222^2"));
        assert!(rendered.ends_with("+ A1111^3*A2222^3"));
    }

    #[test]
    fn key_value_serialization() {
        let inv = compute_invariants(&form([(1, 1), (0, 1), (1, 3), (0, 1), (1, 1)]));
        let kv = inv.key_values();
        let get = |k: &str| kv.iter().find(|(n, _)| *n == k).map(|(_, v)| v.clone());
        assert_eq!(get("beta").unwrap(), "-8/3");
        assert_eq!(get("q1").unwrap(), "2");
        assert_eq!(get("s2").unwrap(), "1");
        // degenerate form: no second reduction
        let inv = compute_invariants(&FormCoefficients::from_ints([1, 0, 0, 0, 0]));
        assert!(inv.key_values().iter().all(|(k, _)| !k.starts_with("q2")));
    }
}
