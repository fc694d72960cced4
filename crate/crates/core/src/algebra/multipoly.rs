//! Sparse multivariate polynomials over the five coefficient generators of a
//! binary quartic form, the vehicle for symbolic identity proofs.

use super::{rat_int, Rational, Ring};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Fixed generator order for exponent vectors and rendering.
pub const GENERATOR_NAMES: [&str; 5] = ["A1111", "A1112", "A1122", "A1222", "A2222"];

/// Exponent vector over the five generators, ordered graded-lexicographically
/// (total degree first, then lexicographic on the exponents).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub [u8; 5]);

impl Exponents {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        let mut e = [0u8; 5];
        for (v, (a, b)) in e.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *v = a.checked_add(*b).expect("exponent overflow");
        }
        Exponents(e)
    }

    /// Componentwise division; `None` when any exponent would go negative.
    fn div(&self, other: &Exponents) -> Option<Exponents> {
        let mut e = [0u8; 5];
        for (v, (a, b)) in e.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *v = a.checked_sub(*b)?;
        }
        Some(Exponents(e))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial: exponent vector -> nonzero rational
/// coefficient. The map is keyed in graded-lex order, so iteration (and the
/// rendered form) is deterministic.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn new() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::new();
        if !c.is_zero() {
            p.terms.insert(Exponents([0; 5]), c);
        }
        p
    }

    /// The i-th generator (0 = A1111 ... 4 = A2222).
    pub fn generator(i: usize) -> Self {
        assert!(i < 5, "generator index out of range");
        let mut e = [0u8; 5];
        e[i] = 1;
        let mut p = Self::new();
        p.terms.insert(Exponents(e), Rational::one());
        p
    }

    /// All five generators in the fixed order.
    pub fn generators() -> [Self; 5] {
        [0, 1, 2, 3, 4].map(Self::generator)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Leading term in graded-lex order.
    fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    fn insert_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Evaluates at the given generator values.
    pub fn eval(&self, point: &[Rational; 5]) -> Rational {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.0.iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[i];
                }
            }
            total += term;
        }
        total
    }

    /// Exact multivariate division; `None` when the remainder is nonzero.
    pub fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dlead_e, dlead_c) = divisor.leading_term()?;
        let dlead_e = *dlead_e;
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::new();
        while let Some((rlead_e, rlead_c)) = rem.leading_term() {
            let qe = rlead_e.div(&dlead_e)?;
            let qc = rlead_c / &dlead_c;
            // rem -= (qc * x^qe) * divisor
            for (e, c) in &divisor.terms {
                rem.insert_term(qe.mul(e), -(&qc * c));
            }
            quot.insert_term(qe, qc);
        }
        Some(quot)
    }

    /// Renders with custom generator names (used for difference reports over
    /// other generator sets, e.g. reduced-quartic coefficients).
    pub fn render_with(&self, names: &[&str; 5]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &exp)| exp > 0)
                    .map(|(g, &exp)| {
                        if exp == 1 {
                            names[g].to_string()
                        } else {
                            format!("{}^{}", names[g], exp)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                out.push_str(&super::render_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&super::render_rational(&abs));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with(&GENERATOR_NAMES))
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (e, c) in rhs.terms {
            self.insert_term(e, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        for (e, c) in rhs.terms {
            self.insert_term(e, -c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
}

impl Ring for MultiPoly {
    fn from_int(n: i64) -> Self {
        MultiPoly::constant(rat_int(n))
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.try_div_exact(rhs)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::new();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn gens() -> [MultiPoly; 5] {
        MultiPoly::generators()
    }

    #[test]
    fn arithmetic_keeps_canonical_sparse_form() {
        let [a, b, _, d, _] = gens();
        let p = b.clone() * d.clone();
        let q = d * b;
        assert!((p.clone() - q).is_zero());
        assert_eq!(p.term_count(), 1);
        let zero_sum = a.clone() - a;
        assert!(zero_sum.is_zero());
        assert_eq!(zero_sum.term_count(), 0);
    }

    #[test]
    fn eval_at_point() {
        let [a, _, c, _, e] = gens();
        // 6*A1111*A1122*A2222 - 2*A1122
        let p = crate::algebra::term(6, &[&a, &c, &e]) - c.scale(&rat(2, 1));
        let val = p.eval(&[rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 1)]);
        assert_eq!(val, rat(4, 3));
    }

    #[test]
    fn graded_lex_rendering() {
        let [a, _, c, _, e] = gens();
        let p = crate::algebra::term(81, &[&a, &c, &c, &c, &c, &e])
            + crate::algebra::term(-18, &[&a, &a, &c, &c, &e, &e])
            + MultiPoly::one();
        assert_eq!(
            p.to_string(),
            "1 + 81*A1111*A1122^4*A2222 - 18*A1111^2*A1122^2*A2222^2"
        );
    }

    #[test]
    fn exact_division() {
        let [a, b, c, _, _] = gens();
        let p = (a.clone() + b.clone()) * (c.clone() + b.clone());
        assert_eq!(
            p.try_div_exact(&(a.clone() + b.clone())),
            Some(c.clone() + b.clone())
        );
        // not divisible
        let q = a.clone() * a.clone() + b.clone();
        assert_eq!(q.try_div_exact(&c), None);
    }

    #[test]
    fn pow_and_degree() {
        let [_, b, _, _, _] = gens();
        let p = b.pow(3);
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(MultiPoly::zero().total_degree(), None);
    }
}
