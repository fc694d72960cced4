//! Coefficient-generic univariate polynomials and Sturm-chain root counting.

use super::{AlgebraError, Rational, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial with coefficients in an exact ring, stored in
/// ascending degree order with trailing zeros trimmed. The zero polynomial
/// has an empty coefficient vector.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_coeffs(vec![R::zero(), R::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let d: Vec<R> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * R::from_int(i as i64))
            .collect();
        Self::from_coeffs(d)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

impl<R: Ring> Add for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl<R: Ring> Sub for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn sub(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl<R: Ring> Mul for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

// Field-only operations used by the Sturm machinery.
impl UniPoly<Rational> {
    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading().expect("nonzero").clone();
        let ddeg = divisor.degree().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len()];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().expect("nonzero") / &dlead;
            quot[rdeg - ddeg] = factor.clone();
            // rem -= factor * x^(rdeg-ddeg) * divisor
            let mut coeffs = rem.coeffs;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let k = i + rdeg - ddeg;
                coeffs[k] = &coeffs[k] - &(dc * &factor);
            }
            coeffs[rdeg] = Rational::zero();
            rem = Self::from_coeffs(coeffs);
        }
        (Self::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd_monic(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = Rational::one() / lead;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Squarefree part p / gcd(p, p'), collapsing repeated roots.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd_monic(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        q
    }

    /// Rescales by a positive rational so the coefficients become coprime
    /// integers. Sign-preserving, which is all Sturm chains care about.
    fn primitive_integer_scaled(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        let factor = Rational::new(den_lcm, num_gcd);
        debug_assert!(factor.is_positive());
        self.scale(&factor)
    }

    /// Sign of the polynomial at +infinity (sign of the leading coefficient).
    fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, super::sign)
    }

    /// Sign at -infinity: leading sign flipped for odd degree.
    fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 1 => -self.sign_at_pos_inf(),
            Some(_) => self.sign_at_pos_inf(),
        }
    }
}

fn sign_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` over the whole real line, from the
/// sign-variation difference of the Sturm chain at -infinity and +infinity.
/// Repeated roots are collapsed first by dividing by gcd(p, p').
pub fn sturm_count_real_roots(p: &UniPoly<Rational>) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::IndeterminateRootCount);
    }
    let sf = p.squarefree_part().primitive_integer_scaled();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    // standard negated-remainder sequence
    let mut chain = vec![sf.clone(), sf.derivative().primitive_integer_scaled()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_integer_scaled());
    }
    let at_neg: Vec<i8> = chain.iter().map(|f| f.sign_at_neg_inf()).collect();
    let at_pos: Vec<i8> = chain.iter().map(|f| f.sign_at_pos_inf()).collect();
    Ok(sign_variations(&at_neg) - sign_variations(&at_pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn poly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = poly(&[-1, 0, 1]); // t^2 - 1
        let q = poly(&[1, 1]); // t + 1
        assert_eq!(&p * &q, poly(&[-1, -1, 1, 1]));
        assert_eq!(p.eval(&rat_int(3)), rat_int(8));
        assert_eq!(p.derivative(), poly(&[0, 2]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = poly(&[2, -3, 0, 5, 1]);
        let d = poly(&[1, 0, 2]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, p);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let common = poly(&[-1, 1]); // t - 1
        let a = &common * &poly(&[2, 1]);
        let b = &common * &poly(&[3, 0, 1]);
        assert_eq!(a.gcd_monic(&b), common);
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        // t^4 + 1: no real roots
        assert_eq!(sturm_count_real_roots(&poly(&[1, 0, 0, 0, 1])).unwrap(), 0);
        // t^4 - 1: roots +-1
        assert_eq!(sturm_count_real_roots(&poly(&[-1, 0, 0, 0, 1])).unwrap(), 2);
        // t^4 - 2t^2 + 1 = (t^2-1)^2: squarefree part has roots +-1
        assert_eq!(sturm_count_real_roots(&poly(&[1, 0, -2, 0, 1])).unwrap(), 2);
        // (t-1)^4: one distinct root
        assert_eq!(
            sturm_count_real_roots(&poly(&[1, -4, 6, -4, 1])).unwrap(),
            1
        );
        // t^3 - t: three roots
        assert_eq!(sturm_count_real_roots(&poly(&[0, -1, 0, 1])).unwrap(), 3);
        // constants
        assert_eq!(sturm_count_real_roots(&poly(&[7])).unwrap(), 0);
        assert_eq!(
            sturm_count_real_roots(&UniPoly::zero()),
            Err(AlgebraError::IndeterminateRootCount)
        );
    }

    #[test]
    fn sturm_handles_rational_coefficients() {
        // (t - 1/2)(t + 3/4)
        let p = UniPoly::from_coeffs(vec![rat(-3, 8), rat(1, 4), rat(1, 1)]);
        assert_eq!(sturm_count_real_roots(&p).unwrap(), 2);
    }
}
