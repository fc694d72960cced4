//! Shared test support: an exact root counter independent of the Sturm
//! implementation, plus small helpers for building random polynomials and
//! forms.
#![allow(dead_code)] // each test binary uses its own subset

use num_traits::{One, Signed, Zero};
use quartic_forms::algebra::{rat, rat_int, Rational, UniPoly};
use rand::Rng;

/// Counts sign variations in a coefficient slice, skipping zeros.
fn coefficient_sign_changes(coeffs: &[Rational]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for c in coeffs {
        let s = quartic_forms::algebra::sign(c);
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

/// p(x + 1), by Horner over polynomial arithmetic.
fn taylor_shift_one(p: &UniPoly<Rational>) -> UniPoly<Rational> {
    let x_plus_1 = UniPoly::from_coeffs(vec![Rational::one(), Rational::one()]);
    let mut acc = UniPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &x_plus_1) + &UniPoly::constant(c.clone());
    }
    acc
}

/// Reversed coefficient list x^n p(1/x), padded to the stated degree.
fn reversal(p: &UniPoly<Rational>, degree: usize) -> UniPoly<Rational> {
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[degree - i] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

/// p(lo + (hi - lo) x), mapping (0,1) onto (lo, hi).
fn map_unit_interval(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> UniPoly<Rational> {
    let span = hi - lo;
    let affine = UniPoly::from_coeffs(vec![lo.clone(), span]);
    let mut acc = UniPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &affine) + &UniPoly::constant(c.clone());
    }
    acc
}

/// Upper bound on the number of roots of `p` in the open interval
/// (lo, hi) by the sign-variation rule on the interval-mapped coefficients;
/// exact when it returns 0 or 1.
fn variation_bound(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> usize {
    let on_unit = map_unit_interval(p, lo, hi);
    let degree = on_unit.degree().unwrap_or(0);
    let transformed = taylor_shift_one(&reversal(&on_unit, degree));
    coefficient_sign_changes(transformed.coeffs())
}

fn count_in_open_interval(
    p: &UniPoly<Rational>,
    lo: &Rational,
    hi: &Rational,
    depth: usize,
) -> usize {
    assert!(depth < 128, "bisection failed to separate roots");
    match variation_bound(p, lo, hi) {
        0 => 0,
        1 => 1,
        _ => {
            let mid = (lo + hi) / rat_int(2);
            if p.eval(&mid).is_zero() {
                // exact rational root at the bisection point: divide it out
                let linear = UniPoly::from_coeffs(vec![-mid.clone(), Rational::one()]);
                let (q, rem) = p.div_rem(&linear);
                assert!(rem.is_zero());
                return count_in_open_interval(&q, lo, &mid, depth + 1)
                    + 1
                    + count_in_open_interval(&q, &mid, hi, depth + 1);
            }
            count_in_open_interval(p, lo, &mid, depth + 1)
                + count_in_open_interval(p, &mid, hi, depth + 1)
        }
    }
}

/// Counts distinct real roots by bisection bracketing over a dyadic
/// subdivision of (-M, M), M past the Cauchy root bound, with coefficient
/// sign changes as the per-interval certificate. Fully exact; independent
/// of the Sturm-chain implementation it is used to cross-check.
pub fn bracket_count_distinct_roots(p: &UniPoly<Rational>) -> usize {
    assert!(!p.is_zero(), "zero polynomial");
    let sf = p.squarefree_part();
    if sf.degree() == Some(0) {
        return 0;
    }
    let lead = sf.leading().expect("nonzero").clone();
    let mut bound = Rational::one();
    for c in sf.coeffs() {
        let ratio = (c / &lead).abs();
        if ratio > bound {
            bound = ratio;
        }
    }
    let m = bound + Rational::one(); // all real roots lie strictly inside (-M, M)
    count_in_open_interval(&sf, &(-m.clone()), &m, 0)
}

/// Random polynomial of degree <= 4 with small rational coefficients; never
/// the zero polynomial.
pub fn random_poly(rng: &mut impl Rng) -> UniPoly<Rational> {
    loop {
        let len = rng.gen_range(1usize..=5);
        let coeffs: Vec<Rational> = (0..len)
            .map(|_| rat(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=6)))
            .collect();
        let p = UniPoly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random polynomial with prescribed real roots and an optional irreducible
/// quadratic factor, so the expected distinct-root count is known.
pub fn poly_with_known_roots(rng: &mut impl Rng) -> (UniPoly<Rational>, usize) {
    let n_linear = rng.gen_range(0usize..=4);
    let quadratic = n_linear <= 2 && rng.gen_bool(0.5);
    let mut roots: Vec<Rational> = Vec::new();
    let mut p = UniPoly::constant(rat(rng.gen_range(1i64..=4), 1));
    for _ in 0..n_linear {
        let root = rat(rng.gen_range(-8i64..=8), rng.gen_range(1i64..=4));
        // repeated roots allowed: they must not change the distinct count
        p = &p * &UniPoly::from_coeffs(vec![-root.clone(), Rational::one()]);
        if !roots.contains(&root) {
            roots.push(root);
        }
    }
    if quadratic {
        // x^2 + bx + c with b^2 - 4c < 0
        let b = rat(rng.gen_range(-4i64..=4), 1);
        let c = &b * &b / rat_int(4) + rat(rng.gen_range(1i64..=5), 1);
        p = &p * &UniPoly::from_coeffs(vec![c, b, Rational::one()]);
    }
    (p, roots.len())
}
