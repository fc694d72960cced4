//! Independent ground truth: an exact root-counting positivity oracle, a
//! floating-point sampling sanity check, and reproducible random form
//! generators for the equivalence fuzz suite.

use crate::algebra::{rat, rat_int, sturm_count_real_roots, Rational};
use crate::invariants::FormCoefficients;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Exact positivity: the form is strictly positive iff its leading
/// coefficient is positive and the dehomogenization `a(t, 1)` has no real
/// roots. With a positive leading coefficient the polynomial tends to
/// +infinity both ways, so zero real roots means positive everywhere, and
/// the remaining ray is covered by the leading coefficient itself.
pub fn oracle_positive(c: &FormCoefficients) -> bool {
    if c.a1111 <= Rational::zero() {
        return false;
    }
    let p1 = c.dehomogenized_first();
    sturm_count_real_roots(&p1).expect("nonzero leading coefficient") == 0
}

/// Result of the floating-point circle sampling check; advisory only.
#[derive(Clone, PartialEq, Debug)]
pub enum SampleVerdict {
    Consistent,
    /// A sampled value contradicted a claimed-positive verdict.
    Suspicious {
        min_value: f64,
        theta: f64,
    },
}

/// Evaluates the form at `n` points (cos t, sin t) on the unit circle and
/// reports whether the sampled signs contradict the supplied verdict. A
/// not-positive claim cannot be contradicted by finitely many samples; a
/// positive claim is contradicted by any sample below a rounding allowance
/// proportional to the coefficient size.
pub fn sample_check(c: &FormCoefficients, claimed_positive: bool, n: usize) -> SampleVerdict {
    assert!(n >= 8, "sample grid too coarse");
    let coeffs: Vec<f64> = c
        .to_array()
        .iter()
        .map(|r| r.to_f64().unwrap_or(f64::NAN))
        .collect();
    let weights = [1.0, 4.0, 6.0, 4.0, 1.0];
    let scale: f64 = coeffs.iter().zip(weights).map(|(c, w)| (c * w).abs()).sum();
    let tolerance = scale * f64::EPSILON * 64.0;
    let mut min_value = f64::INFINITY;
    let mut min_theta = 0.0;
    for k in 0..n {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
        let (x, y) = (theta.cos(), theta.sin());
        let value = coeffs[0] * x.powi(4)
            + 4.0 * coeffs[1] * x.powi(3) * y
            + 6.0 * coeffs[2] * x * x * y * y
            + 4.0 * coeffs[3] * x * y.powi(3)
            + coeffs[4] * y.powi(4);
        if value < min_value {
            min_value = value;
            min_theta = theta;
        }
    }
    if claimed_positive && min_value < -tolerance {
        SampleVerdict::Suspicious {
            min_value,
            theta: min_theta,
        }
    } else {
        SampleVerdict::Consistent
    }
}

/// Generation profile for random forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Profile {
    /// Five independent coefficients with uniform numerator and denominator.
    Uniform,
    /// Sums of two squared quadratics: nonnegative by construction.
    Sos,
    /// Products of four real linear forms: never strictly positive.
    Indefinite,
    /// Cycles a curated list of boundary fixtures.
    Boundary,
}

impl Profile {
    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Uniform => "uniform",
            Profile::Sos => "sos",
            Profile::Indefinite => "indefinite",
            Profile::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Profile::Uniform),
            "sos" => Ok(Profile::Sos),
            "indefinite" => Ok(Profile::Indefinite),
            "boundary" => Ok(Profile::Boundary),
            other => Err(format!(
                "unknown profile '{other}' (expected uniform|sos|indefinite|boundary)"
            )),
        }
    }
}

/// Numerator/denominator ranges for the uniform profile.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bounds {
    pub num_min: i64,
    pub num_max: i64,
    pub den_min: i64,
    pub den_max: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            num_min: -20,
            num_max: 20,
            den_min: 1,
            den_max: 8,
        }
    }
}

/// Deterministic, splittable form source: form `i` of seed `s` is a pure
/// function of `(s, i)`, so index ranges can be partitioned across workers
/// with reproducible results.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormGenerator {
    pub seed: u64,
    pub profile: Profile,
    pub bounds: Bounds,
}

/// Curated boundary fixtures, cycled by the boundary profile: a fourth
/// power, a square of a definite quadratic, a sum of fourth powers, the two
/// single-monomial degenerate forms, a square of an indefinite quadratic,
/// and two forms whose first reduction has r = 0 despite a nonzero shift.
fn boundary_fixture(index: u64) -> FormCoefficients {
    match index % 8 {
        0 => FormCoefficients::from_ints([1, -1, 1, -1, 1]),
        1 => FormCoefficients::from_array([
            rat_int(1),
            rat_int(0),
            rat(1, 3),
            rat_int(0),
            rat_int(1),
        ]),
        2 => FormCoefficients::from_ints([1, 0, 0, 0, 1]),
        3 => FormCoefficients::from_ints([1, 0, 0, 0, 0]),
        4 => FormCoefficients::from_ints([0, 0, 0, 0, 1]),
        5 => FormCoefficients::from_array([
            rat_int(1),
            rat_int(0),
            rat(-1, 3),
            rat_int(0),
            rat_int(1),
        ]),
        6 => FormCoefficients::from_ints([1, 1, 1, 1, 1]),
        _ => FormCoefficients::from_ints([1, 1, 1, 1, 2]),
    }
}

impl FormGenerator {
    pub fn new(seed: u64, profile: Profile) -> Self {
        FormGenerator {
            seed,
            profile,
            bounds: Bounds::default(),
        }
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        assert!(
            bounds.num_min <= bounds.num_max
                && 0 < bounds.den_min
                && bounds.den_min <= bounds.den_max,
            "empty coefficient range"
        );
        self.bounds = bounds;
        self
    }

    fn rng_at(&self, index: u64) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..16].copy_from_slice(&index.to_le_bytes());
        key[16..24].copy_from_slice(&(self.profile as u64).to_le_bytes());
        key[24..32].copy_from_slice(b"qformgen");
        ChaCha8Rng::from_seed(key)
    }

    /// The `index`-th form of the sequence.
    pub fn form_at(&self, index: u64) -> FormCoefficients {
        match self.profile {
            Profile::Boundary => boundary_fixture(index),
            Profile::Uniform => {
                let mut rng = self.rng_at(index);
                let b = self.bounds;
                let mut coeff = || {
                    rat(
                        rng.gen_range(b.num_min..=b.num_max),
                        rng.gen_range(b.den_min..=b.den_max),
                    )
                };
                FormCoefficients::from_array([coeff(), coeff(), coeff(), coeff(), coeff()])
            }
            Profile::Sos => {
                let mut rng = self.rng_at(index);
                let mut draw = || rng.gen_range(-6i64..=6);
                let q1 = [draw(), draw(), draw()];
                let q2 = [draw(), draw(), draw()];
                let m = |k: usize| -> i64 {
                    let quad = |q: [i64; 3]| match k {
                        0 => q[0] * q[0],
                        1 => 2 * q[0] * q[1],
                        2 => q[1] * q[1] + 2 * q[0] * q[2],
                        3 => 2 * q[1] * q[2],
                        _ => q[2] * q[2],
                    };
                    quad(q1) + quad(q2)
                };
                FormCoefficients::from_monomial_coeffs([
                    rat_int(m(0)),
                    rat_int(m(1)),
                    rat_int(m(2)),
                    rat_int(m(3)),
                    rat_int(m(4)),
                ])
            }
            Profile::Indefinite => {
                let mut rng = self.rng_at(index);
                let mut factor = || loop {
                    let p = rng.gen_range(-5i64..=5);
                    let q = rng.gen_range(-5i64..=5);
                    if p != 0 || q != 0 {
                        return (p, q);
                    }
                };
                // expand the product of four real linear forms px + qy
                let mut monomial = [0i64; 5]; // coefficients of x^4 .. y^4
                monomial[0] = 1;
                for degree in 0..4usize {
                    let (p, q) = factor();
                    let mut next = [0i64; 5];
                    for (k, &m) in monomial.iter().enumerate().take(degree + 1) {
                        next[k] += p * m;
                        next[k + 1] += q * m;
                    }
                    monomial = next;
                }
                FormCoefficients::from_monomial_coeffs(monomial.map(rat_int))
            }
        }
    }

    /// The first `count` forms.
    pub fn generate(&self, count: u64) -> Vec<FormCoefficients> {
        (0..count).map(|i| self.form_at(i)).collect()
    }
}
