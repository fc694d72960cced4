//! Basis changes and the pseudotensor transformation law.

use super::{Pseudotensor, TensorError, Variance};
use crate::algebra::{Rational, Ring};
use crate::invariants::FormCoefficients;
use num_traits::{One, Zero};

/// An invertible change of basis: `S` maps old basis vectors to new ones,
/// `T = S^-1`, both held exactly.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisChange {
    s: [[Rational; 2]; 2],
    t: [[Rational; 2]; 2],
    det_s: Rational,
    det_t: Rational,
}

impl BasisChange {
    /// Builds from the direct transition matrix; rejects singular input.
    pub fn from_direct(s: [[Rational; 2]; 2]) -> Result<Self, TensorError> {
        let det_s = &s[0][0] * &s[1][1] - &s[0][1] * &s[1][0];
        if det_s.is_zero() {
            return Err(TensorError::SingularMatrix);
        }
        let t = [
            [&s[1][1] / &det_s, -(&s[0][1] / &det_s)],
            [-(&s[1][0] / &det_s), &s[0][0] / &det_s],
        ];
        let det_t = Rational::one() / &det_s;
        Ok(BasisChange { s, t, det_s, det_t })
    }

    pub fn identity() -> Self {
        let one = Rational::one;
        let zero = Rational::zero;
        BasisChange {
            s: [[one(), zero()], [zero(), one()]],
            t: [[one(), zero()], [zero(), one()]],
            det_s: one(),
            det_t: one(),
        }
    }

    /// The basis change going the other way (swaps the roles of S and T).
    pub fn inverse(&self) -> Self {
        BasisChange {
            s: self.t.clone(),
            t: self.s.clone(),
            det_s: self.det_t.clone(),
            det_t: self.det_s.clone(),
        }
    }

    pub fn direct(&self) -> &[[Rational; 2]; 2] {
        &self.s
    }

    pub fn inverse_matrix(&self) -> &[[Rational; 2]; 2] {
        &self.t
    }

    pub fn det_t(&self) -> &Rational {
        &self.det_t
    }

    /// (det T)^m for a signed weight.
    pub fn det_t_power(&self, m: i32) -> Rational {
        let base = if m >= 0 { &self.det_t } else { &self.det_s };
        let mut acc = Rational::one();
        for _ in 0..m.unsigned_abs() {
            acc *= base;
        }
        acc
    }
}

/// New-basis components of a pseudotensor: every lower slot is contracted
/// with S, every upper slot with T, and the whole array is scaled by
/// (det S)^weight. Applying the operation again with the inverse basis
/// change recovers the original components exactly.
pub fn transform_components<R: Ring>(t: &Pseudotensor<R>, b: &BasisChange) -> Pseudotensor<R> {
    let rank = t.rank();
    let mut comps = t.components().to_vec();
    // contract one slot at a time
    for slot in 0..rank {
        let matrix = match t.variances()[slot] {
            Variance::Lower => &b.s, // new_q = sum_j S[j][q] old_j
            Variance::Upper => &b.t, // new_p = sum_i T[p][i] old_i
        };
        let shift = rank - 1 - slot;
        let mut next = vec![R::zero(); comps.len()];
        #[allow(clippy::needless_range_loop)]
        for (idx, value) in comps.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let old_bit = (idx >> shift) & 1;
            for new_bit in 0..2usize {
                let factor = match t.variances()[slot] {
                    Variance::Lower => &matrix[old_bit][new_bit],
                    Variance::Upper => &matrix[new_bit][old_bit],
                };
                if factor.is_zero() {
                    continue;
                }
                let target = (idx & !(1 << shift)) | (new_bit << shift);
                next[target] = next[target].clone() + value.scale(factor);
            }
        }
        comps = next;
    }
    let det_factor = b.det_t_power(-t.weight()); // (det S)^m
    let comps = comps.iter().map(|c| c.scale(&det_factor)).collect();
    Pseudotensor::new(t.variances().to_vec(), t.weight(), comps)
}

/// The coefficients of the form after the basis change, read off the
/// transformed rank-4 tensor.
pub fn transform_form(c: &FormCoefficients, b: &BasisChange) -> FormCoefficients {
    let t = super::symmetric_form_tensor(&c.to_array());
    let new = transform_components(&t, b);
    FormCoefficients::new(
        new.component(&[1, 1, 1, 1]).clone(),
        new.component(&[1, 1, 1, 2]).clone(),
        new.component(&[1, 1, 2, 2]).clone(),
        new.component(&[1, 2, 2, 2]).clone(),
        new.component(&[2, 2, 2, 2]).clone(),
    )
}
