//! Matrices over an exact ring, fraction-free determinants, and Sylvester
//! resultants.

use super::{AlgebraError, Ring, UniPoly};

/// Dense row-major matrix with entries in an exact ring.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> PolyMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Exact determinant by fraction-free Bareiss elimination. Every interior
/// division is exact in the ring, so the result stays in R with no fractions
/// introduced along the way.
pub fn bareiss_determinant<R: Ring>(m: &PolyMatrix<R>) -> Result<R, AlgebraError> {
    if m.rows != m.cols {
        return Err(AlgebraError::NonSquareMatrix {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(R::zero()),
            }
        }
        let pivot = a.at(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    pivot.clone() * a.at(i, j).clone() - a.at(i, k).clone() * a.at(k, j).clone();
                let q = num
                    .div_exact(&prev)
                    .expect("Bareiss interior division is exact by construction");
                a.entries[i * n + j] = q;
            }
            a.entries[i * n + k] = R::zero();
        }
        prev = pivot;
    }
    let det = a.at(n - 1, n - 1).clone();
    Ok(if sign_flip { -det } else { det })
}

/// Sylvester matrix of two polynomials of positive degree: the first
/// `deg q` rows carry the coefficients of `p`, the remaining `deg p` rows
/// those of `q`, both written highest degree first.
pub fn sylvester_matrix<R: Ring>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
) -> Result<PolyMatrix<R>, AlgebraError> {
    let (m, n) = match (p.degree(), q.degree()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => (m, n),
        _ => return Err(AlgebraError::ConstantResultant),
    };
    let size = m + n;
    Ok(PolyMatrix::from_fn(size, size, |i, j| {
        if i < n {
            // row of p coefficients, shifted right by i
            if j >= i && j <= i + m {
                p.coeff(m - (j - i))
            } else {
                R::zero()
            }
        } else {
            let shift = i - n;
            if j >= shift && j <= shift + n {
                q.coeff(n - (j - shift))
            } else {
                R::zero()
            }
        }
    }))
}

/// Resultant as the determinant of the Sylvester matrix, exact in R.
pub fn sylvester_resultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<R, AlgebraError> {
    bareiss_determinant(&sylvester_matrix(p, q)?)
}

/// Discriminant via the resultant with the derivative:
/// disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lead(p).
pub fn discriminant<R: Ring>(p: &UniPoly<R>) -> Result<R, AlgebraError> {
    let n = p
        .degree()
        .filter(|&n| n >= 2)
        .ok_or(AlgebraError::ConstantResultant)?;
    let res = sylvester_resultant(p, &p.derivative())?;
    let lead = p.leading().expect("degree >= 2 implies nonzero");
    let signed = if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    };
    signed.div_exact(lead).ok_or(AlgebraError::InexactDivision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, MultiPoly, Rational};

    fn poly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn determinant_small_cases() {
        let g = MultiPoly::generator(0);
        let one_by_one = PolyMatrix::new(1, 1, vec![g.clone()]);
        assert_eq!(bareiss_determinant(&one_by_one).unwrap(), g);

        // diagonal 2x2 over the generators
        let [a, _, _, _, e] = MultiPoly::generators();
        let m = PolyMatrix::new(
            2,
            2,
            vec![a.clone(), MultiPoly::new(), MultiPoly::new(), e.clone()],
        );
        assert_eq!(bareiss_determinant(&m).unwrap(), a * e);
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = PolyMatrix::new(1, 2, vec![rat_int(1), rat_int(2)]);
        assert!(matches!(
            bareiss_determinant(&m),
            Err(AlgebraError::NonSquareMatrix { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn determinant_with_pivoting() {
        // leading zero pivot forces a row swap
        let m = PolyMatrix::new(
            3,
            3,
            [0, 2, 1, 1, 0, 0, 3, 1, 1]
                .iter()
                .map(|&c| rat_int(c))
                .collect(),
        );
        // det = 1*(2*0-1*1) - ... expand by second row: -1 * det[[2,1],[1,1]] = -1
        assert_eq!(bareiss_determinant(&m).unwrap(), rat_int(-1));
    }

    #[test]
    fn resultant_pinned_values() {
        // Res(t^2 - 1, 2t) = -4: 3x3 Sylvester determinant
        assert_eq!(
            sylvester_resultant(&poly(&[-1, 0, 1]), &poly(&[0, 2])).unwrap(),
            rat_int(-4)
        );
        // Res(t - 1, t - 2): the 2x2 determinant [[1,-1],[1,-2]]
        assert_eq!(
            sylvester_resultant(&poly(&[-1, 1]), &poly(&[-2, 1])).unwrap(),
            rat_int(-1)
        );
        // constant inputs rejected
        assert!(sylvester_resultant(&poly(&[5]), &poly(&[0, 1])).is_err());
    }

    #[test]
    fn discriminant_pins_the_sign_convention() {
        // disc(t^4 + 1) = 256
        assert_eq!(discriminant(&poly(&[1, 0, 0, 0, 1])).unwrap(), rat_int(256));
        // disc(t^2 + bt + c) = b^2 - 4c, checked at b=3, c=1
        assert_eq!(discriminant(&poly(&[1, 3, 1])).unwrap(), rat_int(5));
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        let p = &poly(&[-1, 1]) * &poly(&[-2, 1]); // (t-1)(t-2)
        let q = &poly(&[-1, 1]) * &poly(&[3, 1]); // (t-1)(t+3)
        assert_eq!(sylvester_resultant(&p, &q).unwrap(), rat_int(0));
    }
}
