//! Characteristic polynomials `det(tI - M)`, coefficients in ascending
//! degree order.

use super::{Matrix, Subspace};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// Monic characteristic polynomial of degree `n`.
///
/// Faddeev-LeVerrier over the rationals (it divides by `1..=n`, which is
/// only safe in characteristic zero); Hessenberg reduction over GF(p).
pub fn char_poly(m: &Matrix) -> Result<Vec<Scalar>> {
    m.require_square()?;
    if m.field().is_finite() {
        hessenberg(m)
    } else {
        faddeev_leverrier(m)
    }
}

pub fn faddeev_leverrier(m: &Matrix) -> Result<Vec<Scalar>> {
    let n = m.require_square()?;
    let field = m.field();
    if field.is_finite() && (field.characteristic() as usize) <= n {
        return Err(Error::PreconditionUnmet(format!(
            "Faddeev-LeVerrier needs characteristic above {n}"
        )));
    }
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut acc = Matrix::zeros(field, n, n);
    for k in 1..=n {
        // acc <- M * acc + c_{n-k+1} I
        let mut next = m.mul(&acc)?;
        let c = &coeffs[n - k + 1];
        for i in 0..n {
            let d = next.get(i, i) + c;
            next.set(i, i, d);
        }
        acc = next;
        let tr = m.mul(&acc)?.trace();
        coeffs[n - k] = -(&tr / &field.from_i64(k as i64));
    }
    Ok(coeffs)
}

/// Similarity reduction to upper Hessenberg form followed by the standard
/// determinant recurrence. Uses only field division by pivots, so it works
/// in every characteristic.
pub fn hessenberg(m: &Matrix) -> Result<Vec<Scalar>> {
    let n = m.require_square()?;
    let field = m.field();
    let mut h: Vec<Vec<Scalar>> = m.row_iter().map(<[Scalar]>::to_vec).collect();

    for col in 1..n {
        let Some(found) = (col..n).find(|&i| !h[i][col - 1].is_zero()) else {
            continue;
        };
        if found != col {
            h.swap(found, col);
            for row in h.iter_mut() {
                row.swap(found, col);
            }
        }
        let pivot_inv = h[col][col - 1].inv()?;
        for i in col + 1..n {
            let u = &h[i][col - 1] * &pivot_inv;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = &h[i][j] - &(&u * &h[col][j]);
                h[i][j] = v;
            }
            for row in h.iter_mut() {
                let v = &row[col] + &(&u * &row[i]);
                row[col] = v;
            }
        }
    }

    // p[k] = char poly of the leading k x k block
    let mut p: Vec<Vec<Scalar>> = vec![vec![field.one()]];
    for k in 1..=n {
        let m_idx = k - 1;
        // (t - h_kk) p_{k-1}
        let prev = &p[k - 1];
        let mut cur = vec![field.zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            cur[d + 1] = &cur[d + 1] + c;
            cur[d] = &cur[d] - &(c * &h[m_idx][m_idx]);
        }
        let mut prod = field.one();
        for i in 1..k {
            prod = &prod * &h[m_idx - i + 1][m_idx - i];
            let coef = &prod * &h[m_idx - i][m_idx];
            if coef.is_zero() {
                continue;
            }
            for (d, c) in p[k - i - 1].iter().enumerate() {
                cur[d] = &cur[d] - &(&coef * c);
            }
        }
        p.push(cur);
    }
    Ok(p.pop().expect("n + 1 entries"))
}

/// `ker(M - lambda I)`.
pub fn eigenspace(m: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    Ok(m.shift(lambda)?.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::linalg::Vector;

    fn mat(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows).unwrap()
    }

    fn ints(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn small_examples() {
        let q = Field::Q;
        assert_eq!(char_poly(&Matrix::zeros(q, 2, 2)).unwrap(), ints(q, &[0, 0, 1]));
        assert_eq!(char_poly(&mat(q, &[&[1, 0], &[0, 2]])).unwrap(), ints(q, &[2, -3, 1]));
        assert_eq!(char_poly(&mat(q, &[&[0, 1], &[0, 0]])).unwrap(), ints(q, &[0, 0, 1]));
        assert!(matches!(char_poly(&Matrix::zeros(q, 2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn methods_agree_over_rationals() {
        let m = mat(Field::Q, &[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, 1, 1], &[-3, 2, 2, 0]]);
        assert_eq!(faddeev_leverrier(&m).unwrap(), hessenberg(&m).unwrap());
    }

    #[test]
    fn eigenspaces() {
        let q = Field::Q;
        let id = Matrix::identity(q, 2);
        assert!(eigenspace(&id, &q.one()).unwrap().is_full());
        let d = mat(q, &[&[1, 0], &[0, 2]]);
        let e = eigenspace(&d, &q.one()).unwrap();
        assert_eq!(e, Subspace::span(q, 2, &[ints(q, &[1, 0])]).unwrap());
        assert!(matches!(
            eigenspace(&d, &Field::prime(3).unwrap().one()),
            Err(Error::FieldMismatch { .. })
        ));
    }
}
