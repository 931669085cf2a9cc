use super::qfrac::QFrac;
use crate::error::{Error, Result};

/// Determinant of a square matrix over `Q(q)` by Gaussian elimination.
///
/// Pivots are chosen as the first nonzero entry in the column, so a
/// singular matrix yields zero rather than a division by zero.
pub fn det_qfrac(m: &[Vec<QFrac>]) -> Result<QFrac> {
    let n = m.len();
    if n == 0 {
        return Err(Error::arg("determinant of an empty matrix"));
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::arg("determinant of a non-square matrix"));
    }
    let mut a: Vec<Vec<QFrac>> = m.to_vec();
    let mut det = QFrac::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(QFrac::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -&det;
        }
        let pivot = a[col][col].clone();
        det = &det * &pivot;
        let inv = pivot
            .recip()
            .ok_or_else(|| Error::Internal("zero pivot".into()))?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q_factorial, QPoly};

    fn inv_fact(k: usize) -> QFrac {
        QFrac::recip_of(q_factorial(k))
    }

    #[test]
    fn small_determinants() {
        let one = det_qfrac(&[vec![inv_fact(2)]]).unwrap();
        assert_eq!(one, QFrac::recip_of(QPoly::from_dense(&[1, 1])));

        let m = vec![
            vec![inv_fact(2), QFrac::one()],
            vec![inv_fact(3), QFrac::one()],
        ];
        assert_eq!(det_qfrac(&m).unwrap(), &inv_fact(2) - &inv_fact(3));

        let id: Vec<Vec<QFrac>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { QFrac::one() } else { QFrac::zero() })
                    .collect()
            })
            .collect();
        assert_eq!(det_qfrac(&id).unwrap(), QFrac::one());
    }

    #[test]
    fn swaps_and_singular() {
        let m = vec![
            vec![QFrac::zero(), QFrac::one()],
            vec![QFrac::one(), QFrac::zero()],
        ];
        assert_eq!(det_qfrac(&m).unwrap(), -&QFrac::one());
        let s = vec![
            vec![inv_fact(2), inv_fact(2)],
            vec![inv_fact(2), inv_fact(2)],
        ];
        assert!(det_qfrac(&s).unwrap().is_zero());
        assert!(det_qfrac(&[vec![QFrac::one(), QFrac::one()]]).is_err());
        assert!(det_qfrac(&[]).is_err());
    }
}
