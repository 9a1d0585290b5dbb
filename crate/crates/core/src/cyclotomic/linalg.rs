//! Dense exact linear algebra over the rationals, only as much as the field layer needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Solves `m * x = rhs` for square `m` by Gauss-Jordan elimination.
///
/// Returns `None` when `m` is singular.
pub(crate) fn solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n) && rhs.len() == n);

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);

        let inv = BigRational::one() / &m[col][col];
        for x in &mut m[col][col..] {
            *x = &*x * &inv;
        }
        rhs[col] = &rhs[col] * &inv;

        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_row = m[col].clone();
            for (x, y) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
            let t = &factor * &rhs[col];
            rhs[r] -= t;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solves_small_system() {
        // x + 2y = 5, 3x - y = 1  =>  x = 1, y = 2
        let m = vec![vec![r(1, 1), r(2, 1)], vec![r(3, 1), r(-1, 1)]];
        let x = solve(m, vec![r(5, 1), r(1, 1)]).unwrap();
        assert_eq!(x, vec![r(1, 1), r(2, 1)]);
    }

    #[test]
    fn singular_is_none() {
        let m = vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(4, 1)]];
        assert!(solve(m, vec![r(1, 1), r(1, 1)]).is_none());
    }

    #[test]
    fn needs_pivoting() {
        let m = vec![vec![r(0, 1), r(1, 1)], vec![r(1, 2), r(0, 1)]];
        let x = solve(m, vec![r(3, 1), r(1, 1)]).unwrap();
        assert_eq!(x, vec![r(2, 1), r(3, 1)]);
    }
}
