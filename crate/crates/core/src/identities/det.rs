use alloc::vec::Vec;

use crate::exactalg::Rational;

/// Row `k` holds the coefficients of `(u-1)^k u^{n-k}` in the basis
/// `u^n, u^{n-1}, ..., 1`.
pub fn independence_matrix(n: u32) -> Vec<Vec<Rational>> {
    (0..=n)
        .map(|k| {
            (0..=n)
                .map(|j| {
                    if j <= k {
                        &Rational::binomial(k, j) * &Rational::sign_pow(j)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Exact determinant by Gaussian elimination with row pivoting.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        let inv = p.recip().expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *dst = &*dst - &(&f * src);
            }
        }
    }
    det
}

/// Signed determinant of [`independence_matrix`]. Its absolute value is 1
/// for every `n`, so the polynomials `(u-1)^k u^{n-k}` are a basis.
pub fn independence_det(n: u32) -> Rational {
    let det = determinant(independence_matrix(n));
    debug_assert!(det == Rational::one() || det == -Rational::one());
    det
}
