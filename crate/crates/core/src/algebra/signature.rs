//! Exact count of positive eigenvalues of a symmetric integer matrix.
//!
//! The characteristic polynomial comes from Faddeev-LeVerrier over `Q`. Zero
//! eigenvalues are stripped as a power of `x`, the rest is split square-free
//! and each factor's roots in `(0, inf)` are counted with a Sturm sequence.

use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::qpoly::QPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Characteristic polynomial `det(x I - A)`, monic.
pub fn char_poly(a: &IntMatrix) -> QPoly {
    assert!(a.is_square());
    let n = a.rows();
    let am: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(a[(i, j)].clone())).collect())
        .collect();
    // c[k] is the coefficient of x^{n-k}.
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::from_integer(1.into());
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A * M_{k-1} + c_{k-1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    if !am[i][l].is_zero() && !m[l][j].is_zero() {
                        s += &am[i][l] * &m[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &c[k - 1];
        }
        m = next;
        // c_k = -tr(A M_k) / k
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                if !am[i][l].is_zero() && !m[l][i].is_zero() {
                    tr += &am[i][l] * &m[l][i];
                }
            }
        }
        c[k] = -tr / Rational::from_integer((k as i64).into());
    }
    QPoly::new(c.into_iter().rev().collect())
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct roots of a square-free `f` in `(0, inf)`, assuming `f(0) != 0`.
pub fn positive_roots_squarefree(f: &QPoly) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    let at_zero = sign_changes(seq.iter().map(|p| sign_of(&p.coeff(0))));
    let at_inf = sign_changes(seq.iter().map(QPoly::leading_sign));
    at_zero - at_inf
}

/// Number of strictly positive eigenvalues, counted with multiplicity.
pub fn sigma_plus(a: &IntMatrix) -> Result<usize> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let p = char_poly(a);
    let k = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = QPoly::new(p.coeffs()[k..].to_vec());
    Ok(stripped
        .squarefree_decomposition()
        .iter()
        .enumerate()
        .map(|(i, f)| (i + 1) * positive_roots_squarefree(f))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_small() {
        let a = IntMatrix::from_rows(&[vec![3, 1], vec![1, 2]]);
        assert_eq!(char_poly(&a), QPoly::from_ints(&[5, -5, 1]));
    }

    #[test]
    fn examples() {
        assert_eq!(sigma_plus(&IntMatrix::diagonal(&[1, -1])).unwrap(), 1);
        assert_eq!(sigma_plus(&IntMatrix::from_rows(&[vec![0, 2], vec![2, 0]])).unwrap(), 1);
        assert_eq!(sigma_plus(&IntMatrix::zeros(3, 3)).unwrap(), 0);
        assert_eq!(sigma_plus(&IntMatrix::identity(4)).unwrap(), 4);
        assert_eq!(sigma_plus(&IntMatrix::diagonal(&[2, 2, -3, 0])).unwrap(), 2);
        assert_eq!(
            sigma_plus(&IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn tridiagonal_chain_is_positive_definite() {
        let a = IntMatrix::from_rows(&[vec![3, 1, 0], vec![1, 2, 1], vec![0, 1, 3]]);
        assert_eq!(sigma_plus(&a).unwrap(), 3);
    }
}
