//! Multivariate gcd over `Q` by the recursive content / primitive-part method.
//!
//! A polynomial in `t_1..t_n` is viewed as univariate in its highest-index
//! live variable with coefficients in the remaining ones. Contents are taken
//! recursively and the primitive parts are run through a primitive
//! pseudo-remainder sequence. Monomial factors are split off first so the
//! same routine serves Laurent polynomials.

use super::laurent::{Exponent, MultiLaurent};
use super::rational::{integer_primitive, Rational};

/// Normalizes a nonzero polynomial to integer coefficients with no common
/// factor and a positive lex-leading coefficient.
pub fn normalize_scalar(f: &MultiLaurent) -> MultiLaurent {
    if f.is_zero() {
        return f.clone();
    }
    let (exps, mut coeffs): (Vec<Exponent>, Vec<Rational>) =
        f.terms().iter().map(|(e, c)| (e.clone(), c.clone())).unzip();
    integer_primitive(&mut coeffs);
    let mut g = MultiLaurent::from_terms(f.nvars(), exps.into_iter().zip(coeffs));
    if g.leading_sign() < 0 {
        g = -&g;
    }
    g
}

/// Highest-index variable with positive degree in `f`.
fn main_var(f: &MultiLaurent) -> Option<usize> {
    let max = f.max_exponents();
    (0..f.nvars()).rev().find(|&i| max[i] > 0)
}

fn degree(f: &MultiLaurent, v: usize) -> i32 {
    f.degree_in(v).map(|(_, hi)| hi).unwrap_or(0)
}

/// Content with respect to variable `v`: the gcd of all coefficients.
fn content(f: &MultiLaurent, v: usize) -> MultiLaurent {
    let mut g = MultiLaurent::zero(f.nvars());
    for c in f.coefficients_in(v).into_values() {
        g = poly_gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(f: &MultiLaurent, v: usize) -> MultiLaurent {
    let c = content(f, v);
    f.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn pseudo_rem(a: &MultiLaurent, b: &MultiLaurent, v: usize) -> MultiLaurent {
    let db = degree(b, v);
    let lb = b.coefficients_in(v).remove(&db).expect("leading coefficient");
    let mut r = a.clone();
    let n = r.nvars();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = degree(&r, v);
        if dr < db {
            return r;
        }
        let lr = r.coefficients_in(v).remove(&dr).expect("leading coefficient");
        let shift = MultiLaurent::var_pow(n, v, dr - db);
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
}

/// gcd of two polynomials with non-negative exponents, up to a scalar.
fn poly_gcd(f: &MultiLaurent, g: &MultiLaurent) -> MultiLaurent {
    if f.is_zero() {
        return normalize_scalar(g);
    }
    if g.is_zero() {
        return normalize_scalar(f);
    }
    let n = f.nvars();
    if f.is_constant() || g.is_constant() {
        return MultiLaurent::one(n);
    }
    if f.as_term().is_some() || g.as_term().is_some() {
        let m: Exponent = f
            .min_exponents()
            .iter()
            .zip(g.min_exponents())
            .map(|(a, b)| (*a).min(b))
            .collect();
        return MultiLaurent::monomial(m);
    }
    if f == g {
        return normalize_scalar(f);
    }
    let vf = main_var(f);
    let vg = main_var(g);
    let v = vf.max(vg).expect("nonconstant");
    let df = f.degree_in(v).map(|(_, h)| h).unwrap_or(0);
    let dg = g.degree_in(v).map(|(_, h)| h).unwrap_or(0);
    if df == 0 {
        return poly_gcd(f, &content(g, v));
    }
    if dg == 0 {
        return poly_gcd(&content(f, v), g);
    }
    let cf = content(f, v);
    let cg = content(g, v);
    let c = poly_gcd(&cf, &cg);
    let (mut a, mut b) = (
        f.div_exact(&cf).expect("content divides"),
        g.div_exact(&cg).expect("content divides"),
    );
    if degree(&a, v) < degree(&b, v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if degree(&r, v) == 0 {
            b = MultiLaurent::one(n);
            break;
        }
        a = b;
        b = normalize_scalar(&primitive_part(&r, v));
    }
    let h = if b.is_one() {
        b
    } else {
        primitive_part(&b, v)
    };
    normalize_scalar(&(&c * &h))
}

/// gcd in the Laurent ring, normalized to a polynomial with no monomial
/// factor, integer coefficients and positive lex-leading coefficient.
/// `gcd(0, 0)` is 0.
pub fn gcd(f: &MultiLaurent, g: &MultiLaurent) -> MultiLaurent {
    if f.is_zero() && g.is_zero() {
        return MultiLaurent::zero(f.nvars());
    }
    let (_, fp) = f.split_monomial();
    let (_, gp) = g.split_monomial();
    if f.is_zero() {
        return normalize_scalar(&gp);
    }
    if g.is_zero() {
        return normalize_scalar(&fp);
    }
    let h = poly_gcd(&fp, &gp);
    let (_, h) = h.split_monomial();
    if h.is_zero() {
        MultiLaurent::one(f.nvars())
    } else {
        normalize_scalar(&h)
    }
}

/// True when `g` is a unit of the Laurent ring (a nonzero scalar times a monomial).
pub fn is_unit(g: &MultiLaurent) -> bool {
    g.as_term().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn v(n: usize, i: usize) -> MultiLaurent {
        MultiLaurent::var(n, i)
    }

    #[test]
    fn univariate_gcd() {
        let x = v(1, 0);
        let one = MultiLaurent::one(1);
        let a = &(&x - &one) * &(&x + &MultiLaurent::constant(1, rat(2)));
        let b = &(&x - &one) * &(&x - &MultiLaurent::constant(1, rat(3)));
        assert_eq!(gcd(&a, &b), &x - &one);
    }

    #[test]
    fn multivariate_gcd_recovers_common_factor() {
        let n = 3;
        let (x, y, z) = (v(n, 0), v(n, 1), v(n, 2));
        let one = MultiLaurent::one(n);
        let common = &(&x * &y) - &(&z + &one);
        let a = &common * &(&(&x * &x) + &z);
        let b = &common * &(&y - &(&x * &z));
        let g = gcd(&a, &b);
        assert_eq!(g, normalize_scalar(&common));
    }

    #[test]
    fn laurent_monomials_are_units() {
        let n = 2;
        let a = MultiLaurent::antisym(n, 0, 2);
        let b = &a * &MultiLaurent::var_pow(n, 1, -3);
        let g = gcd(&a, &b);
        assert!(g.div_exact(&a).is_some() && a.div_exact(&g).is_some());
        assert!(gcd(&MultiLaurent::var_pow(n, 0, 5), &a).is_one());
    }

    #[test]
    fn coprime_gives_one() {
        let n = 2;
        let a = &v(n, 0) + &v(n, 1);
        let b = &v(n, 0) - &v(n, 1);
        assert!(gcd(&a, &b).is_one());
    }
}
