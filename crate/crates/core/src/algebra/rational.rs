//! Arbitrary-precision rationals and their canonical text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `"a/b"` string; the denominator is always written, even when it is 1.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"a/b"` or a bare integer `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Rewrites a list of rationals as integers with no common factor, scaled by a
/// positive rational. Returns the scale factor that was divided out.
pub fn integer_primitive(coeffs: &mut [Rational]) -> Rational {
    if coeffs.iter().all(Zero::is_zero) {
        return Rational::one();
    }
    let mut lcm = BigInt::one();
    for c in coeffs.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for c in coeffs.iter() {
        let n = c.numer() * (&lcm / c.denom());
        g = g.gcd(&n);
    }
    let scale = Rational::new(g.abs(), lcm);
    for c in coeffs.iter_mut() {
        *c = &*c / &scale;
    }
    scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_always_has_denominator() {
        assert_eq!(format_rational(&rat(3)), "3/1");
        assert_eq!(format_rational(&rat_frac(-6, 4)), "-3/2");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat_frac(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let mut v = vec![rat_frac(1, 2), rat_frac(-3, 4)];
        let s = integer_primitive(&mut v);
        assert_eq!(v, vec![rat(2), rat(-3)]);
        assert_eq!(s, rat_frac(1, 4));
    }
}
