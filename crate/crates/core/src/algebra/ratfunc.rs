//! Rational functions `num / den` in Laurent variables, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::laurent::{Exponent, MultiLaurent};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den)` a unit and the lexicographically first
/// term of `den` equal to `1 * t^0`. Equality is therefore syntactic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiLaurent,
    den: MultiLaurent,
}

impl RatFunc {
    pub fn new(num: MultiLaurent, den: MultiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(num.nvars(), den.nvars(), "variable count mismatch");
        if num.is_zero() {
            return Ok(Self::zero(num.nvars()));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g)
                    .ok_or_else(|| Error::InternalExactnessFailure("gcd does not divide numerator".into()))?,
                den.div_exact(&g)
                    .ok_or_else(|| Error::InternalExactnessFailure("gcd does not divide denominator".into()))?,
            )
        };
        Ok(Self::normalize_unit(num, den))
    }

    /// Multiplies through by the inverse of the leading unit of `den`.
    fn normalize_unit(num: MultiLaurent, den: MultiLaurent) -> Self {
        let (e, c) = den.first_term().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let shift: Exponent = e.iter().map(|x| -x).collect();
        let inv = c.recip();
        RatFunc {
            num: num.mul_term(&shift, &inv),
            den: den.mul_term(&shift, &inv),
        }
    }

    pub fn from_poly(p: MultiLaurent) -> Self {
        let n = p.nvars();
        RatFunc {
            num: p,
            den: MultiLaurent::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiLaurent::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiLaurent::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(MultiLaurent::constant(nvars, c))
    }

    pub fn num(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn den(&self) -> &MultiLaurent {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this function equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiLaurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiLaurent) -> Self {
        self * &Self::from_poly(p.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one(self.nvars());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Applies the same exponent-level map to numerator and denominator.
    /// The map must be a ring automorphism-like substitution (such as
    /// `t -> t^2` or `t_i -> t_i^{-1}`) so that the result stays reduced up to
    /// re-normalization; reduction is redone anyway.
    pub fn map_both<F: Fn(&MultiLaurent) -> MultiLaurent>(&self, f: F) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }

    /// Substitutes `t_i -> c_i * y^{v_i}` (monomial images).
    pub fn substitute_monomials(&self, images: &[(Rational, Exponent)], target_nvars: usize) -> Result<Self> {
        let den = self.den.substitute_monomials(images, target_nvars);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Self::new(self.num.substitute_monomials(images, target_nvars), den)
    }

    /// Sets `t_i = value`, keeping the variable count.
    pub fn specialize(&self, i: usize, value: &Rational) -> Result<Self> {
        let den = self.den.specialize(i, value);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Self::new(self.num.specialize(i, value), den)
    }

    pub fn insert_var(&self, at: usize) -> Self {
        RatFunc {
            num: self.num.insert_var(at),
            den: self.den.insert_var(at),
        }
    }

    pub fn invert_vars(&self, which: &[bool]) -> Result<Self> {
        self.map_both(|p| p.invert_vars(which))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.render(names)
        } else {
            format!("({}) / ({})", self.num.render(names), self.den.render(names))
        }
    }
}

fn combine(a: &RatFunc, b: &RatFunc, sign: &Rational) -> RatFunc {
    if a.den == b.den {
        let num = &a.num + &b.num.scale(sign);
        return RatFunc::new(num, a.den.clone()).expect("nonzero denominator");
    }
    let g = gcd(&a.den, &b.den);
    let (ad, bd) = if g.is_one() {
        (a.den.clone(), b.den.clone())
    } else {
        (
            a.den.div_exact(&g).expect("gcd divides"),
            b.den.div_exact(&g).expect("gcd divides"),
        )
    };
    let num = &(&a.num * &bd) + &(&b.num * &ad).scale(sign);
    let den = &(&ad * &bd) * &g;
    RatFunc::new(num, den).expect("nonzero denominator")
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        combine(self, o, &Rational::one())
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        combine(self, o, &-Rational::one())
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        // Cross-cancel first so the products stay small.
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc::normalize_unit(&n1 * &n2, &d1 * &d2)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("t{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// `d(t_i^e) = 1 / (t_i^{2e} - t_i^{-2e})` in `nvars` variables.
pub fn kirby_weight(nvars: usize, i: usize, e: i32) -> RatFunc {
    RatFunc::new(MultiLaurent::one(nvars), MultiLaurent::antisym(nvars, i, 2 * e))
        .expect("t^2 - t^-2 is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn reduces_to_lowest_terms() {
        let n = 1;
        let a = MultiLaurent::antisym(n, 0, 2); // t^2 - t^-2 = (t - t^-1)(t + t^-1)
        let b = MultiLaurent::antisym(n, 0, 1);
        let f = RatFunc::new(b.clone(), a.clone()).unwrap();
        let expect = RatFunc::new(MultiLaurent::one(n), &MultiLaurent::var(n, 0) + &MultiLaurent::var_pow(n, 0, -1)).unwrap();
        assert_eq!(f, expect);
        assert!(f.den().first_term().unwrap().1.is_one());
        assert!(f.den().first_term().unwrap().0.iter().all(|&x| x == 0));
    }

    #[test]
    fn sum_of_inverse_weights() {
        // d(t) + d(t^-1) = 0
        let s = &kirby_weight(1, 0, 1) + &kirby_weight(1, 0, -1);
        assert!(s.is_zero());
    }

    #[test]
    fn field_operations() {
        let n = 2;
        let x = RatFunc::from_poly(&MultiLaurent::var(n, 0) + &MultiLaurent::constant(n, rat(1)));
        let y = kirby_weight(n, 1, 1);
        let z = &(&x * &y) + &x;
        let back = &z.try_div(&x).unwrap() - &y;
        assert!(back.is_one());
        assert!((&z - &z).is_zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(MultiLaurent::one(1), MultiLaurent::zero(1)),
            Err(Error::DivisionByZero)
        );
        let f = kirby_weight(1, 0, 1);
        assert_eq!(f.specialize(0, &rat(1)), Err(Error::DenominatorVanishes));
    }
}
