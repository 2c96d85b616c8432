//! Sparse multivariate Laurent polynomials over `Q`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! is lexicographic and zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(vec![0; nvars], c)
    }

    pub fn term(exp: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn monomial(exp: Exponent) -> Self {
        Self::term(exp, Rational::one())
    }

    /// The variable `t_i` raised to `e`.
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = e;
        Self::monomial(exp)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// `t_i^e - t_i^{-e}`, the building block of every formula in this crate.
    pub fn antisym(nvars: usize, i: usize, e: i32) -> Self {
        &Self::var_pow(nvars, i, e) - &Self::var_pow(nvars, i, -e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// A single term `c * t^e`.
    pub fn as_term(&self) -> Option<(&Exponent, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically smallest and largest terms.
    pub fn first_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next()
    }

    pub fn last_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `c * t^shift`.
    pub fn mul_term(&self, shift: &[i32], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Per-variable minimum exponent (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Exponent {
        let mut m: Option<Exponent> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(cur) => cur.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn max_exponents(&self) -> Exponent {
        let mut m: Option<Exponent> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(cur) => cur.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Applies an exponent map `e -> f(e)` to every term; terms that collide add up.
    pub fn map_exponents<F: Fn(&[i32]) -> Exponent>(&self, nvars: usize, f: F) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in &self.terms {
            p.add_term(f(e), c.clone());
        }
        p
    }

    /// `t_i -> t_i^{k}` for every variable.
    pub fn power_substitute(&self, k: i32) -> Self {
        self.map_exponents(self.nvars, |e| e.iter().map(|x| x * k).collect())
    }

    /// `t_i -> t_i^{-1}` for the variables flagged in `which`.
    pub fn invert_vars(&self, which: &[bool]) -> Self {
        self.map_exponents(self.nvars, |e| {
            e.iter()
                .zip(which)
                .map(|(x, &w)| if w { -x } else { *x })
                .collect()
        })
    }

    /// Substitutes `t_i -> c_i * y^{v_i}` where each image is a monomial in a
    /// (possibly different) set of variables.
    pub fn substitute_monomials(&self, images: &[(Rational, Exponent)], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut p = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut exp = vec![0i32; target_nvars];
            let mut coeff = c.clone();
            for (&k, (ci, vi)) in e.iter().zip(images) {
                if k == 0 {
                    continue;
                }
                for (x, v) in exp.iter_mut().zip(vi) {
                    *x += k * v;
                }
                if !ci.is_one() {
                    coeff *= pow_rational(ci, k);
                }
            }
            p.add_term(exp, coeff);
        }
        p
    }

    /// Sets `t_i = value` for a single variable, keeping the variable count.
    pub fn specialize(&self, i: usize, value: &Rational) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[i], 0);
            p.add_term(e2, c * pow_rational(value, k));
        }
        p
    }

    /// Inserts a fresh variable at position `at` with exponent zero everywhere.
    pub fn insert_var(&self, at: usize) -> Self {
        self.map_exponents(self.nvars + 1, |e| {
            let mut v = e.to_vec();
            v.insert(at, 0);
            v
        })
    }

    /// Degree range of variable `i`.
    pub fn degree_in(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Splits into coefficients of powers of `t_i`: `self = sum_k c_k t_i^k`,
    /// where each `c_k` has exponent zero in `t_i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, MultiLaurent> {
        let mut out: BTreeMap<i32, MultiLaurent> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[i], 0);
            out.entry(k)
                .or_insert_with(|| MultiLaurent::zero(self.nvars))
                .terms
                .insert(e2, c.clone());
        }
        out
    }

    /// Exact division. Returns `None` when `d` does not divide `self` in the
    /// Laurent ring.
    pub fn div_exact(&self, d: &MultiLaurent) -> Option<MultiLaurent> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some((e, c)) = d.as_term() {
            let shift: Exponent = e.iter().map(|x| -x).collect();
            return Some(self.mul_term(&shift, &c.recip()));
        }
        // Both sides are shifted to honest polynomials; a monomial-free divisor
        // divides in the Laurent ring iff it divides the shifted numerator.
        let dmin = d.min_exponents();
        let dshift: Exponent = dmin.iter().map(|x| -x).collect();
        let dp = d.mul_term(&dshift, &Rational::one());
        let fmin = self.min_exponents();
        let fshift: Exponent = fmin.iter().map(|x| -x).collect();
        let fp = self.mul_term(&fshift, &Rational::one());
        let q = fp.poly_div_exact(&dp)?;
        let back: Exponent = fmin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
        Some(q.mul_term(&back, &Rational::one()))
    }

    /// Polynomial division by lex-leading terms; both sides must be polynomials.
    fn poly_div_exact(&self, d: &MultiLaurent) -> Option<MultiLaurent> {
        let (lead_e, lead_c) = d.last_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let lead_inv = lead_c.recip();
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.last_term().map(|(e, c)| (e.clone(), c.clone())) {
            let shift: Exponent = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if shift.iter().any(|&x| x < 0) {
                return None;
            }
            let c = rc * &lead_inv;
            for (e, x) in &d.terms {
                let ne: Exponent = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                r.add_term(ne, -(x * &c));
            }
            q.add_term(shift, c);
        }
        Some(q)
    }

    /// Splits off the largest monomial factor: `self = t^m * rest`.
    pub fn split_monomial(&self) -> (Exponent, MultiLaurent) {
        let m = self.min_exponents();
        let neg: Exponent = m.iter().map(|x| -x).collect();
        (m, self.mul_term(&neg, &Rational::one()))
    }

    /// Evaluation at rational points (all variables).
    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (&k, x) in e.iter().zip(point) {
                if k != 0 {
                    if x.is_zero() && k < 0 {
                        return Err(Error::DenominatorVanishes);
                    }
                    v *= pow_rational(x, k);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Sign of the lexicographically largest term.
    pub fn leading_sign(&self) -> i32 {
        match self.last_term() {
            Some((_, c)) if c.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }
}

pub fn pow_rational(x: &Rational, k: i32) -> Rational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl Add for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, o: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut p = big.clone();
        for (e, c) in &small.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, o: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), -c);
        }
        p
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, o: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut p = MultiLaurent::zero(self.nvars);
        for (e, c) in &small.terms {
            for (e2, c2) in &big.terms {
                let ne: Exponent = e.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(ne, c * c2);
            }
        }
        p
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-readable form using `t1, t2, ...` as variable names.
impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

impl MultiLaurent {
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k != 0)
                .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format_rational(&abs)
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&coeff),
                (false, true) => out.push_str(&mono.join("*")),
                (false, false) => {
                    out.push_str(&coeff);
                    out.push('*');
                    out.push_str(&mono.join("*"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn t(i: usize) -> MultiLaurent {
        MultiLaurent::var(2, i)
    }

    #[test]
    fn arithmetic_basics() {
        let a = &t(0) + &t(1);
        let b = &t(0) - &t(1);
        let prod = &a * &b;
        let expect = &MultiLaurent::var_pow(2, 0, 2) - &MultiLaurent::var_pow(2, 1, 2);
        assert_eq!(prod, expect);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_laurent() {
        let a = MultiLaurent::antisym(2, 0, 2); // t^2 - t^-2
        let f = &a * &MultiLaurent::antisym(2, 1, 1);
        assert_eq!(f.div_exact(&a), Some(MultiLaurent::antisym(2, 1, 1)));
        let one_minus = &MultiLaurent::one(2) - &t(0);
        assert_eq!(
            MultiLaurent::antisym(2, 1, 1).div_exact(&one_minus),
            None
        );
    }

    #[test]
    fn specialize_and_substitute() {
        let f = &MultiLaurent::antisym(2, 0, 1) * &MultiLaurent::var_pow(2, 1, 3);
        let g = f.specialize(1, &rat(1));
        assert_eq!(g, MultiLaurent::antisym(2, 0, 1));
        // t1 -> s^2, t2 -> s^-1 in one variable
        let h = f.substitute_monomials(&[(rat(1), vec![2]), (rat(1), vec![-1])], 1);
        let expect = &MultiLaurent::var_pow(1, 0, -1) - &MultiLaurent::var_pow(1, 0, -5);
        assert_eq!(h, expect);
    }

    #[test]
    fn render_is_readable() {
        let f = &MultiLaurent::antisym(2, 1, 2) - &MultiLaurent::constant(2, rat(3));
        assert_eq!(f.to_string(), "t2^2 - 3 - t2^-2");
    }
}
