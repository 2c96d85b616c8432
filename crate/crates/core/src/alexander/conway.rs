//! Normalization of the Alexander polynomial to the Conway function.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Signed};


use super::fox::{fox_alexander, value_at_one};
use crate::algebra::{Exponent, MultiLaurent, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::linkdiag::{DiagramShape, LinkDiagram};

/// Memo table for Conway functions, keyed by the unframed diagram. Owned by
/// the caller; safe to share between threads.
#[derive(Default)]
pub struct ConwayCache {
    map: Mutex<HashMap<DiagramShape, RatFunc>>,
}

impl ConwayCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Shifts `p` so that each variable's exponent range is centred on 0.
fn centre(p: &MultiLaurent) -> Option<MultiLaurent> {
    let lo = p.min_exponents();
    let hi = p.max_exponents();
    let mut shift: Exponent = Vec::with_capacity(p.nvars());
    for (a, b) in lo.iter().zip(&hi) {
        if (a + b) % 2 != 0 {
            return None;
        }
        shift.push(-(a + b) / 2);
    }
    Some(p.mul_term(&shift, &Rational::one()))
}

fn invert_all(p: &MultiLaurent) -> MultiLaurent {
    p.invert_vars(&vec![true; p.nvars()])
}

/// `T - T^{-1}` with `T = prod_{i != j} t_i^{lk_ij}`, and `t_j` kept as a
/// dummy variable.
fn torres_factor(r: usize, j: usize, lk: &[Vec<i64>]) -> MultiLaurent {
    let e: Exponent = (0..r)
        .map(|i| if i == j { 0 } else { lk[i][j] as i32 })
        .collect();
    let neg: Exponent = e.iter().map(|x| -x).collect();
    &MultiLaurent::monomial(e) - &MultiLaurent::monomial(neg)
}

/// Conway function of a knot diagram from its Alexander polynomial.
fn conway_knot(delta: &MultiLaurent) -> Result<RatFunc> {
    let sq = delta.power_substitute(2);
    let mut num = centre(&sq).ok_or(Error::AsymmetricInput)?;
    if num != invert_all(&num) {
        return Err(Error::AsymmetricInput);
    }
    if value_at_one(&num).is_negative() {
        num = -&num;
    }
    RatFunc::new(num, MultiLaurent::antisym(1, 0, 1))
}

pub fn conway(d: &LinkDiagram, cache: &ConwayCache) -> Result<RatFunc> {
    let key = d.shape();
    if let Some(f) = cache.map.lock().expect("cache lock").get(&key) {
        return Ok(f.clone());
    }
    let f = conway_uncached(d, cache)?;
    cache.map.lock().expect("cache lock").insert(key, f.clone());
    Ok(f)
}

fn conway_uncached(d: &LinkDiagram, cache: &ConwayCache) -> Result<RatFunc> {
    let r = d.components();
    let delta = fox_alexander(d)?;
    if delta.is_zero() {
        return Ok(RatFunc::zero(r));
    }
    if r == 1 {
        return conway_knot(delta.poly());
    }
    let sq = delta.poly().power_substitute(2);
    let f = centre(&sq).ok_or(Error::AsymmetricInput)?;
    let sym = if r % 2 == 0 { f.clone() } else { -&f };
    if invert_all(&f) != sym {
        return Err(Error::AsymmetricInput);
    }
    let lk = d.linking_numbers()?;
    // Delete the last component first, then the others.
    for j in (0..r).rev() {
        let lhs = f.specialize(j, &Rational::one());
        if lhs.is_zero() {
            continue;
        }
        let sub = conway(&d.delete_component(j)?, cache)?.insert_var(j);
        // lhs = e * num * T / den, compared without building the quotient.
        let left = &lhs * sub.den();
        let right = sub.num() * &torres_factor(r, j, &lk);
        let e = if left == right {
            Rational::one()
        } else if left == -&right {
            -Rational::one()
        } else {
            return Err(Error::InternalExactnessFailure(format!(
                "Torres relation fails on component {j}"
            )));
        };
        return Ok(RatFunc::from_poly(f.scale(&e)));
    }
    Err(Error::SignUndetermined)
}

/// `Delta_c(L) = conway(L)(t_1^2, ..., t_r^2)` for weight-0 colors.
pub fn delta_c(d: &LinkDiagram, cache: &ConwayCache) -> Result<RatFunc> {
    conway(d, cache)?.map_both(|p| p.power_substitute(2))
}

/// Weight-1 components contribute the monomial
/// `prod_i t_i^{-2 sum_j lk_ij}` in front of the weight-0 value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDelta {
    pub prefactor: Exponent,
    pub base: RatFunc,
}

impl WeightedDelta {
    pub fn to_ratfunc(&self) -> RatFunc {
        self.base
            .mul_poly(&MultiLaurent::monomial(self.prefactor.clone()))
    }
}

pub fn delta_weighted(d: &LinkDiagram, weights: &[i64], cache: &ConwayCache) -> Result<WeightedDelta> {
    let r = d.components();
    if weights.len() != r {
        return Err(Error::Validation(format!("{} weights for {r} components", weights.len())));
    }
    if let Some(&w) = weights.iter().find(|&&w| w != 0 && w != 1) {
        return Err(Error::UnsupportedWeight(w));
    }
    let lk = d.linking_numbers()?;
    let prefactor = (0..r)
        .map(|i| {
            if weights[i] == 1 {
                -2 * lk[i].iter().sum::<i64>() as i32
            } else {
                0
            }
        })
        .collect();
    Ok(WeightedDelta {
        prefactor,
        base: delta_c(d, cache)?,
    })
}

/// `(t^2 - t^-2) f g` for `f` on `r1` components and `g` on `r2`, glued
/// along component `i` of `f` and `j` of `g`. Variables are laid out as in
/// [`crate::linkdiag::connected_sum`].
pub fn connected_sum_delta(f: &RatFunc, i: usize, g: &RatFunc, j: usize) -> Result<RatFunc> {
    let (r1, r2) = (f.nvars(), g.nvars());
    if i >= r1 {
        return Err(Error::IndexOutOfRange { index: i, len: r1 });
    }
    if j >= r2 {
        return Err(Error::IndexOutOfRange { index: j, len: r2 });
    }
    let n = r1 + r2 - 1;
    let one = Rational::one();
    let unit = |k: usize| {
        let mut e = vec![0; n];
        e[k] = 1;
        (one.clone(), e)
    };
    let fi: Vec<(Rational, Exponent)> = (0..r1).map(unit).collect();
    let gi: Vec<(Rational, Exponent)> = (0..r2)
        .map(|k| {
            if k == j {
                unit(i)
            } else if k < j {
                unit(r1 + k)
            } else {
                unit(r1 + k - 1)
            }
        })
        .collect();
    let fe = f.substitute_monomials(&fi, n)?;
    let ge = g.substitute_monomials(&gi, n)?;
    Ok((&fe * &ge).mul_poly(&MultiLaurent::antisym(n, i, 2)))
}
