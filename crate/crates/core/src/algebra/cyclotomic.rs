//! Exact arithmetic in the cyclotomic field `Q(zeta_m)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(m)-1)`
//! reduced modulo the cyclotomic polynomial `Phi_m`, so two equal field
//! elements always have identical coefficient vectors.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::qpoly::QPoly;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// The field `Q(zeta_m)` together with its precomputed data.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u64,
    phi: QPoly,
    /// `zeta^k` reduced, for `k` in `0..order`.
    powers: Vec<Vec<Rational>>,
}

/// `Phi_m` as the quotient of `x^m - 1` by every `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: u64) -> QPoly {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut f = QPoly::monomial(Rational::one(), m as usize);
    f = &f - &QPoly::one();
    for d in 1..m {
        if m % d == 0 {
            f = f.div_rem(&cyclotomic_polynomial(d)).0;
        }
    }
    f
}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.degree().unwrap_or(0);
        let powers = (0..order as usize)
            .map(|k| {
                let r = QPoly::monomial(Rational::one(), k).rem(&phi);
                pad(r.coeffs(), deg)
            })
            .collect();
        Arc::new(CyclotomicField { order, phi, powers })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `phi(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &QPoly {
        &self.phi
    }
}

fn pad(c: &[Rational], len: usize) -> Vec<Rational> {
    let mut v = c.to_vec();
    v.resize(len, Rational::zero());
    v
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn from_qpoly(field: &Arc<CyclotomicField>, p: &QPoly) -> Self {
        let r = p.rem(&field.phi);
        Cyclotomic {
            field: field.clone(),
            coeffs: pad(r.coeffs(), field.degree()),
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        Self::from_qpoly(field, &QPoly::constant(q))
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// `zeta^k` for any integer `k`.
    pub fn root_of_unity(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let m = field.order as i64;
        Cyclotomic {
            field: field.clone(),
            coeffs: field.powers[k.rem_euclid(m) as usize].clone(),
        }
    }

    /// Rebuilds an element from its power-basis coordinates.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::Parse(format!(
                "expected {} coefficients for order {}, got {}",
                field.degree(),
                field.order,
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            field: field.clone(),
            coeffs,
        })
    }

    /// Sums `sum_k weights[k] * zeta^k` with `weights` indexed by residues mod `m`.
    pub fn from_power_sums(field: &Arc<CyclotomicField>, weights: &[Rational]) -> Self {
        let mut acc = vec![Rational::zero(); field.degree()];
        for (k, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&field.powers[k]) {
                if !p.is_zero() {
                    *a += w * p;
                }
            }
        }
        Cyclotomic {
            field: field.clone(),
            coeffs: acc,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| {
            if k == 0 {
                c.is_one()
            } else {
                c.is_zero()
            }
        }) && (!self.coeffs.is_empty())
    }

    fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch(self.field.order, other.field.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_qpoly(&self.field, &(&self.as_qpoly() * &other.as_qpoly())))
    }

    /// Inverse via the extended gcd with `Phi_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.as_qpoly().ext_gcd(&self.field.phi);
        debug_assert!(g == QPoly::one(), "Phi_m is irreducible");
        Ok(Self::from_qpoly(&self.field, &s))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            n >>= 1;
            if n > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Returns `k` in `0..m` when this element is exactly `zeta^k`.
    pub fn as_root_of_unity(&self) -> Option<i64> {
        self.field
            .powers
            .iter()
            .position(|p| *p == self.coeffs)
            .map(|k| k as i64)
    }

    /// Complex conjugate, i.e. the automorphism `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism `zeta -> zeta^j` (`j` must be a unit mod `m`).
    pub fn galois(&self, j: i64) -> Self {
        let mut w = vec![Rational::zero(); self.field.order as usize];
        let m = self.field.order as i64;
        for (k, c) in self.coeffs.iter().enumerate() {
            let idx = (k as i64 * j).rem_euclid(m) as usize;
            w[idx] += c;
        }
        Self::from_power_sums(&self.field, &w)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            parts.push(match k {
                0 => cs,
                1 => format!("({cs})*z"),
                _ => format!("({cs})*z^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0 [z=zeta{}]", self.field.order)
        } else {
            write!(f, "{} [z=zeta{}]", parts.join(" + "), self.field.order)
        }
    }
}

/// Wire form: `{"order": m, "coeffs": ["a/b", ...]}` in the power basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclotomicJson {
    pub order: u64,
    pub coeffs: Vec<String>,
}

impl Cyclotomic {
    pub fn to_json(&self) -> CyclotomicJson {
        CyclotomicJson {
            order: self.field.order,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &CyclotomicJson) -> Result<Self> {
        if j.order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let field = CyclotomicField::new(j.order);
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(&field, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn phi_small_orders() {
        assert_eq!(cyclotomic_polynomial(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), QPoly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), QPoly::from_ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(15),
            QPoly::from_ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn zeta5_power_sum_is_minus_one() {
        let f = CyclotomicField::new(5);
        let mut s = Cyclotomic::zero(&f);
        for k in 1..5 {
            s = s.try_add(&Cyclotomic::root_of_unity(&f, k)).unwrap();
        }
        assert_eq!(s, Cyclotomic::from_rational(&f, rat(-1)));
    }

    #[test]
    fn zeta3_difference_squared() {
        // (z - z^2)^2 = z^2 - 2 z^3 + z^4 = z^2 - 2 + z = -3 using z^2 + z + 1 = 0.
        let f = CyclotomicField::new(3);
        let z = Cyclotomic::root_of_unity(&f, 1);
        let d = z.try_sub(&Cyclotomic::root_of_unity(&f, 2)).unwrap();
        assert_eq!(d.try_mul(&d).unwrap(), Cyclotomic::from_rational(&f, rat(-3)));
    }

    #[test]
    fn inverse_of_zeta_minus_inverse() {
        let f = CyclotomicField::new(5);
        let x = Cyclotomic::root_of_unity(&f, 1)
            .try_sub(&Cyclotomic::root_of_unity(&f, -1))
            .unwrap();
        let w = Cyclotomic::one(&f).try_div(&x).unwrap();
        assert!(w.try_mul(&x).unwrap().is_one());
    }

    #[test]
    fn errors() {
        let f3 = CyclotomicField::new(3);
        let f5 = CyclotomicField::new(5);
        assert_eq!(
            Cyclotomic::one(&f3).try_add(&Cyclotomic::one(&f5)),
            Err(Error::OrderMismatch(3, 5))
        );
        assert_eq!(
            Cyclotomic::one(&f3).try_div(&Cyclotomic::zero(&f3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn root_detection_and_galois() {
        let f = CyclotomicField::new(7);
        let z3 = Cyclotomic::root_of_unity(&f, 3);
        assert_eq!(z3.as_root_of_unity(), Some(3));
        assert_eq!(z3.conj().as_root_of_unity(), Some(4));
        assert_eq!(z3.galois(2).as_root_of_unity(), Some(6));
        assert_eq!(Cyclotomic::from_rational(&f, rat(2)).as_root_of_unity(), None);
    }

    #[test]
    fn json_round_trip() {
        let f = CyclotomicField::new(5);
        let x = Cyclotomic::root_of_unity(&f, 2).scale(&rat(3));
        let j = x.to_json();
        assert_eq!(j.coeffs, vec!["0/1", "0/1", "3/1", "0/1"]);
        assert_eq!(Cyclotomic::from_json(&j).unwrap(), x);
    }
}
