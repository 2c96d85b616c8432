//! Lens spaces `L(p, q)` through their chain presentations.
//!
//! `p/q = [a_1, ..., a_n]` (all `a_i >= 2`) gives the chain link with
//! framings `a_i`. A class `omega` is fixed by the image `t` of the last
//! meridian; the other meridians go to `t^{c_i}`.

mod franz;
mod table;

pub use franz::{franz_check, FranzReport};
pub use table::{classify_lens, lens_invariant_table, CellStatus, Classification, LensCell, LensTable};

use num_integer::Integer;
use num_traits::One;

use crate::algebra::value::eval_at_roots;
use crate::algebra::{CyclotomicField, MultiLaurent, RatFunc, Rational, Value};
use crate::error::{Error, Result};
use crate::linkdiag::chain_diagram;
use crate::manifold::{OmegaClass, PaletteGroup, SurgeryPresentation};

/// Coprime `p > q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpec {
    p: i64,
    q: i64,
}

impl LensSpec {
    /// Reduces `q` mod `p` first.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidLensSpec { p, q });
        }
        let r = q.rem_euclid(p);
        if r == 0 || p.gcd(&r) != 1 {
            return Err(Error::InvalidLensSpec { p, q });
        }
        Ok(LensSpec { p, q: r })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// `q` in `1..p` coprime to `p`.
pub fn coprime_residues(p: i64) -> Vec<i64> {
    (1..p).filter(|q| p.gcd(q) == 1).collect()
}

/// `a_1 - 1/(a_2 - 1/(... - 1/a_n))` with every `a_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HJExpansion {
    coeffs: Vec<i64>,
}

impl HJExpansion {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|&a| a < 2) {
            return Err(Error::Validation(format!("{coeffs:?} is not a continued fraction with entries >= 2")));
        }
        Ok(HJExpansion { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn evaluate(&self) -> Rational {
        let mut x = Rational::from_integer((*self.coeffs.last().expect("nonempty")).into());
        for &a in self.coeffs.iter().rev().skip(1) {
            x = Rational::from_integer(a.into()) - x.recip();
        }
        x
    }
}

pub fn hj_continued_fraction(p: i64, q: i64) -> Result<HJExpansion> {
    let s = LensSpec::new(p, q)?;
    if q != s.q() {
        return Err(Error::InvalidLensSpec { p, q });
    }
    let (mut p, mut q) = (p, q);
    let mut a = Vec::new();
    while q > 0 {
        let c = Integer::div_ceil(&p, &q);
        a.push(c);
        (p, q) = (q, c * q - p);
    }
    HJExpansion::new(a)
}

/// `c_1, ..., c_{n+1}` with `c_{n+1} = 0`, `c_n = 1` and
/// `c_i = -a_{i+1} c_{i+1} - c_{i+2}`. Checks `c_1 = (-1)^{n-1} q`.
pub fn c_sequence(a: &HJExpansion) -> Result<Vec<i64>> {
    let n = a.len();
    let mut c = vec![0i64; n + 2];
    c[n] = 1;
    for i in (1..n).rev() {
        c[i] = -a.coeffs[i] * c[i + 1] - c[i + 2];
    }
    let q: i64 = a.evaluate().denom().try_into().expect("q fits in i64");
    let expected = if n % 2 == 1 { q } else { -q };
    if c[1] != expected {
        return Err(Error::C1Mismatch { c1: c[1], expected });
    }
    Ok(c[1..].to_vec())
}

/// The chain presentation of `L(p, q)`.
pub fn lens_presentation(spec: LensSpec) -> Result<(HJExpansion, SurgeryPresentation)> {
    let a = hj_continued_fraction(spec.p(), spec.q())?;
    let pres = SurgeryPresentation::new(chain_diagram(a.coeffs()))?;
    Ok((a, pres))
}

/// The class of the chain sending the last meridian to `t^k` in `Z + Z/m`,
/// and meridian `i` to `t^{k c_i}` (raw exponents).
pub fn chain_omega(a: &HJExpansion, pres: &SurgeryPresentation, m: u64, k: i64) -> Result<OmegaClass> {
    let g = PaletteGroup::new(1, m)?;
    let c = c_sequence(a)?;
    let images = c[..a.len()].iter().map(|&ci| g.torsion_elem(k * ci)).collect();
    OmegaClass::new(pres, g, images)
}

/// Where the closed formula is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensPoint {
    /// A formal variable `t`.
    Symbolic,
    /// `t = zeta_m^k`.
    Root { m: u64, k: i64 },
}

/// `-1 / ((t^2 - t^-2)(t^{2q} - t^{-2q}))` in one variable.
pub fn lens_closed_ratfunc(q: i64) -> RatFunc {
    let den = &MultiLaurent::antisym(1, 0, 2) * &MultiLaurent::antisym(1, 0, 2 * q as i32);
    RatFunc::new(-&MultiLaurent::one(1), den).expect("nonzero denominator")
}

pub fn lens_closed_formula(q: i64, at: LensPoint) -> Result<Value> {
    let f = lens_closed_ratfunc(q);
    match at {
        LensPoint::Symbolic => Ok(Value::RatFunc {
            vars: vec!["t".into()],
            f,
        }),
        LensPoint::Root { m, k } => Ok(Value::Cyclotomic(eval_at_roots(&f, &CyclotomicField::new(m), &[k])?)),
    }
}

/// `(-1)^n / ((t_1^2 - t_1^-2)(t_n^2 - t_n^-2))` with `t_1 = t^{c_1}`, `t_n = t`,
/// the chain value before the `c_1 = (-1)^{n-1} q` simplification.
pub fn lens_chain_ratfunc(a: &HJExpansion) -> Result<RatFunc> {
    let c1 = c_sequence(a)?[0] as i32;
    let n = a.len();
    let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    let den = &MultiLaurent::antisym(1, 0, 2 * c1) * &MultiLaurent::antisym(1, 0, 2);
    RatFunc::new(MultiLaurent::constant(1, sign), den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_frac;

    #[test]
    fn hj_examples() {
        assert_eq!(hj_continued_fraction(7, 1).unwrap().coeffs(), &[7]);
        assert_eq!(hj_continued_fraction(5, 2).unwrap().coeffs(), &[3, 2]);
        assert_eq!(hj_continued_fraction(12, 5).unwrap().coeffs(), &[3, 2, 3]);
        assert_eq!(hj_continued_fraction(12, 5).unwrap().evaluate(), rat_frac(12, 5));
        assert!(hj_continued_fraction(12, 4).is_err());
        assert!(hj_continued_fraction(5, 7).is_err());
    }

    #[test]
    fn c_sequence_examples() {
        assert_eq!(c_sequence(&HJExpansion::new(vec![5]).unwrap()).unwrap(), vec![1, 0]);
        assert_eq!(c_sequence(&HJExpansion::new(vec![3, 2]).unwrap()).unwrap(), vec![-2, 1, 0]);
        assert_eq!(c_sequence(&HJExpansion::new(vec![3, 2, 3]).unwrap()).unwrap(), vec![5, -3, 1, 0]);
    }

    #[test]
    fn lens_spec_reduces_q() {
        let s = LensSpec::new(7, 9).unwrap();
        assert_eq!((s.p(), s.q()), (7, 2));
        assert!(LensSpec::new(1, 0).is_err());
        assert!(LensSpec::new(6, 3).is_err());
    }

    #[test]
    fn closed_formula_first_display() {
        for (p, q) in [(5, 2), (7, 3), (12, 5), (11, 4)] {
            let a = hj_continued_fraction(p, q).unwrap();
            assert_eq!(lens_chain_ratfunc(&a).unwrap(), lens_closed_ratfunc(q), "{p}/{q}");
        }
    }
}
