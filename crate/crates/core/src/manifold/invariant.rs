//! `Delta(M, omega)` by the Kirby-color definition and by the refined
//! weight-0 formula.

use num_traits::One;
use rayon::prelude::*;

use super::eval::{Multiplicities, Specializer};
use super::SurgeryPresentation;
use crate::alexander::{delta_c, delta_weighted, ConwayCache};
use crate::algebra::ratfunc::kirby_weight;
use crate::algebra::{RatFunc, Rational, Value};
use crate::error::{Error, Result};

fn sign(sigma: usize) -> Rational {
    if sigma % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn weight_product(r: usize) -> RatFunc {
    (0..r).fold(RatFunc::one(r), |acc, i| &acc * &kirby_weight(r, i, 1))
}

/// `(-1)^{sigma_+} prod_i d(t_i) Delta_c(L)` in the component variables,
/// before any class is substituted.
pub fn refined_formula(p: &SurgeryPresentation, cache: &ConwayCache) -> Result<RatFunc> {
    let r = p.components();
    Ok((&weight_product(r) * &delta_c(p.diagram(), cache)?).scale(&sign(p.sigma_plus())))
}

/// [`refined_formula`] at `t_i = omega([m_i])`.
pub fn delta_refined(p: &SurgeryPresentation, at: Multiplicities<'_>, cache: &ConwayCache) -> Result<Value> {
    if let Some(w) = at.omega() {
        w.ensure_computable()?;
    }
    let spec = Specializer::new(p.components(), at)?;
    spec.eval_plain(&refined_formula(p, cache)?)
}

/// One summand `prod_i d(t_i^{e_i}) Delta_{ec}(eL)` of the Kirby expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirbyTerm {
    pub orientation: Vec<i8>,
    pub value: Value,
}

/// All `2^r` terms, orientation vectors in lexicographic order with `+1`
/// first. Each term is computed on the diagram with the components where
/// `e_i = -1` actually reversed, colored `(t_i^{e_i}, 1)`.
pub fn kirby_terms(p: &SurgeryPresentation, at: Multiplicities<'_>, cache: &ConwayCache) -> Result<Vec<KirbyTerm>> {
    if let Some(w) = at.omega() {
        w.ensure_computable()?;
    }
    let r = p.components();
    let spec = Specializer::new(r, at)?;
    let weights = weight_product(r);
    let orientations: Vec<Vec<i8>> = (0..1usize << r)
        .map(|bits| (0..r).map(|i| if bits >> (r - 1 - i) & 1 == 1 { -1 } else { 1 }).collect())
        .collect();
    orientations
        .into_par_iter()
        .map(|e| {
            let mut d = p.diagram().clone();
            for (i, &x) in e.iter().enumerate() {
                if x < 0 {
                    d = d.reverse_component(i)?;
                }
            }
            let wd = delta_weighted(&d, &vec![1; r], cache)?;
            // The weight-1 monomial is s_i^{prefactor_i} with s_i = t_i^{e_i}.
            // As an element of H_1 it is a sum of relations, so it drops out.
            let v: Vec<i64> = wd
                .prefactor
                .iter()
                .zip(&e)
                .map(|(&a, &x)| a as i64 * x as i64)
                .collect();
            let trivial_in_h1 = p.h1().is_zero_combination(&v);
            let trivial_in_g = at.omega().is_none_or(|w| {
                w.group().is_identity(&w.group().combine(&v, w.images()))
            });
            if !trivial_in_h1 || !trivial_in_g {
                return Err(Error::InternalExactnessFailure(format!(
                    "weight-1 prefactor {v:?} is not trivial in H_1"
                )));
            }
            let exps: Vec<i32> = e.iter().map(|&x| x as i32).collect();
            let value = spec.eval(&(&weights * &wd.base), &exps)?;
            Ok(KirbyTerm { orientation: e, value })
        })
        .collect()
}

/// `Delta_kc(L) / (2^r (-1)^{sigma_+})` with Kirby colors on every component.
pub fn delta_kirby(p: &SurgeryPresentation, at: Multiplicities<'_>, cache: &ConwayCache) -> Result<Value> {
    let terms = kirby_terms(p, at, cache)?;
    let mut acc = terms[0].value.clone();
    for t in &terms[1..] {
        acc = acc.try_add(&t.value)?;
    }
    let r = p.components();
    let norm = Rational::new(1.into(), num_bigint::BigInt::from(1u8) << r) * sign(p.sigma_plus());
    Ok(acc.scale(&norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cyclotomic, CyclotomicField, MultiLaurent};
    use crate::linkdiag::chain_diagram;
    use crate::manifold::{OmegaClass, PaletteGroup};

    fn pres(a: &[i64]) -> SurgeryPresentation {
        SurgeryPresentation::new(chain_diagram(a)).unwrap()
    }

    /// `-1 / ((t^2 - t^-2)(t^{2q} - t^{-2q}))` in one variable.
    fn lens_value(q: i32) -> RatFunc {
        let den = &MultiLaurent::antisym(1, 0, 2) * &MultiLaurent::antisym(1, 0, 2 * q);
        RatFunc::new(-&MultiLaurent::one(1), den).unwrap()
    }

    #[test]
    fn unknot_refined_and_kirby() {
        let c = ConwayCache::new();
        let p = pres(&[5]);
        let g = PaletteGroup::new(1, 5).unwrap();
        let w = OmegaClass::new(&p, g.clone(), vec![g.torsion_elem(1)]).unwrap();
        let sym = delta_refined(&p, Multiplicities::Symbolic(&w), &c).unwrap();
        assert_eq!(sym.as_ratfunc().unwrap(), &lens_value(1));
        let kirby = delta_kirby(&p, Multiplicities::Symbolic(&w), &c).unwrap();
        assert_eq!(kirby, sym);
        let gen_r = delta_refined(&p, Multiplicities::Generic, &c).unwrap();
        let gen_k = delta_kirby(&p, Multiplicities::Generic, &c).unwrap();
        assert_eq!(gen_r, gen_k);
    }

    #[test]
    fn chain_32_symbolic() {
        let c = ConwayCache::new();
        let p = pres(&[3, 2]);
        let g = PaletteGroup::new(1, 5).unwrap();
        let w = OmegaClass::solve(&p, g.clone(), &[None, Some(g.torsion_elem(1))]).unwrap();
        let v = delta_refined(&p, Multiplicities::Symbolic(&w), &c).unwrap();
        assert_eq!(v.as_ratfunc().unwrap(), &lens_value(2));
        assert_eq!(delta_kirby(&p, Multiplicities::Symbolic(&w), &c).unwrap(), v);
        assert_eq!(kirby_terms(&p, Multiplicities::Generic, &c).unwrap().len(), 4);
    }

    #[test]
    fn chain_22_cyclotomic() {
        let c = ConwayCache::new();
        let p = pres(&[2, 2]);
        let g = PaletteGroup::new(1, 3).unwrap();
        let w = OmegaClass::solve(&p, g.clone(), &[None, Some(g.torsion_elem(1))]).unwrap();
        let v = delta_refined(&p, Multiplicities::Cyclotomic(&w), &c).unwrap();
        let f = CyclotomicField::new(3);
        let z = |k| Cyclotomic::root_of_unity(&f, k);
        let a = z(2).try_sub(&z(-2)).unwrap();
        let b = z(4).try_sub(&z(-4)).unwrap();
        let expect = Cyclotomic::one(&f).neg().try_div(&a.try_mul(&b).unwrap()).unwrap();
        assert_eq!(v, Value::Cyclotomic(expect));
        assert_eq!(delta_kirby(&p, Multiplicities::Cyclotomic(&w), &c).unwrap(), v);
    }

    #[test]
    fn not_computable_is_reported() {
        let c = ConwayCache::new();
        let p = pres(&[3, 2, 3]);
        let g = PaletteGroup::new(1, 3).unwrap();
        let w = OmegaClass::solve(&p, g.clone(), &[None, None, Some(g.torsion_elem(1))]).unwrap();
        assert_eq!(
            delta_refined(&p, Multiplicities::Cyclotomic(&w), &c),
            Err(Error::NotComputable(2))
        );
    }
}
