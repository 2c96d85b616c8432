//! Turaev's surgery formula for the torsion twisted by `g -> g^4`.
//!
//! With `s_i = omega([m_i])` the formula's `t_i` is `s_i^4` and its half
//! powers are integral:
//!
//! `tau = (-1)^{sigma_+} prod_i s_i^{2 k_i} / (s_i^4 - 1) * conway(L)(s_1^2, ..., s_r^2)`.

use num_traits::One;

use crate::alexander::{delta_c, ConwayCache};
use crate::algebra::{MultiLaurent, RatFunc, Rational, Value};
use crate::error::{Error, Result};
use crate::manifold::{delta_refined, Multiplicities, Specializer, SurgeryPresentation};

fn check_charge(p: &SurgeryPresentation, k: &[i64]) -> Result<()> {
    if k.len() != p.components() {
        return Err(Error::Validation(format!(
            "charge has {} entries for {} components",
            k.len(),
            p.components()
        )));
    }
    Ok(())
}

pub fn tau_surgery(p: &SurgeryPresentation, at: Multiplicities<'_>, k: &[i64], cache: &ConwayCache) -> Result<Value> {
    check_charge(p, k)?;
    if let Some(w) = at.omega() {
        w.ensure_computable()?;
    }
    let r = p.components();
    let spec = Specializer::new(r, at)?;
    let mut f = delta_c(p.diagram(), cache)?;
    let one = MultiLaurent::one(r);
    for (i, &ki) in k.iter().enumerate() {
        let den = &MultiLaurent::var_pow(r, i, 4) - &one;
        let num = MultiLaurent::var_pow(r, i, 2 * ki as i32);
        f = &f * &RatFunc::new(num, den)?;
    }
    if p.sigma_plus() % 2 == 1 {
        f = -&f;
    }
    spec.eval_plain(&f)
}

/// Both sides of `tau = (prod_i s_i^{k_i - 1})^2 Delta(M, omega)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub holds: bool,
    pub tau: Value,
    pub rhs: Value,
}

pub fn torsion_relation_check(
    p: &SurgeryPresentation,
    at: Multiplicities<'_>,
    k: &[i64],
    cache: &ConwayCache,
) -> Result<RelationReport> {
    let tau = tau_surgery(p, at, k, cache)?;
    let r = p.components();
    let spec = Specializer::new(r, at)?;
    let e: Vec<i32> = k.iter().map(|&x| 2 * (x as i32 - 1)).collect();
    let mono = spec.eval_plain(&RatFunc::from_poly(MultiLaurent::term(e, Rational::one())))?;
    let rhs = mono.try_mul(&delta_refined(p, at, cache)?)?;
    Ok(RelationReport {
        holds: tau == rhs,
        tau,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::chain_diagram;
    use crate::manifold::{OmegaClass, PaletteGroup};

    fn pres(a: &[i64]) -> SurgeryPresentation {
        SurgeryPresentation::new(chain_diagram(a)).unwrap()
    }

    #[test]
    fn unit_charge_matches_refined() {
        let c = ConwayCache::new();
        let p = pres(&[3, 2]);
        let g = PaletteGroup::new(1, 5).unwrap();
        let w = OmegaClass::solve(&p, g.clone(), &[None, Some(g.torsion_elem(1))]).unwrap();
        let at = Multiplicities::Symbolic(&w);
        let tau = tau_surgery(&p, at, &[1, 1], &c).unwrap();
        assert_eq!(tau, delta_refined(&p, at, &c).unwrap());
        assert!(torsion_relation_check(&p, at, &[1, 1], &c).unwrap().holds);
    }

    #[test]
    fn charge_covariance() {
        let c = ConwayCache::new();
        let p = pres(&[3, 2]);
        let at = Multiplicities::Generic;
        let a = tau_surgery(&p, at, &[2, 1], &c).unwrap();
        let b = tau_surgery(&p, at, &[1, 1], &c).unwrap();
        let s2 = Value::RatFunc {
            vars: vec!["t1".into(), "t2".into()],
            f: RatFunc::from_poly(MultiLaurent::var_pow(2, 0, 2)),
        };
        assert_eq!(a, s2.try_mul(&b).unwrap());
    }

    #[test]
    fn rejects_wrong_length() {
        let c = ConwayCache::new();
        let p = pres(&[5]);
        assert!(tau_surgery(&p, Multiplicities::Generic, &[1, 1], &c).is_err());
    }
}
