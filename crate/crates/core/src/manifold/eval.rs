//! Turning rational functions in the component variables into values.

use std::sync::Arc;

use num_traits::One;

use super::group::OmegaClass;
use crate::algebra::value::eval_at_roots;
use crate::algebra::{CyclotomicField, Exponent, RatFunc, Rational, Value};
use crate::error::{Error, Result};

/// Where the multiplicities `t_i = omega([m_i])` live.
#[derive(Clone, Copy, Debug)]
pub enum Multiplicities<'a> {
    /// `t_i = zeta_m^{k_i}` in `Q(zeta_m)`; every image must be torsion.
    Cyclotomic(&'a OmegaClass),
    /// `t_i` is the monomial `x^{free} t^{torsion}` in formal variables.
    Symbolic(&'a OmegaClass),
    /// Independent variables `t_1..t_r`, no class at all.
    Generic,
}

impl<'a> Multiplicities<'a> {
    /// Cyclotomic when every image is torsion and `m > 1`, else symbolic.
    pub fn auto(w: &'a OmegaClass) -> Self {
        if w.group().torsion() > 1 && w.images().iter().all(|g| g.is_torsion()) {
            Multiplicities::Cyclotomic(w)
        } else {
            Multiplicities::Symbolic(w)
        }
    }

    pub fn omega(&self) -> Option<&'a OmegaClass> {
        match self {
            Multiplicities::Cyclotomic(w) | Multiplicities::Symbolic(w) => Some(w),
            Multiplicities::Generic => None,
        }
    }
}

enum Target {
    Generic,
    Symbolic { images: Vec<Exponent>, vars: Vec<String> },
    Cyclotomic { field: Arc<CyclotomicField>, ks: Vec<i64> },
}

/// Sends `t_i` to `omega([m_i])^{e_i}` for per-call exponents `e_i`.
pub struct Specializer {
    r: usize,
    target: Target,
}

impl Specializer {
    pub fn new(r: usize, at: Multiplicities<'_>) -> Result<Self> {
        if let Some(w) = at.omega() {
            if w.images().len() != r {
                return Err(Error::InvalidOmega(format!("{} images for {r} meridians", w.images().len())));
            }
        }
        let target = match at {
            Multiplicities::Generic => Target::Generic,
            Multiplicities::Cyclotomic(w) => {
                if w.images().iter().any(|g| !g.is_torsion()) {
                    return Err(Error::MixedMode);
                }
                let m = w.group().torsion();
                Target::Cyclotomic {
                    field: CyclotomicField::new(m),
                    ks: w.images().iter().map(|g| g.torsion).collect(),
                }
            }
            Multiplicities::Symbolic(w) => {
                let a = w.group().free_rank();
                let used_free: Vec<usize> = (0..a).filter(|&k| w.images().iter().any(|g| g.free[k] != 0)).collect();
                let has_t = w.images().iter().any(|g| g.torsion != 0);
                let mut vars: Vec<String> = used_free.iter().map(|k| format!("x{}", k + 1)).collect();
                if has_t {
                    vars.push("t".into());
                }
                let images = w
                    .images()
                    .iter()
                    .map(|g| {
                        let mut e: Exponent = used_free.iter().map(|&k| g.free[k] as i32).collect();
                        if has_t {
                            e.push(g.torsion as i32);
                        }
                        e
                    })
                    .collect();
                Target::Symbolic { images, vars }
            }
        };
        Ok(Specializer { r, target })
    }

    /// Variable names of symbolic results.
    pub fn vars(&self) -> Vec<String> {
        match &self.target {
            Target::Generic => (1..=self.r).map(|i| format!("t{i}")).collect(),
            Target::Symbolic { vars, .. } => vars.clone(),
            Target::Cyclotomic { .. } => Vec::new(),
        }
    }

    /// `f(t_1^{e_1}, ..., t_r^{e_r})` with `t_i` sent to its multiplicity.
    pub fn eval(&self, f: &RatFunc, e: &[i32]) -> Result<Value> {
        assert_eq!(f.nvars(), self.r);
        assert_eq!(e.len(), self.r);
        let one = Rational::one();
        match &self.target {
            Target::Generic => {
                let img: Vec<(Rational, Exponent)> = (0..self.r)
                    .map(|i| {
                        let mut x = vec![0; self.r];
                        x[i] = e[i];
                        (one.clone(), x)
                    })
                    .collect();
                Ok(Value::RatFunc {
                    vars: self.vars(),
                    f: f.substitute_monomials(&img, self.r)?,
                })
            }
            Target::Symbolic { images, vars } => {
                let img: Vec<(Rational, Exponent)> = images
                    .iter()
                    .zip(e)
                    .map(|(x, &k)| (one.clone(), x.iter().map(|&y| y * k).collect()))
                    .collect();
                Ok(Value::RatFunc {
                    vars: vars.clone(),
                    f: f.substitute_monomials(&img, vars.len())?,
                })
            }
            Target::Cyclotomic { field, ks } => {
                let k: Vec<i64> = ks.iter().zip(e).map(|(&a, &b)| a * b as i64).collect();
                Ok(Value::Cyclotomic(eval_at_roots(f, field, &k)?))
            }
        }
    }

    pub fn eval_plain(&self, f: &RatFunc) -> Result<Value> {
        self.eval(f, &vec![1; self.r])
    }
}
