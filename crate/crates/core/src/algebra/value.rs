//! Substitution of variables and the exact values it produces.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::cyclotomic::{Cyclotomic, CyclotomicField, CyclotomicJson};
use super::laurent::{Exponent, MultiLaurent};
use super::ratfunc::RatFunc;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// What a variable is replaced by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    Cyclotomic(Cyclotomic),
    Laurent(MultiLaurent),
}

/// An exact result: a rational function or a cyclotomic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    RatFunc { vars: Vec<String>, f: RatFunc },
    Cyclotomic(Cyclotomic),
}

fn eval_cyclotomic_fast(p: &MultiLaurent, field: &Arc<CyclotomicField>, ks: &[i64]) -> Cyclotomic {
    let m = field.order() as i64;
    let mut w = vec![Rational::from_integer(0.into()); m as usize];
    for (e, c) in p.terms() {
        let k: i64 = e.iter().zip(ks).map(|(&x, &k)| x as i64 * k).sum();
        w[k.rem_euclid(m) as usize] += c;
    }
    Cyclotomic::from_power_sums(field, &w)
}

fn eval_cyclotomic_general(p: &MultiLaurent, field: &Arc<CyclotomicField>, img: &[Cyclotomic]) -> Result<Cyclotomic> {
    let mut cache: HashMap<(usize, i32), Cyclotomic> = HashMap::new();
    let mut acc = Cyclotomic::zero(field);
    for (e, c) in p.terms() {
        let mut t = Cyclotomic::from_rational(field, c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let pw = match cache.get(&(i, k)) {
                Some(x) => x.clone(),
                None => {
                    let x = img[i].pow(k as i64)?;
                    cache.insert((i, k), x.clone());
                    x
                }
            };
            t = t.try_mul(&pw)?;
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

/// Evaluates a Laurent polynomial with every variable sent into `Q(zeta_m)`.
pub fn eval_poly_cyclotomic(p: &MultiLaurent, img: &[Cyclotomic]) -> Result<Cyclotomic> {
    assert_eq!(img.len(), p.nvars());
    let field = match img.first() {
        Some(x) => x.field().clone(),
        None => {
            return Err(Error::InvalidOmega("no variables to evaluate".into()));
        }
    };
    for x in img {
        if x.order() != field.order() {
            return Err(Error::OrderMismatch(field.order(), x.order()));
        }
    }
    let roots: Option<Vec<i64>> = img.iter().map(Cyclotomic::as_root_of_unity).collect();
    match roots {
        Some(ks) => Ok(eval_cyclotomic_fast(p, &field, &ks)),
        None => eval_cyclotomic_general(p, &field, img),
    }
}

/// `f(zeta^{k_1}, ..., zeta^{k_r})` in `Q(zeta_m)`.
pub fn eval_at_roots(f: &RatFunc, field: &Arc<CyclotomicField>, ks: &[i64]) -> Result<Cyclotomic> {
    let den = eval_cyclotomic_fast(f.den(), field, ks);
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    eval_cyclotomic_fast(f.num(), field, ks).try_div(&den)
}

/// Laurent polynomial images; negative powers go through a common denominator.
fn substitute_laurent(f: &RatFunc, img: &[MultiLaurent], target: usize) -> Result<RatFunc> {
    let all_monomial: Option<Vec<(Rational, Exponent)>> = img
        .iter()
        .map(|p| p.as_term().map(|(e, c)| (c.clone(), e.clone())))
        .collect();
    if let Some(m) = all_monomial {
        return f.substitute_monomials(&m, target);
    }
    let n = f.nvars();
    let lo: Exponent = (0..n)
        .map(|i| {
            let a = f.num().degree_in(i).map_or(0, |d| d.0);
            let b = f.den().degree_in(i).map_or(0, |d| d.0);
            a.min(b).min(0)
        })
        .collect();
    let shift: Exponent = lo.iter().map(|x| -x).collect();
    let one = Rational::from_integer(1.into());
    let num = f.num().mul_term(&shift, &one);
    let den = f.den().mul_term(&shift, &one);
    let ev = |p: &MultiLaurent| -> MultiLaurent {
        let mut acc = MultiLaurent::zero(target);
        let mut cache: HashMap<(usize, i32), MultiLaurent> = HashMap::new();
        for (e, c) in p.terms() {
            let mut t = MultiLaurent::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache
                    .entry((i, k))
                    .or_insert_with(|| img[i].pow(k as u32))
                    .clone();
                t = &t * &pw;
            }
            acc = &acc + &t;
        }
        acc
    };
    let d = ev(&den);
    if d.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    RatFunc::new(ev(&num), d)
}

/// Substitutes every variable of `f`. All images must be of the same kind:
/// cyclotomic images give a number, Laurent images a rational function in
/// `target_vars`.
pub fn substitute(f: &RatFunc, images: &[Image], target_vars: &[String]) -> Result<Value> {
    if images.len() != f.nvars() {
        return Err(Error::Validation(format!(
            "{} images for {} variables",
            images.len(),
            f.nvars()
        )));
    }
    let cyc: Option<Vec<Cyclotomic>> = images
        .iter()
        .map(|x| match x {
            Image::Cyclotomic(c) => Some(c.clone()),
            Image::Laurent(_) => None,
        })
        .collect();
    let lau: Option<Vec<MultiLaurent>> = images
        .iter()
        .map(|x| match x {
            Image::Laurent(p) => Some(p.clone()),
            Image::Cyclotomic(_) => None,
        })
        .collect();
    if images.is_empty() {
        return Ok(Value::RatFunc {
            vars: target_vars.to_vec(),
            f: f.clone(),
        });
    }
    if let Some(c) = cyc {
        let den = eval_poly_cyclotomic(f.den(), &c)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        let num = eval_poly_cyclotomic(f.num(), &c)?;
        return Ok(Value::Cyclotomic(num.try_div(&den)?));
    }
    if let Some(l) = lau {
        for p in &l {
            if p.nvars() != target_vars.len() {
                return Err(Error::Validation("image variable count mismatch".into()));
            }
        }
        return Ok(Value::RatFunc {
            vars: target_vars.to_vec(),
            f: substitute_laurent(f, &l, target_vars.len())?,
        });
    }
    Err(Error::MixedMode)
}

/// Wire form of a Laurent polynomial: `[[exponents], "a/b"]` in lex order.
pub fn laurent_to_json(p: &MultiLaurent) -> serde_json::Value {
    serde_json::Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!([e, format_rational(c)]))
            .collect(),
    )
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatFuncJson {
    vars: Vec<String>,
    num: Vec<(Exponent, String)>,
    den: Vec<(Exponent, String)>,
}

fn laurent_from_terms(nvars: usize, terms: &[(Exponent, String)]) -> Result<MultiLaurent> {
    let mut p = MultiLaurent::zero(nvars);
    for (e, c) in terms {
        if e.len() != nvars {
            return Err(Error::Parse("exponent length does not match vars".into()));
        }
        p.add_term(e.clone(), parse_rational(c)?);
    }
    Ok(p)
}

impl Value {
    pub fn into_cyclotomic(self) -> Option<Cyclotomic> {
        match self {
            Value::Cyclotomic(c) => Some(c),
            Value::RatFunc { .. } => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            Value::RatFunc { f, .. } => Some(f),
            Value::Cyclotomic(_) => None,
        }
    }

    /// Canonical JSON: `{"type": "ratfunc", "vars", "num", "den"}` or
    /// `{"type": "cyclotomic", "order", "coeffs"}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::RatFunc { vars, f } => json!({
                "type": "ratfunc",
                "vars": vars,
                "num": laurent_to_json(f.num()),
                "den": laurent_to_json(f.den()),
                "text": f.render(vars),
            }),
            Value::Cyclotomic(c) => {
                let j = c.to_json();
                json!({
                    "type": "cyclotomic",
                    "order": j.order,
                    "coeffs": j.coeffs,
                    "text": c.to_string(),
                })
            }
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let mut obj = v
            .as_object()
            .cloned()
            .ok_or_else(|| Error::Parse("value must be an object".into()))?;
        obj.remove("text");
        let ty = obj
            .remove("type")
            .and_then(|t| t.as_str().map(str::to_owned))
            .ok_or_else(|| Error::Parse("missing type".into()))?;
        let rest = serde_json::Value::Object(obj);
        match ty.as_str() {
            "ratfunc" => {
                let j: RatFuncJson = serde_json::from_value(rest).map_err(|e| Error::Parse(e.to_string()))?;
                let n = j.vars.len();
                let f = RatFunc::new(laurent_from_terms(n, &j.num)?, laurent_from_terms(n, &j.den)?)?;
                Ok(Value::RatFunc { vars: j.vars, f })
            }
            "cyclotomic" => {
                let j: CyclotomicJson = serde_json::from_value(rest).map_err(|e| Error::Parse(e.to_string()))?;
                Ok(Value::Cyclotomic(Cyclotomic::from_json(&j)?))
            }
            other => Err(Error::Parse(format!("unknown value type {other:?}"))),
        }
    }
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::RatFunc { f, .. } => f.is_zero(),
            Value::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Value {
        match self {
            Value::RatFunc { vars, f } => Value::RatFunc {
                vars: vars.clone(),
                f: f.scale(c),
            },
            Value::Cyclotomic(x) => Value::Cyclotomic(x.scale(c)),
        }
    }

    fn zip(
        &self,
        o: &Value,
        fr: impl FnOnce(&RatFunc, &RatFunc) -> Result<RatFunc>,
        fc: impl FnOnce(&Cyclotomic, &Cyclotomic) -> Result<Cyclotomic>,
    ) -> Result<Value> {
        match (self, o) {
            (Value::RatFunc { vars, f }, Value::RatFunc { vars: v2, f: g }) => {
                if vars != v2 {
                    return Err(Error::Validation("values live in different variables".into()));
                }
                Ok(Value::RatFunc {
                    vars: vars.clone(),
                    f: fr(f, g)?,
                })
            }
            (Value::Cyclotomic(a), Value::Cyclotomic(b)) => Ok(Value::Cyclotomic(fc(a, b)?)),
            _ => Err(Error::MixedMode),
        }
    }

    pub fn try_add(&self, o: &Value) -> Result<Value> {
        self.zip(o, |a, b| Ok(a + b), |a, b| a.try_add(b))
    }

    pub fn try_sub(&self, o: &Value) -> Result<Value> {
        self.zip(o, |a, b| Ok(a - b), |a, b| a.try_sub(b))
    }

    pub fn try_mul(&self, o: &Value) -> Result<Value> {
        self.zip(o, |a, b| Ok(a * b), |a, b| a.try_mul(b))
    }

    pub fn try_div(&self, o: &Value) -> Result<Value> {
        self.zip(o, |a, b| a.try_div(b), |a, b| a.try_div(b))
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::RatFunc { vars, f: r } => f.write_str(&r.render(vars)),
            Value::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratfunc::kirby_weight;
    use crate::algebra::rational::rat;

    #[test]
    fn weight_at_zeta5() {
        let field = CyclotomicField::new(5);
        let z = Cyclotomic::root_of_unity(&field, 1);
        let v = substitute(&kirby_weight(1, 0, 1), &[Image::Cyclotomic(z.clone())], &[])
            .unwrap()
            .into_cyclotomic()
            .unwrap();
        let d = z.pow(2).unwrap().try_sub(&z.pow(-2).unwrap()).unwrap();
        assert!(v.try_mul(&d).unwrap().is_one());
        assert_eq!(eval_at_roots(&kirby_weight(1, 0, 1), &field, &[1]).unwrap(), v);
    }

    #[test]
    fn general_path_matches_fast_path() {
        let field = CyclotomicField::new(7);
        let z = Cyclotomic::root_of_unity(&field, 3);
        let p = &MultiLaurent::antisym(2, 0, 3) + &MultiLaurent::var_pow(2, 1, -2);
        let fast = eval_poly_cyclotomic(&p, &[z.clone(), z.clone()]).unwrap();
        let slow = eval_cyclotomic_general(&p, &field, &[z.clone(), z]).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn vanishing_denominator() {
        let field = CyclotomicField::new(1);
        let one = Cyclotomic::one(&field);
        assert_eq!(
            substitute(&kirby_weight(1, 0, 1), &[Image::Cyclotomic(one)], &[]),
            Err(Error::DenominatorVanishes)
        );
        let f = RatFunc::from_poly(MultiLaurent::antisym(2, 1, 2));
        let v = substitute(
            &f,
            &[
                Image::Laurent(MultiLaurent::var(1, 0)),
                Image::Laurent(MultiLaurent::one(1)),
            ],
            &["t".into()],
        )
        .unwrap();
        assert!(v.as_ratfunc().unwrap().is_zero());
    }

    #[test]
    fn laurent_images_with_negative_powers() {
        // 1/(t - t^-1) with t -> (1 + s)
        let f = RatFunc::new(MultiLaurent::one(1), MultiLaurent::antisym(1, 0, 1)).unwrap();
        let s = &MultiLaurent::var(1, 0) + &MultiLaurent::one(1);
        let v = substitute(&f, &[Image::Laurent(s.clone())], &["s".into()]).unwrap();
        let back = v.as_ratfunc().unwrap();
        let expect = RatFunc::new(s.clone(), &(&s * &s) - &MultiLaurent::one(1)).unwrap();
        assert_eq!(back, &expect);
        assert_eq!(
            substitute(&f, &[Image::Laurent(MultiLaurent::constant(1, rat(1)))], &["s".into()]),
            Err(Error::DenominatorVanishes)
        );
    }

    #[test]
    fn json_round_trip() {
        let f = kirby_weight(2, 1, 1).scale(&rat(-3));
        let v = Value::RatFunc {
            vars: vec!["a".into(), "b".into()],
            f,
        };
        assert_eq!(Value::from_json(&v.to_json()).unwrap(), v);
        let field = CyclotomicField::new(9);
        let c = Value::Cyclotomic(Cyclotomic::root_of_unity(&field, 4));
        assert_eq!(Value::from_json(&c.to_json()).unwrap(), c);
    }
}
