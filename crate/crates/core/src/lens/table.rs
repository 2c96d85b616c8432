//! The invariant table over `(q, omega_k)` and the classification experiment.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::{chain_omega, coprime_residues, lens_closed_formula, lens_presentation, LensPoint, LensSpec};
use crate::alexander::ConwayCache;
use crate::algebra::{Rational, Value};
use crate::error::{Error, Result};
use crate::manifold::{refined_formula, Multiplicities, Specializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellStatus {
    /// The surgery value was computed and equals the closed formula.
    Equal,
    /// Meridian `meridian` (1-based) of the chain maps to the identity.
    NotComputable { meridian: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LensCell {
    pub q: i64,
    pub k: i64,
    pub closed: Value,
    pub surgery: Option<Value>,
    pub status: CellStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LensTable {
    pub p: i64,
    pub m: u64,
    pub cells: Vec<LensCell>,
    /// Set when there are no cells.
    pub reason: Option<String>,
}

impl LensTable {
    pub fn computed(&self) -> usize {
        self.cells.iter().filter(|c| c.status == CellStatus::Equal).count()
    }

    pub fn not_computable(&self) -> usize {
        self.cells.len() - self.computed()
    }
}

/// Exponents `e` of the last-meridian image `zeta_m^e` for the nontrivial
/// classes `H_1(L(p, q)) = Z/p -> Z/m`, indexed by `k = 1..gcd(p, m) - 1`.
fn class_exponents(p: i64, m: u64) -> Vec<(i64, i64)> {
    let g = p.gcd(&(m as i64));
    let u = m as i64 / g;
    (1..g).map(|k| (k, k * u)).collect()
}

/// Every coprime `q < p` and every nontrivial `omega_k` into `Z + Z/m`
/// (`m` odd): the closed formula and the surgery value on the HJ chain.
/// A disagreement is an error; a non-computable chain is recorded.
pub fn lens_invariant_table(p: i64, m: u64, cache: &ConwayCache) -> Result<LensTable> {
    if p < 2 {
        return Err(Error::InvalidLensSpec { p, q: 0 });
    }
    let ks = class_exponents(p, m);
    if ks.is_empty() {
        return Ok(LensTable {
            p,
            m,
            cells: Vec::new(),
            reason: Some(format!("H_1 = Z/{p} has no nontrivial homomorphism into Z/{m}")),
        });
    }
    let rows: Vec<Vec<LensCell>> = coprime_residues(p)
        .into_par_iter()
        .map(|q| -> Result<Vec<LensCell>> {
            let (a, pres) = lens_presentation(LensSpec::new(p, q)?)?;
            let f = refined_formula(&pres, cache)?;
            ks.iter()
                .map(|&(k, e)| {
                    let closed = lens_closed_formula(q, LensPoint::Root { m, k: e })?;
                    let w = chain_omega(&a, &pres, m, e)?;
                    if let Some(i) = w.first_trivial() {
                        return Ok(LensCell {
                            q,
                            k,
                            closed,
                            surgery: None,
                            status: CellStatus::NotComputable { meridian: i + 1 },
                        });
                    }
                    let surgery = Specializer::new(pres.components(), Multiplicities::Cyclotomic(&w))?.eval_plain(&f)?;
                    if surgery != closed {
                        return Err(Error::SurgeryClosedMismatch { p, q, k });
                    }
                    Ok(LensCell {
                        q,
                        k,
                        closed,
                        surgery: Some(surgery),
                        status: CellStatus::Equal,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(LensTable {
        p,
        m,
        cells: rows.into_iter().flatten().collect(),
        reason: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub p: i64,
    /// Torsion order of `G`: `p` itself when odd, else the odd part of `p`.
    pub m: u64,
    /// Classes of `q` with equal value multisets.
    pub invariant: Vec<Vec<i64>>,
    /// `q ~ q'` iff `q = q'` or `qq' = 1 mod p`.
    pub arithmetic: Vec<Vec<i64>>,
    /// Arithmetically distinct pairs that the invariant fails to separate.
    pub merged: Vec<(i64, i64)>,
    /// `p` is a power of 2, so no nontrivial class exists at all.
    pub power_of_two: bool,
}

impl Classification {
    pub fn matches_arithmetic(&self) -> bool {
        self.invariant == self.arithmetic
    }
}

fn partition(items: &[i64], same: impl Fn(i64, i64) -> bool) -> Vec<Vec<i64>> {
    let mut classes: Vec<Vec<i64>> = Vec::new();
    for &q in items {
        match classes.iter_mut().find(|c| same(c[0], q)) {
            Some(c) => c.push(q),
            None => classes.push(vec![q]),
        }
    }
    classes
}

pub fn arithmetic_partition(p: i64) -> Vec<Vec<i64>> {
    partition(&coprime_residues(p), |a, b| (a - b).rem_euclid(p) == 0 || (a * b).rem_euclid(p) == 1)
}

/// Groups `q` by the multiset `{Delta(L(p, q), omega_k)}_k`. The values come
/// from the closed formula.
pub fn classify_lens(p: i64) -> Result<Classification> {
    if p < 2 {
        return Err(Error::InvalidLensSpec { p, q: 0 });
    }
    let mut m = p as u64;
    while m % 2 == 0 {
        m /= 2;
    }
    let qs = coprime_residues(p);
    let ks = class_exponents(p, m);
    let mut keys: BTreeMap<i64, Vec<Vec<Rational>>> = BTreeMap::new();
    for &q in &qs {
        let mut vals = ks
            .iter()
            .map(|&(_, e)| {
                let v = lens_closed_formula(q, LensPoint::Root { m, k: e })?;
                Ok(v.into_cyclotomic().expect("cyclotomic").coeffs().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        vals.sort();
        keys.insert(q, vals);
    }
    let invariant = partition(&qs, |a, b| keys[&a] == keys[&b]);
    let arithmetic = arithmetic_partition(p);
    let class_of = |parts: &[Vec<i64>], q: i64| parts.iter().position(|c| c.contains(&q));
    let mut merged = Vec::new();
    for (i, &a) in qs.iter().enumerate() {
        for &b in &qs[i + 1..] {
            if class_of(&invariant, a) == class_of(&invariant, b)
                && class_of(&arithmetic, a) != class_of(&arithmetic, b)
            {
                merged.push((a, b));
            }
        }
    }
    Ok(Classification {
        p,
        m,
        invariant,
        arithmetic,
        merged,
        power_of_two: m == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_p5() {
        let c = ConwayCache::new();
        let t = lens_invariant_table(5, 5, &c).unwrap();
        assert_eq!(t.cells.len(), 16);
        assert_eq!(t.computed(), 16);
        let t8 = lens_invariant_table(8, 3, &c).unwrap();
        assert!(t8.cells.is_empty() && t8.reason.is_some());
    }

    #[test]
    fn p7_q1_and_q2_differ() {
        let c = ConwayCache::new();
        let t = lens_invariant_table(7, 7, &c).unwrap();
        let get = |q, k| t.cells.iter().find(|x| x.q == q && x.k == k).unwrap().closed.clone();
        assert_ne!(get(1, 1), get(2, 1));
    }

    #[test]
    fn classify_small() {
        let c7 = classify_lens(7).unwrap();
        assert_eq!(c7.invariant, vec![vec![1], vec![2, 4], vec![3, 5], vec![6]]);
        assert!(c7.matches_arithmetic());
        assert_eq!(classify_lens(5).unwrap().invariant, vec![vec![1], vec![2, 3], vec![4]]);
        let c12 = classify_lens(12).unwrap();
        assert_eq!(c12.m, 3);
        assert!(c12.merged.contains(&(5, 11)));
        assert!(classify_lens(8).unwrap().power_of_two);
    }
}
