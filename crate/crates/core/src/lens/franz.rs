//! An exact checker for the three hypotheses of Franz's independence lemma.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};

/// Which of the three conditions hold for a sequence `(a_i)` indexed by the
/// units mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranzReport {
    pub p: i64,
    /// `sum_i a_i = 0`
    pub sum_zero: bool,
    /// `a_i = a_{-i}`
    pub symmetric: bool,
    /// `prod_i (xi^i - 1)^{a_i} = 1` for every `p`-th root of unity `xi != 1`
    pub product_one: bool,
    /// Exponents `j` with `xi = zeta_p^j` where the product is not 1.
    pub failing_roots: Vec<i64>,
    pub is_zero: bool,
}

impl FranzReport {
    pub fn all_pass(&self) -> bool {
        self.sum_zero && self.symmetric && self.product_one
    }
}

/// `a` must have exactly the units mod `p` as keys (given in `0..p`).
///
/// At `xi = 1` every factor vanishes, so the product is only evaluated at
/// the roots `zeta_p^j`, `j = 1..p-1`.
pub fn franz_check(p: i64, a: &BTreeMap<i64, i64>) -> Result<FranzReport> {
    if p < 3 {
        return Err(Error::BadIndexSet(format!("p = {p} must be at least 3")));
    }
    let units: Vec<i64> = (1..p).filter(|i| p.gcd(i) == 1).collect();
    let keys: Vec<i64> = a.keys().copied().collect();
    if keys != units {
        return Err(Error::BadIndexSet(format!(
            "indices {keys:?} are not the units mod {p}"
        )));
    }
    let sum_zero = a.values().sum::<i64>() == 0;
    let symmetric = units.iter().all(|&i| a[&i] == a[&(p - i)]);
    let field = CyclotomicField::new(p as u64);
    let one = Cyclotomic::one(&field);
    let mut failing_roots = Vec::new();
    for j in 1..p {
        let mut num = one.clone();
        let mut den = one.clone();
        for (&i, &e) in a {
            if e == 0 {
                continue;
            }
            let f = Cyclotomic::root_of_unity(&field, i * j).try_sub(&one)?;
            let fe = f.pow(e.abs())?;
            if e > 0 {
                num = num.try_mul(&fe)?;
            } else {
                den = den.try_mul(&fe)?;
            }
        }
        if num != den {
            failing_roots.push(j);
        }
    }
    Ok(FranzReport {
        p,
        sum_zero,
        symmetric,
        product_one: failing_roots.is_empty(),
        failing_roots,
        is_zero: a.values().all(|&x| x == 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(p: i64, v: &[i64]) -> BTreeMap<i64, i64> {
        (1..p).filter(|i| p.gcd(i) == 1).zip(v.iter().copied()).collect()
    }

    #[test]
    fn zero_passes() {
        let r = franz_check(5, &seq(5, &[0, 0, 0, 0])).unwrap();
        assert!(r.all_pass() && r.is_zero);
    }

    #[test]
    fn symmetric_balanced_fails_product() {
        let r = franz_check(5, &seq(5, &[1, -1, -1, 1])).unwrap();
        assert!(r.sum_zero && r.symmetric);
        assert!(!r.product_one);
    }

    #[test]
    fn constant_one_fails_sum() {
        let r = franz_check(5, &seq(5, &[1, 1, 1, 1])).unwrap();
        assert!(!r.sum_zero);
    }

    #[test]
    fn bad_index_set() {
        let mut a = seq(6, &[0, 0]);
        a.insert(2, 0);
        assert!(matches!(franz_check(6, &a), Err(Error::BadIndexSet(_))));
        assert!(franz_check(2, &BTreeMap::new()).is_err());
    }
}
