//! `H_1(M)` as the cokernel of the linking matrix.

use std::fmt;

use num_traits::ToPrimitive;

use super::group::{symmetric_mod, OmegaClass, PaletteGroup};
use super::SurgeryPresentation;
use crate::algebra::snf;
use crate::error::{Error, Result};

/// `H_1 = Z/d_1 + ... + Z/d_k` (`d_i = 0` meaning `Z`), with the meridians
/// written in these generators. Trivial factors are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct H1 {
    factors: Vec<i64>,
    /// `meridians[j][i]`: coordinate of `[m_j]` on factor `i`.
    meridians: Vec<Vec<i64>>,
}

impl H1 {
    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn meridians(&self) -> &[Vec<i64>] {
        &self.meridians
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|&d| d != 0)
    }

    pub fn betti(&self) -> usize {
        self.factors.iter().filter(|&&d| d == 0).count()
    }

    /// Order of the group, or `None` if it is infinite.
    pub fn order(&self) -> Option<i64> {
        self.is_finite().then(|| self.factors.iter().product())
    }

    /// Whether `sum_j v_j [m_j]` is zero in `H_1`.
    pub fn is_zero_combination(&self, v: &[i64]) -> bool {
        self.factors.iter().enumerate().all(|(i, &d)| {
            let y: i64 = v.iter().zip(&self.meridians).map(|(&c, m)| c * m[i]).sum();
            if d == 0 {
                y == 0
            } else {
                y.rem_euclid(d) == 0
            }
        })
    }
}

impl fmt::Display for H1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn homology_h1(p: &SurgeryPresentation) -> H1 {
    let s = snf(p.linking_matrix());
    let r = p.components();
    let d: Vec<i64> = s
        .invariant_factors()
        .iter()
        .map(|x| x.to_i64().expect("invariant factor fits in i64"))
        .collect();
    let keep: Vec<usize> = (0..r).filter(|&i| d[i] != 1).collect();
    let factors: Vec<i64> = keep.iter().map(|&i| d[i]).collect();
    let meridians = (0..r)
        .map(|j| {
            keep.iter()
                .map(|&i| {
                    let u = s.u[(i, j)].to_i64().expect("unimodular entry fits in i64");
                    if d[i] == 0 {
                        u
                    } else {
                        u.rem_euclid(d[i])
                    }
                })
                .collect()
        })
        .collect();
    H1 { factors, meridians }
}

/// Every nontrivial homomorphism from `H_1` into the torsion part of `G`,
/// in lexicographic order of the images of the normal-form generators.
pub fn enumerate_omega(p: &SurgeryPresentation, group: &PaletteGroup) -> Result<Vec<OmegaClass>> {
    let h = p.h1();
    if !h.is_finite() {
        return Err(Error::InfiniteH1);
    }
    let m = group.torsion() as i64;
    // Generator i may go to x with d_i x = 0 mod m, i.e. to multiples of
    // m / gcd(d_i, m).
    let steps: Vec<i64> = h
        .factors()
        .iter()
        .map(|&d| m / num_integer::gcd(d, m))
        .collect();
    let counts: Vec<i64> = steps.iter().map(|&s| m / s).collect();
    let total: i64 = counts.iter().product();
    let mut out = Vec::new();
    for idx in 1..total {
        let mut rest = idx;
        let mut x = vec![0i64; counts.len()];
        for i in (0..counts.len()).rev() {
            x[i] = (rest % counts[i]) * steps[i];
            rest /= counts[i];
        }
        let images = h
            .meridians()
            .iter()
            .map(|mj| {
                let y: i64 = mj.iter().zip(&x).map(|(a, b)| a * b).sum();
                group.torsion_elem(symmetric_mod(y, m as u64))
            })
            .collect();
        out.push(OmegaClass::new(p, group.clone(), images)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::chain_diagram;

    fn pres(a: &[i64]) -> SurgeryPresentation {
        SurgeryPresentation::new(chain_diagram(a)).unwrap()
    }

    #[test]
    fn lens_homology() {
        assert_eq!(pres(&[7]).h1().factors(), &[7]);
        assert_eq!(pres(&[3, 2]).h1().factors(), &[5]);
        assert_eq!(pres(&[0]).h1().factors(), &[0]);
        assert_eq!(pres(&[0]).h1().to_string(), "Z");
        assert_eq!(pres(&[1]).h1().to_string(), "0");
    }

    #[test]
    fn enumeration_counts() {
        let g5 = PaletteGroup::new(1, 5).unwrap();
        let all = enumerate_omega(&pres(&[3, 2]), &g5).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(OmegaClass::is_computable));
        // L(8,1) has no nontrivial class into odd torsion.
        for m in [1, 3, 5, 7, 9] {
            let g = PaletteGroup::new(1, m).unwrap();
            assert!(enumerate_omega(&pres(&[8]), &g).unwrap().is_empty());
        }
        let g3 = PaletteGroup::new(1, 3).unwrap();
        assert_eq!(enumerate_omega(&pres(&[3, 2, 3]), &g3).unwrap().len(), 2);
        assert_eq!(enumerate_omega(&pres(&[0]), &g3), Err(Error::InfiniteH1));
    }

    #[test]
    fn meridian_relations_in_h1() {
        let p = pres(&[3, 2, 3]);
        let h = p.h1();
        let lk = p.linking_numbers();
        for j in 0..3 {
            let col: Vec<i64> = (0..3).map(|i| lk[i][j]).collect();
            assert!(h.is_zero_combination(&col));
        }
        assert!(!h.is_zero_combination(&[0, 0, 1]));
    }
}
