//! The multiplicity group `G = Z^a + Z/m` and classes `omega: H_1(M) -> G`.

use std::fmt;

use super::SurgeryPresentation;
use crate::error::{Error, Result};

/// `G = Z^a + Z/m` with `a >= 1` and `m` odd, so `G` has no 2-torsion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaletteGroup {
    free_rank: usize,
    torsion: u64,
}

/// An element of a [`PaletteGroup`], written multiplicatively as
/// `x_1^{free[0]} ... x_a^{free[a-1]} t^{torsion}`.
///
/// The torsion exponent is kept as given; it is only reduced mod `m` when
/// comparing. Symbolic evaluation uses the raw exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub free: Vec<i64>,
    pub torsion: i64,
}

/// Representative of `x mod m` in `(-m/2, m/2]`.
pub fn symmetric_mod(x: i64, m: u64) -> i64 {
    let m = m as i64;
    let r = x.rem_euclid(m);
    if 2 * r > m {
        r - m
    } else {
        r
    }
}

impl PaletteGroup {
    pub fn new(free_rank: usize, torsion: u64) -> Result<Self> {
        if free_rank == 0 {
            return Err(Error::InvalidOmega("G must contain a free summand".into()));
        }
        if torsion == 0 || torsion % 2 == 0 {
            return Err(Error::InvalidOmega(format!(
                "torsion order {torsion} must be odd and positive"
            )));
        }
        Ok(PaletteGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> u64 {
        self.torsion
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem {
            free: vec![0; self.free_rank],
            torsion: 0,
        }
    }

    pub fn torsion_elem(&self, k: i64) -> GroupElem {
        GroupElem {
            free: vec![0; self.free_rank],
            torsion: k,
        }
    }

    pub fn elem(&self, free: Vec<i64>, torsion: i64) -> Result<GroupElem> {
        if free.len() != self.free_rank {
            return Err(Error::InvalidOmega(format!(
                "free part has length {}, expected {}",
                free.len(),
                self.free_rank
            )));
        }
        Ok(GroupElem { free, torsion })
    }

    fn check(&self, g: &GroupElem) -> Result<()> {
        if g.free.len() != self.free_rank {
            return Err(Error::InvalidOmega(format!(
                "element {g} does not lie in a group of free rank {}",
                self.free_rank
            )));
        }
        Ok(())
    }

    pub fn is_identity(&self, g: &GroupElem) -> bool {
        g.free.iter().all(|&x| x == 0) && g.torsion.rem_euclid(self.torsion as i64) == 0
    }

    /// `sum_i c_i g_i` (the product `prod g_i^{c_i}` in multiplicative
    /// notation).
    pub fn combine(&self, coeffs: &[i64], gs: &[GroupElem]) -> GroupElem {
        let mut acc = self.identity();
        for (&c, g) in coeffs.iter().zip(gs) {
            for (a, &b) in acc.free.iter_mut().zip(&g.free) {
                *a += c * b;
            }
            acc.torsion += c * g.torsion;
        }
        acc
    }
}

impl fmt::Display for PaletteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.free_rank == 1 {
            write!(f, "Z")?;
        } else {
            write!(f, "Z^{}", self.free_rank)?;
        }
        if self.torsion > 1 {
            write!(f, " + Z/{}", self.torsion)?;
        }
        Ok(())
    }
}

impl GroupElem {
    pub fn is_torsion(&self) -> bool {
        self.free.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: String, e: i64| match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        };
        for (i, &e) in self.free.iter().enumerate() {
            push(format!("x{}", i + 1), e);
        }
        push("t".into(), self.torsion);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A homomorphism `omega: H_1(M) -> G`, stored by the images of the meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaClass {
    group: PaletteGroup,
    images: Vec<GroupElem>,
}

impl OmegaClass {
    /// Checks that `prod_i g_i^{lk(L_i, L_j)} = 1` for every `j`.
    pub fn new(p: &SurgeryPresentation, group: PaletteGroup, images: Vec<GroupElem>) -> Result<Self> {
        let r = p.components();
        if images.len() != r {
            return Err(Error::InvalidOmega(format!("{} images for {r} meridians", images.len())));
        }
        for g in &images {
            group.check(g)?;
        }
        let lk = p.linking_numbers();
        for j in 0..r {
            let col: Vec<i64> = (0..r).map(|i| lk[i][j]).collect();
            let rel = group.combine(&col, &images);
            if !group.is_identity(&rel) {
                return Err(Error::InvalidOmega(format!(
                    "relation of component {} fails: product is {rel}",
                    j + 1
                )));
            }
        }
        Ok(OmegaClass { group, images })
    }

    /// Completes a partial assignment. The missing images are solved from
    /// a set of relations whose matrix is unimodular, preferring to drop the
    /// relations of the lowest-numbered components; the full set of
    /// relations is then checked as in [`OmegaClass::new`].
    pub fn solve(p: &SurgeryPresentation, group: PaletteGroup, partial: &[Option<GroupElem>]) -> Result<Self> {
        let r = p.components();
        if partial.len() != r {
            return Err(Error::InvalidOmega(format!("{} entries for {r} meridians", partial.len())));
        }
        let unknown: Vec<usize> = (0..r).filter(|&i| partial[i].is_none()).collect();
        if unknown.is_empty() {
            return OmegaClass::new(p, group, partial.iter().flatten().cloned().collect());
        }
        let known: Vec<usize> = (0..r).filter(|&i| partial[i].is_some()).collect();
        for &i in &known {
            group.check(partial[i].as_ref().expect("known"))?;
        }
        let lk = p.linking_numbers();
        let u = unknown.len();
        // Rows to drop, as combinations of `known.len()` rows in lex order.
        for drop in combinations(r, r - u) {
            let rows: Vec<usize> = (0..r).filter(|j| !drop.contains(j)).collect();
            let m: Vec<Vec<i64>> = rows
                .iter()
                .map(|&j| unknown.iter().map(|&i| lk[i][j]).collect())
                .collect();
            let Some(inv) = unimodular_inverse(&m) else {
                continue;
            };
            // rhs_j = -(sum over known i of lk_ij g_i)
            let rhs: Vec<GroupElem> = rows
                .iter()
                .map(|&j| {
                    let c: Vec<i64> = known.iter().map(|&i| -lk[i][j]).collect();
                    let g: Vec<GroupElem> = known
                        .iter()
                        .map(|&i| partial[i].clone().expect("known"))
                        .collect();
                    group.combine(&c, &g)
                })
                .collect();
            let mut images: Vec<GroupElem> = partial.iter().map(|x| x.clone().unwrap_or_else(|| group.identity())).collect();
            for (a, &i) in unknown.iter().enumerate() {
                images[i] = group.combine(&inv[a], &rhs);
            }
            return OmegaClass::new(p, group, images);
        }
        Err(Error::InvalidOmega(
            "the given meridian images do not determine the others; supply all of them".into(),
        ))
    }

    pub fn group(&self) -> &PaletteGroup {
        &self.group
    }

    pub fn images(&self) -> &[GroupElem] {
        &self.images
    }

    /// 0-based index of the first meridian sent to the identity.
    pub fn first_trivial(&self) -> Option<usize> {
        self.images.iter().position(|g| self.group.is_identity(g))
    }

    pub fn is_computable(&self) -> bool {
        self.first_trivial().is_none()
    }

    /// `NotComputable` carries the 1-based meridian index.
    pub fn ensure_computable(&self) -> Result<()> {
        match self.first_trivial() {
            Some(i) => Err(Error::NotComputable(i + 1)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for OmegaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, g)| format!("m{}={g}", i + 1))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// All `k`-subsets of `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Inverse of a square integer matrix with determinant `±1`.
fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    use crate::algebra::Rational;
    use num_traits::{One, Signed, Zero};
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Rational> = row.iter().map(|&x| Rational::from_integer(x.into())).collect();
            v.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            v
        })
        .collect();
    let mut det = Rational::one();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let row_c = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&row_c) {
                    *x -= &f * y;
                }
            }
        }
    }
    if !det.abs().is_one() {
        return None;
    }
    Some(
        a.iter()
            .map(|row| row[n..].iter().map(|x| x.to_integer().try_into().expect("small entries")).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::chain_diagram;

    #[test]
    fn group_validation() {
        assert!(PaletteGroup::new(0, 5).is_err());
        assert!(PaletteGroup::new(1, 4).is_err());
        assert!(PaletteGroup::new(1, 0).is_err());
        let g = PaletteGroup::new(1, 5).unwrap();
        assert!(g.is_identity(&g.torsion_elem(10)));
        assert!(!g.is_identity(&g.torsion_elem(3)));
        assert_eq!(g.to_string(), "Z + Z/5");
    }

    #[test]
    fn symmetric_representatives() {
        assert_eq!(symmetric_mod(3, 5), -2);
        assert_eq!(symmetric_mod(2, 5), 2);
        assert_eq!(symmetric_mod(-7, 5), -2);
    }

    #[test]
    fn solve_chain_from_last_meridian() {
        let p = SurgeryPresentation::new(chain_diagram(&[3, 2, 3])).unwrap();
        let g = PaletteGroup::new(1, 3).unwrap();
        let w = OmegaClass::solve(&p, g.clone(), &[None, None, Some(g.torsion_elem(1))]).unwrap();
        let t: Vec<i64> = w.images().iter().map(|x| x.torsion).collect();
        assert_eq!(t, vec![5, -3, 1]);
        assert_eq!(w.first_trivial(), Some(1));
        assert_eq!(w.ensure_computable(), Err(Error::NotComputable(2)));
    }

    #[test]
    fn relations_are_checked() {
        let p = SurgeryPresentation::new(chain_diagram(&[3, 2])).unwrap();
        let g = PaletteGroup::new(1, 5).unwrap();
        assert!(OmegaClass::new(&p, g.clone(), vec![g.torsion_elem(-2), g.torsion_elem(1)]).is_ok());
        assert!(OmegaClass::new(&p, g.clone(), vec![g.torsion_elem(1), g.torsion_elem(1)]).is_err());
    }
}
