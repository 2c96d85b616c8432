//! Fox calculus on the Wirtinger presentation.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{MultiLaurent, Rational};
use crate::error::{Error, Result};
use crate::linkdiag::LinkDiagram;

/// Abelianized Fox Jacobian: one row per crossing, one column per arc, in
/// the variables `t_1..t_r` (one per component).
///
/// A crossing of sign `e` gives the relation
/// `x_out = x_over^e x_in x_over^-e`.
pub fn alexander_matrix(d: &LinkDiagram) -> Vec<Vec<MultiLaurent>> {
    let r = d.components();
    let n = d.arcs();
    let one = MultiLaurent::one(r);
    d.crossings()
        .iter()
        .map(|x| {
            let mut row = vec![MultiLaurent::zero(r); n];
            let to = d.arc_component(x.over);
            let tu = d.arc_component(x.under_in);
            let (e_over, e_in) = if x.sign > 0 {
                (&one - &MultiLaurent::var(r, tu), MultiLaurent::var(r, to))
            } else {
                let inv = MultiLaurent::var_pow(r, to, -1);
                (&inv * &(&MultiLaurent::var(r, tu) - &one), inv)
            };
            row[x.over] = &row[x.over] + &e_over;
            row[x.under_in] = &row[x.under_in] + &e_in;
            row[x.under_out] = &row[x.under_out] - &one;
            row
        })
        .collect()
}

/// Determinant of a sparse square matrix, expanding row by row and merging
/// partial expansions that used the same set of still-needed columns.
pub fn sparse_det(m: &[Vec<MultiLaurent>], nvars: usize) -> MultiLaurent {
    let n = m.len();
    if n == 0 {
        return MultiLaurent::one(nvars);
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let support: Vec<Vec<usize>> = m
        .iter()
        .map(|row| (0..n).filter(|&j| !row[j].is_zero()).collect())
        .collect();

    // Greedy row order: each step takes the row that brings in the fewest
    // new columns, which keeps the frontier narrow on banded matrices.
    let mut order = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    let mut seen_col = vec![false; n];
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !taken[i])
            .min_by_key(|&i| (support[i].iter().filter(|&&j| !seen_col[j]).count(), i))
            .expect("rows remain");
        taken[best] = true;
        for &j in &support[best] {
            seen_col[j] = true;
        }
        order.push(best);
    }
    let mut row_sign_inv = 0usize;
    for a in 0..n {
        for b in a + 1..n {
            if order[a] > order[b] {
                row_sign_inv += 1;
            }
        }
    }

    // last[j]: position in `order` of the last row touching column j.
    let mut last = vec![None; n];
    for (k, &i) in order.iter().enumerate() {
        for &j in &support[i] {
            last[j] = Some(k);
        }
    }
    if last.iter().any(Option::is_none) {
        return MultiLaurent::zero(nvars);
    }

    let mut finished = vec![false; n];
    let mut states: BTreeMap<Vec<usize>, MultiLaurent> = BTreeMap::new();
    states.insert(vec![], MultiLaurent::one(nvars));
    for (k, &i) in order.iter().enumerate() {
        let mut next: BTreeMap<Vec<usize>, MultiLaurent> = BTreeMap::new();
        for (used, val) in &states {
            for &c in &support[i] {
                if finished[c] || used.binary_search(&c).is_ok() {
                    continue;
                }
                let above_finished = (c + 1..n).filter(|&x| finished[x]).count();
                let above_used = used.iter().filter(|&&x| x > c).count();
                let mut term = val * &m[i][c];
                if (above_finished + above_used) % 2 == 1 {
                    term = -&term;
                }
                let mut key = used.clone();
                key.insert(key.binary_search(&c).unwrap_err(), c);
                // Columns that no later row touches must already be used.
                let dead = (0..n).any(|x| last[x] == Some(k) && !finished[x] && key.binary_search(&x).is_err());
                if dead {
                    continue;
                }
                key.retain(|&x| last[x] != Some(k));
                let slot = next.entry(key).or_insert_with(|| MultiLaurent::zero(nvars));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        for x in 0..n {
            if last[x] == Some(k) {
                finished[x] = true;
            }
        }
        states = next;
        if states.is_empty() {
            return MultiLaurent::zero(nvars);
        }
    }
    let det = states.remove(&vec![]).unwrap_or_else(|| MultiLaurent::zero(nvars));
    if row_sign_inv % 2 == 1 {
        -&det
    } else {
        det
    }
}

/// The multivariable Alexander polynomial, defined up to `± t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderClass {
    poly: MultiLaurent,
}

impl AlexanderClass {
    /// Canonical representative: every variable's lowest exponent is 0 and
    /// the lexicographically largest term has a positive coefficient.
    pub fn new(p: MultiLaurent) -> Self {
        let (_, mut q) = p.split_monomial();
        if q.leading_sign() < 0 {
            q = -&q;
        }
        AlexanderClass { poly: q }
    }

    pub fn poly(&self) -> &MultiLaurent {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Always true: the class is only defined up to a signed monomial.
    pub fn up_to_unit(&self) -> bool {
        true
    }
}

/// `fox_alexander` with an explicit choice of deleted column.
pub fn fox_alexander_deleting(d: &LinkDiagram, col: usize) -> Result<AlexanderClass> {
    let r = d.components();
    let n = d.arcs();
    if col >= n {
        return Err(Error::IndexOutOfRange { index: col, len: n });
    }
    let mut m = alexander_matrix(d);
    for row in &mut m {
        row.remove(col);
    }
    let cols = n - 1;
    if m.len() < cols {
        return Ok(AlexanderClass::new(MultiLaurent::zero(r)));
    }
    // A Wirtinger presentation with one relation per crossing has one
    // redundant relation.
    m.truncate(cols);
    let det = sparse_det(&m, r);
    if r == 1 || det.is_zero() {
        return Ok(AlexanderClass::new(det));
    }
    let c = d.arc_component(col);
    let t1 = &MultiLaurent::var(r, c) - &MultiLaurent::one(r);
    let q = det
        .div_exact(&t1)
        .ok_or_else(|| Error::InternalExactnessFailure("Fox minor not divisible by (t - 1)".into()))?;
    Ok(AlexanderClass::new(q))
}

/// Deletes the column of the lowest arc of the first component.
pub fn fox_alexander(d: &LinkDiagram) -> Result<AlexanderClass> {
    let col = d.component_arcs(0)[0];
    fox_alexander_deleting(d, col)
}

/// `Delta(1, ..., 1)`, useful as a sanity check on knots (`±1`).
pub fn value_at_one(p: &MultiLaurent) -> Rational {
    let pt = vec![Rational::one(); p.nvars()];
    p.eval_rational(&pt).expect("no poles at 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::linkdiag::{chain_diagram, torus_link_2};

    fn dense_det(m: &[Vec<MultiLaurent>], nvars: usize) -> MultiLaurent {
        let n = m.len();
        if n == 0 {
            return MultiLaurent::one(nvars);
        }
        let mut acc = MultiLaurent::zero(nvars);
        for c in 0..n {
            let minor: Vec<Vec<MultiLaurent>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let t = &m[0][c] * &dense_det(&minor, nvars);
            acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn sparse_det_matches_cofactor_expansion() {
        let d = torus_link_2(3, [0, 0]);
        let mut m = alexander_matrix(&d);
        for row in &mut m {
            row.remove(0);
        }
        m.truncate(5);
        assert_eq!(sparse_det(&m, 2), dense_det(&m, 2));
        let d = chain_diagram(&[0, 0, 0, 0]);
        let mut m = alexander_matrix(&d);
        for row in &mut m {
            row.remove(2);
        }
        m.truncate(5);
        assert_eq!(sparse_det(&m, 4), dense_det(&m, 4));
    }

    #[test]
    fn unknot_and_hopf() {
        let u = fox_alexander(&chain_diagram(&[0])).unwrap();
        assert!(u.poly().is_one());
        let h = fox_alexander(&chain_diagram(&[0, 0])).unwrap();
        assert!(h.poly().is_one());
    }

    #[test]
    fn three_chain_is_middle_variable_minus_one() {
        let c = fox_alexander(&chain_diagram(&[0, 0, 0])).unwrap();
        let expect = &MultiLaurent::var(3, 1) - &MultiLaurent::one(3);
        assert_eq!(c.poly(), &expect);
    }

    #[test]
    fn torus_link_t26() {
        // (2,6) torus link: 1 + t1 t2 + (t1 t2)^2
        let c = fox_alexander(&torus_link_2(3, [0, 0])).unwrap();
        let x = &MultiLaurent::var(2, 0) * &MultiLaurent::var(2, 1);
        let expect = &(&MultiLaurent::one(2) + &x) + &(&x * &x);
        assert_eq!(c.poly(), &expect);
        assert_eq!(value_at_one(c.poly()), rat(3));
    }

    #[test]
    fn split_unlink_is_zero() {
        let u = chain_diagram(&[0]).disjoint_union(&chain_diagram(&[0]));
        assert!(fox_alexander(&u).unwrap().is_zero());
    }
}
