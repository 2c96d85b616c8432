use super::*;
use crate::algebra::{MultiLaurent, RatFunc};
use crate::linkdiag::{chain_diagram, torus_link_2};

fn chain_product(n: usize, e: i32) -> RatFunc {
    let mut p = MultiLaurent::one(n);
    for i in 1..n.saturating_sub(1) {
        p = &p * &MultiLaurent::antisym(n, i, e);
    }
    RatFunc::from_poly(p)
}

#[test]
fn unknot_conway() {
    let c = ConwayCache::new();
    let f = conway(&chain_diagram(&[3]), &c).unwrap();
    let expect = RatFunc::new(MultiLaurent::one(1), MultiLaurent::antisym(1, 0, 1)).unwrap();
    assert_eq!(f, expect);
}

#[test]
fn hopf_conway_is_one() {
    let c = ConwayCache::new();
    assert!(conway(&chain_diagram(&[0, 0]), &c).unwrap().is_one());
}

#[test]
fn chain_values() {
    let c = ConwayCache::new();
    for n in 2..=6 {
        let d = chain_diagram(&vec![2; n]);
        assert_eq!(conway(&d, &c).unwrap(), chain_product(n, 1), "n = {n}");
        assert_eq!(delta_c(&d, &c).unwrap(), chain_product(n, 2), "n = {n}");
    }
}

#[test]
fn negative_hopf_conway_is_minus_one() {
    let c = ConwayCache::new();
    let d = chain_diagram(&[0, 0]).reverse_component(1).unwrap();
    let f = conway(&d, &c).unwrap();
    assert_eq!(f, RatFunc::one(2).scale(&crate::algebra::rational::rat(-1)));
}

#[test]
fn torus_link_conway() {
    // T(2,6): (x^3 - x^-3)/(x - x^-1) with x = t1 t2, i.e. x^2 + 1 + x^-2
    let c = ConwayCache::new();
    let f = conway(&torus_link_2(3, [0, 0]), &c).unwrap();
    let x = &MultiLaurent::var(2, 0) * &MultiLaurent::var(2, 1);
    let xi = &MultiLaurent::var_pow(2, 0, -1) * &MultiLaurent::var_pow(2, 1, -1);
    let expect = &(&(&x * &x) + &MultiLaurent::one(2)) + &(&xi * &xi);
    assert_eq!(f, RatFunc::from_poly(expect));
}

#[test]
fn weighted_hopf() {
    let c = ConwayCache::new();
    let w = delta_weighted(&chain_diagram(&[3, 2]), &[1, 1], &c).unwrap();
    assert_eq!(w.prefactor, vec![-8, -6]);
    assert!(w.base.is_one());
    assert!(matches!(
        delta_weighted(&chain_diagram(&[3, 2]), &[2, 0], &c),
        Err(crate::Error::UnsupportedWeight(2))
    ));
}

#[test]
fn connected_sum_of_hopf_links() {
    let c = ConwayCache::new();
    let h = delta_c(&chain_diagram(&[0, 0]), &c).unwrap();
    let s = connected_sum_delta(&h, 1, &h, 0).unwrap();
    assert_eq!(s, chain_product(3, 2));
}
