//! Invariance and consistency laws for diagrams, surgery presentations and
//! lens spaces.

use gl11::alexander::{conway, delta_c, ConwayCache};
use gl11::algebra::rational::rat_frac;
use gl11::algebra::{Rational, Value};
use gl11::lens::{c_sequence, chain_omega, hj_continued_fraction, lens_presentation, LensSpec};
use gl11::linkdiag::{chain_diagram, connected_sum, parse_link, torus_link_2, LinkDiagram};
use gl11::manifold::{
    delta_kirby, delta_refined, enumerate_omega, Multiplicities, OmegaClass, PaletteGroup, SurgeryPresentation,
};
use gl11::torsion::torsion_relation_check;
use num_integer::Integer;
use proptest::prelude::*;

fn framings(max: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..=max)
}

fn diagram() -> impl Strategy<Value = LinkDiagram> {
    prop_oneof![
        framings(4).prop_map(|f| chain_diagram(&f)),
        (1usize..=4, -3i64..=3, -3i64..=3).prop_map(|(k, a, b)| torus_link_2(k, [a, b])),
        (framings(2), 1usize..=3).prop_map(|(f, k)| connected_sum(&chain_diagram(&f), 0, &torus_link_2(k, [1, 2]), 0).unwrap()),
    ]
}

fn lens() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=60, 1i64..60).prop_filter_map("coprime", |(p, q)| {
        let q = q % p;
        (q > 0 && p.gcd(&q) == 1).then_some((p, q))
    })
}

fn sorted_coeffs(vals: Vec<Value>) -> Vec<Vec<Rational>> {
    let mut v: Vec<_> = vals.into_iter().map(|x| x.into_cyclotomic().unwrap().coeffs().to_vec()).collect();
    v.sort();
    v
}

/// The values of every nontrivial class into `Z + Z/m`, or `None` when some
/// class is not computable on this presentation.
fn class_values(p: &SurgeryPresentation, m: u64, cache: &ConwayCache) -> Option<Vec<Vec<Rational>>> {
    let ws = enumerate_omega(p, &PaletteGroup::new(1, m).unwrap()).unwrap();
    if ws.iter().any(|w| !w.is_computable()) {
        return None;
    }
    let vals = ws
        .iter()
        .map(|w| delta_refined(p, Multiplicities::Cyclotomic(w), cache).unwrap())
        .collect();
    Some(sorted_coeffs(vals))
}

#[test]
fn c1_for_every_lens_up_to_50() {
    for p in 2..=50i64 {
        for q in (1..p).filter(|q| p.gcd(q) == 1) {
            let a = hj_continued_fraction(p, q).unwrap();
            let c = c_sequence(&a).unwrap();
            let sign = if a.len() % 2 == 1 { 1 } else { -1 };
            assert_eq!(c[0], sign * q, "{p}/{q}");
        }
    }
}

#[test]
fn lens_5_2_from_both_ends() {
    let cache = ConwayCache::new();
    let a = SurgeryPresentation::new(chain_diagram(&[3, 2])).unwrap();
    let b = SurgeryPresentation::new(chain_diagram(&[2, 3])).unwrap();
    assert_eq!(class_values(&a, 5, &cache), class_values(&b, 5, &cache));
    assert!(class_values(&a, 5, &cache).is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_shape(f in framings(6)) {
        let d = chain_diagram(&f);
        let n = f.len();
        prop_assert_eq!(d.crossings().len(), 2 * (n - 1));
        let lk = d.linking_numbers().unwrap();
        for i in 0..n {
            prop_assert_eq!(lk[i][i], f[i]);
            for j in 0..n {
                prop_assert_eq!(lk[i][j], lk[j][i]);
                let expected = if i.abs_diff(j) == 1 { 1 } else { 0 };
                if i != j {
                    prop_assert_eq!(lk[i][j].abs(), expected);
                }
            }
        }
    }

    #[test]
    fn torus_link_linking(k in 1usize..6, a in -4i64..4, b in -4i64..4) {
        let lk = torus_link_2(k, [a, b]).linking_numbers().unwrap();
        prop_assert_eq!(lk, vec![vec![a, k as i64], vec![k as i64, b]]);
    }

    #[test]
    fn serialize_round_trip(d in diagram()) {
        prop_assert_eq!(parse_link(&d.to_json_string()).unwrap(), d);
    }

    #[test]
    fn reversal_negates_linking(d in diagram(), i in 0usize..4) {
        let i = i % d.components();
        let lk = d.linking_numbers().unwrap();
        let rk = d.reverse_component(i).unwrap().linking_numbers().unwrap();
        for a in 0..lk.len() {
            for b in 0..lk.len() {
                let flip = (a == i) != (b == i);
                prop_assert_eq!(rk[a][b], if flip { -lk[a][b] } else { lk[a][b] });
            }
        }
    }

    #[test]
    fn conway_symmetry(d in diagram()) {
        let f = conway(&d, &ConwayCache::new()).unwrap();
        let r = d.components();
        let inv = f.invert_vars(&vec![true; r]).unwrap();
        prop_assert_eq!(inv, if r % 2 == 0 { f } else { -&f });
    }

    #[test]
    fn delta_ignores_framings(d in diagram(), shift in -3i64..3) {
        let cache = ConwayCache::new();
        let moved: Vec<i64> = d.framings().iter().map(|a| a + shift).collect();
        prop_assert_eq!(delta_c(&d, &cache).unwrap(), delta_c(&d.with_framings(moved).unwrap(), &cache).unwrap());
    }

    #[test]
    fn hj_round_trip((p, q) in lens()) {
        let a = hj_continued_fraction(p, q).unwrap();
        prop_assert!(a.coeffs().iter().all(|&x| x >= 2));
        prop_assert_eq!(a.evaluate(), rat_frac(p, q));
    }

    #[test]
    fn chain_meridians_satisfy_relations((p, q) in lens(), k in -20i64..20) {
        prop_assume!(p % 2 == 1);
        let (a, pres) = lens_presentation(LensSpec::new(p, q).unwrap()).unwrap();
        prop_assert!(chain_omega(&a, &pres, p as u64, k).is_ok());
    }

    #[test]
    fn enumerated_classes_are_homomorphisms(f in framings(3), m in prop::sample::select(vec![3u64, 5, 9, 15])) {
        let pres = SurgeryPresentation::new(chain_diagram(&f)).unwrap();
        prop_assume!(pres.h1().is_finite());
        let g = PaletteGroup::new(1, m).unwrap();
        let ws = enumerate_omega(&pres, &g).unwrap();
        let expected: i64 = pres.h1().factors().iter().map(|&d| d.gcd(&(m as i64))).product::<i64>() - 1;
        prop_assert_eq!(ws.len() as i64, expected);
        for w in &ws {
            prop_assert!(OmegaClass::new(&pres, g.clone(), w.images().to_vec()).is_ok());
            prop_assert!(w.images().iter().any(|x| !g.is_identity(x)));
        }
    }

    #[test]
    fn kirby_matches_refined(f in framings(3), m in prop::sample::select(vec![3u64, 5, 7])) {
        let pres = SurgeryPresentation::new(chain_diagram(&f)).unwrap();
        prop_assume!(pres.h1().is_finite());
        let cache = ConwayCache::new();
        for w in enumerate_omega(&pres, &PaletteGroup::new(1, m).unwrap()).unwrap() {
            if !w.is_computable() {
                continue;
            }
            let at = Multiplicities::Cyclotomic(&w);
            prop_assert_eq!(delta_kirby(&pres, at, &cache).unwrap(), delta_refined(&pres, at, &cache).unwrap());
        }
    }

    #[test]
    fn charge_covariance(f in framings(3), k in prop::collection::vec(-3i64..=3, 3)) {
        let pres = SurgeryPresentation::new(chain_diagram(&f)).unwrap();
        prop_assume!(pres.h1().is_finite());
        let cache = ConwayCache::new();
        let k = &k[..pres.components()];
        for w in enumerate_omega(&pres, &PaletteGroup::new(1, 5).unwrap()).unwrap() {
            if !w.is_computable() {
                continue;
            }
            prop_assert!(torsion_relation_check(&pres, Multiplicities::Cyclotomic(&w), k, &cache).unwrap().holds);
        }
    }

    #[test]
    fn inverse_q_gives_the_same_classes(p in prop::sample::select(vec![5i64, 7, 9, 11, 13, 15]), q in 1i64..15) {
        let q = q % p;
        prop_assume!(q > 0 && p.gcd(&q) == 1);
        let qi = (1..p).find(|x| (x * q) % p == 1).unwrap();
        let cache = ConwayCache::new();
        let a = lens_presentation(LensSpec::new(p, q).unwrap()).unwrap().1;
        let b = lens_presentation(LensSpec::new(p, qi).unwrap()).unwrap().1;
        let (va, vb) = (class_values(&a, p as u64, &cache), class_values(&b, p as u64, &cache));
        prop_assume!(va.is_some() && vb.is_some());
        prop_assert_eq!(va, vb);
    }
}
