use super::{Crossing, LinkDiagram};
use crate::error::Result;
#[cfg(test)]
use crate::error::Error;

/// The chain of `n` unknots in which consecutive components form positive
/// Hopf clasps. Component `i` gets framing `framings[i]`.
///
/// Going around component `i` one meets: under the left neighbour, over the
/// left neighbour, over the right neighbour, under the right neighbour. So a
/// middle component has two arcs and an end component has one.
pub fn chain_diagram(framings: &[i64]) -> LinkDiagram {
    let n = framings.len();
    assert!(n >= 1, "a chain needs at least one component");
    let mut arc_comp = Vec::new();
    let mut p = vec![0; n];
    let mut q = vec![0; n];
    for i in 0..n {
        p[i] = arc_comp.len();
        arc_comp.push(i);
        if i > 0 && i + 1 < n {
            q[i] = arc_comp.len();
            arc_comp.push(i);
        } else {
            q[i] = p[i];
        }
    }
    let mut crossings = Vec::new();
    let mut succ: Vec<usize> = (0..arc_comp.len()).collect();
    for i in 0..n.saturating_sub(1) {
        crossings.push(Crossing {
            sign: 1,
            over: p[i],
            under_in: q[i + 1],
            under_out: p[i + 1],
        });
        crossings.push(Crossing {
            sign: 1,
            over: p[i + 1],
            under_in: p[i],
            under_out: q[i],
        });
        succ[q[i + 1]] = p[i + 1];
        succ[p[i]] = q[i];
    }
    LinkDiagram::new(framings.to_vec(), arc_comp, crossings, succ).expect("chain diagram is valid")
}

/// The `(2, 2k)` torus link, closure of the positive 2-braid `s^{2k}`, with
/// the given framings. Its components have linking number `k`.
pub fn torus_link_2(k: usize, framings: [i64; 2]) -> LinkDiagram {
    assert!(k >= 1);
    let alpha = |j: usize| j % k;
    let beta = |j: usize| k + j % k;
    let prev = |j: usize| (j + k - 1) % k;
    let mut crossings = Vec::new();
    let mut succ = vec![0; 2 * k];
    for j in 0..k {
        crossings.push(Crossing {
            sign: 1,
            over: alpha(prev(j)),
            under_in: beta(prev(j)),
            under_out: beta(j),
        });
        crossings.push(Crossing {
            sign: 1,
            over: beta(j),
            under_in: alpha(prev(j)),
            under_out: alpha(j),
        });
        succ[beta(prev(j))] = beta(j);
        succ[alpha(prev(j))] = alpha(j);
    }
    let arc_comp = (0..2 * k).map(|a| usize::from(a >= k)).collect();
    LinkDiagram::new(framings.to_vec(), arc_comp, crossings, succ).expect("torus link is valid")
}

/// Connected sum of component `i` of `d1` with component `j` of `d2`.
///
/// Both diagrams are cut just after the under-crossing that starts the lowest
/// arc of the chosen component and the loose ends are reconnected. The merged
/// component keeps index `i` and the sum of the two framings; the other
/// components of `d2` follow those of `d1`.
pub fn connected_sum(d1: &LinkDiagram, i: usize, d2: &LinkDiagram, j: usize) -> Result<LinkDiagram> {
    d1.check_index(i)?;
    d2.check_index(j)?;
    let off = d1.arcs();
    let coff = d1.components();
    let mut u = d1.disjoint_union(d2);
    let a = d1.component_arcs(i)[0];
    let b = d2.component_arcs(j)[0] + off;
    let start_of = |d: &LinkDiagram, arc: usize| d.crossings.iter().position(|x| x.under_out == arc);
    let xa = start_of(&u, a);
    let xb = start_of(&u, b);
    let mut dead = None;
    match (xa, xb) {
        (Some(xa), Some(xb)) => {
            u.crossings[xa].under_out = b;
            u.crossings[xb].under_out = a;
            let (ia, ib) = (u.crossings[xa].under_in, u.crossings[xb].under_in);
            u.succ[ia] = b;
            u.succ[ib] = a;
        }
        // A component that never passes under is one closed arc; it is
        // absorbed into the arc it is spliced with.
        (None, _) => dead = Some((a, b)),
        (Some(_), None) => dead = Some((b, a)),
    }
    let merged = coff + j;
    let comp_map = |c: usize| {
        if c == merged {
            i
        } else if c > merged {
            c - 1
        } else {
            c
        }
    };
    let n = u.arcs();
    let rename = |x: usize| match dead {
        Some((gone, keep)) if x == gone => keep,
        _ => x,
    };
    let mut new_id = vec![usize::MAX; n];
    let mut arc_comp = Vec::new();
    for x in 0..n {
        if dead.is_some_and(|(g, _)| g == x) {
            continue;
        }
        new_id[x] = arc_comp.len();
        arc_comp.push(comp_map(u.arc_comp[x]));
    }
    let id = |x: usize| new_id[rename(x)];
    let crossings: Vec<Crossing> = u
        .crossings
        .iter()
        .map(|x| Crossing {
            sign: x.sign,
            over: id(x.over),
            under_in: id(x.under_in),
            under_out: id(x.under_out),
        })
        .collect();
    let mut succ = vec![0; arc_comp.len()];
    for x in 0..n {
        if new_id[x] != usize::MAX {
            succ[new_id[x]] = id(u.succ[x]);
        }
    }
    let mut framings = d1.framings.clone();
    framings[i] += d2.framings[j];
    framings.extend(
        d2.framings
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, f)| *f),
    );
    LinkDiagram::new(framings, arc_comp, crossings, succ)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sizes() {
        for n in 1..7 {
            let d = chain_diagram(&vec![2; n]);
            assert_eq!(d.components(), n);
            assert_eq!(d.crossings().len(), 2 * (n - 1));
        }
    }

    #[test]
    fn torus_linking_number() {
        let d = torus_link_2(3, [7, 2]);
        assert_eq!(d.linking_numbers().unwrap(), vec![vec![7, 3], vec![3, 2]]);
    }

    #[test]
    fn hopf_sum_is_three_chain() {
        let h = chain_diagram(&[1, 2]);
        let s = connected_sum(&h, 1, &chain_diagram(&[3, 4]), 0).unwrap();
        assert_eq!(s.components(), 3);
        assert_eq!(
            s.linking_numbers().unwrap(),
            vec![vec![1, 1, 0], vec![1, 5, 1], vec![0, 1, 4]]
        );
    }

    #[test]
    fn unknot_sum_only_shifts_framing() {
        let d = chain_diagram(&[2, 2, 2]);
        let s = connected_sum(&chain_diagram(&[5]), 0, &d, 1).unwrap();
        assert_eq!(s.components(), 3);
        assert_eq!(s.crossings().len(), 4);
        assert_eq!(s.framings(), &[7, 2, 2]);
        let t = connected_sum(&d, 2, &chain_diagram(&[-1]), 0).unwrap();
        assert_eq!(t, d.with_framings(vec![2, 2, 1]).unwrap());
    }

    #[test]
    fn index_errors() {
        let h = chain_diagram(&[0, 0]);
        assert!(matches!(
            connected_sum(&h, 2, &h, 0),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }
}
