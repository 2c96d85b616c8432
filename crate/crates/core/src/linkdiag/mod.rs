//! Oriented framed link diagrams as abstract crossing lists.
//!
//! An arc runs from one under-crossing to the next. Each crossing records its
//! sign, the over arc, and the incoming and outgoing under arcs. A component
//! that never passes under anything is a single arc whose successor is itself.

mod build;
mod format;

pub use build::{chain_diagram, connected_sum, torus_link_2};
pub use format::{parse_link, LinkJson};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub sign: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    framings: Vec<i64>,
    arc_comp: Vec<usize>,
    crossings: Vec<Crossing>,
    succ: Vec<usize>,
}

/// The diagram without framings, used as a memoization key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramShape {
    ncomp: usize,
    arc_comp: Vec<usize>,
    crossings: Vec<Crossing>,
    succ: Vec<usize>,
}

impl LinkDiagram {
    /// Builds and validates a diagram.
    pub fn new(
        framings: Vec<i64>,
        arc_comp: Vec<usize>,
        crossings: Vec<Crossing>,
        succ: Vec<usize>,
    ) -> Result<Self> {
        let d = LinkDiagram {
            framings,
            arc_comp,
            crossings,
            succ,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let r = self.framings.len();
        let n = self.arc_comp.len();
        let bad = |m: String| Err(Error::Validation(m));
        if r == 0 {
            return bad("a link needs at least one component".into());
        }
        if self.succ.len() != n {
            return bad(format!("succ has {} entries for {n} arcs", self.succ.len()));
        }
        if let Some(a) = self.arc_comp.iter().position(|&c| c >= r) {
            return bad(format!("arc {a} has component {} >= {r}", self.arc_comp[a]));
        }
        let mut count = vec![0usize; r];
        for &c in &self.arc_comp {
            count[c] += 1;
        }
        if let Some(c) = count.iter().position(|&k| k == 0) {
            return bad(format!("component {c} has no arcs"));
        }
        let mut as_in = vec![0usize; n];
        let mut as_out = vec![0usize; n];
        for (k, x) in self.crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return bad(format!("crossing {k} has sign {}", x.sign));
            }
            for a in [x.over, x.under_in, x.under_out] {
                if a >= n {
                    return bad(format!("crossing {k} refers to arc {a} of {n}"));
                }
            }
            if self.arc_comp[x.under_in] != self.arc_comp[x.under_out] {
                return bad(format!("crossing {k}: under arcs on different components"));
            }
            if self.succ[x.under_in] != x.under_out {
                return bad(format!("crossing {k}: succ[{}] is not {}", x.under_in, x.under_out));
            }
            as_in[x.under_in] += 1;
            as_out[x.under_out] += 1;
        }
        for a in 0..n {
            let s = self.succ[a];
            if s >= n || self.arc_comp[s] != self.arc_comp[a] {
                return bad(format!("succ of arc {a} leaves its component"));
            }
            let free = s == a && count[self.arc_comp[a]] == 1 && as_in[a] == 0;
            if !free && (as_in[a] != 1 || as_out[a] != 1) {
                return bad(format!(
                    "arc {a} must end at exactly one under-crossing and start at exactly one"
                ));
            }
        }
        // Each component's arcs form one succ cycle.
        let mut seen = vec![false; n];
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut len = 0;
            let mut x = a;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.succ[x];
            }
            if x != a || len != count[self.arc_comp[a]] {
                return bad(format!(
                    "arcs of component {} do not form a single cycle",
                    self.arc_comp[a]
                ));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> usize {
        self.framings.len()
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn arcs(&self) -> usize {
        self.arc_comp.len()
    }

    pub fn arc_component(&self, a: usize) -> usize {
        self.arc_comp[a]
    }

    pub fn arc_components(&self) -> &[usize] {
        &self.arc_comp
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn succ(&self, a: usize) -> usize {
        self.succ[a]
    }

    /// Arcs of component `c` in cyclic order, starting from its lowest id.
    pub fn component_arcs(&self, c: usize) -> Vec<usize> {
        let Some(start) = self.arc_comp.iter().position(|&x| x == c) else {
            return vec![];
        };
        let mut v = vec![start];
        let mut x = self.succ[start];
        while x != start {
            v.push(x);
            x = self.succ[x];
        }
        v
    }

    pub fn shape(&self) -> DiagramShape {
        DiagramShape {
            ncomp: self.components(),
            arc_comp: self.arc_comp.clone(),
            crossings: self.crossings.clone(),
            succ: self.succ.clone(),
        }
    }

    /// Same diagram with new framings.
    pub fn with_framings(&self, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != self.components() {
            return Err(Error::Validation(format!(
                "{} framings for {} components",
                framings.len(),
                self.components()
            )));
        }
        Ok(LinkDiagram {
            framings,
            ..self.clone()
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.components() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.components(),
            });
        }
        Ok(())
    }

    /// Linking numbers off the diagonal, framings on it.
    pub fn linking_numbers(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.components();
        let mut s = vec![vec![0i64; r]; r];
        for x in &self.crossings {
            let (a, b) = (self.arc_comp[x.over], self.arc_comp[x.under_in]);
            if a != b {
                s[a][b] += x.sign as i64;
                s[b][a] += x.sign as i64;
            }
        }
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    s[i][i] = self.framings[i];
                } else if s[i][j] % 2 != 0 {
                    return Err(Error::OddCrossingParity(i.min(j), i.max(j)));
                } else {
                    s[i][j] /= 2;
                }
            }
        }
        Ok(s)
    }

    pub fn linking_matrix(&self) -> Result<IntMatrix> {
        Ok(IntMatrix::from_rows(&self.linking_numbers()?))
    }

    /// Reverses the orientation of component `i`.
    pub fn reverse_component(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let on = |a: usize| self.arc_comp[a] == i;
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let mut y = *x;
                if on(x.under_in) {
                    std::mem::swap(&mut y.under_in, &mut y.under_out);
                }
                if on(x.over) != on(x.under_in) {
                    y.sign = -y.sign;
                }
                y
            })
            .collect();
        let mut succ = self.succ.clone();
        for a in 0..self.arcs() {
            if on(a) {
                succ[self.succ[a]] = a;
            }
        }
        LinkDiagram::new(self.framings.clone(), self.arc_comp.clone(), crossings, succ)
    }

    /// Removes component `j`. Crossings where it passes over another strand
    /// disappear and the two under arcs there merge.
    pub fn delete_component(&self, j: usize) -> Result<Self> {
        self.check_index(j)?;
        if self.components() == 1 {
            return Err(Error::Validation("cannot delete the only component".into()));
        }
        let n = self.arcs();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut kept = Vec::new();
        for x in &self.crossings {
            let under = self.arc_comp[x.under_in];
            if under == j {
                continue;
            }
            if self.arc_comp[x.over] == j {
                let (a, b) = (find(&mut parent, x.under_in), find(&mut parent, x.under_out));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            } else {
                kept.push(*x);
            }
        }
        // Relabel surviving class representatives in increasing order.
        let mut new_id = vec![usize::MAX; n];
        let mut arc_comp = Vec::new();
        for a in 0..n {
            if self.arc_comp[a] == j {
                continue;
            }
            let root = find(&mut parent, a);
            if new_id[root] == usize::MAX {
                new_id[root] = arc_comp.len();
                let c = self.arc_comp[a];
                arc_comp.push(if c > j { c - 1 } else { c });
            }
        }
        let mut map = |a: usize| new_id[find(&mut parent, a)];
        let crossings: Vec<Crossing> = kept
            .iter()
            .map(|x| Crossing {
                sign: x.sign,
                over: map(x.over),
                under_in: map(x.under_in),
                under_out: map(x.under_out),
            })
            .collect();
        let mut succ: Vec<usize> = (0..arc_comp.len()).collect();
        for x in &crossings {
            succ[x.under_in] = x.under_out;
        }
        let mut framings = self.framings.clone();
        framings.remove(j);
        LinkDiagram::new(framings, arc_comp, crossings, succ)
    }

    /// Disjoint union, with the components of `other` appended.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.arcs();
        let coff = self.components();
        let mut d = self.clone();
        d.framings.extend_from_slice(&other.framings);
        d.arc_comp.extend(other.arc_comp.iter().map(|c| c + coff));
        d.succ.extend(other.succ.iter().map(|a| a + off));
        d.crossings.extend(other.crossings.iter().map(|x| Crossing {
            sign: x.sign,
            over: x.over + off,
            under_in: x.under_in + off,
            under_out: x.under_out + off,
        }));
        d
    }
}
