//! The JSON link file format.
//!
//! ```json
//! {"components": 2, "framings": [0, 0], "arcs": [0, 1],
//!  "crossings": [{"sign": 1, "over": 0, "under_in": 1, "under_out": 1},
//!                {"sign": 1, "over": 1, "under_in": 0, "under_out": 0}],
//!  "succ": {"0": 0, "1": 1}}
//! ```
//!
//! `arcs[a]` is the component of arc `a`; `succ` maps each arc to the next
//! arc of its component.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Crossing, LinkDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingJson {
    pub sign: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkJson {
    pub components: usize,
    pub framings: Vec<i64>,
    pub arcs: Vec<usize>,
    pub crossings: Vec<CrossingJson>,
    pub succ: BTreeMap<String, usize>,
}

impl LinkJson {
    pub fn into_diagram(self) -> Result<LinkDiagram> {
        if self.framings.len() != self.components {
            return Err(Error::Validation(format!(
                "{} framings for {} components",
                self.framings.len(),
                self.components
            )));
        }
        let n = self.arcs.len();
        let mut succ = vec![None; n];
        for (k, v) in &self.succ {
            let a: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("succ key {k:?} is not an arc id")))?;
            if a >= n {
                return Err(Error::Validation(format!("succ key {a} is not an arc")));
            }
            if succ[a].replace(*v).is_some() {
                return Err(Error::Parse(format!("duplicate succ key {a}")));
            }
        }
        let succ = succ
            .into_iter()
            .enumerate()
            .map(|(a, s)| s.ok_or_else(|| Error::Validation(format!("arc {a} has no successor"))))
            .collect::<Result<Vec<_>>>()?;
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                sign: c.sign,
                over: c.over,
                under_in: c.under_in,
                under_out: c.under_out,
            })
            .collect();
        LinkDiagram::new(self.framings, self.arcs, crossings, succ)
    }
}

impl From<&LinkDiagram> for LinkJson {
    fn from(d: &LinkDiagram) -> Self {
        LinkJson {
            components: d.components(),
            framings: d.framings.clone(),
            arcs: d.arc_comp.clone(),
            crossings: d
                .crossings
                .iter()
                .map(|c| CrossingJson {
                    sign: c.sign,
                    over: c.over,
                    under_in: c.under_in,
                    under_out: c.under_out,
                })
                .collect(),
            succ: d.succ.iter().enumerate().map(|(a, s)| (a.to_string(), *s)).collect(),
        }
    }
}

pub fn parse_link(text: &str) -> Result<LinkDiagram> {
    let j: LinkJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    j.into_diagram()
}

impl LinkDiagram {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&LinkJson::from(self)).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::{chain_diagram, torus_link_2};

    #[test]
    fn round_trip() {
        for d in [
            chain_diagram(&[3, 2]),
            chain_diagram(&[7]),
            chain_diagram(&[1, 2, 3, 4, 5]),
            torus_link_2(3, [7, 2]),
        ] {
            assert_eq!(parse_link(&d.to_json_string()).unwrap(), d);
        }
    }

    #[test]
    fn rejects_unknown_fields_and_garbage() {
        let good = chain_diagram(&[0, 0]).to_json_string();
        let extra = good.replacen('{', "{\"colour\": 1,", 1);
        assert!(matches!(parse_link(&extra), Err(Error::Parse(_))));
        assert!(matches!(parse_link("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_unused_arc() {
        let text = r#"{"components": 1, "framings": [0], "arcs": [0, 0],
            "crossings": [], "succ": {"0": 1, "1": 0}}"#;
        assert!(matches!(parse_link(text), Err(Error::Validation(_))));
    }
}
