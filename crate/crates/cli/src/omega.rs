//! Parsing `--omega m_i=g` assignments into a class.

use std::collections::BTreeMap;

use gl11::manifold::{GroupElem, OmegaClass, PaletteGroup, SurgeryPresentation};
use gl11::{Error, Result};

/// One meridian image before the group is known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Image {
    free: BTreeMap<usize, i64>,
    torsion: i64,
    zeta: Option<u64>,
}

fn bad(s: &str, why: &str) -> Error {
    Error::Parse(format!("cannot read {s:?} as a group element: {why}"))
}

fn parse_int<T: std::str::FromStr>(s: &str, whole: &str) -> Result<T> {
    s.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| bad(whole, "expected an integer"))
}

/// `1`, `t^e`, `zeta5^e` and `x1^a` factors joined by `*`.
fn parse_image(s: &str) -> Result<Image> {
    let mut img = Image::default();
    for factor in s.split('*').map(str::trim) {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, parse_int::<i64>(e, s)?),
            None => (factor, 1),
        };
        if base == "1" {
            continue;
        } else if base == "t" {
            img.torsion += exp;
        } else if let Some(m) = base.strip_prefix("zeta") {
            let m: u64 = parse_int(m, s)?;
            if img.zeta.is_some_and(|z| z != m) {
                return Err(bad(s, "roots of unity of different orders"));
            }
            img.zeta = Some(m);
            img.torsion += exp;
        } else if let Some(k) = base.strip_prefix('x') {
            let k: usize = parse_int(k, s)?;
            if k == 0 {
                return Err(bad(s, "free generators are numbered from x1"));
            }
            *img.free.entry(k).or_default() += exp;
        } else {
            return Err(bad(s, &format!("unknown factor {factor:?}")));
        }
    }
    Ok(img)
}

/// `m2=zeta5` or `m1=t^-2,m2=t`.
pub fn parse_assignments(specs: &[String]) -> Result<BTreeMap<usize, String>> {
    let mut out = BTreeMap::new();
    for part in specs.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        let (lhs, rhs) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("{part:?} is not of the form m_i=g")))?;
        let idx = lhs.trim().trim_start_matches('m').trim_start_matches('_');
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("{lhs:?} is not a meridian m_i")))?;
        if i == 0 {
            return Err(Error::Parse("meridians are numbered from m1".into()));
        }
        if out.insert(i, rhs.trim().to_owned()).is_some() {
            return Err(Error::Parse(format!("meridian m{i} assigned twice")));
        }
    }
    Ok(out)
}

/// Builds the class from the given images and solves for the missing ones.
/// The torsion order comes from `zeta<m>` factors or `torsion_order`.
pub fn build_omega(
    p: &SurgeryPresentation,
    assignments: &BTreeMap<usize, String>,
    torsion_order: Option<u64>,
) -> Result<OmegaClass> {
    let r = p.components();
    let mut images = BTreeMap::new();
    for (&i, s) in assignments {
        if i > r {
            return Err(Error::IndexOutOfRange { index: i, len: r });
        }
        images.insert(i - 1, parse_image(s)?);
    }
    let mut m = torsion_order;
    for img in images.values() {
        if let Some(z) = img.zeta {
            if m.is_some_and(|m| m != z) {
                return Err(Error::Validation(format!("zeta{z} does not match torsion order {}", m.unwrap())));
            }
            m = Some(z);
        }
    }
    let uses_t = images.values().any(|g| g.torsion != 0);
    let m = match m {
        Some(m) => m,
        None if uses_t => return Err(Error::Validation("t needs --torsion-order or a zeta<m> image".into())),
        None => 1,
    };
    let rank = images.values().flat_map(|g| g.free.keys().copied()).max().unwrap_or(1);
    let group = PaletteGroup::new(rank, m)?;
    let partial: Vec<Option<GroupElem>> = (0..r)
        .map(|i| {
            images
                .get(&i)
                .map(|g| {
                    let free = (1..=rank).map(|k| g.free.get(&k).copied().unwrap_or(0)).collect();
                    group.elem(free, g.torsion)
                })
                .transpose()
        })
        .collect::<Result<_>>()?;
    OmegaClass::solve(p, group, &partial)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn images() {
        assert_eq!(parse_image("zeta5^2").unwrap().torsion, 2);
        assert_eq!(parse_image("zeta5").unwrap().zeta, Some(5));
        let g = parse_image("x2^3*t^-1").unwrap();
        assert_eq!((g.free[&2], g.torsion), (3, -1));
        assert_eq!(parse_image("1").unwrap(), Image::default());
        assert!(parse_image("zeta5*zeta7").is_err());
        assert!(parse_image("s^2").is_err());
    }

    #[test]
    fn assignments() {
        let a = parse_assignments(&["m1=t^-2,m2=t".into()]).unwrap();
        assert_eq!(a[&1], "t^-2");
        assert!(parse_assignments(&["m0=t".into()]).is_err());
        assert!(parse_assignments(&["m1=t".into(), "m1=1".into()]).is_err());
        assert!(parse_assignments(&["t".into()]).is_err());
    }
}
