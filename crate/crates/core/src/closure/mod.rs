//! Closure ordering of K-orbits: covers obtained by substituting a few rows
//! of a signed diagram, and the Hasse diagram over one signature.

pub mod patterns;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::PairType;
use crate::partition::{partitions_of, Partition};
use crate::signed::{enumerate_syd, SignedDiagram};

use patterns::{cover_patterns_for, has_rows_between};

/// `lower` lies in the closure of `upper`, with no orbit in between.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRelation {
    pub lower: SignedDiagram,
    pub upper: SignedDiagram,
    /// Table case, e.g. `"ii"` for AIII or `"BDI-4"`.
    pub case: String,
    pub u: i64,
    pub v: i64,
    /// `dim_K(upper) - dim_K(lower)`.
    pub codim: i64,
    /// The case admits codimension one and no row of `upper` lies strictly
    /// between the lengths of the substituted rows.
    pub side_condition: bool,
}

fn dim_k(pair: PairType, t: &SignedDiagram) -> i64 {
    t.shape()
        .orbit_dimension(pair)
        .expect("valid diagram")
        .dim_k as i64
}

fn case_name(pair: PairType, case: &str) -> String {
    match pair {
        PairType::Aiii => case.to_string(),
        _ => format!("{pair}-{case}"),
    }
}

/// All instances of the cover patterns applicable to `t`, one per resulting
/// lower diagram; the first matching case wins. Some of these are implied by
/// chains of shorter steps.
fn pattern_steps(pair: PairType, t: &SignedDiagram) -> Vec<CoverRelation> {
    let max_len = t.rows().first().map_or(0, |r| r.len);
    let upper_dim = dim_k(pair, t);
    let mut seen: BTreeMap<SignedDiagram, usize> = BTreeMap::new();
    let mut out: Vec<CoverRelation> = Vec::new();
    for pat in cover_patterns_for(pair) {
        for inst in pat.downward(max_len) {
            let Some(rest) = t.remove_rows(&inst.from) else {
                continue;
            };
            let lower = rest.add_rows(&inst.to);
            let side = pat.codim_one_case && !has_rows_between(t, inst.span);
            if let Some(&i) = seen.get(&lower) {
                out[i].side_condition |= side;
                continue;
            }
            let codim = upper_dim - dim_k(pair, &lower);
            seen.insert(lower.clone(), out.len());
            out.push(CoverRelation {
                lower,
                upper: t.clone(),
                case: case_name(pair, pat.case),
                u: inst.u,
                v: inst.v,
                codim,
                side_condition: side,
            });
        }
    }
    out
}

/// Whether `target` is reachable from `start` by pattern steps.
fn reaches(
    pair: PairType,
    start: &SignedDiagram,
    target: &SignedDiagram,
    seen: &mut BTreeSet<SignedDiagram>,
) -> bool {
    if start == target {
        return true;
    }
    let floor = dim_k(pair, target);
    let shape = target.shape();
    let mut stack = vec![start.clone()];
    while let Some(x) = stack.pop() {
        for step in pattern_steps(pair, &x) {
            let y = step.lower;
            if &y == target {
                return true;
            }
            if dim_k(pair, &y) > floor && y.shape().dominates(&shape) && seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    false
}

/// Pattern steps from `t` that are not implied by a chain of other steps.
fn all_covers(pair: PairType, t: &SignedDiagram) -> Vec<CoverRelation> {
    let steps = pattern_steps(pair, t);
    let keep: Vec<bool> = steps
        .iter()
        .map(|c| {
            if c.codim <= 1 {
                return true;
            }
            let mut seen = BTreeSet::new();
            !steps
                .iter()
                .filter(|o| o.lower != c.lower && o.codim < c.codim)
                .any(|o| {
                    o.lower.shape().dominates(&c.lower.shape())
                        && reaches(pair, &o.lower, &c.lower, &mut seen)
                })
        })
        .collect();
    steps
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

/// Orbits covered by the orbit of `t`, in pattern order.
pub fn covers_down(pair: PairType, t: &SignedDiagram) -> Result<Vec<CoverRelation>> {
    if !t.is_valid_for(pair) {
        return Err(Error::InvalidDiagram(format!(
            "{t} is not a {pair} diagram"
        )));
    }
    Ok(all_covers(pair, t))
}

/// Covers of codimension one, decided by the side condition alone.
pub fn codim_one_covers(pair: PairType, t: &SignedDiagram) -> Result<Vec<CoverRelation>> {
    Ok(covers_down(pair, t)?
        .into_iter()
        .filter(|c| c.side_condition)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetCover {
    pub upper: usize,
    pub lower: usize,
    pub case: String,
    pub codim: i64,
}

/// Hasse diagram of the closure order on all orbits of one signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePoset {
    pub pair: PairType,
    pub signature: (usize, usize),
    pub nodes: Vec<SignedDiagram>,
    pub dims: Vec<usize>,
    pub covers: Vec<PosetCover>,
}

impl ClosurePoset {
    /// Every cover lowers `dim_K`, and by exactly its recorded codimension.
    pub fn is_graded(&self) -> bool {
        self.covers.iter().all(|c| {
            let drop = self.dims[c.upper] as i64 - self.dims[c.lower] as i64;
            drop > 0 && drop == c.codim
        })
    }
}

/// Builds the Hasse diagram for `(p, q)`, refusing `p + q > limit`.
pub fn closure_diagram(pair: PairType, p: usize, q: usize, limit: usize) -> Result<ClosurePoset> {
    let n = p + q;
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    pair.check_signature(n, p, q)?;
    let mut nodes = Vec::new();
    let mut dims = Vec::new();
    for shape in partitions_of(n) {
        if !shape.admissible_for(pair) {
            continue;
        }
        let d = shape.orbit_dimension(pair)?.dim_k;
        for t in enumerate_syd(pair, &shape, p, q)? {
            nodes.push(t);
            dims.push(d);
        }
    }
    let index: HashMap<&SignedDiagram, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in nodes.iter().enumerate() {
        for c in all_covers(pair, t) {
            let j = *index.get(&c.lower).ok_or_else(|| {
                Error::InvalidDiagram(format!(
                    "cover {} of {t} ({}) is not a {pair} diagram",
                    c.lower, c.case
                ))
            })?;
            covers.push(PosetCover {
                upper: i,
                lower: j,
                case: c.case,
                codim: c.codim,
            });
        }
    }
    Ok(ClosurePoset {
        pair,
        signature: (p, q),
        nodes,
        dims,
        covers,
    })
}

/// Shapes of a poset's nodes, for grouping.
pub fn node_shapes(poset: &ClosurePoset) -> Vec<Partition> {
    poset.nodes.iter().map(SignedDiagram::shape).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syd(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn covers_of_regular_aiii() {
        let t = syd("+-+-");
        let covers = covers_down(PairType::Aiii, &t).unwrap();
        let got: Vec<(String, String, i64)> = covers
            .iter()
            .map(|c| (c.lower.text(), c.case.clone(), c.codim))
            .collect();
        assert_eq!(
            got,
            vec![
                ("+-+/-".to_string(), "i".to_string(), 1),
                ("-+-/+".to_string(), "ii".to_string(), 1),
                ("+-/+-".to_string(), "iii".to_string(), 2),
            ]
        );
        let c1 = codim_one_covers(PairType::Aiii, &t).unwrap();
        assert_eq!(c1.len(), 2);
    }

    #[test]
    fn single_cover_of_two_box_row() {
        let covers = covers_down(PairType::Aiii, &syd("+-")).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].lower, syd("+/-"));
        assert_eq!(covers[0].case, "i");
        assert_eq!(covers[0].codim, 1);
    }

    #[test]
    fn zero_orbit_has_no_covers() {
        for pair in PairType::ALL {
            let t = syd("+/+/-/-");
            if t.is_valid_for(pair) {
                assert!(covers_down(pair, &t).unwrap().is_empty(), "{pair}");
            }
        }
    }

    #[test]
    fn invalid_input_rejected() {
        assert!(covers_down(PairType::Bdi, &syd("+-/+")).is_err());
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            closure_diagram(PairType::Aiii, 7, 7, 12),
            Err(Error::TooLarge { .. })
        ));
    }
}
