//! Integer partitions as Young diagrams.
//!
//! Row lengths are stored nonincreasing and strictly positive; the empty
//! partition is an ordinary value. Text form is comma separated, longest row
//! first, and the empty string is the empty partition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::{Ambient, PairType};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Rows `k_1 < … < k_m` after which the row length drops by an odd amount.
///
/// A partition with no odd part gets the formal sequence `(0)` with `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSequence {
    ks: Vec<usize>,
}

impl KSequence {
    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn m(&self) -> usize {
        self.ks.len()
    }

    pub fn is_formal(&self) -> bool {
        self.ks == [0]
    }

    /// `k_s - k_{s-1}` for `s = 1..=m`, with `k_0 = 0`.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut prev = 0;
        self.ks
            .iter()
            .map(|&k| {
                let d = k - prev;
                prev = k;
                d
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDimension {
    pub dim_g: usize,
    pub dim_k: usize,
}

impl Partition {
    /// Builds a partition from nonincreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not nonincreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `j`, 1-based, with `λ_j = 0` past the last row.
    pub fn row(&self, j: usize) -> usize {
        if j == 0 {
            panic!("rows are 1-based");
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&x| x >= c).count())
            .collect();
        Partition { parts }
    }

    /// `(length, count)` pairs, longest length first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.parts {
            match out.last_mut() {
                Some((len, c)) if *len == x => *c += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, length: usize) -> usize {
        self.parts.iter().filter(|&&x| x == length).count()
    }

    /// Distinct row lengths `i_1 > … > i_k`.
    pub fn distinct_lengths(&self) -> Vec<usize> {
        self.multiplicities().into_iter().map(|(l, _)| l).collect()
    }

    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&x| x % 2 == 1).count()
    }

    pub fn k_sequence(&self) -> KSequence {
        let ks: Vec<usize> = (1..=self.len())
            .filter(|&j| (self.row(j) - self.row(j + 1)) % 2 == 1)
            .collect();
        if ks.is_empty() {
            KSequence { ks: vec![0] }
        } else {
            KSequence { ks }
        }
    }

    /// Column heights occurring at least twice, tallest first.
    pub fn removable_heights(&self) -> Vec<usize> {
        self.transpose()
            .multiplicities()
            .into_iter()
            .filter(|&(_, c)| c >= 2)
            .map(|(h, _)| h)
            .collect()
    }

    /// Deletes two columns of height `h`.
    pub fn remove_column_pair(&self, h: usize) -> Result<Partition> {
        let t = self.transpose();
        if h == 0 || t.multiplicity(h) < 2 {
            return Err(Error::NoColumnPair {
                shape: self.to_string(),
                height: h,
            });
        }
        let mut cols = t.parts.clone();
        let at = cols.iter().position(|&c| c == h).expect("height present");
        cols.drain(at..at + 2);
        Ok(Partition { parts: cols }.transpose())
    }

    /// Adds two boxes to each of the first `h` rows, padding with empty rows.
    pub fn add_column_pair(&self, h: usize) -> Partition {
        let rows = self.len().max(h);
        let parts = (1..=rows)
            .map(|j| self.row(j) + if j <= h { 2 } else { 0 })
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Removes column pairs until all column heights are distinct.
    ///
    /// Returns the reduced shape and the total height removed, which is the
    /// amount subtracted from both `p` and `q`.
    pub fn reduce_columns(&self) -> (Partition, usize) {
        let mut cols = Vec::new();
        let mut removed = 0;
        for (h, c) in self.transpose().multiplicities() {
            removed += h * (c / 2);
            if c % 2 == 1 {
                cols.push(h);
            }
        }
        (Partition { parts: cols }.transpose(), removed)
    }

    /// Whether the shape carries signed diagrams of the given type at all.
    pub fn admissible_for(&self, pair: PairType) -> bool {
        let mults = self.multiplicities();
        match pair {
            PairType::Aiii => true,
            PairType::Bdi => mults.iter().all(|&(l, m)| l % 2 == 1 || m % 2 == 0),
            PairType::Ci => mults.iter().all(|&(l, m)| l % 2 == 0 || m % 2 == 0),
            PairType::Cii | PairType::Diii => mults.iter().all(|&(_, m)| m % 2 == 0),
        }
    }

    /// Even orbits: all parts share one parity.
    pub fn is_even_orbit(&self) -> bool {
        self.parts.iter().all(|x| x % 2 == 0) || self.parts.iter().all(|x| x % 2 == 1)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for j in 1..=rows {
            a += self.row(j);
            b += other.row(j);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Dimensions of the complex orbit and of each K-orbit it contains.
    pub fn orbit_dimension(&self, pair: PairType) -> Result<OrbitDimension> {
        if !self.admissible_for(pair) {
            return Err(Error::InadmissibleShape {
                pair,
                shape: self.to_string(),
            });
        }
        let n = self.size();
        let col_sq: usize = self.transpose().parts.iter().map(|c| c * c).sum();
        let odd_mults: usize = self
            .multiplicities()
            .iter()
            .filter(|(l, _)| l % 2 == 1)
            .map(|&(_, m)| m)
            .sum();
        let dim_g = match pair.ambient() {
            Ambient::General => n * n - col_sq,
            Ambient::Orthogonal => (n * n - n + odd_mults - col_sq) / 2,
            Ambient::Symplectic => (n * n + n - odd_mults - col_sq) / 2,
        };
        debug_assert!(dim_g % 2 == 0);
        Ok(OrbitDimension {
            dim_g,
            dim_k: dim_g / 2,
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size up to `max_n`.
pub fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (0..=max_n).flat_map(partitions_of).collect()
}

/// Number of rows of each distinct length, keyed by length.
pub fn multiplicity_map(p: &Partition) -> BTreeMap<usize, usize> {
    p.multiplicities().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("6,4,4,2,2").parts(), &[6, 4, 4, 2, 2]);
        assert_eq!(p("").len(), 0);
        assert_eq!(p("(3,1)").to_string(), "3,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("6,4,4,2,2").transpose(), p("5,5,3,3,1,1"));
        assert_eq!(p("").transpose(), p(""));
        assert_eq!(p("4,3,3,1,1").transpose(), p("5,3,3,1"));
    }

    #[test]
    fn multiplicities_longest_first() {
        assert_eq!(
            p("6,4,4,2,2").multiplicities(),
            vec![(6, 1), (4, 2), (2, 2)]
        );
        assert_eq!(p("").multiplicities(), vec![]);
    }

    #[test]
    fn k_sequence_examples() {
        assert_eq!(p("4,3,3,1,1").k_sequence().ks(), &[1, 5]);
        assert_eq!(p("9,9,8,8,6,5,4,2,2").k_sequence().ks(), &[2, 5, 6]);
        let formal = p("2,2").k_sequence();
        assert!(formal.is_formal());
        assert_eq!(formal.m(), 1);
        assert_eq!(p("").k_sequence().ks(), &[0]);
        assert_eq!(
            p("9,9,8,8,6,5,4,2,2").k_sequence().block_sizes(),
            vec![2, 3, 1]
        );
    }

    #[test]
    fn column_pair_removal_examples() {
        assert_eq!(p("6,4,4,2,2").remove_column_pair(5).unwrap(), p("4,2,2"));
        assert_eq!(
            p("6,4,4,2,2").remove_column_pair(3).unwrap(),
            p("4,2,2,2,2")
        );
        assert_eq!(p("2,2").remove_column_pair(2).unwrap(), p(""));
        assert_eq!(
            p("4,3,3,1,1").remove_column_pair(3).unwrap(),
            p("2,1,1,1,1")
        );
        assert_eq!(
            p("6,4,4,2,2").remove_column_pair(1).unwrap(),
            p("4,4,4,2,2")
        );
        assert!(p("6,4,4,2,2").remove_column_pair(2).is_err());
        assert!(p("1,1").remove_column_pair(2).is_err());
        assert!(p("3").remove_column_pair(0).is_err());
    }

    #[test]
    fn removable_heights_listed() {
        assert_eq!(p("6,4,4,2,2").removable_heights(), vec![5, 3, 1]);
        assert_eq!(p("3,2,1").removable_heights(), Vec::<usize>::new());
    }

    #[test]
    fn reduction_to_distinct_columns() {
        let (r, h) = p("6,4,4,2,2").reduce_columns();
        assert_eq!(r, p(""));
        assert_eq!(h, 9);
        let (r, h) = p("4,3,3,1,1").reduce_columns();
        assert_eq!(r, p("2,1,1,1,1"));
        assert_eq!(h, 3);
    }

    #[test]
    fn admissibility() {
        assert!(p("3,3,2,2,1").admissible_for(PairType::Bdi));
        assert!(!p("2,1").admissible_for(PairType::Bdi));
        assert!(p("2,1,1").admissible_for(PairType::Ci));
        assert!(!p("3,2").admissible_for(PairType::Ci));
        assert!(p("3,3,2,2").admissible_for(PairType::Cii));
        assert!(!p("2,2,1").admissible_for(PairType::Diii));
        assert!(p("").admissible_for(PairType::Diii));
    }

    #[test]
    fn dimensions() {
        let d = p("6,4,4,2,2").orbit_dimension(PairType::Aiii).unwrap();
        assert_eq!((d.dim_g, d.dim_k), (254, 127));
        for t in PairType::ALL {
            for n in 0..8 {
                let zero = Partition::from_unsorted(vec![1; n]);
                if zero.admissible_for(t) {
                    assert_eq!(zero.orbit_dimension(t).unwrap().dim_g, 0, "{t} n={n}");
                }
            }
        }
        // so_n minimal orbit has dimension 2n - 6, sp_n minimal orbit n.
        assert_eq!(
            p("2,2,1,1,1").orbit_dimension(PairType::Bdi).unwrap().dim_g,
            8
        );
        assert_eq!(p("2,1,1").orbit_dimension(PairType::Ci).unwrap().dim_g, 4);
        assert_eq!(
            p("2,1,1,1,1").orbit_dimension(PairType::Ci).unwrap().dim_g,
            6
        );
        // Regular orbits: dim G - rank.
        assert_eq!(p("5").orbit_dimension(PairType::Bdi).unwrap().dim_g, 10 - 2);
        assert_eq!(p("4").orbit_dimension(PairType::Ci).unwrap().dim_g, 10 - 2);
        assert!(p("2,1").orbit_dimension(PairType::Bdi).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn dominance() {
        assert!(p("4,1").dominates(&p("3,2")));
        assert!(p("3,2").dominates(&p("2,2,1")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")));
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")));
    }

    #[test]
    fn add_column_pair_pads() {
        assert_eq!(p("2,1").add_column_pair(1), p("4,1"));
        assert_eq!(p("").add_column_pair(2), p("2,2"));
        assert_eq!(p("1").add_column_pair(2), p("3,2"));
    }
}
