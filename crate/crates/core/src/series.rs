//! Truncated multivariate power series in `a`, `b`, `t_1, t_2, …`.
//!
//! `t_i` carries weight `i`; terms of total `t`-weight above the bound are
//! dropped. Coefficients are exact integers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pair::PairType;
use crate::partition::Partition;
use crate::signed::primitive_set;

/// Exponent vector `[a, b, t_1, …, t_bound]`.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: usize,
    terms: BTreeMap<Exponents, i64>,
}

impl TruncatedSeries {
    pub fn one(bound: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; bound + 2], 1);
        TruncatedSeries { bound, terms }
    }

    /// `a^a b^b ∏ t_len^count`, or zero if it exceeds the bound.
    pub fn monomial(bound: usize, a: u32, b: u32, ts: &[(usize, u32)]) -> Self {
        let mut key = vec![0; bound + 2];
        key[0] = a;
        key[1] = b;
        let mut weight = 0;
        for &(len, c) in ts {
            weight += len * c as usize;
            if weight > bound {
                return TruncatedSeries {
                    bound,
                    terms: BTreeMap::new(),
                };
            }
            key[len + 1] += c;
        }
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        TruncatedSeries { bound, terms }
    }

    /// `1 / (1 - m)` for a monomial `m` of positive weight.
    pub fn geometric(bound: usize, a: u32, b: u32, ts: &[(usize, u32)]) -> Self {
        let step: usize = ts.iter().map(|&(l, c)| l * c as usize).sum();
        assert!(step > 0, "geometric series of a weight-zero monomial");
        let mut terms = BTreeMap::new();
        for j in 0..=(bound / step) as u32 {
            let scaled: Vec<(usize, u32)> = ts.iter().map(|&(l, c)| (l, c * j)).collect();
            let m = TruncatedSeries::monomial(bound, a * j, b * j, &scaled);
            terms.extend(m.terms);
        }
        TruncatedSeries { bound, terms }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `t`-weight of an exponent vector.
    pub fn weight(key: &[u32]) -> usize {
        key[2..]
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.bound, other.bound, "series with different bounds");
        let mut terms: BTreeMap<Exponents, i64> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            let wa = Self::weight(ka);
            for (kb, cb) in &other.terms {
                if wa + Self::weight(kb) > self.bound {
                    continue;
                }
                let key: Exponents = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                let prod = ca.checked_mul(*cb).expect("coefficient overflow");
                let e = terms.entry(key).or_insert(0);
                *e = e.checked_add(prod).expect("coefficient overflow");
            }
        }
        terms.retain(|_, c| *c != 0);
        TruncatedSeries {
            bound: self.bound,
            terms,
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.bound, other.bound, "series with different bounds");
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(k.clone()).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        TruncatedSeries {
            bound: self.bound,
            terms,
        }
    }

    /// Coefficient of `a^p b^q ∏ t_i^{m_i(λ)}`.
    pub fn coefficient(&self, shape: &Partition, p: usize, q: usize) -> Result<i64> {
        if shape.size() > self.bound {
            return Err(Error::Truncation {
                bound: self.bound,
                asked: shape.size(),
            });
        }
        let mut key = vec![0u32; self.bound + 2];
        key[0] = p as u32;
        key[1] = q as u32;
        for (len, m) in shape.multiplicities() {
            key[len + 1] = m as u32;
        }
        Ok(self.terms.get(&key).copied().unwrap_or(0))
    }
}

/// Generating function of signed diagrams of the type, truncated at `bound`.
///
/// One geometric factor per primitive: a primitive with `k⁺` plus boxes,
/// `k⁻` minus boxes and rows of length `l` contributes `1 / (1 - a^{k⁺} b^{k⁻} ∏ t_l)`.
pub fn genfunc(pair: PairType, bound: usize) -> TruncatedSeries {
    primitive_set(pair, bound)
        .iter()
        .filter(|prim| prim.weight() <= bound)
        .fold(TruncatedSeries::one(bound), |acc, prim| {
            let ts: Vec<(usize, u32)> = vec![(prim.len(), prim.rows.len() as u32)];
            let f = TruncatedSeries::geometric(bound, prim.plus as u32, prim.minus as u32, &ts);
            acc.mul(&f)
        })
}
