//! Signed Young diagrams and their π-vector coordinates.
//!
//! A row is determined by its length and the sign of its first box, since
//! signs alternate along a row. Diagrams are kept in canonical order: longer
//! rows first, and among rows of equal length `+`-starting rows first.
//!
//! Text form lists rows separated by `/`, e.g. `+-+/-+-/+`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::PairType;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Row {
    pub len: usize,
    pub start: Sign,
}

impl Row {
    pub fn new(len: usize, start: Sign) -> Self {
        Row { len, start }
    }

    /// Sign of the last box.
    pub fn end(&self) -> Sign {
        if self.len % 2 == 1 {
            self.start
        } else {
            self.start.flip()
        }
    }

    pub fn plus_count(&self) -> usize {
        match self.start {
            Sign::Plus => self.len.div_ceil(2),
            Sign::Minus => self.len / 2,
        }
    }

    pub fn minus_count(&self) -> usize {
        self.len - self.plus_count()
    }

    pub fn text(&self) -> String {
        let mut s = String::with_capacity(self.len);
        let mut sign = self.start;
        for _ in 0..self.len {
            s.push(sign.symbol());
            sign = sign.flip();
        }
        s
    }

    fn canonical_key(&self) -> (std::cmp::Reverse<usize>, Sign) {
        (std::cmp::Reverse(self.len), self.start)
    }
}

/// π-vector: number of `+`-starting rows for each distinct row length,
/// longest length first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PiVector(pub Vec<usize>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedDiagram {
    rows: Vec<Row>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    shape: Vec<usize>,
    starts: Vec<Sign>,
}

impl Serialize for SignedDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            shape: self.rows.iter().map(|r| r.len).collect(),
            starts: self.rows.iter().map(|r| r.start).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        if j.shape.len() != j.starts.len() {
            return Err(serde::de::Error::custom(
                "shape and starts differ in length",
            ));
        }
        let rows = j
            .shape
            .into_iter()
            .zip(j.starts)
            .map(|(len, start)| Row { len, start })
            .collect();
        SignedDiagram::new(rows).map_err(serde::de::Error::custom)
    }
}

impl SignedDiagram {
    /// Canonicalizes the rows. Zero-length rows are rejected.
    pub fn new(rows: Vec<Row>) -> Result<Self> {
        if rows.iter().any(|r| r.len == 0) {
            return Err(Error::InvalidDiagram("zero-length row".into()));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Canonicalizes after dropping zero-length rows.
    pub fn from_rows_dropping_empty(mut rows: Vec<Row>) -> Self {
        rows.retain(|r| r.len > 0);
        Self::from_rows_unchecked(rows)
    }

    fn from_rows_unchecked(mut rows: Vec<Row>) -> Self {
        rows.sort_by_key(Row::canonical_key);
        SignedDiagram { rows }
    }

    pub fn empty() -> Self {
        SignedDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len).collect()).expect("canonical rows")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    /// `(p, q)`: numbers of `+` and `-` boxes.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.rows.iter().map(Row::plus_count).sum();
        (p, self.size() - p)
    }

    pub fn pi_vector(&self) -> PiVector {
        let mut v: Vec<usize> = Vec::new();
        let mut last = None;
        for r in &self.rows {
            if last != Some(r.len) {
                v.push(0);
                last = Some(r.len);
            }
            if r.start == Sign::Plus {
                *v.last_mut().unwrap() += 1;
            }
        }
        PiVector(v)
    }

    /// Number of rows with the given length and starting sign.
    pub fn count(&self, row: Row) -> usize {
        self.rows.iter().filter(|&&r| r == row).count()
    }

    /// Row multiset as counts.
    pub fn row_counts(&self) -> HashMap<Row, usize> {
        let mut m = HashMap::new();
        for &r in &self.rows {
            *m.entry(r).or_insert(0) += 1;
        }
        m
    }

    /// Removes `sub` from the row multiset; `None` if not contained.
    pub fn remove_rows(&self, sub: &[Row]) -> Option<SignedDiagram> {
        let mut rows = self.rows.clone();
        for r in sub {
            let at = rows.iter().position(|x| x == r)?;
            rows.remove(at);
        }
        Some(SignedDiagram { rows })
    }

    pub fn add_rows(&self, extra: &[Row]) -> SignedDiagram {
        let mut rows = self.rows.clone();
        rows.extend(extra.iter().copied().filter(|r| r.len > 0));
        Self::from_rows_unchecked(rows)
    }

    /// Splits the diagram into primitives of the given type, if possible.
    pub fn decompose(&self, pair: PairType) -> Option<Vec<Primitive>> {
        let mut out = Vec::new();
        let shape = self.shape();
        for (len, _) in shape.multiplicities() {
            let plus = self.count(Row::new(len, Sign::Plus));
            let minus = self.count(Row::new(len, Sign::Minus));
            let prims: Vec<Primitive> = primitives_of_length(pair, len);
            out.extend(cover_counts(&prims, len, plus, minus)?);
        }
        Some(out)
    }

    pub fn is_valid_for(&self, pair: PairType) -> bool {
        self.decompose(pair).is_some()
    }

    pub fn text(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(Row::text).collect();
        rows.join("/")
    }
}

/// Writes `(plus, minus)` rows of one length as a sum of primitives.
fn cover_counts(
    prims: &[Primitive],
    len: usize,
    plus: usize,
    minus: usize,
) -> Option<Vec<Primitive>> {
    let Some((first, rest)) = prims.split_first() else {
        return (plus == 0 && minus == 0).then(Vec::new);
    };
    let fp = first.count(Row::new(len, Sign::Plus));
    let fm = first.count(Row::new(len, Sign::Minus));
    let mut k = 0;
    while k * fp <= plus && k * fm <= minus {
        if let Some(mut tail) = cover_counts(rest, len, plus - k * fp, minus - k * fm) {
            let mut out = vec![first.clone(); k];
            out.append(&mut tail);
            return Some(out);
        }
        k += 1;
    }
    None
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl FromStr for SignedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedDiagram::empty());
        }
        let mut rows = Vec::new();
        for part in s.split('/') {
            let signs: Vec<Sign> = part
                .chars()
                .map(|c| match c {
                    '+' => Ok(Sign::Plus),
                    '-' => Ok(Sign::Minus),
                    _ => Err(Error::InvalidDiagram(format!(
                        "bad symbol `{c}` in `{part}`"
                    ))),
                })
                .collect::<Result<_>>()?;
            if signs.is_empty() {
                return Err(Error::InvalidDiagram("empty row".into()));
            }
            if signs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDiagram(format!(
                    "row `{part}` does not alternate"
                )));
            }
            rows.push(Row::new(signs.len(), signs[0]));
        }
        SignedDiagram::new(rows)
    }
}

/// A minimal signed diagram that every diagram of the type is a disjoint
/// union of: one row, or a pair of rows of equal length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Primitive {
    pub rows: Vec<Row>,
    pub plus: usize,
    pub minus: usize,
}

impl Primitive {
    fn new(rows: Vec<Row>) -> Self {
        let plus = rows.iter().map(Row::plus_count).sum();
        let minus = rows.iter().map(Row::minus_count).sum();
        Primitive { rows, plus, minus }
    }

    pub fn len(&self) -> usize {
        self.rows[0].len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes.
    pub fn weight(&self) -> usize {
        self.plus + self.minus
    }

    fn count(&self, row: Row) -> usize {
        self.rows.iter().filter(|&&r| r == row).count()
    }
}

fn primitives_of_length(pair: PairType, len: usize) -> Vec<Primitive> {
    use Sign::{Minus, Plus};
    let single = || {
        vec![
            Primitive::new(vec![Row::new(len, Plus)]),
            Primitive::new(vec![Row::new(len, Minus)]),
        ]
    };
    let opposite = || {
        vec![Primitive::new(vec![
            Row::new(len, Plus),
            Row::new(len, Minus),
        ])]
    };
    let same = || {
        vec![
            Primitive::new(vec![Row::new(len, Plus), Row::new(len, Plus)]),
            Primitive::new(vec![Row::new(len, Minus), Row::new(len, Minus)]),
        ]
    };
    let odd = len % 2 == 1;
    match (pair, odd) {
        (PairType::Aiii, _) => single(),
        (PairType::Bdi, true) | (PairType::Ci, false) => single(),
        (PairType::Bdi, false) | (PairType::Ci, true) => opposite(),
        (PairType::Cii, true) | (PairType::Diii, false) => same(),
        (PairType::Cii, false) | (PairType::Diii, true) => opposite(),
    }
}

/// Primitives of the type with row length at most `max_len`, longest first.
pub fn primitive_set(pair: PairType, max_len: usize) -> Vec<Primitive> {
    (1..=max_len)
        .rev()
        .flat_map(|len| primitives_of_length(pair, len))
        .collect()
}

/// Allowed values of one π coordinate, in increasing order.
pub(crate) fn coordinate_values(pair: PairType, len: usize, mult: usize) -> Vec<usize> {
    let odd = len % 2 == 1;
    let half = || {
        if mult % 2 == 0 {
            vec![mult / 2]
        } else {
            vec![]
        }
    };
    let evens = || {
        if mult % 2 == 0 {
            (0..=mult).step_by(2).collect()
        } else {
            vec![]
        }
    };
    match (pair, odd) {
        (PairType::Aiii, _) | (PairType::Bdi, true) | (PairType::Ci, false) => (0..=mult).collect(),
        (PairType::Bdi, false) | (PairType::Ci, true) => half(),
        (PairType::Cii, false) | (PairType::Diii, true) => half(),
        (PairType::Cii, true) | (PairType::Diii, false) => evens(),
    }
}

/// All π-vectors of signed diagrams of type `pair`, shape `shape` and
/// signature `(p, q)`, in lexicographic order.
pub fn valid_pi_vectors(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
) -> Result<Vec<PiVector>> {
    pair.check_signature(shape.size(), p, q)?;
    let mults = shape.multiplicities();
    let choices: Vec<Vec<usize>> = mults
        .iter()
        .map(|&(l, m)| coordinate_values(pair, l, m))
        .collect();
    // Contribution of coordinate r to p - q is 2a - m for odd lengths.
    let contrib = |r: usize, a: usize| -> i64 {
        let (l, m) = mults[r];
        if l % 2 == 1 {
            2 * a as i64 - m as i64
        } else {
            0
        }
    };
    let k = mults.len();
    let mut lo = vec![0i64; k + 1];
    let mut hi = vec![0i64; k + 1];
    for r in (0..k).rev() {
        let vals = &choices[r];
        let (mn, mx) = match (vals.first(), vals.last()) {
            (Some(&a), Some(&b)) => (contrib(r, a), contrib(r, b)),
            _ => return Ok(Vec::new()),
        };
        lo[r] = lo[r + 1] + mn;
        hi[r] = hi[r + 1] + mx;
    }
    let target = p as i64 - q as i64;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(
        r: usize,
        acc: i64,
        target: i64,
        choices: &[Vec<usize>],
        lo: &[i64],
        hi: &[i64],
        contrib: &dyn Fn(usize, usize) -> i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<PiVector>,
    ) {
        if r == choices.len() {
            if acc == target {
                out.push(PiVector(cur.clone()));
            }
            return;
        }
        if acc + lo[r] > target || acc + hi[r] < target {
            return;
        }
        for &a in &choices[r] {
            cur.push(a);
            go(
                r + 1,
                acc + contrib(r, a),
                target,
                choices,
                lo,
                hi,
                contrib,
                cur,
                out,
            );
            cur.pop();
        }
    }
    go(
        0, 0, target, &choices, &lo, &hi, &contrib, &mut cur, &mut out,
    );
    Ok(out)
}

/// All signed diagrams of the given type, shape and signature, ordered by
/// π-vector.
pub fn enumerate_syd(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
) -> Result<Vec<SignedDiagram>> {
    Ok(valid_pi_vectors(pair, shape, p, q)?
        .iter()
        .map(|v| diagram_from_pi_unchecked(shape, v))
        .collect())
}

/// Rebuilds the diagram with π-vector `v`, rejecting vectors that violate a
/// box bound, a type constraint or the signature.
pub fn from_pi(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
    v: &PiVector,
) -> Result<SignedDiagram> {
    pair.check_signature(shape.size(), p, q)?;
    let mults = shape.multiplicities();
    if v.0.len() != mults.len() {
        return Err(Error::PiVector(format!(
            "expected {} coordinates, got {}",
            mults.len(),
            v.0.len()
        )));
    }
    for (r, (&a, &(l, m))) in v.0.iter().zip(&mults).enumerate() {
        if a > m {
            return Err(Error::PiVector(format!(
                "coordinate {} (length {l}) is {a}, above multiplicity {m}",
                r + 1
            )));
        }
        if !coordinate_values(pair, l, m).contains(&a) {
            let rule = match (pair, l % 2 == 1) {
                (PairType::Cii, true) | (PairType::Diii, false) => "an even value",
                _ => "half the multiplicity",
            };
            return Err(Error::PiVector(format!(
                "{pair} requires {rule} at coordinate {} (length {l}, multiplicity {m}), got {a}",
                r + 1
            )));
        }
    }
    let t = diagram_from_pi_unchecked(shape, v);
    if t.signature() != (p, q) {
        let (pp, qq) = t.signature();
        return Err(Error::PiVector(format!(
            "signature would be ({pp},{qq}), expected ({p},{q})"
        )));
    }
    Ok(t)
}

fn diagram_from_pi_unchecked(shape: &Partition, v: &PiVector) -> SignedDiagram {
    let mut rows = Vec::with_capacity(shape.len());
    for (&a, (l, m)) in v.0.iter().zip(shape.multiplicities()) {
        rows.extend((0..a).map(|_| Row::new(l, Sign::Plus)));
        rows.extend((a..m).map(|_| Row::new(l, Sign::Minus)));
    }
    SignedDiagram { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn syd(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn text_roundtrip_and_canonical_order() {
        let t = syd("-+/+-+/+-/+");
        assert_eq!(t.text(), "+-+/+-/-+/+");
        assert_eq!(t.shape(), part("3,2,2,1"));
        assert_eq!(t.signature(), (5, 3));
        assert_eq!(syd("").signature(), (0, 0));
        assert!("++".parse::<SignedDiagram>().is_err());
        assert!("+-/".parse::<SignedDiagram>().is_err());
        assert!("+x".parse::<SignedDiagram>().is_err());
    }

    #[test]
    fn json_form() {
        let t = syd("+-+/-+/+");
        let j = serde_json::to_value(&t).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"shape": [3, 2, 1], "starts": ["+", "-", "+"]})
        );
        let back: SignedDiagram = serde_json::from_value(j).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn pi_vector_of_rows() {
        let t = syd("+-+/-+-/+-/-+/-");
        assert_eq!(t.pi_vector(), PiVector(vec![1, 1, 0]));
    }

    #[test]
    fn primitive_set_examples() {
        let prims = primitive_set(PairType::Aiii, 2);
        let rows: Vec<Vec<Row>> = prims.iter().map(|p| p.rows.clone()).collect();
        assert_eq!(
            rows,
            vec![
                vec![Row::new(2, Sign::Plus)],
                vec![Row::new(2, Sign::Minus)],
                vec![Row::new(1, Sign::Plus)],
                vec![Row::new(1, Sign::Minus)],
            ]
        );
        let cii = primitive_set(PairType::Cii, 3);
        let threes: Vec<_> = cii.iter().filter(|p| p.len() == 3).collect();
        assert_eq!(threes.len(), 2);
        assert!(threes.iter().all(|p| p.rows[0] == p.rows[1]));
        let twos: Vec<_> = cii.iter().filter(|p| p.len() == 2).collect();
        assert_eq!(twos.len(), 1);
        assert_ne!(twos[0].rows[0].start, twos[0].rows[1].start);
    }

    #[test]
    fn enumerate_small() {
        // (2,1) in AIII with signature (2,1): rows +-/+ and -+/+.
        let ds = enumerate_syd(PairType::Aiii, &part("2,1"), 2, 1).unwrap();
        let texts: Vec<String> = ds.iter().map(|d| d.text()).collect();
        assert_eq!(texts, vec!["-+/+", "+-/+"]);
        assert!(enumerate_syd(PairType::Ci, &part("2,1"), 2, 1).is_err());
        assert!(enumerate_syd(PairType::Bdi, &part("2,1"), 2, 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn from_pi_rejections() {
        let shape = part("3,3,2,2");
        assert!(from_pi(PairType::Cii, &shape, 6, 4, &PiVector(vec![2, 1])).is_ok());
        let e = from_pi(PairType::Cii, &shape, 6, 4, &PiVector(vec![1, 1])).unwrap_err();
        assert!(e.to_string().contains("even"), "{e}");
        let e = from_pi(PairType::Cii, &shape, 6, 4, &PiVector(vec![2, 2])).unwrap_err();
        assert!(e.to_string().contains("half"), "{e}");
        let e = from_pi(PairType::Aiii, &shape, 5, 5, &PiVector(vec![3, 0])).unwrap_err();
        assert!(e.to_string().contains("multiplicity"), "{e}");
        let e = from_pi(PairType::Aiii, &shape, 5, 5, &PiVector(vec![2, 0])).unwrap_err();
        assert!(e.to_string().contains("signature"), "{e}");
        assert!(from_pi(PairType::Aiii, &shape, 5, 5, &PiVector(vec![1])).is_err());
    }

    #[test]
    fn decomposition_into_primitives() {
        assert!(syd("+-/-+/+").is_valid_for(PairType::Bdi));
        assert!(!syd("+-/+-/+").is_valid_for(PairType::Bdi));
        assert!(syd("+-+/+-+").is_valid_for(PairType::Cii));
        assert!(!syd("+-+/-+-").is_valid_for(PairType::Cii));
        assert!(syd("+-+/-+-").is_valid_for(PairType::Diii));
        assert!(syd("+-/+-").is_valid_for(PairType::Diii));
        assert!(!syd("+-/-+").is_valid_for(PairType::Diii));
        assert_eq!(
            syd("+-/+-/-+/-+").decompose(PairType::Diii).unwrap().len(),
            2
        );
    }
}
