//! Exact matrices over the Gaussian rationals, and the explicit nilpotent
//! matrices used to check how Jordan types change under induction.
//!
//! Ranks are computed by clearing denominators row by row and running
//! fraction-free elimination over the Gaussian integers.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::signed::{Row, Sign, SignedDiagram};

pub type GaussRational = Complex<BigRational>;
type GaussInt = Complex<BigInt>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn gr(re: i64, im: i64) -> GaussRational {
    Complex::new(q(re), q(im))
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRational>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols)
                .map(|c| format!("{}", self.get(r, c)))
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussRational::one());
        }
        m
    }

    /// Builds a matrix from Gaussian integers given as `(re, im)`.
    pub fn from_gaussian_ints(rows: usize, cols: usize, entries: &[(i64, i64)]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            data: entries.iter().map(|&(a, b)| gr(a, b)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &GaussRational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> ExactMatrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    /// Copy of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> ExactMatrix {
        let mut out = Self::zeros(r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                out.set(r - r0, c - c0, self.get(r, c).clone());
            }
        }
        out
    }

    /// Writes `m` with its top-left corner at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, m: &ExactMatrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.get(r, c).clone());
            }
        }
    }

    fn integer_rows(&self) -> Vec<Vec<GaussInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, z| {
                    let acc = num_integer::Integer::lcm(&acc, z.re.denom());
                    num_integer::Integer::lcm(&acc, z.im.denom())
                });
                row.iter()
                    .map(|z| {
                        let re = (&z.re * &lcm).to_integer();
                        let im = (&z.im * &lcm).to_integer();
                        Complex::new(re, im)
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank by fraction-free elimination over the Gaussian integers.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = GaussInt::one();
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let p = m[rank][col].clone();
            for i in rank + 1..rows {
                let f = m[i][col].clone();
                for j in col + 1..cols {
                    let v = (&p * &m[i][j] - &f * &m[rank][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][col] = GaussInt::zero();
            }
            prev = p;
            rank += 1;
        }
        rank
    }

    /// `(positive, negative, zero)` eigenvalue counts of a Hermitian matrix.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            let pivot = (k..n).find(|&i| !a.get(i, i).is_zero());
            let pivot = match pivot {
                Some(i) => i,
                None => {
                    // All remaining diagonal entries vanish; mix two basis
                    // vectors to make one nonzero.
                    let Some((i, j)) = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a.get(i, j).is_zero())
                    else {
                        break;
                    };
                    let alpha = a.get(i, j).clone();
                    congruence_add(&mut a, i, j, &alpha);
                    i
                }
            };
            congruence_swap(&mut a, k, pivot);
            let d = a.get(k, k).clone();
            debug_assert!(d.im.is_zero());
            if d.re.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                let f = a.get(i, k) / &d;
                if !f.is_zero() {
                    congruence_add(&mut a, i, k, &-f);
                }
            }
            k += 1;
        }
        (pos, neg, n - pos - neg)
    }
}

/// Row `i += s·row j` and column `i += conj(s)·column j`.
fn congruence_add(a: &mut ExactMatrix, i: usize, j: usize, s: &GaussRational) {
    let n = a.rows;
    for c in 0..n {
        let v = a.get(i, c) + s * a.get(j, c);
        a.set(i, c, v);
    }
    let sc = s.conj();
    for r in 0..n {
        let v = a.get(r, i) + &sc * a.get(r, j);
        a.set(r, i, v);
    }
}

fn congruence_swap(a: &mut ExactMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows;
    for c in 0..n {
        let (x, y) = (a.get(i, c).clone(), a.get(j, c).clone());
        a.set(i, c, y);
        a.set(j, c, x);
    }
    for r in 0..n {
        let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
pub fn jordan_type(m: &ExactMatrix) -> Result<Partition> {
    assert_eq!(m.rows, m.cols, "square matrix expected");
    let n = m.rows;
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        power = power.mul(m);
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // Blocks of size at least k: rank(N^{k-1}) - rank(N^k).
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exact));
    }
    Partition::new(parts)
}

/// Where one extra chain starts: at a row of the smaller diagram, or at a
/// new row of length zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RowSlot {
    Row(usize),
    Virtual,
}

impl fmt::Display for RowSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowSlot::Row(r) => write!(f, "{}", r + 1),
            RowSlot::Virtual => f.write_str("v"),
        }
    }
}

/// `X + Ξ` on `span(f) ⊕ V' ⊕ span(g)`, with the Hermitian form making
/// both summands skew-adjoint.
#[derive(Clone, Debug)]
pub struct InducedPair {
    pub h: usize,
    pub slots: Vec<RowSlot>,
    /// Form on the whole space.
    pub gram: ExactMatrix,
    /// Form on `V'`.
    pub gram_small: ExactMatrix,
    /// The nilpotent on `V'`.
    pub x_small: ExactMatrix,
    /// `X` extended by zero.
    pub x: ExactMatrix,
    /// The nilradical part `Ξ`.
    pub xi: ExactMatrix,
    pub xi_small: ExactMatrix,
    pub eta: ExactMatrix,
    pub expected: Partition,
}

/// Form constant of a row block: real for odd length, imaginary for even,
/// with sign chosen so the middle box of an odd row carries its sign.
fn row_constant(row: Row) -> GaussRational {
    let s = if row.start == Sign::Plus { 1 } else { -1 };
    if row.len % 2 == 1 {
        let t = if (row.len - 1) / 2 % 2 == 0 { 1 } else { -1 };
        gr(s * t, 0)
    } else {
        gr(0, s)
    }
}

/// Nilpotent Jordan block `e_j ↦ e_{j-1}` and its form for one row.
fn row_block(row: Row) -> (ExactMatrix, ExactMatrix) {
    let m = row.len;
    let mut x = ExactMatrix::zeros(m, m);
    for j in 1..m {
        x.set(j - 1, j, GaussRational::one());
    }
    let c = row_constant(row);
    let mut h = ExactMatrix::zeros(m, m);
    for j in 0..m {
        let sign = if (m - 1 - j) % 2 == 0 { 1 } else { -1 };
        h.set(j, m - 1 - j, c.scale(q(sign)));
    }
    (x, h)
}

impl InducedPair {
    /// Builds the pair for the signed diagram `t_prime`, adding one chain
    /// of two boxes at each slot; unused slots give two chains of one box.
    pub fn build(t_prime: &SignedDiagram, slots: &[RowSlot], h: usize) -> Result<InducedPair> {
        let rows = t_prime.rows();
        if slots.len() > h {
            return Err(Error::InvalidSlots(format!(
                "{} slots for h = {h}",
                slots.len()
            )));
        }
        let mut used = vec![false; rows.len()];
        for s in slots {
            if let RowSlot::Row(r) = *s {
                if r >= rows.len() {
                    return Err(Error::InvalidSlots(format!("row {} out of range", r + 1)));
                }
                if std::mem::replace(&mut used[r], true) {
                    return Err(Error::InvalidSlots(format!("row {} chosen twice", r + 1)));
                }
            }
        }
        let n1 = t_prime.size();
        let n = n1 + 2 * h;
        let mut x_small = ExactMatrix::zeros(n1, n1);
        let mut gram_small = ExactMatrix::zeros(n1, n1);
        let mut offsets = Vec::with_capacity(rows.len());
        let mut off = 0;
        for &row in rows {
            let (x, g) = row_block(row);
            x_small.put(off, off, &x);
            gram_small.put(off, off, &g);
            offsets.push(off);
            off += row.len;
        }

        let mut eta = ExactMatrix::zeros(n1, h);
        let mut b = ExactMatrix::zeros(h, h);
        for (t, s) in slots.iter().enumerate() {
            match *s {
                RowSlot::Row(r) => eta.set(offsets[r] + rows[r].len - 1, t, GaussRational::one()),
                RowSlot::Virtual => b.set(t, t, gr(0, 1)),
            }
        }
        let xi_small = eta.conj_transpose().mul(&gram_small).scale(&gr(-1, 0));

        let (f0, v0, g0) = (0, h, h + n1);
        let mut gram = ExactMatrix::zeros(n, n);
        gram.put(v0, v0, &gram_small);
        for t in 0..h {
            gram.set(f0 + t, g0 + t, GaussRational::one());
            gram.set(g0 + t, f0 + t, GaussRational::one());
        }
        let mut x = ExactMatrix::zeros(n, n);
        x.put(v0, v0, &x_small);
        let mut xi = ExactMatrix::zeros(n, n);
        xi.put(f0, v0, &xi_small);
        xi.put(f0, g0, &b);
        xi.put(v0, g0, &eta);

        let mut parts: Vec<usize> = rows.iter().map(|r| r.len).collect();
        for s in slots {
            match *s {
                RowSlot::Row(r) => parts[r] += 2,
                RowSlot::Virtual => parts.push(2),
            }
        }
        parts.extend(std::iter::repeat_n(1, 2 * (h - slots.len())));
        Ok(InducedPair {
            h,
            slots: slots.to_vec(),
            gram,
            gram_small,
            x_small,
            x,
            xi,
            xi_small,
            eta,
            expected: Partition::from_unsorted(parts),
        })
    }

    pub fn total(&self) -> ExactMatrix {
        self.x.add(&self.xi)
    }

    /// `A† H + H A = 0`.
    pub fn is_skew_adjoint(a: &ExactMatrix, gram: &ExactMatrix) -> bool {
        a.conj_transpose().mul(gram).add(&gram.mul(a)).is_zero()
    }

    /// Checks the block shape of `(X + Ξ)^k` for `k ≥ 2`.
    pub fn power_identity(&self, k: u32) -> bool {
        assert!(k >= 2);
        let n1 = self.x_small.rows();
        let h = self.h;
        let power = self.total().pow(k);
        let xk = |e: u32| self.x_small.pow(e);
        let mut expect = ExactMatrix::zeros(power.rows(), power.cols());
        expect.put(0, h, &self.xi_small.mul(&xk(k - 1)));
        expect.put(0, h + n1, &self.xi_small.mul(&xk(k - 2)).mul(&self.eta));
        expect.put(h, h, &xk(k));
        expect.put(h, h + n1, &xk(k - 1).mul(&self.eta));
        power == expect
    }
}

/// One choice of slots and the Jordan types it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionOutcome {
    pub slots: Vec<RowSlot>,
    pub expected: Partition,
    pub observed: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    pub shape: Partition,
    pub h: usize,
    pub outcomes: Vec<InductionOutcome>,
    /// Observed type dominating every other, if one exists.
    pub maximum: Option<Partition>,
    pub expected_maximum: Partition,
    pub failures: Vec<String>,
}

impl InductionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.maximum.as_ref() == Some(&self.expected_maximum)
    }
}

/// Slot choices of size exactly `h`: some rows plus virtual slots.
pub fn slot_choices(rows: usize, h: usize) -> Vec<Vec<RowSlot>> {
    fn combos(
        start: usize,
        rows: usize,
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for r in start..rows {
            cur.push(r);
            combos(r + 1, rows, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for real in (0..=h.min(rows)).rev() {
        let mut cs = Vec::new();
        combos(0, rows, real, &mut Vec::new(), &mut cs);
        for c in cs {
            let mut slots: Vec<RowSlot> = c.into_iter().map(RowSlot::Row).collect();
            slots.extend(std::iter::repeat_n(RowSlot::Virtual, h - real));
            out.push(slots);
        }
    }
    out
}

/// Runs every slot choice for `shape` and `h`, with rows starting `+`.
pub fn verify_induction(shape: &Partition, h: usize, limit: usize) -> Result<InductionReport> {
    let size = shape.size() + 2 * h;
    if size > limit {
        return Err(Error::TooLarge { size, limit });
    }
    let t = SignedDiagram::new(
        shape
            .parts()
            .iter()
            .map(|&l| Row::new(l, Sign::Plus))
            .collect(),
    )?;
    let mut outcomes = Vec::new();
    let mut failures = Vec::new();
    for slots in slot_choices(shape.len(), h) {
        let pair = InducedPair::build(&t, &slots, h)?;
        let total = pair.total();
        if !InducedPair::is_skew_adjoint(&pair.x, &pair.gram)
            || !InducedPair::is_skew_adjoint(&pair.xi, &pair.gram)
        {
            failures.push(format!("slots {slots:?}: not skew-adjoint"));
        }
        if !(2..=3).all(|k| pair.power_identity(k)) {
            failures.push(format!("slots {slots:?}: power identity fails"));
        }
        let observed = jordan_type(&total)?;
        if observed != pair.expected {
            failures.push(format!(
                "slots {slots:?}: expected {}, observed {observed}",
                pair.expected
            ));
        }
        outcomes.push(InductionOutcome {
            slots,
            expected: pair.expected.clone(),
            observed,
        });
    }
    let maximum = outcomes
        .iter()
        .find(|o| outcomes.iter().all(|p| o.observed.dominates(&p.observed)))
        .map(|o| o.observed.clone());
    Ok(InductionReport {
        shape: shape.clone(),
        h,
        outcomes,
        maximum,
        expected_maximum: shape.add_column_pair(h),
        failures,
    })
}
