//! Row-substitution patterns for covers and for graph adjacency.
//!
//! Rows are written with the letters `a` and `b`, standing for the two signs
//! in either order. `ab..ba` fixes both ends, `ba..` only the first box and
//! `..ab` only the last two. Lengths are affine in two parameters `u ≥ v`;
//! rows whose length evaluates to zero vanish.

use std::sync::OnceLock;

use crate::pair::PairType;
use crate::signed::{Row, Sign, SignedDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    Start(Letter),
    End(Letter),
    Both(Letter, Letter),
}

/// `u·u_coef + v·v_coef + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LenExpr {
    pub u: i64,
    pub v: i64,
    pub c: i64,
}

impl LenExpr {
    pub fn eval(&self, u: i64, v: i64) -> i64 {
        self.u * u + self.v * v + self.c
    }

    fn parse(s: &str) -> LenExpr {
        let mut e = LenExpr { u: 0, v: 0, c: 0 };
        let s = s.replace('-', "+-");
        for term in s.split('+').filter(|t| !t.is_empty()) {
            let (coef, var) = match term.trim_end_matches(['u', 'v']) {
                t if t.len() == term.len() => (t, None),
                t => (t, term.chars().last()),
            };
            let k: i64 = match coef {
                "" => 1,
                "-" => -1,
                t => t
                    .parse()
                    .unwrap_or_else(|_| panic!("bad length term `{term}`")),
            };
            match var {
                Some('u') => e.u += k,
                Some('v') => e.v += k,
                _ => e.c += k,
            }
        }
        e
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Template {
    pub anchor: Anchor,
    pub len: LenExpr,
}

impl Template {
    fn parse(letters: &str, len: &str) -> Template {
        let letter = |c: char| match c {
            'a' => Letter::A,
            'b' => Letter::B,
            _ => panic!("bad letter `{c}` in `{letters}`"),
        };
        let chars: Vec<char> = letters.chars().collect();
        let anchor = if let Some(rest) = letters.strip_prefix("..") {
            let last = rest.chars().last().expect("end letters");
            Anchor::End(letter(last))
        } else if letters.ends_with("..") && chars.len() == 4 {
            Anchor::Start(letter(chars[0]))
        } else {
            assert_eq!(chars.len(), 6, "row `{letters}`");
            Anchor::Both(letter(chars[0]), letter(chars[5]))
        };
        Template {
            anchor,
            len: LenExpr::parse(len),
        }
    }

    /// The row for parameters `(u, v)` and signs `(a, b)`; `None` if the
    /// length is negative, zero-length rows are returned with length 0.
    pub fn instantiate(&self, u: i64, v: i64, a: Sign) -> Option<Row> {
        let len = self.len.eval(u, v);
        if len < 0 {
            return None;
        }
        let sign = |l: Letter| match l {
            Letter::A => a,
            Letter::B => a.flip(),
        };
        let odd = len % 2 == 1;
        let start = match self.anchor {
            Anchor::Start(l) => sign(l),
            Anchor::End(l) => {
                if odd {
                    sign(l)
                } else {
                    sign(l).flip()
                }
            }
            Anchor::Both(s, e) => {
                if len > 0 && (s == e) != odd {
                    return None;
                }
                sign(s)
            }
        };
        Some(Row::new(len as usize, start))
    }
}

/// Admissible parameter pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    /// `u ≥ v ≥ k`.
    AtLeast(i64),
    /// `u = v ≥ k`.
    Equal(i64),
    /// `u ≥ v ≥ k` with `u - v` even.
    EvenGap(i64),
    /// `u > v ≥ k`.
    Strict(i64),
}

impl Range {
    pub fn contains(&self, u: i64, v: i64) -> bool {
        match *self {
            Range::AtLeast(k) => u >= v && v >= k,
            Range::Equal(k) => u == v && v >= k,
            Range::EvenGap(k) => u >= v && v >= k && (u - v) % 2 == 0,
            Range::Strict(k) => u > v && v >= k,
        }
    }
}

/// `lower` is the residue of the smaller orbit, `upper` that of the larger.
#[derive(Clone, Debug)]
pub struct CoverPattern {
    pub pair: PairType,
    pub case: &'static str,
    pub lower: Vec<Template>,
    pub upper: Vec<Template>,
    pub range: Range,
    /// Whether the case can give a codimension-one cover.
    pub codim_one_case: bool,
}

#[derive(Clone, Debug)]
pub struct AdjacencyPattern {
    pub pair: PairType,
    pub case: &'static str,
    pub left: Vec<Template>,
    pub right: Vec<Template>,
    pub range: Range,
}

/// A pattern instantiated at concrete `(u, v)` and signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub from: Vec<Row>,
    pub to: Vec<Row>,
    /// Shortest and longest template length on the `from` side, zeros included.
    pub span: (usize, usize),
    pub u: i64,
    pub v: i64,
}

fn instantiate(from: &[Template], to: &[Template], u: i64, v: i64, a: Sign) -> Option<Instance> {
    let f: Vec<Row> = from
        .iter()
        .map(|t| t.instantiate(u, v, a))
        .collect::<Option<_>>()?;
    let t: Vec<Row> = to
        .iter()
        .map(|t| t.instantiate(u, v, a))
        .collect::<Option<_>>()?;
    let lo = f.iter().map(|r| r.len).min()?;
    let hi = f.iter().map(|r| r.len).max()?;
    let nonzero = |rows: Vec<Row>| -> Vec<Row> {
        let mut rows: Vec<Row> = rows.into_iter().filter(|r| r.len > 0).collect();
        rows.sort();
        rows
    };
    Some(Instance {
        from: nonzero(f),
        to: nonzero(t),
        span: (lo, hi),
        u,
        v,
    })
}

/// All instances with every `from`-side length at most `max_len`.
fn instances(from: &[Template], to: &[Template], range: Range, max_len: usize) -> Vec<Instance> {
    let top = max_len as i64 + 2;
    let mut out = Vec::new();
    for u in 0..=top {
        for v in 0..=u {
            if !range.contains(u, v) {
                continue;
            }
            for a in [Sign::Plus, Sign::Minus] {
                if let Some(inst) = instantiate(from, to, u, v, a) {
                    if inst.span.1 <= max_len && !inst.from.is_empty() && inst.from != inst.to {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}

impl CoverPattern {
    /// Instances read downwards: `from` is the upper residue, `to` the lower.
    pub fn downward(&self, max_len: usize) -> Vec<Instance> {
        instances(&self.upper, &self.lower, self.range, max_len)
    }
}

impl AdjacencyPattern {
    pub fn instances(&self, max_len: usize) -> Vec<Instance> {
        instances(&self.left, &self.right, self.range, max_len)
    }
}

/// Whether `t` has a row with length strictly inside `span`.
pub fn has_rows_between(t: &SignedDiagram, span: (usize, usize)) -> bool {
    t.rows().iter().any(|r| r.len > span.0 && r.len < span.1)
}

fn rows(spec: &[(&str, &str, usize)]) -> Vec<Template> {
    spec.iter()
        .flat_map(|&(letters, len, times)| {
            std::iter::repeat_n(Template::parse(letters, len), times)
        })
        .collect()
}

macro_rules! cover {
    ($pair:ident, $case:expr, $range:expr, $codim1:expr, [$($l:tt)*] => [$($u:tt)*]) => {
        CoverPattern {
            pair: PairType::$pair,
            case: $case,
            lower: rows(&cover!(@rows $($l)*)),
            upper: rows(&cover!(@rows $($u)*)),
            range: $range,
            codim_one_case: $codim1,
        }
    };
    (@rows $($letters:literal $len:literal $(x $times:literal)?),* $(,)?) => {
        [$(($letters, $len, cover!(@times $($times)?))),*]
    };
    (@times) => { 1 };
    (@times $t:literal) => { $t };
}

fn build_cover_patterns() -> Vec<CoverPattern> {
    use Range::{AtLeast, Equal, EvenGap};
    vec![
        cover!(Aiii, "i", AtLeast(1), true, ["..ab" "u", "..ba" "v"] => ["..ba" "u+1", "..ab" "v-1"]),
        cover!(Aiii, "ii", AtLeast(1), true, ["ba.." "u", "ab.." "v"] => ["ab.." "u+1", "ba.." "v-1"]),
        cover!(Aiii, "iii", EvenGap(2), false, ["..ba" "u", "..ba" "v"] => ["..ba" "u+2", "..ba" "v-2"]),
        //
        cover!(Bdi, "1", Equal(1), true,
            ["ba..ba" "2u", "ab..ab" "2u"] => ["ba..ab" "2u+1", "ab..ba" "2u-1"]),
        cover!(Bdi, "2", AtLeast(1), true,
            ["ab..ba" "2u+1", "ab..ba" "2v+1"] => ["ab..ba" "2u+3", "ab..ba" "2v-1"]),
        cover!(Bdi, "3", AtLeast(1), true,
            ["ab..ba" "2u+1", "ba..ab" "2v+1"] => ["ab..ba" "2u+3", "ba..ab" "2v-1"]),
        cover!(Bdi, "4", AtLeast(1), true,
            ["ab..ba" "2u+1", "ba..ab" "2u+1", "ab..ba" "2v+1"]
            => ["ba..ba" "2u+2", "ab..ab" "2u+2", "ab..ba" "2v-1"]),
        cover!(Bdi, "5", AtLeast(0), true,
            ["ab..ba" "2u+1", "ab..ba" "2v+1", "ba..ab" "2v+1"]
            => ["ab..ba" "2u+3", "ab..ab" "2v", "ba..ba" "2v"]),
        cover!(Bdi, "6", AtLeast(0), true,
            ["ab..ba" "2u+1", "ba..ab" "2u+1", "ab..ba" "2v+1", "ba..ab" "2v+1"]
            => ["ab..ab" "2u+2", "ba..ba" "2u+2", "ab..ab" "2v", "ba..ba" "2v"]),
        cover!(Bdi, "7", AtLeast(0), true,
            ["ba..ab" "2u+1" x 2, "ab..ba" "2v+1" x 2]
            => ["ba..ba" "2u+2", "ab..ab" "2u+2", "ba..ba" "2v", "ab..ab" "2v"]),
        cover!(Bdi, "8", AtLeast(1), true,
            ["ba..ab" "2u+1", "ab..ba" "2v+1"] => ["ab..ba" "2u+3", "ba..ab" "2v-1"]),
        cover!(Bdi, "9", AtLeast(0), true,
            ["ba..ab" "2u+1", "ab..ba" "2v+1" x 2]
            => ["ab..ba" "2u+3", "ba..ba" "2v", "ab..ab" "2v"]),
        cover!(Bdi, "10", AtLeast(1), true,
            ["ba..ab" "2u+1" x 2, "ab..ba" "2v+1"]
            => ["ba..ba" "2u+2", "ab..ab" "2u+2", "ba..ab" "2v-1"]),
        //
        cover!(Ci, "1", Equal(1), true,
            ["ab..ba" "2u-1", "ba..ab" "2u-1"] => ["ab..ab" "2u", "ba..ba" "2u-2"]),
        cover!(Ci, "2", AtLeast(1), true,
            ["ba..ba" "2u", "ba..ba" "2v"] => ["ba..ba" "2u+2", "ba..ba" "2v-2"]),
        cover!(Ci, "3", AtLeast(1), true,
            ["ba..ba" "2u", "ab..ab" "2v"] => ["ba..ba" "2u+2", "ab..ab" "2v-2"]),
        cover!(Ci, "4", AtLeast(1), true,
            ["ba..ba" "2u", "ab..ab" "2u", "ba..ba" "2v"]
            => ["ab..ba" "2u+1", "ba..ab" "2u+1", "ba..ba" "2v-2"]),
        cover!(Ci, "5", AtLeast(1), true,
            ["ba..ba" "2u", "ba..ba" "2v", "ab..ab" "2v"]
            => ["ba..ba" "2u+2", "ba..ab" "2v-1", "ab..ba" "2v-1"]),
        cover!(Ci, "6", AtLeast(1), true,
            ["ba..ba" "2u", "ab..ab" "2u", "ba..ba" "2v", "ab..ab" "2v"]
            => ["ba..ab" "2u+1", "ab..ba" "2u+1", "ba..ab" "2v-1", "ab..ba" "2v-1"]),
        cover!(Ci, "7", AtLeast(1), true,
            ["ab..ab" "2u" x 2, "ba..ba" "2v" x 2]
            => ["ab..ba" "2u+1", "ba..ab" "2u+1", "ab..ba" "2v-1", "ba..ab" "2v-1"]),
        cover!(Ci, "8", AtLeast(1), true,
            ["ab..ab" "2u", "ba..ba" "2v"] => ["ba..ba" "2u+2", "ab..ab" "2v-2"]),
        cover!(Ci, "9", AtLeast(1), true,
            ["ab..ab" "2u", "ba..ba" "2v" x 2]
            => ["ba..ba" "2u+2", "ab..ba" "2v-1", "ba..ab" "2v-1"]),
        cover!(Ci, "10", AtLeast(1), true,
            ["ab..ab" "2u" x 2, "ba..ba" "2v"]
            => ["ab..ba" "2u+1", "ba..ab" "2u+1", "ab..ab" "2v-2"]),
        //
        cover!(Cii, "1", AtLeast(1), true,
            ["ba..ba" "2u", "ab..ab" "2u", "ba..ba" "2v", "ab..ab" "2v"]
            => ["ba..ab" "2u+1" x 2, "ab..ba" "2v-1" x 2]),
        cover!(Cii, "2", AtLeast(1), false,
            ["ab..ba" "2u+1" x 2, "ba..ba" "2v", "ab..ab" "2v"]
            => ["ba..ba" "2u+2", "ab..ab" "2u+2", "ab..ba" "2v-1" x 2]),
        cover!(Cii, "3", AtLeast(0), false,
            ["ba..ba" "2u", "ab..ab" "2u", "ab..ba" "2v+1" x 2]
            => ["ab..ba" "2u+1" x 2, "ba..ba" "2v", "ab..ab" "2v"]),
        cover!(Cii, "4", AtLeast(0), false,
            ["ba..ab" "2u+1" x 2, "ab..ba" "2v+1" x 2]
            => ["ba..ba" "2u+2", "ab..ab" "2u+2", "ba..ba" "2v", "ab..ab" "2v"]),
        cover!(Cii, "5", AtLeast(1), false,
            ["ab..ba" "2u+1" x 2, "ab..ba" "2v+1" x 2]
            => ["ab..ba" "2u+3" x 2, "ab..ba" "2v-1" x 2]),
        //
        cover!(Diii, "1", AtLeast(1), true,
            ["ab..ba" "2u-1", "ba..ab" "2u-1", "ab..ba" "2v-1", "ba..ab" "2v-1"]
            => ["ab..ab" "2u" x 2, "ba..ba" "2v-2" x 2]),
        cover!(Diii, "2", AtLeast(1), false,
            ["ba..ba" "2u" x 2, "ab..ba" "2v-1", "ba..ab" "2v-1"]
            => ["ab..ba" "2u+1", "ba..ab" "2u+1", "ba..ba" "2v-2" x 2]),
        cover!(Diii, "3", AtLeast(1), false,
            ["ab..ba" "2u-1", "ba..ab" "2u-1", "ba..ba" "2v" x 2]
            => ["ba..ba" "2u" x 2, "ab..ba" "2v-1", "ba..ab" "2v-1"]),
        cover!(Diii, "4", AtLeast(1), false,
            ["ab..ab" "2u" x 2, "ba..ba" "2v" x 2]
            => ["ab..ba" "2u+1", "ba..ab" "2u+1", "ab..ba" "2v-1", "ba..ab" "2v-1"]),
        cover!(Diii, "5", AtLeast(1), false,
            ["ba..ba" "2u" x 2, "ba..ba" "2v" x 2]
            => ["ba..ba" "2u+2" x 2, "ba..ba" "2v-2" x 2]),
    ]
}

fn build_adjacency_patterns() -> Vec<AdjacencyPattern> {
    let adj = |pair, case, left: &[(&str, &str, usize)], right: &[(&str, &str, usize)]| {
        AdjacencyPattern {
            pair,
            case,
            left: rows(left),
            right: rows(right),
            range: Range::Strict(0),
        }
    };
    vec![
        adj(
            PairType::Aiii,
            "i",
            &[("ab..ab", "2u", 1), ("ba..ba", "2v", 1)],
            &[("ba..ba", "2u", 1), ("ab..ab", "2v", 1)],
        ),
        adj(
            PairType::Aiii,
            "ii",
            &[("ab..ba", "2u+1", 1), ("ba..ab", "2v+1", 1)],
            &[("ba..ab", "2u+1", 1), ("ab..ba", "2v+1", 1)],
        ),
        adj(
            PairType::Bdi,
            "odd",
            &[("ba..ab", "2u+1", 1), ("ab..ba", "2v+1", 1)],
            &[("ab..ba", "2u+1", 1), ("ba..ab", "2v+1", 1)],
        ),
        adj(
            PairType::Ci,
            "even",
            &[("ba..ba", "2u", 1), ("ab..ab", "2v", 1)],
            &[("ab..ab", "2u", 1), ("ba..ba", "2v", 1)],
        ),
        adj(
            PairType::Cii,
            "odd",
            &[("ab..ba", "2u+1", 2), ("ba..ab", "2v+1", 2)],
            &[("ba..ab", "2u+1", 2), ("ab..ba", "2v+1", 2)],
        ),
        adj(
            PairType::Diii,
            "even",
            &[("ab..ab", "2u", 2), ("ba..ba", "2v", 2)],
            &[("ba..ba", "2u", 2), ("ab..ab", "2v", 2)],
        ),
    ]
}

pub fn cover_patterns() -> &'static [CoverPattern] {
    static CELL: OnceLock<Vec<CoverPattern>> = OnceLock::new();
    CELL.get_or_init(build_cover_patterns)
}

pub fn adjacency_patterns() -> &'static [AdjacencyPattern] {
    static CELL: OnceLock<Vec<AdjacencyPattern>> = OnceLock::new();
    CELL.get_or_init(build_adjacency_patterns)
}

pub fn cover_patterns_for(pair: PairType) -> impl Iterator<Item = &'static CoverPattern> {
    cover_patterns().iter().filter(move |p| p.pair == pair)
}

fn multiset_difference(x: &SignedDiagram, y: &SignedDiagram) -> Vec<Row> {
    let mut rest: Vec<Row> = y.rows().to_vec();
    let mut out = Vec::new();
    for r in x.rows() {
        match rest.iter().position(|s| s == r) {
            Some(i) => {
                rest.remove(i);
            }
            None => out.push(*r),
        }
    }
    out.sort();
    out
}

/// Whether the rows where `t` and `t2` differ match an adjacency pattern of
/// the type, with no row of `t` strictly between the pattern's lengths.
pub fn adjacent(pair: PairType, t: &SignedDiagram, t2: &SignedDiagram) -> bool {
    if t.shape() != t2.shape() || t == t2 {
        return false;
    }
    let left = multiset_difference(t, t2);
    let right = multiset_difference(t2, t);
    let max_len = t.rows().first().map_or(0, |r| r.len);
    adjacency_patterns()
        .iter()
        .filter(|p| p.pair == pair)
        .flat_map(|p| p.instances(max_len))
        .any(|inst| inst.from == left && inst.to == right && !has_rows_between(t, inst.span))
}
