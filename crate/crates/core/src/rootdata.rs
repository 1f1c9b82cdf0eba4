//! Root data of type B_r, the ordered index set of the vector
//! representation, and the fixed word family `(1, 2, ..., r)` repeated.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("bad shape: {0}")]
    BadShape(String),
}

/// Cartan matrix of type B_r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanB {
    pub r: u32,
}

impl CartanB {
    pub fn new(r: u32) -> Result<CartanB, SpecError> {
        if r < 2 {
            return Err(SpecError::BadShape(format!("rank {r} < 2")));
        }
        Ok(CartanB { r })
    }

    /// Entry `a_{ij}` for `i, j` in `1..=r`.
    pub fn entry(&self, i: u32, j: u32) -> i64 {
        let r = self.r;
        if i == j {
            2
        } else if i == r && j == r - 1 {
            -2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.r).map(|i| (1..=self.r).map(|j| self.entry(i, j)).collect()).collect()
    }
}

/// A weight in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(r: u32) -> Weight {
        Weight { coords: vec![0; r as usize] }
    }

    /// The fundamental weight `Λ_i`; `Λ_0` is zero.
    pub fn fundamental(r: u32, i: u32) -> Weight {
        let mut w = Weight::zero(r);
        if i >= 1 {
            w.coords[(i - 1) as usize] = 1;
        }
        w
    }

    /// The simple root `α_j`, i.e. column `j` of the Cartan matrix.
    pub fn simple_root(r: u32, j: u32) -> Weight {
        let c = CartanB { r };
        Weight { coords: (1..=r).map(|i| c.entry(i, j)).collect() }
    }

    /// Pairing with the coroot `h_i`.
    pub fn at(&self, i: u32) -> i64 {
        self.coords[(i - 1) as usize]
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn rank(&self) -> u32 {
        self.coords.len() as u32
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("L{}", i + 1),
                -1 => format!("-L{}", i + 1),
                _ => format!("{c}L{}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Apply `s_i λ = λ - λ(h_i) α_i`.
pub fn reflect(i: u32, lambda: &Weight) -> Weight {
    let r = lambda.rank();
    lambda - &Weight::simple_root(r, i).scale(lambda.at(i))
}

/// Apply a product of simple reflections, rightmost letter first.
pub fn weyl_apply(word: &[u32], lambda: &Weight) -> Weight {
    word.iter().rev().fold(lambda.clone(), |acc, &i| reflect(i, &acc))
}

/// An element of the index set `1 < ... < r < 0 < r̄ < ... < 1̄` of the
/// basis of the vector representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JIndex {
    Plain(u32),
    Zero,
    Bar(u32),
}

impl JIndex {
    /// Position in the total order, from 0 for `1` up to `2r` for `1̄`.
    pub fn rank(self, r: u32) -> usize {
        match self {
            JIndex::Plain(l) => (l - 1) as usize,
            JIndex::Zero => r as usize,
            JIndex::Bar(l) => (2 * r + 1 - l) as usize,
        }
    }

    pub fn from_rank(r: u32, k: usize) -> JIndex {
        let k = k as u32;
        if k < r {
            JIndex::Plain(k + 1)
        } else if k == r {
            JIndex::Zero
        } else {
            JIndex::Bar(2 * r + 1 - k)
        }
    }

    /// All indices in increasing order.
    pub fn all(r: u32) -> Vec<JIndex> {
        (0..=(2 * r) as usize).map(|k| JIndex::from_rank(r, k)).collect()
    }

    pub fn abs(self) -> u32 {
        match self {
            JIndex::Plain(l) | JIndex::Bar(l) => l,
            JIndex::Zero => 0,
        }
    }

    pub fn is_plain(self) -> bool {
        matches!(self, JIndex::Plain(_))
    }

    /// Weight of `v_j`.
    pub fn weight(self, r: u32) -> Weight {
        let lam = |i: u32| Weight::fundamental(r, i);
        match self {
            JIndex::Plain(i) if i == r => &lam(r).scale(2) - &lam(r - 1),
            JIndex::Plain(i) => &lam(i) - &lam(i - 1),
            JIndex::Zero => Weight::zero(r),
            JIndex::Bar(i) if i == r => &lam(r - 1) - &lam(r).scale(2),
            JIndex::Bar(i) => &lam(i - 1) - &lam(i),
        }
    }
}

impl Ord for JIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(j: &JIndex) -> (u8, i64) {
            match *j {
                JIndex::Plain(l) => (0, l as i64),
                JIndex::Zero => (1, 0),
                JIndex::Bar(l) => (2, -(l as i64)),
            }
        }
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for JIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JIndex::Plain(l) => write!(f, "{l}"),
            JIndex::Zero => write!(f, "0"),
            JIndex::Bar(l) => write!(f, "~{l}"),
        }
    }
}

impl FromStr for JIndex {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SpecError::BadShape(format!("bad index `{s}`"));
        if s == "0" {
            return Ok(JIndex::Zero);
        }
        if let Some(rest) = s.strip_prefix('~') {
            let l: u32 = rest.parse().map_err(|_| bad())?;
            return if l >= 1 { Ok(JIndex::Bar(l)) } else { Err(bad()) };
        }
        let l: u32 = s.parse().map_err(|_| bad())?;
        if l >= 1 {
            Ok(JIndex::Plain(l))
        } else {
            Err(bad())
        }
    }
}

/// The word `(1, ..., r, 1, ..., r, ...)` cut at length `n <= r^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub r: u32,
    pub n: usize,
}

impl Word {
    pub fn new(r: u32, n: usize) -> Result<Word, SpecError> {
        CartanB::new(r)?;
        if n == 0 || n > (r * r) as usize {
            return Err(SpecError::BadShape(format!("word length {n} not in [1, {}]", r * r)));
        }
        Ok(Word { r, n })
    }

    /// Accepts an explicit letter sequence only if it belongs to the family.
    pub fn from_letters(r: u32, letters: &[u32]) -> Result<Word, SpecError> {
        let w = Word::new(r, letters.len())?;
        if letters.iter().enumerate().any(|(p, &l)| l != w.letter(p as i64 + 1)) {
            return Err(SpecError::BadShape(format!(
                "word {letters:?} is not a prefix of (1..{r}) repeated"
            )));
        }
        Ok(w)
    }

    /// Letter `i_k`. Negative positions `-1..=-r` carry letter `|k|`.
    pub fn letter(&self, k: i64) -> u32 {
        if k < 0 {
            (-k) as u32
        } else {
            ((k - 1) as u32 % self.r) + 1
        }
    }

    pub fn letters(&self) -> Vec<u32> {
        (1..=self.n as i64).map(|k| self.letter(k)).collect()
    }

    /// Number of cycles `m`.
    pub fn cycles(&self) -> u32 {
        (self.n as u32).div_ceil(self.r)
    }

    /// Cycle containing position `k >= 1`.
    pub fn cycle_of(&self, k: usize) -> u32 {
        (k as u32).div_ceil(self.r)
    }

    pub fn last_letter(&self) -> u32 {
        self.letter(self.n as i64)
    }

    /// The smallest position `l > k` with the same letter as `k`, if it is
    /// at most `n`. Negative positions come before all positive ones.
    pub fn next_occurrence(&self, k: i64) -> Option<usize> {
        let l = if k < 0 { (-k) as usize } else { k as usize + self.r as usize };
        (l <= self.n).then_some(l)
    }

    /// Positions `[-1, -r]` followed by `[1, n]`.
    pub fn all_positions(&self) -> Vec<i64> {
        (1..=self.r as i64).map(|k| -k).chain(1..=self.n as i64).collect()
    }

    /// Grid variables `(s, j)` attached to the positions, in word order.
    pub fn grid(&self) -> Vec<(u32, u32)> {
        (1..=self.n).map(|p| (self.cycle_of(p), self.letter(p as i64))).collect()
    }
}

/// A validated choice of word and position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorSpec {
    pub word: Word,
    pub k: i64,
}

pub fn make_minor_spec(r: u32, n: usize, k: i64) -> Result<MinorSpec, SpecError> {
    let word = Word::new(r, n)?;
    MinorSpec::new(word, k)
}

impl MinorSpec {
    pub fn new(word: Word, k: i64) -> Result<MinorSpec, SpecError> {
        let ok = if k < 0 { -k <= word.r as i64 } else { k >= 1 && k as usize <= word.n };
        if !ok {
            return Err(SpecError::BadShape(format!(
                "position {k} outside [-1,-{}] and [1,{}]",
                word.r, word.n
            )));
        }
        Ok(MinorSpec { word, k })
    }

    pub fn r(&self) -> u32 {
        self.word.r
    }

    pub fn n(&self) -> usize {
        self.word.n
    }

    pub fn m(&self) -> u32 {
        self.word.cycles()
    }

    /// Cycle of `k`; 0 for negative positions.
    pub fn m_prime(&self) -> u32 {
        if self.k < 0 {
            0
        } else {
            self.word.cycle_of(self.k as usize)
        }
    }

    pub fn d(&self) -> u32 {
        self.word.letter(self.k)
    }

    pub fn i_n(&self) -> u32 {
        self.word.last_letter()
    }

    pub fn is_spin(&self) -> bool {
        self.d() == self.r()
    }

    /// Letters of `u_{<=k}`; empty for negative positions.
    pub fn u_leq_word(&self) -> Vec<u32> {
        if self.k < 0 {
            Vec::new()
        } else {
            (1..=self.k).map(|p| self.word.letter(p)).collect()
        }
    }

    /// The spec over the shortest prefix word ending in the letter `d`
    /// and still containing `k`. Minors do not change under this cut.
    pub fn truncated(&self) -> MinorSpec {
        if self.k < 0 {
            return *self;
        }
        let (r, d) = (self.r() as usize, self.d() as usize);
        let n = self.n();
        let last = d + ((n - d) / r) * r;
        MinorSpec { word: Word { r: self.r(), n: last }, k: self.k }
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} n={} k={}", self.r(), self.n(), self.k)
    }
}

/// `u_{<=k} Λ_d`, the weight of the target vector.
pub fn u_leq_weight(spec: &MinorSpec) -> Weight {
    weyl_apply(&spec.u_leq_word(), &Weight::fundamental(spec.r(), spec.d()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_b2_b3() {
        assert_eq!(CartanB::new(2).unwrap().matrix(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(
            CartanB::new(3).unwrap().matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert!(CartanB::new(1).is_err());
    }

    #[test]
    fn spec_from_example() {
        let s = make_minor_spec(3, 8, 5).unwrap();
        assert_eq!((s.m(), s.m_prime(), s.d()), (3, 2, 2));
        let s = make_minor_spec(2, 1, 1).unwrap();
        assert_eq!((s.m(), s.m_prime(), s.d()), (1, 1, 1));
        let s = make_minor_spec(3, 8, -2).unwrap();
        assert_eq!((s.d(), s.u_leq_word().len()), (2, 0));
        assert!(make_minor_spec(3, 10, 1).is_err());
        assert!(make_minor_spec(3, 8, 9).is_err());
        assert!(make_minor_spec(3, 8, -4).is_err());
        assert!(make_minor_spec(3, 8, 0).is_err());
    }

    #[test]
    fn reflections() {
        let l1 = Weight::fundamental(2, 1);
        assert_eq!(weyl_apply(&[1], &l1).coords, vec![-1, 2]);
        assert_eq!(weyl_apply(&[2], &l1), l1);
        // s2 Λ2 = Λ1 - Λ2, then s1 subtracts α1 = 2Λ1 - 2Λ2
        let l2 = Weight::fundamental(2, 2);
        assert_eq!(weyl_apply(&[1, 2], &l2).coords, vec![-1, 1]);
        for i in 1..=2 {
            assert_eq!(reflect(i, &reflect(i, &l2)), l2);
        }
    }

    #[test]
    fn index_order() {
        let all = JIndex::all(3);
        let shown: Vec<String> = all.iter().map(|j| j.to_string()).collect();
        assert_eq!(shown, ["1", "2", "3", "0", "~3", "~2", "~1"]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (k, j) in all.iter().enumerate() {
            assert_eq!(j.rank(3), k);
            assert_eq!(j.to_string().parse::<JIndex>().unwrap(), *j);
        }
    }

    #[test]
    fn truncation() {
        let s = make_minor_spec(3, 8, 5).unwrap();
        assert_eq!(s.truncated().n(), 8);
        let s = make_minor_spec(3, 9, 5).unwrap();
        assert_eq!(s.truncated().n(), 8);
        let s = make_minor_spec(3, 7, 4).unwrap();
        assert_eq!(s.truncated().n(), 7);
        let s = make_minor_spec(3, 9, 4).unwrap();
        assert_eq!(s.truncated().n(), 7);
    }

    #[test]
    fn word_family_validation() {
        assert!(Word::from_letters(3, &[1, 2, 3, 1]).is_ok());
        assert!(Word::from_letters(3, &[1, 3, 2]).is_err());
        let w = Word::new(2, 4).unwrap();
        assert_eq!(w.next_occurrence(1), Some(3));
        assert_eq!(w.next_occurrence(3), None);
        assert_eq!(w.next_occurrence(-2), Some(2));
    }
}
