//! The exchange matrix of a word, matrix mutation, and exchange relations
//! on the seed of minors `Δ^G(k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::repb::minor_g;
use crate::rootdata::{CartanB, MinorSpec, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("{0} is not a mutable direction")]
    BadDirection(i64),
    #[error("exchange relation did not divide: {0}")]
    DivisionFailure(String),
}

/// Labels `-1..=-r` followed by `1..=n`.
pub fn all_labels(word: &Word) -> Vec<i64> {
    word.all_positions()
}

/// `k^+`, with `n + 1` standing in when there is no later occurrence.
pub fn k_plus(word: &Word, k: i64) -> i64 {
    word.next_occurrence(k).map_or(word.n as i64 + 1, |l| l as i64)
}

/// Positions `k >= 1` whose letter occurs again later.
pub fn e_set(word: &Word) -> Vec<i64> {
    (1..=word.n as i64).filter(|&k| word.next_occurrence(k).is_some()).collect()
}

/// Order on labels: negatives first.
fn before(x: i64, y: i64) -> bool {
    match (x < 0, y < 0) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => -x < -y,
        (false, false) => x < y,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arrow {
    /// `x -> y` for the earlier label `x`.
    Forward,
    /// `y -> x`.
    Backward,
}

/// The arrow between `x` and `y` where `x` comes first and `y >= 1`.
fn arrow(word: &Word, cartan: &CartanB, x: i64, y: i64) -> Option<Arrow> {
    if y < 1 {
        return None;
    }
    let (xp, yp) = (k_plus(word, x), k_plus(word, y));
    if y == xp {
        Some(Arrow::Forward)
    } else if y < xp && xp < yp && cartan.entry(word.letter(x), word.letter(y)) < 0 {
        Some(Arrow::Backward)
    } else {
        None
    }
}

/// An integer matrix with labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn row_index(&self, label: i64) -> Option<usize> {
        self.rows.iter().position(|&x| x == label)
    }

    pub fn col_index(&self, label: i64) -> Option<usize> {
        self.cols.iter().position(|&x| x == label)
    }

    pub fn get(&self, row: i64, col: i64) -> i64 {
        match (self.row_index(row), self.col_index(col)) {
            (Some(i), Some(j)) => self.entries[i][j],
            _ => 0,
        }
    }

    /// The square block on the mutable labels.
    pub fn principal_part(&self) -> Vec<Vec<i64>> {
        self.cols
            .iter()
            .map(|&k| {
                let i = self.row_index(k).expect("columns are rows");
                self.entries[i].clone()
            })
            .collect()
    }

    pub fn frozen(&self) -> Vec<i64> {
        self.rows.iter().copied().filter(|x| !self.cols.contains(x)).collect()
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = 4;
        write!(f, "{:>w$}", "")?;
        for c in &self.cols {
            write!(f, "{c:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in self.rows.iter().zip(&self.entries) {
            write!(f, "{label:>w$}")?;
            for v in row {
                write!(f, "{v:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The matrix `B̃` of the word: rows `[-1,-r] ∪ [1,n]`, columns `e(i)`.
pub fn build_bmatrix(word: &Word) -> ExchangeMatrix {
    let cartan = CartanB { r: word.r };
    let rows = all_labels(word);
    let cols = e_set(word);
    let entries = rows
        .iter()
        .map(|&k| {
            cols.iter()
                .map(|&l| {
                    if k == l {
                        return 0;
                    }
                    // orient as "k -> l" or "l -> k"
                    let k_to_l = if before(k, l) {
                        arrow(word, &cartan, k, l).map(|a| a == Arrow::Forward)
                    } else {
                        arrow(word, &cartan, l, k).map(|a| a == Arrow::Backward)
                    };
                    let (ik, il) = (word.letter(k), word.letter(l));
                    let a = cartan.entry(ik, il);
                    match k_to_l {
                        None => 0,
                        Some(true) if ik == il => 1,
                        Some(true) => -a,
                        Some(false) if ik == il => -1,
                        Some(false) => a,
                    }
                })
                .collect()
        })
        .collect();
    ExchangeMatrix { rows, cols, entries }
}

/// Matrix mutation in direction `k`.
pub fn mutate_matrix(b: &ExchangeMatrix, k: i64) -> Result<ExchangeMatrix, ClusterError> {
    let kc = b.col_index(k).ok_or(ClusterError::BadDirection(k))?;
    let kr = b.row_index(k).ok_or(ClusterError::BadDirection(k))?;
    let mut out = b.clone();
    for i in 0..b.rows.len() {
        for j in 0..b.cols.len() {
            out.entries[i][j] = if i == kr || j == kc {
                -b.entries[i][j]
            } else {
                let (bik, bkj) = (b.entries[i][kc], b.entries[kr][j]);
                b.entries[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
        }
    }
    Ok(out)
}

/// Smallest positive integer `D` with `DB` skew-symmetric, or `None`.
pub fn find_symmetrizer(b: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = b.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].expect("visited");
            for j in 0..n {
                let (bij, bji) = (b[i][j], b[j][i]);
                if i == j {
                    if bij != 0 {
                        return None;
                    }
                    continue;
                }
                if bij == 0 && bji == 0 {
                    continue;
                }
                // d_i b_ij = -d_j b_ji needs opposite nonzero signs
                if bij == 0 || bji == 0 || bij.signum() == bji.signum() {
                    return None;
                }
                let dj = di * Ratio::new(bij, -bji);
                match d[j] {
                    Some(old) if old != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &i| acc.lcm(d[i].expect("set").denom()));
        let scaled: Vec<i64> = component.iter().map(|&i| (d[i].expect("set") * lcm).to_integer()).collect();
        let g = scaled.iter().fold(0i64, |acc, &v| acc.gcd(&v));
        for (&i, v) in component.iter().zip(scaled) {
            d[i] = Some(Ratio::from_integer(v / g));
        }
    }
    d.into_iter().map(|x| x.map(|r| r.to_integer())).collect()
}

/// Whether `DB` is skew-symmetric.
pub fn is_symmetrizer(b: &[Vec<i64>], d: &[i64]) -> bool {
    (0..b.len()).all(|i| (0..b.len()).all(|j| d[i] * b[i][j] == -d[j] * b[j][i]))
}

/// A seed: exchange matrix plus one cluster variable per row label.
#[derive(Debug, Clone, PartialEq)]
pub struct Seed {
    pub exchange: ExchangeMatrix,
    pub cluster: BTreeMap<i64, LaurentPoly>,
}

/// The seed of minors `Δ^G(k)` for all labels, in `T` and `Y` variables.
pub fn initial_seed(word: &Word) -> Seed {
    let exchange = build_bmatrix(word);
    let cluster = exchange
        .rows
        .iter()
        .map(|&k| {
            let spec = MinorSpec::new(*word, k).expect("row labels are valid positions");
            (k, minor_g(&spec))
        })
        .collect();
    Seed { exchange, cluster }
}

/// Replaces `x_k` through the exchange relation and mutates the matrix.
pub fn exchange_step(seed: &Seed, k: i64) -> Result<Seed, ClusterError> {
    let b = &seed.exchange;
    let kc = b.col_index(k).ok_or(ClusterError::BadDirection(k))?;
    let mut plus = LaurentPoly::one();
    let mut minus = LaurentPoly::one();
    for (i, &label) in b.rows.iter().enumerate() {
        let e = b.entries[i][kc];
        let x = &seed.cluster[&label];
        if e > 0 {
            plus = &plus * &x.pow(e as u32);
        } else if e < 0 {
            minus = &minus * &x.pow((-e) as u32);
        }
    }
    let new = (plus + minus).exact_div(&seed.cluster[&k]).map_err(|e| {
        ClusterError::DivisionFailure(format!("direction {k}: {e}"))
    })?;
    let mut cluster = seed.cluster.clone();
    cluster.insert(k, new);
    Ok(Seed { exchange: mutate_matrix(b, k)?, cluster })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_set_examples() {
        assert_eq!(e_set(&Word::new(2, 4).unwrap()), vec![1, 2]);
        assert!(e_set(&Word::new(3, 3).unwrap()).is_empty());
        assert_eq!(e_set(&Word::new(3, 8).unwrap()), vec![1, 2, 3, 4, 5]);
        assert_eq!(k_plus(&Word::new(3, 5).unwrap(), 3), 6);
        assert_eq!(k_plus(&Word::new(3, 5).unwrap(), -2), 2);
    }

    #[test]
    fn rank2_matrix() {
        let b = build_bmatrix(&Word::new(2, 4).unwrap());
        assert_eq!(b.principal_part(), vec![vec![0, -1], vec![2, 0]]);
        assert_eq!(find_symmetrizer(&b.principal_part()), Some(vec![2, 1]));
        let m = mutate_matrix(&b, 1).unwrap();
        assert_eq!(mutate_matrix(&m, 1).unwrap(), b);
        assert!(find_symmetrizer(&m.principal_part()).is_some());
        assert_eq!(mutate_matrix(&b, 3), Err(ClusterError::BadDirection(3)));
    }

    #[test]
    fn symmetrizer_edge_cases() {
        assert_eq!(find_symmetrizer(&[vec![0, 1], vec![-1, 0]]), Some(vec![1, 1]));
        assert_eq!(find_symmetrizer(&[vec![0, 1], vec![1, 0]]), None);
        assert_eq!(find_symmetrizer(&[]), Some(vec![]));
    }

    #[test]
    fn first_exchange_is_laurent() {
        let word = Word::new(2, 3).unwrap();
        let seed = initial_seed(&word);
        let next = exchange_step(&seed, 1).unwrap();
        assert_ne!(next.cluster[&1], seed.cluster[&1]);
        let back = exchange_step(&next, 1).unwrap();
        assert_eq!(back, seed);
    }
}
