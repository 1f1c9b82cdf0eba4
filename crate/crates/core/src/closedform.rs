//! Closed-form sums for `Δ^L`: grids of indices (`d < r`) and spin systems
//! (`d = r`), each term a product of the monomials `B(l, k)`.

use rayon::prelude::*;
use thiserror::Error;

use crate::laurent::{y_monomial, LaurentPoly, Monomial};
use crate::rootdata::{JIndex, MinorSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("spec not supported here: {0}")]
    Unsupported(String),
}

/// Second argument of `B(l, ·)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BArg {
    J(JIndex),
    /// The extra value `r + 1`, with `B(l, r+1) = 1/Y[l,r]`.
    RPlusOne,
}

/// The Laurent monomial `B(l, k)` at rank `r`.
pub fn b_monomial(r: u32, l: u32, k: BArg) -> Monomial {
    let y = |s: u32, j: u32, e: i32| y_monomial(r, s, j, e);
    match k {
        BArg::J(JIndex::Plain(k)) if k < r => y(l, k - 1, 1).mul(&y(l, k, -1)),
        BArg::J(JIndex::Plain(_)) => y(l, r - 1, 1).mul(&y(l, r, -2)),
        BArg::J(JIndex::Zero) => y(l, r, 1).mul(&y(l + 1, r, -1)),
        BArg::J(JIndex::Bar(k)) if k == r => y(l, r, 2).mul(&y(l + 1, r - 1, -1)),
        BArg::J(JIndex::Bar(k)) => y(l, k, 1).mul(&y(l + 1, k - 1, -1)),
        BArg::RPlusOne => y(l, r, -1),
    }
}

/// Which form of the third clause to use when counting factors of 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CVariant {
    /// The clause `k^{(t+1)}_j != 0`. Over-counts when two neighbouring
    /// slots both hold 0 in the last row (e.g. rank 4, n = 15, k = 11).
    Lemma,
    /// The clause `k^{(t)}_j != 0`.
    #[default]
    Theorem,
}

/// A grid `k^{(s)}_i` with `1 <= i <= d` and `1 <= s <= m - m'`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSystem {
    /// `grid[s-1][i-1]`.
    pub grid: Vec<Vec<JIndex>>,
}

impl KSystem {
    pub fn k(&self, s: usize, i: usize) -> JIndex {
        self.grid[s - 1][i - 1]
    }

    pub fn depth(&self) -> usize {
        self.grid.len()
    }
}

fn check_thm1(spec: &MinorSpec) -> Result<MinorSpec, ClosedFormError> {
    if spec.k < 1 || spec.is_spin() {
        return Err(ClosedFormError::Unsupported(format!("{spec}: needs k >= 1 and d < r")));
    }
    Ok(spec.truncated())
}

/// Final value of slot `i` on every path.
fn terminal(spec: &MinorSpec, i: u32) -> JIndex {
    let (r, mp, d) = (spec.r(), spec.m_prime(), spec.d());
    if i + mp <= r {
        JIndex::Plain(mp + i)
    } else {
        JIndex::Bar(d - i + 1)
    }
}

/// The exponent `l^{(s)}_i`.
pub fn l_value(r: u32, s: usize, i: usize, k: JIndex) -> i64 {
    match k {
        JIndex::Plain(v) => v as i64 + s as i64 - i as i64 - 1,
        _ => s as i64 - i as i64 + r as i64,
    }
}

/// All grids satisfying the four conditions, in lexicographic order of
/// their columns.
pub fn enumerate_k_systems(spec: &MinorSpec) -> Result<Vec<KSystem>, ClosedFormError> {
    let spec = check_thm1(spec)?;
    let (r, mp, d) = (spec.r(), spec.m_prime(), spec.d() as usize);
    let depth = (spec.m() - mp) as usize;
    let all = JIndex::all(r);
    let upper: Vec<JIndex> = (1..=d as u32)
        .map(|i| if i + mp <= r { JIndex::Plain(mp + i) } else { JIndex::Bar(1) })
        .collect();
    let mut out = Vec::new();
    let mut grid = vec![vec![JIndex::Plain(1); d]; depth];

    #[allow(clippy::too_many_arguments)]
    fn fill(
        pos: usize,
        depth: usize,
        d: usize,
        all: &[JIndex],
        upper: &[JIndex],
        grid: &mut Vec<Vec<JIndex>>,
        out: &mut Vec<KSystem>,
    ) {
        if pos == depth * d {
            out.push(KSystem { grid: grid.clone() });
            return;
        }
        let (s, i) = (pos / d, pos % d);
        for &v in all {
            if v < JIndex::Plain(i as u32 + 1) || v > upper[i] {
                continue;
            }
            // same column: weakly increasing, equal only at 0
            if i > 0 {
                let prev = grid[s][i - 1];
                if v < prev || (v == prev && v != JIndex::Zero) {
                    continue;
                }
            }
            // same slot: weakly increasing in s
            if s > 0 && v < grid[s - 1][i] {
                continue;
            }
            // previous column, previous slot: strictly smaller
            if s > 0 && i > 0 && grid[s - 1][i - 1] >= v {
                continue;
            }
            grid[s][i] = v;
            fill(pos + 1, depth, d, all, upper, grid, out);
        }
    }
    fill(0, depth, d, &all, &upper, &mut grid, &mut out);
    Ok(out)
}

/// The number of slots `j` contributing a factor 2.
pub fn c_exponent(spec: &MinorSpec, sys: &KSystem, variant: CVariant) -> u32 {
    let spec = spec.truncated();
    let d = spec.d() as usize;
    let depth = sys.depth();
    let at = |t: usize, i: usize| -> JIndex {
        if t <= depth {
            sys.k(t, i)
        } else {
            terminal(&spec, i as u32)
        }
    };
    let mut c = 0;
    for j in 1..d {
        let hit = (1..=depth).any(|t| {
            let third = match variant {
                CVariant::Lemma => at(t + 1, j),
                CVariant::Theorem => at(t, j),
            };
            at(t, j + 1) == JIndex::Zero && at(t + 1, j + 1) != JIndex::Zero && third != JIndex::Zero
        });
        if hit {
            c += 1;
        }
    }
    c
}

/// `2^C ∏ B(m - l^{(s)}_i, k^{(s)}_i)` for one grid.
pub fn thm1_term(spec: &MinorSpec, sys: &KSystem, variant: CVariant) -> LaurentPoly {
    let spec = spec.truncated();
    let (r, m) = (spec.r(), spec.m() as i64);
    let mut mono = Monomial::one();
    for s in 1..=sys.depth() {
        for i in 1..=spec.d() as usize {
            let k = sys.k(s, i);
            let l = m - l_value(r, s, i, k);
            assert!(l >= 1, "cycle index {l} out of range");
            mono = mono.mul(&b_monomial(r, l as u32, BArg::J(k)));
        }
    }
    let c = c_exponent(&spec, sys, variant);
    LaurentPoly::from_monomial(mono).scale(&num_rational::BigRational::from_integer((1i64 << c).into()))
}

pub fn thm1_minor(spec: &MinorSpec) -> Result<LaurentPoly, ClosedFormError> {
    thm1_minor_with(spec, CVariant::default())
}

pub fn thm1_minor_with(spec: &MinorSpec, variant: CVariant) -> Result<LaurentPoly, ClosedFormError> {
    let systems = enumerate_k_systems(spec)?;
    Ok(systems
        .par_iter()
        .map(|sys| thm1_term(spec, sys, variant))
        .reduce(LaurentPoly::zero, |a, b| a + b))
}

/// Rebuilds the vector path attached to a grid: tuples from level `m`
/// down to level 0.
pub fn system_to_path(spec: &MinorSpec, sys: &KSystem) -> Vec<Vec<JIndex>> {
    let spec = spec.truncated();
    let (r, m, d) = (spec.r(), spec.m() as usize, spec.d() as usize);
    let depth = sys.depth();
    let mut rows = vec![vec![JIndex::Plain(1); d]; m + 1];
    for i in 1..=d {
        // barred entries, plus the terminal value when it is barred
        let mut vals: Vec<JIndex> = (1..=depth).map(|s| sys.k(s, i)).collect();
        let fin = terminal(&spec, i as u32);
        if !fin.is_plain() {
            vals.push(fin);
        }
        let ls: Vec<i64> = vals.iter().enumerate().map(|(z, &k)| l_value(r, z + 1, i, k)).collect();
        let delta = vals.iter().filter(|k| k.is_plain()).count();
        let stalls = &ls[..delta];
        let mut a = JIndex::Plain(i as u32);
        rows[0][i - 1] = a;
        for s in 0..m as i64 {
            if let Some(z) = (delta..vals.len()).find(|&z| ls[z] == s + 1) {
                a = vals[z];
            } else if let (JIndex::Plain(v), false) = (a, stalls.contains(&s)) {
                a = JIndex::Plain(v + 1);
            }
            rows[(s + 1) as usize][i - 1] = a;
        }
    }
    rows
}

/// Whenever `k^{(s)}_i` is barred, so is `k^{(s)}_{i+1}` and
/// `l^{(s)}_i = l^{(s)}_{i+1} + 1`.
pub fn barred_l_relation_holds(spec: &MinorSpec, sys: &KSystem) -> bool {
    let r = spec.r();
    let d = spec.d() as usize;
    (1..=sys.depth()).all(|s| {
        (1..d).all(|i| {
            let k = sys.k(s, i);
            if k.is_plain() || k == JIndex::Zero {
                return true;
            }
            let k2 = sys.k(s, i + 1);
            !k2.is_plain() && k2 != JIndex::Zero && l_value(r, s, i, k) == l_value(r, s, i + 1, k2) + 1
        })
    })
}

/// A spin system: creation levels `t_1 > ... > t_{m'}` and the chains
/// `k^{(s)}_i` for `m'-i+1 <= s <= t_i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinSystem {
    pub t: Vec<u32>,
    /// `chains[i-1][s - (m'-i+1)]`.
    pub chains: Vec<Vec<u32>>,
}

impl SpinSystem {
    fn m_prime(&self) -> u32 {
        self.t.len() as u32
    }

    /// `k^{(s)}_i`, equal to `i` below the chain.
    pub fn k(&self, i: u32, s: u32) -> u32 {
        let start = self.m_prime() - i + 1;
        if s < start {
            i
        } else {
            self.chains[(i - 1) as usize][(s - start) as usize]
        }
    }

    /// `t_i` with `t_0 = m + 1` and `t_{m'+1} = 0`.
    pub fn t_at(&self, i: u32, m: u32) -> u32 {
        if i == 0 {
            m + 1
        } else if i as usize > self.t.len() {
            0
        } else {
            self.t[(i - 1) as usize]
        }
    }
}

fn check_thm2(spec: &MinorSpec) -> Result<MinorSpec, ClosedFormError> {
    if spec.k < 1 || !spec.is_spin() {
        return Err(ClosedFormError::Unsupported(format!("{spec}: needs k >= 1 and d = r")));
    }
    Ok(spec.truncated())
}

pub fn enumerate_spin_systems(spec: &MinorSpec) -> Result<Vec<SpinSystem>, ClosedFormError> {
    let spec = check_thm2(spec)?;
    let (r, m, mp) = (spec.r(), spec.m(), spec.m_prime());
    let mut out = Vec::new();

    // choose t_1 > t_2 > ... > t_{m'} >= 1 with t_1 <= m
    fn choose_t(i: u32, mp: u32, hi: u32, t: &mut Vec<u32>, acc: &mut Vec<Vec<u32>>) {
        if i > mp {
            acc.push(t.clone());
            return;
        }
        let lo = mp - i + 1;
        for v in lo..=hi {
            t.push(v);
            choose_t(i + 1, mp, v.saturating_sub(1), t, acc);
            t.pop();
        }
    }
    let mut ts = Vec::new();
    choose_t(1, mp, m, &mut Vec::new(), &mut ts);

    for t in ts {
        let mut sys = SpinSystem { t: t.clone(), chains: vec![Vec::new(); mp as usize] };
        fill_slot(mp, r, &mut sys, &mut out);
    }

    /// Fills the chain of slot `i`, then slot `i - 1`, and so on.
    fn fill_slot(i: u32, r: u32, sys: &mut SpinSystem, out: &mut Vec<SpinSystem>) {
        if i == 0 {
            out.push(sys.clone());
            return;
        }
        let mp = sys.m_prime();
        let start = mp - i + 1;
        let end = sys.t[(i - 1) as usize]; // exclusive
        fill_chain(i, start, end, r, sys, out);
    }

    fn fill_chain(i: u32, s: u32, end: u32, r: u32, sys: &mut SpinSystem, out: &mut Vec<SpinSystem>) {
        if s >= end {
            fill_slot(i - 1, r, sys, out);
            return;
        }
        let mp = sys.m_prime();
        let lo = sys.k(i, s - 1);
        let mut hi = r;
        // slot i+1 is present one level below when s - 1 < t_{i+1}
        if i < mp && s - 1 < sys.t[i as usize] {
            hi = hi.min(sys.k(i + 1, s - 1) - 1);
        }
        for v in lo..=hi {
            sys.chains[(i - 1) as usize].push(v);
            fill_chain(i, s + 1, end, r, sys, out);
            sys.chains[(i - 1) as usize].pop();
        }
    }

    out.sort();
    Ok(out)
}

/// One term of the spin sum.
pub fn thm2_term(spec: &MinorSpec, sys: &SpinSystem) -> LaurentPoly {
    let spec = spec.truncated();
    let (r, m, mp) = (spec.r(), spec.m(), spec.m_prime());
    let mut mono = Monomial::one();
    for i in 1..=mp + 1 {
        let ti = sys.t_at(i, m);
        if i <= mp {
            for s in (mp - i + 1)..ti {
                mono = mono.mul(&b_monomial(r, s, BArg::J(JIndex::Bar(sys.k(i, s)))));
            }
        }
        for s in (ti + 1)..sys.t_at(i - 1, m) {
            mono = mono.mul(&b_monomial(r, s, BArg::RPlusOne));
        }
    }
    LaurentPoly::from_monomial(mono)
}

pub fn thm2_minor(spec: &MinorSpec) -> Result<LaurentPoly, ClosedFormError> {
    let systems = enumerate_spin_systems(spec)?;
    Ok(systems
        .par_iter()
        .map(|sys| thm2_term(spec, sys))
        .reduce(LaurentPoly::zero, |a, b| a + b))
}

/// Closed form for any spec with `k >= 1`.
pub fn closed_minor(spec: &MinorSpec) -> Result<LaurentPoly, ClosedFormError> {
    if spec.is_spin() {
        thm2_minor(spec)
    } else {
        thm1_minor(spec)
    }
}
