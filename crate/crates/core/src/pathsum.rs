//! Labelled lattice paths whose label sums reproduce `Δ^L`.
//!
//! Vector paths move a `d`-tuple of indices from `(1, ..., d)` at level
//! `m` down to the target tuple at level 0. Spin paths grow a tuple of
//! positions in `[1, r]` from the empty tuple to `(1, ..., m')`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::laurent::{y_monomial, LaurentPoly, Monomial};
use crate::repb::u_target;
use crate::rootdata::{JIndex, MinorSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("vertices are not connected")]
    NotConnected,
    #[error("spec not supported here: {0}")]
    Unsupported(String),
}

/// A vertex `vt(level; tuple)` of the vector path graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecVertex {
    pub level: u32,
    pub tuple: Vec<JIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecPath {
    pub r: u32,
    /// Tuples from level `m` (index 0) down to level 0.
    pub tuples: Vec<Vec<JIndex>>,
    pub edge_labels: Vec<LaurentPoly>,
    pub label: LaurentPoly,
}

/// Successor candidates for a single slot.
fn slot_moves(r: u32, a: JIndex) -> Vec<JIndex> {
    match a {
        JIndex::Plain(l) if l < r => vec![JIndex::Plain(l), JIndex::Plain(l + 1)],
        _ => JIndex::all(r).into_iter().filter(|&b| b >= a).collect(),
    }
}

/// Whether `upper` (one level up) may be followed by `lower`.
pub fn vector_connected(r: u32, upper: &[JIndex], lower: &[JIndex]) -> bool {
    if upper.len() != lower.len() || lower.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let d = upper.len();
    for z in 0..d {
        let (a, b) = (upper[z], lower[z]);
        if !slot_moves(r, a).contains(&b) {
            return false;
        }
        if !b.is_plain() && z + 1 < d {
            let next = upper[z + 1];
            if b > next || (b == next && b != JIndex::Zero) {
                return false;
            }
        }
    }
    true
}

/// All lower neighbours of `upper`, in increasing lexicographic order.
pub fn vector_successors(r: u32, upper: &[JIndex]) -> Vec<Vec<JIndex>> {
    let mut out: Vec<Vec<JIndex>> = vec![Vec::new()];
    for &a in upper {
        let mut next = Vec::new();
        for prefix in &out {
            for b in slot_moves(r, a) {
                if prefix.last().is_some_and(|&p| p >= b) {
                    continue;
                }
                let mut t = prefix.clone();
                t.push(b);
                next.push(t);
            }
        }
        out = next;
    }
    out.retain(|t| vector_connected(r, upper, t));
    out
}

fn slot_label(r: u32, l: u32, a: JIndex, b: JIndex) -> (i64, Monomial) {
    let y = |j: u32, e: i32| y_monomial(r, l, j, e);
    match (a, b) {
        (JIndex::Plain(i), JIndex::Plain(j)) if i < r && j == i => (1, y(i - 1, 1).mul(&y(i, -1))),
        (JIndex::Plain(i), JIndex::Plain(j)) if i < r && j == i + 1 => (1, Monomial::one()),
        (JIndex::Plain(_), JIndex::Plain(_)) => (1, y(r - 1, 1).mul(&y(r, -2))),
        (JIndex::Plain(_), JIndex::Zero) => (1, y(r, -1)),
        (JIndex::Plain(_), JIndex::Bar(j)) => (1, y(j - 1, -1)),
        (JIndex::Zero, JIndex::Zero) => (1, Monomial::one()),
        (JIndex::Zero, JIndex::Bar(j)) => (2, y(r, 1).mul(&y(j - 1, -1))),
        (JIndex::Bar(i), JIndex::Bar(j)) if i == r => (1, y(r, 2).mul(&y(j - 1, -1))),
        (JIndex::Bar(i), JIndex::Bar(j)) => (1, y(i, 1).mul(&y(j - 1, -1))),
        _ => unreachable!("slot move {a} -> {b} is not allowed"),
    }
}

fn vector_edge_parts(r: u32, level: u32, upper: &[JIndex], lower: &[JIndex]) -> (BigRational, Monomial) {
    let mut coeff: i64 = 1;
    let mut mono = Monomial::one();
    for (&a, &b) in upper.iter().zip(lower) {
        let (c, m) = slot_label(r, level, a, b);
        coeff *= c;
        mono = mono.mul(&m);
    }
    let half = (0..lower.len().saturating_sub(1)).any(|z| lower[z] == JIndex::Zero && upper[z + 1] == JIndex::Zero);
    let c = BigRational::new(BigInt::from(coeff), BigInt::from(if half { 2 } else { 1 }));
    (c, mono)
}

/// Label of the edge `vt(level; upper) -> vt(level-1; lower)`, which uses
/// the variables `Y[level, ·]`.
pub fn vector_edge_label(r: u32, level: u32, upper: &[JIndex], lower: &[JIndex]) -> Result<LaurentPoly, PathError> {
    if level == 0 || !vector_connected(r, upper, lower) {
        return Err(PathError::NotConnected);
    }
    let (c, m) = vector_edge_parts(r, level, upper, lower);
    Ok(LaurentPoly::term(c, m))
}

fn check_vector_spec(spec: &MinorSpec) -> Result<MinorSpec, PathError> {
    if spec.k < 1 || spec.is_spin() {
        return Err(PathError::Unsupported(format!("{spec}: vector paths need k >= 1 and d < r")));
    }
    Ok(spec.truncated())
}

/// Memoized reachability of the target from each vertex.
struct Reach<'a> {
    r: u32,
    target: &'a [JIndex],
    memo: HashMap<(u32, Vec<JIndex>), bool>,
}

impl Reach<'_> {
    fn ok(&mut self, level: u32, t: &[JIndex]) -> bool {
        if level == 0 {
            return t == self.target;
        }
        if let Some(&v) = self.memo.get(&(level, t.to_vec())) {
            return v;
        }
        let v = vector_successors(self.r, t).iter().any(|s| self.ok(level - 1, s));
        self.memo.insert((level, t.to_vec()), v);
        v
    }
}

/// All paths of the vector graph for `spec` (after cutting the word at
/// the last occurrence of the letter `d`), in lexicographic order.
pub fn enumerate_vector_paths(spec: &MinorSpec) -> Result<Vec<VecPath>, PathError> {
    let spec = check_vector_spec(spec)?;
    let (r, m, d) = (spec.r(), spec.m(), spec.d());
    let target = u_target(&spec);
    let start: Vec<JIndex> = (1..=d).map(JIndex::Plain).collect();
    let mut reach = Reach { r, target: &target, memo: HashMap::new() };
    let mut out = Vec::new();
    let mut stack = vec![start.clone()];
    fn walk(
        reach: &mut Reach,
        level: u32,
        stack: &mut Vec<Vec<JIndex>>,
        out: &mut Vec<VecPath>,
        r: u32,
        m: u32,
    ) {
        if level == 0 {
            let edge_labels: Vec<LaurentPoly> = stack
                .windows(2)
                .enumerate()
                .map(|(s, w)| vector_edge_label(r, m - s as u32, &w[0], &w[1]).expect("connected"))
                .collect();
            let label = edge_labels.iter().cloned().product();
            out.push(VecPath { r, tuples: stack.clone(), edge_labels, label });
            return;
        }
        let top = stack.last().unwrap().clone();
        for s in vector_successors(r, &top) {
            if reach.ok(level - 1, &s) {
                stack.push(s);
                walk(reach, level - 1, stack, out, r, m);
                stack.pop();
            }
        }
    }
    if reach.ok(m, &start) {
        walk(&mut reach, m, &mut stack, &mut out, r, m);
    }
    Ok(out)
}

/// `Σ Q(p)` over the vector paths, folded level by level without
/// materializing the paths.
pub fn vector_path_sum(spec: &MinorSpec) -> Result<LaurentPoly, PathError> {
    let spec = check_vector_spec(spec)?;
    let (r, m, d) = (spec.r(), spec.m(), spec.d());
    let target = u_target(&spec);
    let start: Vec<JIndex> = (1..=d).map(JIndex::Plain).collect();
    let mut memo: HashMap<(u32, Vec<JIndex>), LaurentPoly> = HashMap::new();
    fn sum_from(
        r: u32,
        level: u32,
        t: &[JIndex],
        target: &[JIndex],
        memo: &mut HashMap<(u32, Vec<JIndex>), LaurentPoly>,
    ) -> LaurentPoly {
        if level == 0 {
            return if t == target { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        if let Some(v) = memo.get(&(level, t.to_vec())) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        for s in vector_successors(r, t) {
            let below = sum_from(r, level - 1, &s, target, memo);
            if below.is_zero() {
                continue;
            }
            let (c, mono) = vector_edge_parts(r, level, t, &s);
            acc.add_assign_ref(&below.mul_monomial(&mono).scale(&c));
        }
        memo.insert((level, t.to_vec()), acc.clone());
        acc
    }
    Ok(sum_from(r, m, &start, &target, &mut memo))
}

/// Number of vector paths, by dynamic programming.
pub fn count_vector_paths(spec: &MinorSpec) -> Result<u64, PathError> {
    let spec = check_vector_spec(spec)?;
    let (r, m, d) = (spec.r(), spec.m(), spec.d());
    let target = u_target(&spec);
    let mut layer: HashMap<Vec<JIndex>, u64> = HashMap::from([((1..=d).map(JIndex::Plain).collect(), 1)]);
    for _ in 0..m {
        let mut next: HashMap<Vec<JIndex>, u64> = HashMap::new();
        for (t, c) in &layer {
            for s in vector_successors(r, t) {
                *next.entry(s).or_default() += c;
            }
        }
        layer = next;
    }
    Ok(layer.get(&target).copied().unwrap_or(0))
}

/// How the spin edge label treats an upper tuple ending in `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpinLabelRule {
    /// No trailing `1/Y[ℓ,r]` when the tuple keeps its length and ends in `r`.
    #[default]
    Corrected,
    /// Always attach `1/Y[ℓ,r]` when the tuple keeps its length.
    AlwaysTrailing,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinVertex {
    pub level: u32,
    pub tuple: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinPath {
    /// Tuples from level `m` (index 0, empty) down to level 0.
    pub tuples: Vec<Vec<u32>>,
    pub edge_labels: Vec<LaurentPoly>,
    pub label: LaurentPoly,
}

pub fn spin_connected(r: u32, upper: &[u32], lower: &[u32]) -> bool {
    let (t, t2) = (upper.len(), lower.len());
    if !(t2 == t || t2 == t + 1) {
        return false;
    }
    if t2 == t + 1 && upper.last() == Some(&r) {
        return false;
    }
    if lower.iter().any(|&x| x < 1 || x > r) {
        return false;
    }
    for i in 0..t {
        if lower[i] > upper[i] {
            return false;
        }
        if i + 1 < t2 && upper[i] >= lower[i + 1] {
            return false;
        }
    }
    true
}

pub fn spin_successors(r: u32, upper: &[u32]) -> Vec<Vec<u32>> {
    let t = upper.len();
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 0..t {
        let lo = if i == 0 { 1 } else { upper[i - 1] + 1 };
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=upper[i] {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    let mut grown = Vec::new();
    if upper.last() != Some(&r) {
        let lo = upper.last().map_or(1, |&x| x + 1);
        for p in &out {
            for v in lo..=r {
                let mut q = p.clone();
                q.push(v);
                grown.push(q);
            }
        }
    }
    out.extend(grown);
    out.sort();
    out
}

fn spin_edge_mono(r: u32, level: u32, upper: &[u32], lower: &[u32], rule: SpinLabelRule) -> Monomial {
    let y = |j: u32, e: i32| y_monomial(r, level, j, e);
    let mut mono = Monomial::one();
    for (&i, &j) in upper.iter().zip(lower) {
        mono = mono.mul(&y(i, 1)).mul(&y(j - 1, -1));
    }
    if lower.len() == upper.len() + 1 {
        mono = mono.mul(&y(lower[upper.len()] - 1, -1));
    } else if rule == SpinLabelRule::AlwaysTrailing || upper.last() != Some(&r) {
        mono = mono.mul(&y(r, -1));
    }
    mono
}

/// Label of the spin edge `vt(level; upper) -> vt(level-1; lower)`.
pub fn spin_edge_label(r: u32, level: u32, upper: &[u32], lower: &[u32]) -> Result<LaurentPoly, PathError> {
    spin_edge_label_with(r, level, upper, lower, SpinLabelRule::Corrected)
}

pub fn spin_edge_label_with(
    r: u32,
    level: u32,
    upper: &[u32],
    lower: &[u32],
    rule: SpinLabelRule,
) -> Result<LaurentPoly, PathError> {
    if level == 0 || !spin_connected(r, upper, lower) {
        return Err(PathError::NotConnected);
    }
    Ok(LaurentPoly::from_monomial(spin_edge_mono(r, level, upper, lower, rule)))
}

fn check_spin_spec(spec: &MinorSpec) -> Result<MinorSpec, PathError> {
    if spec.k < 1 || !spec.is_spin() {
        return Err(PathError::Unsupported(format!("{spec}: spin paths need k >= 1 and d = r")));
    }
    Ok(spec.truncated())
}

pub fn enumerate_spin_paths(spec: &MinorSpec) -> Result<Vec<SpinPath>, PathError> {
    enumerate_spin_paths_with(spec, SpinLabelRule::Corrected)
}

pub fn enumerate_spin_paths_with(spec: &MinorSpec, rule: SpinLabelRule) -> Result<Vec<SpinPath>, PathError> {
    let spec = check_spin_spec(spec)?;
    let (r, m, mp) = (spec.r(), spec.m(), spec.m_prime());
    let target: Vec<u32> = (1..=mp).collect();
    let mut out = Vec::new();
    fn walk(
        r: u32,
        m: u32,
        level: u32,
        target: &[u32],
        stack: &mut Vec<Vec<u32>>,
        out: &mut Vec<SpinPath>,
        rule: SpinLabelRule,
    ) {
        let top = stack.last().unwrap().clone();
        // each remaining step adds at most one entry and never removes one
        if top.len() > target.len() || top.len() + (level as usize) < target.len() {
            return;
        }
        if level == 0 {
            if top == target {
                let edge_labels: Vec<LaurentPoly> = stack
                    .windows(2)
                    .enumerate()
                    .map(|(s, w)| spin_edge_label_with(r, m - s as u32, &w[0], &w[1], rule).expect("connected"))
                    .collect();
                let label = edge_labels.iter().cloned().product();
                out.push(SpinPath { tuples: stack.clone(), edge_labels, label });
            }
            return;
        }
        for s in spin_successors(r, &top) {
            stack.push(s);
            walk(r, m, level - 1, target, stack, out, rule);
            stack.pop();
        }
    }
    let mut stack = vec![Vec::new()];
    walk(r, m, m, &target, &mut stack, &mut out, rule);
    Ok(out)
}

pub fn spin_path_sum(spec: &MinorSpec) -> Result<LaurentPoly, PathError> {
    spin_path_sum_with(spec, SpinLabelRule::Corrected)
}

pub fn spin_path_sum_with(spec: &MinorSpec, rule: SpinLabelRule) -> Result<LaurentPoly, PathError> {
    let spec = check_spin_spec(spec)?;
    let (r, m, mp) = (spec.r(), spec.m(), spec.m_prime());
    let target: Vec<u32> = (1..=mp).collect();
    let mut layer: HashMap<Vec<u32>, LaurentPoly> = HashMap::from([(Vec::new(), LaurentPoly::one())]);
    for level in (1..=m).rev() {
        let mut next: HashMap<Vec<u32>, LaurentPoly> = HashMap::new();
        for (t, c) in &layer {
            for s in spin_successors(r, t) {
                if s.len() > target.len() || s.len() + ((level - 1) as usize) < target.len() {
                    continue;
                }
                let mono = spin_edge_mono(r, level, t, &s, rule);
                next.entry(s).or_default().add_assign_ref(&c.mul_monomial(&mono));
            }
        }
        layer = next;
    }
    Ok(layer.remove(&target).unwrap_or_default())
}

/// A path that can be drawn: vertex names per level and edge labels.
pub trait DrawablePath {
    /// `(sort key, display name)` of each vertex from the top level down.
    fn vertices(&self) -> Vec<(Vec<usize>, String)>;
    fn edges(&self) -> &[LaurentPoly];
    fn top_level(&self) -> u32;
}

fn tuple_name<T: std::fmt::Display>(t: &[T], level: u32) -> String {
    let inner: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})@{}", inner.join(","), level)
}

impl DrawablePath for VecPath {
    fn vertices(&self) -> Vec<(Vec<usize>, String)> {
        let m = self.top_level();
        self.tuples
            .iter()
            .enumerate()
            .map(|(s, t)| (t.iter().map(|j| j.rank(self.r)).collect(), tuple_name(t, m - s as u32)))
            .collect()
    }

    fn edges(&self) -> &[LaurentPoly] {
        &self.edge_labels
    }

    fn top_level(&self) -> u32 {
        (self.tuples.len() - 1) as u32
    }
}

impl DrawablePath for SpinPath {
    fn vertices(&self) -> Vec<(Vec<usize>, String)> {
        let m = self.top_level();
        self.tuples
            .iter()
            .enumerate()
            .map(|(s, t)| (t.iter().map(|&x| x as usize).collect(), tuple_name(t, m - s as u32)))
            .collect()
    }

    fn edges(&self) -> &[LaurentPoly] {
        &self.edge_labels
    }

    fn top_level(&self) -> u32 {
        (self.tuples.len() - 1) as u32
    }
}

/// Renders the union of the given paths as a DOT digraph. Vertices and
/// edges are sorted, so the output is byte-stable.
pub fn export_dot<P: DrawablePath>(paths: &[P]) -> String {
    type Key = (Reverse<u32>, Vec<usize>, String);
    let mut verts: BTreeSet<Key> = BTreeSet::new();
    let mut edges: BTreeSet<(Key, Key, String)> = BTreeSet::new();
    for p in paths {
        let m = p.top_level();
        let vs: Vec<Key> = p
            .vertices()
            .into_iter()
            .enumerate()
            .map(|(s, (k, name))| (Reverse(m - s as u32), k, name))
            .collect();
        for (s, lab) in p.edges().iter().enumerate() {
            edges.insert((vs[s].clone(), vs[s + 1].clone(), lab.to_string()));
        }
        verts.extend(vs);
    }
    let mut out = String::from("digraph paths {\n  rankdir=TB;\n");
    for (_, _, name) in &verts {
        writeln!(out, "  \"{name}\";").unwrap();
    }
    for (a, b, lab) in &edges {
        writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", a.2, b.2, lab).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Number of distinct vertices and edges in a DOT rendering.
pub fn dot_counts(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    let verts = dot.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
    (verts, edges)
}
