//! Exact multivariate Laurent polynomials over the rationals.
//!
//! Variables are the grid coordinates `Y[s,j]` and the torus coordinates
//! `T[j]`. Terms are kept in a sorted map so that printing is stable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A single indeterminate, packed as `kind << 24 | s << 12 | j`.
///
/// The packing makes the derived ordering agree with `(kind, s, j)`, with
/// every `Y` variable sorting before every `T` variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Y,
    T,
}

impl Variable {
    /// The grid variable `Y[s,j]`. Returns `None` for `j == 0`, which by
    /// convention is the constant 1. Callers that know the rank should go
    /// through [`LaurentPoly::y`], which also absorbs `j == r + 1`.
    pub fn y(s: u32, j: u32) -> Option<Variable> {
        if j == 0 {
            return None;
        }
        assert!((1..4096).contains(&s) && j < 4096, "Y index out of range");
        Some(Variable((s << 12) | j))
    }

    /// The torus coordinate `T[j]`.
    pub fn t(j: u32) -> Variable {
        assert!((1..4096).contains(&j), "T index out of range");
        Variable((1 << 24) | j)
    }

    pub fn kind(self) -> VarKind {
        if self.0 >> 24 == 0 {
            VarKind::Y
        } else {
            VarKind::T
        }
    }

    /// Cycle index `s` of a `Y` variable (0 for `T`).
    pub fn cycle(self) -> u32 {
        (self.0 >> 12) & 0xfff
    }

    pub fn index(self) -> u32 {
        self.0 & 0xfff
    }

    /// Key used in the JSON form, e.g. `Y_1_3` or `T_2`.
    pub fn json_key(self) -> String {
        match self.kind() {
            VarKind::Y => format!("Y_{}_{}", self.cycle(), self.index()),
            VarKind::T => format!("T_{}", self.index()),
        }
    }

    pub fn from_json_key(key: &str) -> Option<Variable> {
        let parts: Vec<&str> = key.split('_').collect();
        match parts.as_slice() {
            ["Y", s, j] => Variable::y(s.parse().ok()?, j.parse().ok()?),
            ["T", j] => {
                let j: u32 = j.parse().ok()?;
                (j >= 1).then(|| Variable::t(j))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            VarKind::Y => write!(f, "Y[{},{}]", self.cycle(), self.index()),
            VarKind::T => write!(f, "T[{}]", self.index()),
        }
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Variable {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError(format!("bad variable `{s}`"));
        let inner = |prefix: char| {
            s.strip_prefix(prefix)
                .and_then(|t| t.strip_prefix('['))
                .and_then(|t| t.strip_suffix(']'))
        };
        if let Some(body) = inner('Y') {
            let (a, b) = body.split_once(',').ok_or_else(bad)?;
            let sv: u32 = a.trim().parse().map_err(|_| bad())?;
            let jv: u32 = b.trim().parse().map_err(|_| bad())?;
            if sv == 0 {
                return Err(bad());
            }
            Variable::y(sv, jv).ok_or_else(bad)
        } else if let Some(body) = inner('T') {
            let jv: u32 = body.trim().parse().map_err(|_| bad())?;
            if jv == 0 {
                return Err(bad());
            }
            Ok(Variable::t(jv))
        } else {
            Err(bad())
        }
    }
}

/// Exponent vector of a term: sorted by variable, no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs,
    /// merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Variable, i32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Variable, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[(Variable, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Component-wise minimum with `other`, treating absent variables as 0.
    fn min_with(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.0
                .iter()
                .chain(other.0.iter())
                .map(|&(v, _)| (v, self.exponent(v).min(other.exponent(v))))
                .collect::<BTreeMap<_, _>>(),
        )
    }

    /// True if `self / other` has no negative exponents.
    fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
            && self.0.iter().all(|&(v, e)| e >= 0 || other.exponent(v) <= e)
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then lexicographic on exponents
    /// with the smallest variable most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", LaurentPoly::from_monomial(self.clone()))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("division failure: {0}")]
pub struct DivisionFailure(pub String);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(Variable),
    #[error("variable {0} substituted by zero")]
    ZeroSubstitution(Variable),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

/// A Laurent polynomial in canonical form: no zero coefficients and one
/// entry per exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> LaurentPoly {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> LaurentPoly {
        LaurentPoly::constant(rat(n))
    }

    pub fn term(c: BigRational, m: Monomial) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_monomial(m: Monomial) -> LaurentPoly {
        LaurentPoly::term(BigRational::one(), m)
    }

    pub fn var(v: Variable) -> LaurentPoly {
        LaurentPoly::from_monomial(Monomial::var(v, 1))
    }

    /// `Y[s,j]^e` at rank `r`, with `Y[s,0] = Y[s,r+1] = 1`.
    pub fn y_pow(r: u32, s: u32, j: u32, e: i32) -> LaurentPoly {
        LaurentPoly::from_monomial(y_monomial(r, s, j, e))
    }

    pub fn y(r: u32, s: u32, j: u32) -> LaurentPoly {
        LaurentPoly::y_pow(r, s, j, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in printing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Returns the single term if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigRational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains_var(&self, v: Variable) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += a * b`, avoiding an intermediate allocation for the product.
    pub fn add_mul_assign(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a monomial; `None` for anything else.
    pub fn inv(&self) -> Option<LaurentPoly> {
        let (c, m) = self.as_monomial()?;
        Some(LaurentPoly::term(c.recip(), m.inv()))
    }

    /// Integer power, negative exponents allowed for monomials.
    pub fn powi(&self, k: i32) -> Option<LaurentPoly> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            Some(self.inv()?.pow((-k) as u32))
        }
    }

    /// Exact quotient `self / q`, or an error when no Laurent polynomial
    /// quotient exists.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly, DivisionFailure> {
        if q.is_zero() {
            return Err(DivisionFailure("division by zero".into()));
        }
        if let Some(qi) = q.inv() {
            return Ok(self * &qi);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both sides into honest polynomials.
        let qmin = q.terms.keys().skip(1).fold(q.terms.keys().next().unwrap().clone(), |a, m| a.min_with(m));
        let pmin = self.terms.keys().skip(1).fold(self.terms.keys().next().unwrap().clone(), |a, m| a.min_with(m));
        let qs = q.mul_monomial(&qmin.inv());
        let mut rem = self.mul_monomial(&pmin.inv());
        let (lm_q, lc_q) = qs.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lm_q_inv = lm_q.inv();
        let mut quot = LaurentPoly::zero();
        while let Some((lm, lc)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divisible_by(&lm_q) {
                return Err(DivisionFailure(format!(
                    "leading term {} not divisible by {}",
                    LaurentPoly::term(lc, lm),
                    LaurentPoly::term(lc_q, lm_q)
                )));
            }
            let tm = lm.mul(&lm_q_inv);
            let tc = &lc / &lc_q;
            for (m, c) in &qs.terms {
                rem.add_term(m.mul(&tm), -(c * &tc));
            }
            quot.add_term(tm, tc);
        }
        // self = quot_shifted * qs * pmin, and q = qs * qmin.
        Ok(quot.mul_monomial(&pmin.mul(&qmin.inv())))
    }

    pub fn eval_at(&self, point: &BTreeMap<Variable, BigRational>) -> Result<BigRational, EvalError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point.get(&v).ok_or(EvalError::UnboundVariable(v))?;
                if x.is_zero() {
                    return Err(EvalError::ZeroSubstitution(v));
                }
                t *= num_traits::pow::Pow::pow(x, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces variables by polynomials. Variables mapped to a value with
    /// a negative exponent must be monomials.
    pub fn substitute(&self, f: &dyn Fn(Variable) -> Option<LaurentPoly>) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(c.clone());
            for &(v, e) in &m.0 {
                let base = f(v).unwrap_or_else(|| LaurentPoly::var(v));
                t = &t * &base.powi(e)?;
            }
            out.add_assign_ref(&t);
        }
        Some(out)
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.0.iter().map(|&(v, e)| (v.json_key(), e)).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &LaurentJson) -> Result<LaurentPoly, ParseError> {
        let mut out = LaurentPoly::zero();
        for t in &j.terms {
            let c: BigRational = t
                .coeff
                .parse()
                .map_err(|_| ParseError(format!("bad coefficient `{}`", t.coeff)))?;
            let mut pairs = Vec::new();
            for (k, &e) in &t.exps {
                let v = Variable::from_json_key(k).ok_or_else(|| ParseError(format!("bad variable key `{k}`")))?;
                pairs.push((v, e));
            }
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

/// `Y[s,j]^e` as a bare monomial, with the boundary convention applied.
pub fn y_monomial(r: u32, s: u32, j: u32, e: i32) -> Monomial {
    if j == r + 1 {
        return Monomial::one();
    }
    match Variable::y(s, j) {
        Some(v) => Monomial::var(v, e),
        None => Monomial::one(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: BTreeMap<String, i32>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        LaurentPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for &(v, e) in &m.0 {
                if e == 1 {
                    write!(f, " * {v}")?;
                } else {
                    write!(f, " * {v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        for term in s.split(" + ") {
            let mut factors = term.split(" * ");
            let cs = factors.next().unwrap_or("").trim();
            let c: BigRational = cs.parse().map_err(|_| ParseError(format!("bad coefficient `{cs}`")))?;
            let mut pairs = Vec::new();
            for fac in factors {
                let (vs, es) = match fac.split_once('^') {
                    Some((v, e)) => (v, e.parse::<i32>().map_err(|_| ParseError(format!("bad exponent in `{fac}`")))?),
                    None => (fac, 1),
                };
                pairs.push((vs.trim().parse::<Variable>()?, es));
            }
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for p in iter {
            out.add_assign_ref(&p);
        }
        out
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

/// Sum of all coefficients, i.e. the value at the all-ones point.
pub fn coefficient_sum(p: &LaurentPoly) -> BigRational {
    p.terms().map(|(_, c)| c.clone()).sum()
}

/// True when every coefficient is positive.
pub fn has_positive_coefficients(p: &LaurentPoly) -> bool {
    p.terms().all(|(_, c)| c.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: u32, j: u32) -> LaurentPoly {
        LaurentPoly::y(3, s, j)
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn boundary_variables_are_one() {
        assert!(LaurentPoly::y(3, 2, 0).is_one());
        assert!(LaurentPoly::y(3, 2, 4).is_one());
        assert!(!LaurentPoly::y(3, 2, 3).is_one());
    }

    #[test]
    fn additive_identity_and_merge() {
        let a = y(2, 2).inv().unwrap();
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(&a + &a, a.scale(&rat(2)));
    }

    #[test]
    fn product_of_b_monomials() {
        // B(3,1) = Y31^-1 at rank 3 (Y30 = 1), B(1,0) = Y13 / Y23
        let b31 = y(3, 1).inv().unwrap();
        let b10 = &y(1, 3) * &y(2, 3).inv().unwrap();
        assert_eq!(&b31 * &b10, p("1 * Y[1,3] * Y[2,3]^-1 * Y[3,1]^-1"));
    }

    #[test]
    fn difference_of_squares() {
        let a = &y(1, 1) + &y(1, 2);
        let b = &y(1, 1) - &y(1, 2);
        let prod = &a * &b;
        assert_eq!(prod, &y(1, 1).pow(2) - &y(1, 2).pow(2));
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn monomial_division() {
        let num = p("2 * Y[1,3] * Y[2,3]^-1 * Y[3,1]^-1");
        let q = y(2, 3).inv().unwrap();
        assert_eq!(num.exact_div(&q).unwrap(), p("2 * Y[1,3] * Y[3,1]^-1"));
        assert!(num.exact_div(&num).unwrap().is_one());
    }

    #[test]
    fn division_with_laurent_shift() {
        let a = &y(1, 1).inv().unwrap() + &y(2, 2);
        let b = &(&y(1, 2) * &y(3, 1).inv().unwrap()) - &LaurentPoly::int(3);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn non_divisible_fails() {
        let a = &y(1, 1) + &y(1, 2);
        let b = &y(1, 1) + &LaurentPoly::one();
        assert!(a.exact_div(&b).is_err());
        assert!(a.exact_div(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        let mut pt = BTreeMap::new();
        pt.insert(Variable::y(3, 2).unwrap(), rat(2));
        assert_eq!(y(3, 2).inv().unwrap().eval_at(&pt).unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(LaurentPoly::one().eval_at(&BTreeMap::new()).unwrap(), rat(1));
        assert!(matches!(y(1, 1).eval_at(&pt), Err(EvalError::UnboundVariable(_))));
        pt.insert(Variable::y(1, 1).unwrap(), rat(0));
        assert!(matches!(y(1, 1).eval_at(&pt), Err(EvalError::ZeroSubstitution(_))));
    }

    #[test]
    fn text_round_trip_and_order() {
        let q = p("2 * Y[1,2] * Y[2,2]^-1 + 1 * Y[3,2]^-1 + -1/3 * T[1]^2 * Y[1,1]");
        let s = q.to_string();
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), q);
        // the degree -1 term prints first
        assert!(s.starts_with("1 * Y[3,2]^-1"), "{s}");
        assert_eq!(p("0"), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let q = p("2 * Y[1,3] * Y[3,1]^-1 + 1/2 * T[2]");
        let j = serde_json::to_string(&q).unwrap();
        assert!(j.contains("\"Y_1_3\":1"), "{j}");
        assert!(j.contains("\"coeff\":\"1/2\""), "{j}");
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn t_sorts_after_y() {
        assert!(Variable::y(9, 9).unwrap() < Variable::t(1));
        assert!(Variable::y(1, 3).unwrap() < Variable::y(2, 1).unwrap());
    }
}
