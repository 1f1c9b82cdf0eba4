//! Torus coordinates on `G^{u,e}`: the maps `x^L`, `x^G`, `x̄^G = a·x^L` as
//! operators on the vector module, and the change of variables `φ` with
//! `x̄^G = x^G ∘ φ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentPoly, Variable};
use crate::repb::{LinOp, Module};
use crate::rootdata::{CartanB, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorizeError {
    #[error("coordinate {0} is zero")]
    ZeroCoordinate(String),
    #[error("bad torus point: {0}")]
    BadShape(String),
}

/// A point of `H × (C^×)^n`: `a` in `α^∨`-coordinates and one value per
/// word position (the grid variable `Y[s, i_p]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    pub a: Vec<BigRational>,
    pub y: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct TorusPointJson {
    a: Vec<String>,
    y: BTreeMap<String, String>,
}

fn parse_rational(s: &str) -> Result<BigRational, FactorizeError> {
    s.trim().parse().map_err(|_| FactorizeError::BadShape(format!("not a rational: {s}")))
}

impl TorusPoint {
    pub fn new(a: Vec<BigRational>, y: Vec<BigRational>) -> Result<TorusPoint, FactorizeError> {
        if let Some(j) = a.iter().position(Zero::is_zero) {
            return Err(FactorizeError::ZeroCoordinate(format!("T_{}", j + 1)));
        }
        if let Some(p) = y.iter().position(Zero::is_zero) {
            return Err(FactorizeError::ZeroCoordinate(format!("position {}", p + 1)));
        }
        Ok(TorusPoint { a, y })
    }

    /// Every coordinate equal to 1.
    pub fn ones(word: &Word) -> TorusPoint {
        TorusPoint { a: vec![BigRational::one(); word.r as usize], y: vec![BigRational::one(); word.n] }
    }

    /// Random nonzero rationals `±p/q` with `1 <= p <= 9`, `1 <= q <= 5`.
    pub fn random<R: Rng>(word: &Word, rng: &mut R) -> TorusPoint {
        let mut draw = || {
            let p: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let q: i64 = rng.gen_range(1..=5);
            BigRational::new(p.into(), q.into())
        };
        let a = (0..word.r).map(|_| draw()).collect();
        let y = (0..word.n).map(|_| draw()).collect();
        TorusPoint { a, y }
    }

    pub fn check_word(&self, word: &Word) -> Result<(), FactorizeError> {
        if self.a.len() != word.r as usize || self.y.len() != word.n {
            return Err(FactorizeError::BadShape(format!(
                "expected {} torus and {} grid values, got {} and {}",
                word.r,
                word.n,
                self.a.len(),
                self.y.len()
            )));
        }
        Ok(())
    }

    /// The word this point is shaped for.
    pub fn word(&self) -> Result<Word, FactorizeError> {
        Word::new(self.a.len() as u32, self.y.len()).map_err(|e| FactorizeError::BadShape(e.to_string()))
    }

    pub fn a_poly(&self) -> Vec<LaurentPoly> {
        self.a.iter().cloned().map(LaurentPoly::constant).collect()
    }

    pub fn y_poly(&self) -> Vec<LaurentPoly> {
        self.y.iter().cloned().map(LaurentPoly::constant).collect()
    }

    /// Values keyed by variable, for `LaurentPoly::eval_at`.
    pub fn bindings(&self) -> BTreeMap<Variable, BigRational> {
        let word = Word { r: self.a.len() as u32, n: self.y.len() };
        let mut out = BTreeMap::new();
        for (j, t) in self.a.iter().enumerate() {
            out.insert(Variable::t(j as u32 + 1), t.clone());
        }
        for (p, (s, l)) in word.grid().into_iter().enumerate() {
            out.insert(Variable::y(s, l).expect("positive letter"), self.y[p].clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let word = Word { r: self.a.len() as u32, n: self.y.len() };
        let y = word
            .grid()
            .into_iter()
            .zip(&self.y)
            .map(|((s, l), v)| (Variable::y(s, l).expect("positive letter").json_key(), v.to_string()))
            .collect();
        serde_json::to_value(TorusPointJson { a: self.a.iter().map(|v| v.to_string()).collect(), y })
            .expect("plain strings serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<TorusPoint, FactorizeError> {
        let raw: TorusPointJson =
            serde_json::from_value(v.clone()).map_err(|e| FactorizeError::BadShape(e.to_string()))?;
        let a = raw.a.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        let word = Word::new(a.len() as u32, raw.y.len()).map_err(|e| FactorizeError::BadShape(e.to_string()))?;
        let mut y = Vec::with_capacity(word.n);
        for (s, l) in word.grid() {
            let key = Variable::y(s, l).expect("positive letter").json_key();
            let v = raw.y.get(&key).ok_or_else(|| FactorizeError::BadShape(format!("missing {key}")))?;
            y.push(parse_rational(v)?);
        }
        TorusPoint::new(a, y)
    }
}

fn pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `φ(a; Y)`. Position `p` with letter `l` goes to
/// `Y_p^{-1} ∏_{q > p} Y_q^{-a(i_q, l)}`, which spells out to the three
/// cases `l <= r-2`, `l = r-1`, `l = r`; `a` absorbs `∏ α^∨(Y_q)^{-1}`.
pub fn phi(p: &TorusPoint, word: &Word) -> Result<TorusPoint, FactorizeError> {
    p.check_word(word)?;
    let cartan = CartanB { r: word.r };
    let letters = word.letters();
    let n = word.n;
    let mut y = Vec::with_capacity(n);
    for i in 0..n {
        let l = letters[i];
        let mut v = p.y[i].recip();
        for (q, &lq) in letters.iter().enumerate().skip(i + 1) {
            v *= pow(&p.y[q], -cartan.entry(lq, l));
        }
        y.push(v);
    }
    let mut a = p.a.clone();
    for (q, &l) in letters.iter().enumerate() {
        a[(l - 1) as usize] /= &p.y[q];
    }
    TorusPoint::new(a, y)
}

/// The inverse of [`phi`], solved from the last position backwards.
pub fn psi(p: &TorusPoint, word: &Word) -> Result<TorusPoint, FactorizeError> {
    p.check_word(word)?;
    let cartan = CartanB { r: word.r };
    let letters = word.letters();
    let n = word.n;
    let mut y = vec![BigRational::one(); n];
    for i in (0..n).rev() {
        let l = letters[i];
        let mut v = p.y[i].recip();
        for q in i + 1..n {
            v *= pow(&y[q], -cartan.entry(letters[q], l));
        }
        y[i] = v;
    }
    let mut a = p.a.clone();
    for (q, &l) in letters.iter().enumerate() {
        a[(l - 1) as usize] *= &y[q];
    }
    TorusPoint::new(a, y)
}

/// `x^L(t) = x_{-i_1}(t_1) ... x_{-i_n}(t_n)` on the vector module.
pub fn xl_operator(word: &Word, t: &[LaurentPoly]) -> LinOp {
    let m = Module::Vector(word.r);
    let mut op = LinOp::identity(m.dim());
    for (p, &l) in word.letters().iter().enumerate() {
        op = op.compose(&m.x_minus(l, &t[p]));
    }
    op
}

/// `x^G(a; t) = a · y_{i_1}(t_1) ... y_{i_n}(t_n)`.
pub fn xg_operator(word: &Word, a: &[LaurentPoly], t: &[LaurentPoly]) -> LinOp {
    let m = Module::Vector(word.r);
    let mut op = m.torus(a);
    for (p, &l) in word.letters().iter().enumerate() {
        op = op.compose(&m.y(l, &t[p]));
    }
    op
}

/// `x̄^G(a; Y) = a · x^L(Y)`.
pub fn xbar_g_operator(word: &Word, a: &[LaurentPoly], y: &[LaurentPoly]) -> LinOp {
    Module::Vector(word.r).torus(a).compose(&xl_operator(word, y))
}

/// Whether `x̄^G(p) = x^G(φ(p))` holds entrywise at the point `p`.
pub fn operator_identity_holds(p: &TorusPoint, word: &Word) -> Result<bool, FactorizeError> {
    let q = phi(p, word)?;
    let lhs = xbar_g_operator(word, &p.a_poly(), &p.y_poly());
    let rhs = xg_operator(word, &q.a_poly(), &q.y_poly());
    Ok(lhs == rhs)
}

/// A small integer as a rational, for tests and examples.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
