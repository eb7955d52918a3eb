//! Exact polynomials in `b, q, t` with integer coefficients, and the
//! generating functions built from path and word statistics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_paths, rational_catalan, CoprimePair};
use crate::rankword::enumerate_rank_words;
use crate::statistics::stat_triple;

/// Default cap on the number of paths a generating function may enumerate.
pub const DEFAULT_WORK_BOUND: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    B,
    Q,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::B => "b",
            Var::Q => "q",
            Var::T => "t",
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(Var::B),
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
        }
    }
}

/// Exponents of a monomial `b^b q^q t^t`, ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub b: u32,
    pub q: u32,
    pub t: u32,
}

impl Exponents {
    pub const fn new(b: u32, q: u32, t: u32) -> Self {
        Exponents { b, q, t }
    }

    pub fn degree(&self) -> u32 {
        self.b + self.q + self.t
    }

    fn get(&self, var: Var) -> u32 {
        match var {
            Var::B => self.b,
            Var::Q => self.q,
            Var::T => self.t,
        }
    }

    fn checked_add(self, o: Exponents) -> Result<Exponents> {
        Ok(Exponents {
            b: self.b.checked_add(o.b).ok_or(Error::Overflow)?,
            q: self.q.checked_add(o.q).ok_or(Error::Overflow)?,
            t: self.t.checked_add(o.t).ok_or(Error::Overflow)?,
        })
    }
}

/// A sparse polynomial in `b, q, t` over the integers.
///
/// Zero coefficients are never stored. Terms are reported in descending
/// lexicographic order of `(e_b, e_q, e_t)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BqtPolynomial {
    terms: BTreeMap<Exponents, i64>,
}

impl BqtPolynomial {
    pub fn zero() -> Self {
        BqtPolynomial::default()
    }

    pub fn one() -> Self {
        BqtPolynomial::monomial(Exponents::default(), 1)
    }

    pub fn monomial(exps: Exponents, coeff: i64) -> Self {
        let mut p = BqtPolynomial::zero();
        if coeff != 0 {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn var(var: Var) -> Self {
        let e = match var {
            Var::B => Exponents::new(1, 0, 0),
            Var::Q => Exponents::new(0, 1, 0),
            Var::T => Exponents::new(0, 0, 1),
        };
        BqtPolynomial::monomial(e, 1)
    }

    /// Builds a polynomial from terms, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, i64)>>(terms: I) -> Result<Self> {
        let mut p = BqtPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: Exponents) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = BqtPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(
                    e1.checked_add(e2)?,
                    c1.checked_mul(c2).ok_or(Error::Overflow)?,
                )?;
            }
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| c.checked_neg().map(|c| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(BqtPolynomial { terms })
    }

    /// Sets `var = 1`, collapsing its grading.
    pub fn substitute_one(&self, var: Var) -> Result<Self> {
        BqtPolynomial::from_terms(self.terms().map(|(mut e, c)| {
            match var {
                Var::B => e.b = 0,
                Var::Q => e.q = 0,
                Var::T => e.t = 0,
            }
            (e, c)
        }))
    }

    /// Exchanges the exponents of `q` and `t` in every term.
    pub fn swap_qt(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| (Exponents::new(e.b, e.t, e.q), c))
            .collect();
        BqtPolynomial { terms }
    }

    pub fn is_qt_symmetric(&self) -> bool {
        self.swap_qt() == *self
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Exponents::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// Value at `b = q = t = 1`.
    pub fn coefficient_sum(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let vars: Vec<String> = [Var::B, Var::Q, Var::T]
                .into_iter()
                .filter(|&v| e.get(v) > 0)
                .map(|v| match e.get(v) {
                    1 => v.name().to_string(),
                    k => format!("{}^{{{k}}}", v.name()),
                })
                .collect();
            push_sign(&mut out, i, c);
            let abs = c.unsigned_abs();
            if abs != 1 || vars.is_empty() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&vars.join(" "));
        }
        out
    }
}

fn push_sign(out: &mut String, idx: usize, coeff: i64) {
    match (idx, coeff < 0) {
        (0, false) => {}
        (0, true) => out.push('-'),
        (_, false) => out.push_str(" + "),
        (_, true) => out.push_str(" - "),
    }
}

/// Canonical text form, e.g. `3*b^2*q*t^4 + q`.
impl fmt::Display for BqtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let abs = c.unsigned_abs();
            for v in [Var::B, Var::Q, Var::T] {
                match e.get(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    k => factors.push(format!("{}^{k}", v.name())),
                }
            }
            if abs != 1 || factors.is_empty() {
                factors.insert(0, abs.to_string());
            }
            push_sign(&mut out, i, c);
            out.push_str(&factors.join("*"));
        }
        f.write_str(&out)
    }
}

impl FromStr for BqtPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(BqtPolynomial::zero());
        }
        // split into signed terms on the " + " / " - " separators
        let mut signed: Vec<(bool, &str)> = Vec::new();
        let (mut neg, mut rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (p, m) => p.or(m),
            };
            match cut {
                Some(i) => {
                    signed.push((neg, &rest[..i]));
                    neg = rest[i..].starts_with(" - ");
                    rest = &rest[i + 3..];
                }
                None => {
                    signed.push((neg, rest));
                    break;
                }
            }
        }
        let mut poly = BqtPolynomial::zero();
        for (neg, term) in signed {
            let (e, c) = parse_term(term)?;
            let c = if neg { -c } else { c };
            if poly.terms.contains_key(&e) {
                return Err(Error::Parse(format!("repeated monomial in {s:?}")));
            }
            poly.add_term(e, c)?;
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(Exponents, i64)> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    let mut exps = Exponents::default();
    let mut coeff: Option<i64> = None;
    let mut seen = Vec::new();
    for (i, factor) in term.split('*').enumerate() {
        if factor.is_empty() {
            return Err(bad());
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            if i != 0 {
                return Err(bad());
            }
            coeff = Some(factor.parse().map_err(|_| bad())?);
            continue;
        }
        let (name, power) = match factor.split_once('^') {
            Some((name, p)) => (name, p.parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let var: Var = name.parse()?;
        if seen.contains(&var) || power == 0 {
            return Err(bad());
        }
        seen.push(var);
        match var {
            Var::B => exps.b = power,
            Var::Q => exps.q = power,
            Var::T => exps.t = power,
        }
    }
    let coeff = coeff.unwrap_or(1);
    if coeff == 0 {
        return Err(bad());
    }
    Ok((exps, coeff))
}

/// One term of the JSON form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub b: u32,
    pub q: u32,
    pub t: u32,
    pub coeff: i64,
}

impl Serialize for BqtPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(e, c)| TermJson {
            b: e.b,
            q: e.q,
            t: e.t,
            coeff: c,
        }))
    }
}

impl<'de> Deserialize<'de> for BqtPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TermJson>::deserialize(d)?;
        let mut poly = BqtPolynomial::zero();
        for t in raw {
            let e = Exponents::new(t.b, t.q, t.t);
            if t.coeff == 0 || poly.terms.contains_key(&e) {
                return Err(D::Error::custom("zero or repeated term"));
            }
            poly.terms.insert(e, t.coeff);
        }
        Ok(poly)
    }
}

fn check_work(pair: CoprimePair, bound: u128) -> Result<()> {
    match rational_catalan(pair) {
        Some(count) if count <= bound => Ok(()),
        Some(count) => Err(Error::WorkBound {
            required: count.to_string(),
            bound,
        }),
        None => Err(Error::WorkBound {
            required: "more than 2^128".into(),
            bound,
        }),
    }
}

/// `W_{m,n}(b,q,t)`: the sum of `b^skips q^dinv t^area` over all rank words,
/// with statistics computed on the words themselves.
pub fn genfun_w(pair: CoprimePair) -> Result<BqtPolynomial> {
    genfun_w_bounded(pair, DEFAULT_WORK_BOUND)
}

pub fn genfun_w_bounded(pair: CoprimePair, max_paths: u128) -> Result<BqtPolynomial> {
    check_work(pair, max_paths)?;
    let mut poly = BqtPolynomial::zero();
    for word in enumerate_rank_words(pair) {
        let st = word.stats();
        poly.add_term(Exponents::new(st.skips, st.dinv, st.area), 1)?;
    }
    Ok(poly)
}

/// `C_{m,n}(q,t)`: the sum of `q^dinv t^area` over all Dyck paths, with
/// statistics computed on the paths.
pub fn catalan_c(pair: CoprimePair) -> Result<BqtPolynomial> {
    catalan_c_bounded(pair, DEFAULT_WORK_BOUND)
}

pub fn catalan_c_bounded(pair: CoprimePair, max_paths: u128) -> Result<BqtPolynomial> {
    check_work(pair, max_paths)?;
    let mut poly = BqtPolynomial::zero();
    for path in enumerate_paths(pair) {
        let st = stat_triple(&path);
        poly.add_term(Exponents::new(0, st.dinv, st.area), 1)?;
    }
    Ok(poly)
}

/// The Schur polynomial `s_{λ1,λ2}(q,t) = Σ_{j=0}^{λ1-λ2} q^{λ2+j} t^{λ1-j}`.
pub fn schur_two_var(lambda1: u32, lambda2: u32) -> Result<BqtPolynomial> {
    if lambda1 < lambda2 {
        return Err(Error::Domain(format!(
            "Schur shape needs lambda1 >= lambda2 (got {lambda1}, {lambda2})"
        )));
    }
    BqtPolynomial::from_terms(
        (0..=lambda1 - lambda2).map(|j| (Exponents::new(0, lambda2 + j, lambda1 - j), 1)),
    )
}
