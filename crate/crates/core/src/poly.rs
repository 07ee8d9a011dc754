//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic. Rendering and serialization walk the terms from the
//! largest monomial down, so `q^4 + 9*q^3 + 39*q^2 + 91*q` always comes out
//! the same way.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector. Ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divided_by(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

pub(crate) fn var_list(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_in(var_list(vars))
    }

    pub fn zero_in(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant_in(var_list(vars), BigInt::one())
    }

    pub fn constant_in(vars: Vec<String>, c: impl Into<BigInt>) -> Self {
        let arity = vars.len();
        let mut p = Self::zero_in(vars);
        p.add_term(Monomial::one(arity), c.into());
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let vars = var_list(vars);
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial_in(vars, exps, 1))
    }

    pub fn monomial_in(vars: Vec<String>, exponents: Vec<u32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(vars.len(), exponents.len(), "exponent arity");
        let mut p = Self::zero_in(vars);
        p.add_term(Monomial(exponents), c.into());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let vars = var_list(vars);
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent arity");
            p.add_term(Monomial(e), c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant_in(self.vars.clone(), 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `values[i]` for variable `i`.
    pub fn eval(&self, values: &[BigInt]) -> Result<BigInt> {
        if values.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                found: values.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(values).fold(c.clone(), |acc, (&e, x)| {
                    acc * num_traits::pow(x.clone(), e as usize)
                })
            })
            .sum())
    }

    pub fn eval_i64(&self, values: &[i64]) -> Result<BigInt> {
        let values: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        self.eval(&values)
    }

    /// Substitutes integers for some variables and drops them from the ring.
    pub fn specialize(&self, assignments: &[(&str, i64)]) -> Result<MultiPoly> {
        let mut fixed: Vec<Option<BigInt>> = vec![None; self.vars.len()];
        for (name, value) in assignments {
            let idx = self
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            fixed[idx] = Some(BigInt::from(*value));
        }
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| fixed[i].is_none())
            .collect();
        let mut out = MultiPoly::zero_in(keep.iter().map(|&i| self.vars[i].clone()).collect());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, value) in fixed.iter().enumerate() {
                if let Some(x) = value {
                    coeff *= num_traits::pow(x.clone(), m.0[i] as usize);
                }
            }
            out.add_term(Monomial(keep.iter().map(|&i| m.0[i]).collect()), coeff);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable of `self` (matched by name).
    pub fn embed(&self, target: &[String]) -> Result<MultiPoly> {
        let map = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = MultiPoly::zero_in(target.to_vec());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &j) in map.iter().enumerate() {
                e[j] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same terms, new variable names (positionally).
    pub fn rename(&self, names: &[&str]) -> Result<MultiPoly> {
        if names.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                found: names.len(),
            });
        }
        Ok(MultiPoly {
            vars: var_list(names),
            terms: self.terms.clone(),
        })
    }

    /// Exchanges the exponents of variables `i` and `j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(i, j);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Invariant under every transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.vars.len()).all(|j| self.swap_variables(0, j) == *self)
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Exact division by a monomial, `None` if some term is not divisible.
    pub fn div_monomial(&self, divisor: &Monomial) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            out.terms.insert(m.divided_by(divisor)?, c.clone());
        }
        Some(out)
    }

    /// Multiplies by a monomial with coefficient 1.
    pub fn mul_monomial(&self, factor: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times(factor), c.clone()))
                .collect(),
        }
    }
}

/// `h_d`: the sum of all monomials of total degree `d` in `vars`.
pub fn complete_homogeneous(vars: &[&str], d: u32) -> MultiPoly {
    complete_homogeneous_in(var_list(vars), d)
}

pub(crate) fn complete_homogeneous_in(vars: Vec<String>, d: u32) -> MultiPoly {
    let k = vars.len();
    let mut out = MultiPoly::zero_in(vars);
    if k == 0 {
        if d == 0 {
            out.add_term(Monomial(vec![]), BigInt::one());
        }
        return out;
    }
    let mut exps = vec![0u32; k];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut MultiPoly) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.add_term(Monomial(exps.clone()), BigInt::one());
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    rec(0, d, &mut exps, &mut out);
    out
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs)
            .expect("polynomials over different variables")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs)
            .expect("polynomials over different variables")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs)
            .expect("polynomials over different variables")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = mono
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let abs = c.abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Structured form: variables plus terms (largest monomial first), with
/// coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRepr {
    pub variables: Vec<String>,
    pub terms: Vec<TermRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

impl From<MultiPoly> for PolyRepr {
    fn from(p: MultiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermRepr {
                exponents: m.0.clone(),
                coefficient: c.to_string(),
            })
            .collect();
        PolyRepr {
            variables: p.vars,
            terms,
        }
    }
}

impl TryFrom<PolyRepr> for MultiPoly {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        let mut p = MultiPoly::zero_in(repr.variables);
        for t in repr.terms {
            if t.exponents.len() != p.vars.len() {
                return Err(Error::ArityMismatch {
                    expected: p.vars.len(),
                    found: t.exponents.len(),
                });
            }
            let c: BigInt = t
                .coefficient
                .parse()
                .map_err(|_| Error::Parse(t.coefficient.clone()))?;
            p.add_term(Monomial(t.exponents), c);
        }
        Ok(p)
    }
}
