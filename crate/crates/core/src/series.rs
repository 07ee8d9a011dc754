//! Power series in `x` truncated after `x^N`, with polynomial coefficients.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    /// Coefficient of `x^j` at index `j`; always `order + 1` entries.
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms beyond `x^order`.
    pub fn new(vars: Vec<String>, order: usize, mut coeffs: Vec<MultiPoly>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.variables() != vars.as_slice()) {
            return Err(Error::VariableMismatch {
                left: vars,
                right: c.variables().to_vec(),
            });
        }
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, MultiPoly::zero_in(vars));
        Ok(TruncatedSeries { order, coeffs })
    }

    /// Integer coefficients over the given ring.
    pub fn from_integers<I, C>(vars: Vec<String>, order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let coeffs = coeffs
            .into_iter()
            .map(|c| MultiPoly::constant_in(vars.clone(), c))
            .collect();
        Self::new(vars, order, coeffs).expect("constants share the ring")
    }

    pub fn zero(vars: Vec<String>, order: usize) -> Self {
        Self::new(vars, order, Vec::new()).expect("empty coefficient list")
    }

    pub fn one(vars: Vec<String>, order: usize) -> Self {
        Self::from_integers(vars, order, [1])
    }

    /// The series `x`.
    pub fn x(vars: Vec<String>, order: usize) -> Self {
        Self::from_integers(vars, order, [0, 1])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        self.coeffs[0].variables()
    }

    /// Coefficient of `x^j`; zero beyond the truncation order.
    pub fn coeff(&self, j: usize) -> MultiPoly {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero_in(self.variables().to_vec()))
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.variables() != other.variables() {
            return Err(Error::VariableMismatch {
                left: self.variables().to_vec(),
                right: other.variables().to_vec(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let vars = self.variables().to_vec();
        let coeffs = (0..=self.order)
            .map(|n| {
                (0..=n).fold(MultiPoly::zero_in(vars.clone()), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.variables().to_vec(), self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// `1 / self`; the constant term must be 1.
    pub fn reciprocal(&self) -> Result<Self> {
        let vars = self.variables().to_vec();
        if self.coeffs[0] != MultiPoly::constant_in(vars.clone(), BigInt::one()) {
            return Err(Error::NonUnitConstant);
        }
        let mut inv: Vec<MultiPoly> = Vec::with_capacity(self.order + 1);
        inv.push(self.coeffs[0].clone());
        for n in 1..=self.order {
            let mut acc = MultiPoly::zero_in(vars.clone());
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &inv[n - k]);
                }
            }
            inv.push(-&acc);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Multiplies every coefficient by a polynomial.
    pub fn scale(&self, factor: &MultiPoly) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(factor))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Substitutes `x -> factor·x` for a monomial `factor` with coefficient 1.
    pub fn scale_arg(&self, factor: &MultiPoly) -> Result<Self> {
        if factor.variables() != self.variables() {
            return Err(Error::VariableMismatch {
                left: self.variables().to_vec(),
                right: factor.variables().to_vec(),
            });
        }
        let mono = match factor.as_monomial() {
            Some((m, c)) if c.is_one() => m.clone(),
            _ => return Err(Error::NotMonomial),
        };
        let mut power = Monomial::one(mono.exponents().len());
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for c in &self.coeffs {
            coeffs.push(c.mul_monomial(&power));
            power = Monomial::new(
                power
                    .exponents()
                    .iter()
                    .zip(mono.exponents())
                    .map(|(a, b)| a + b)
                    .collect(),
            );
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplies by `x`, dropping the term that falls off the end.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        coeffs.push(MultiPoly::zero_in(self.variables().to_vec()));
        coeffs.extend(self.coeffs[..self.order].iter().cloned());
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> Result<MultiPoly>) -> Result<Self> {
        let coeffs: Vec<MultiPoly> = self.coeffs.iter().map(f).collect::<Result<_>>()?;
        let vars = coeffs[0].variables().to_vec();
        Self::new(vars, self.order, coeffs)
    }

    /// Re-expresses every coefficient over a larger variable list.
    pub fn embed(&self, target: &[String]) -> Result<Self> {
        self.map_coeffs(|c| c.embed(target))
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.order.max(other.order)).find(|&j| self.coeff(j) != other.coeff(j))
    }
}
