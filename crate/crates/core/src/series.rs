//! Dense exact polynomials with a declared formal degree, and truncated power
//! series over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial, binomial_q, serde_rational_vec, Rational};

/// A polynomial `c_0 + c_1 t + ... + c_n t^n` paired with its formal degree
/// `n`. Exactly `n + 1` coefficients are stored; trailing zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr", into = "PolynomialRepr")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
    formal_degree: usize,
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
    formal_degree: usize,
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = Error;

    fn try_from(r: PolynomialRepr) -> Result<Self> {
        Polynomial::new(r.coeffs, r.formal_degree)
    }
}

impl From<Polynomial> for PolynomialRepr {
    fn from(p: Polynomial) -> Self {
        PolynomialRepr {
            coeffs: p.coeffs,
            formal_degree: p.formal_degree,
        }
    }
}

impl Polynomial {
    /// Pads `coeffs` with zeros up to `formal_degree + 1` entries. Extra
    /// trailing zeros are dropped; extra nonzero entries are an error.
    pub fn new(mut coeffs: Vec<Rational>, formal_degree: usize) -> Result<Self> {
        if coeffs.len() > formal_degree + 1 {
            if coeffs[formal_degree + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::DegreeOverflow {
                    len: coeffs.len(),
                    formal_degree,
                });
            }
            coeffs.truncate(formal_degree + 1);
        }
        coeffs.resize(formal_degree + 1, Rational::zero());
        Ok(Polynomial {
            coeffs,
            formal_degree,
        })
    }

    /// Formal degree taken from the number of coefficients.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let n = coeffs.len().saturating_sub(1);
        Polynomial::new(coeffs, n).expect("length matches")
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(crate::rational::ints(coeffs))
    }

    pub fn zero(formal_degree: usize) -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(); formal_degree + 1],
            formal_degree,
        }
    }

    /// `c t^k` with formal degree `formal_degree >= k`.
    pub fn monomial(c: Rational, k: usize, formal_degree: usize) -> Self {
        assert!(k <= formal_degree);
        let mut p = Self::zero(formal_degree);
        p.coeffs[k] = c;
        p
    }

    /// `(1 + t)^e` with formal degree `e`.
    pub fn one_plus_t_pow(e: usize) -> Self {
        Polynomial {
            coeffs: (0..=e).map(|j| binomial_q(e as i64, j as i64)).collect(),
            formal_degree: e,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the formal degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn formal_degree(&self) -> usize {
        self.formal_degree
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-declare the formal degree; lowering it is only allowed over zeros.
    pub fn with_formal_degree(&self, n: usize) -> Result<Self> {
        Polynomial::new(self.coeffs.clone(), n)
    }

    /// First `(i, n - i)` with `c_i != c_{n-i}`, scanning `i` upward.
    pub fn reciprocity_violation(&self) -> Option<(usize, usize)> {
        let n = self.formal_degree;
        (0..=n / 2).find_map(|i| (self.coeffs[i] != self.coeffs[n - i]).then_some((i, n - i)))
    }

    pub fn is_reciprocal(&self) -> bool {
        self.reciprocity_violation().is_none()
    }

    /// `t^n p(1/t)` for the formal degree `n`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial {
            coeffs,
            formal_degree: self.formal_degree,
        }
    }

    /// `p(t + c)`, expanded by the binomial theorem.
    pub fn translate(&self, c: &Rational) -> Self {
        let n = self.formal_degree;
        let mut out = vec![Rational::zero(); n + 1];
        // powers of c reused across rows
        let mut c_pow = vec![Rational::one(); n + 1];
        for i in 1..=n {
            c_pow[i] = &c_pow[i - 1] * c;
        }
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += ci * binomial_q(i as i64, j as i64) * &c_pow[i - j];
            }
        }
        Polynomial {
            coeffs: out,
            formal_degree: n,
        }
    }

    /// Formal derivative; the formal degree drops by one (not below zero).
    pub fn derivative(&self) -> Self {
        let n = self.formal_degree.saturating_sub(1);
        let mut coeffs: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        coeffs.resize(n + 1, Rational::zero());
        Polynomial {
            coeffs,
            formal_degree: n,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            formal_degree: self.formal_degree,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.formal_degree.max(other.formal_degree);
        let coeffs = (0..=n)
            .map(|i| f(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial {
            coeffs,
            formal_degree: n,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Schoolbook product; formal degrees add.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let n = self.formal_degree + rhs.formal_degree;
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial {
            coeffs,
            formal_degree: n,
        }
    }
}

/// Coefficients `c_0..c_N` of a power series known up to `u^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(crate::rational::ints(coeffs), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// The series `u` (zero if `order == 0`).
    pub fn variable(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        // integer convolution over a common denominator, one reduction per
        // coefficient instead of one per term
        let (a, da) = over_common_denominator(&self.coeffs[..=order]);
        let (b, db) = over_common_denominator(&other.coeffs[..=order]);
        let mut acc = vec![BigInt::zero(); order + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let denom = da * db;
        let coeffs = acc
            .into_iter()
            .map(|c| Rational::new(c, denom.clone()))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|j| &self.coeffs[j] + &other.coeffs[j])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self(inner(u))`, see [`series_compose`].
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        series_compose(self, inner)
    }
}

/// `(1 + u)^exponent` to order `order`; coefficient `j` is the generalized
/// binomial `binom(exponent, j)`.
pub fn expand_binomial_power(exponent: i64, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|j| Rational::from_integer(binomial(exponent, j as i64)))
        .collect();
    TruncatedSeries { coeffs }
}

/// `num(u) / (1 + u)^denom_exponent` to order `order`.
pub fn series_divide(num: &Polynomial, denom_exponent: u32, order: usize) -> TruncatedSeries {
    let inverse = expand_binomial_power(-(denom_exponent as i64), order);
    TruncatedSeries::from_polynomial(num, order).mul(&inverse)
}

/// `outer(inner(u))` truncated at the common order. `inner` must have zero
/// constant term so that only finitely many terms reach each coefficient.
/// Numerators over the least common denominator.
pub(crate) fn over_common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = values.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let nums = values
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    (nums, denom)
}

pub fn series_compose(outer: &TruncatedSeries, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    if outer.order() != inner.order() {
        return Err(Error::OrderMismatch {
            left: outer.order(),
            right: inner.order(),
        });
    }
    if !inner.coeffs[0].is_zero() {
        return Err(Error::CompositionDomain(inner.coeffs[0].clone()));
    }
    let order = outer.order();
    // Horner: ((c_N g + c_{N-1}) g + ...) g + c_0
    let mut acc = TruncatedSeries::zero(order);
    for c in outer.coeffs.iter().rev() {
        acc = acc.mul(inner);
        acc.coeffs[0] += c;
    }
    Ok(acc)
}
