//! The gamma vector of a polynomial by four independent routes.
//!
//! For `h` of formal degree `n` the gamma vector is defined through
//! `h(t) = (1 + t)^n gamma(t / (1 + t)^2)`. Substituting `t = C~(u)` turns this
//! into `gamma(u) = J(C~(u))` with `J(v) = h(v) / (1 + v)^n`, which makes
//! sense for any `h` and yields an infinite series when `h` is not
//! reciprocal. The routes implemented here:
//!
//! * [`gamma_by_basis`]: triangular solve in the basis `t^i (1 + t)^{n - 2i}`
//!   (reciprocal input only);
//! * [`gamma_extended`]: series composition `J(C~(u))`;
//! * [`gamma_catalan_formula`]: the double sum of `h_l binom(-n, i - l)`
//!   against coefficients of powers of `C~`;
//! * [`gamma_derivative_formula`]: Lagrange inversion,
//!   `r gamma_r = [u^{r-1}] Q(u) / (1 + u)^{n + 1 - 2r}` with
//!   `Q = (1 + u) h' - n h`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_power_coeff, catalan_tilde_series};
use crate::error::{Error, Result};
use crate::rational::{binomial, serde_rational_vec, Rational};
use crate::series::{over_common_denominator, series_compose, series_divide, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaVector {
    #[serde(with = "serde_rational_vec")]
    pub entries: Vec<Rational>,
    pub formal_degree: usize,
    /// Entries are a truncation of an infinite series with no polynomial
    /// preimage of this formal degree.
    #[serde(default)]
    pub extended: bool,
}

impl GammaVector {
    /// Highest index carried.
    pub fn order(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn get(&self, m: usize) -> Option<&Rational> {
        self.entries.get(m)
    }
}

/// Solves `h = sum gamma_m t^m (1 + t)^{n - 2m}` by peeling off one basis
/// element at a time.
pub fn gamma_by_basis(h: &Polynomial) -> Result<GammaVector> {
    let n = h.formal_degree();
    if let Some((low, high)) = h.reciprocity_violation() {
        return Err(Error::NotReciprocal {
            formal_degree: n,
            low,
            high,
        });
    }
    let mut residual = h.clone();
    let mut entries = Vec::with_capacity(n / 2 + 1);
    for m in 0..=n / 2 {
        let g = residual.coeff(m);
        if !g.is_zero() {
            residual = &residual - &basis_element(m, n).scale(&g);
        }
        entries.push(g);
    }
    debug_assert!(residual.is_zero());
    Ok(GammaVector {
        entries,
        formal_degree: n,
        extended: false,
    })
}

/// `t^m (1 + t)^{n - 2m}` with formal degree `n`.
pub fn basis_element(m: usize, n: usize) -> Polynomial {
    assert!(2 * m <= n, "basis element {m} needs 2m <= n = {n}");
    let shift = Polynomial::monomial(Rational::from_integer(1.into()), m, m);
    (&shift * &Polynomial::one_plus_t_pow(n - 2 * m))
        .with_formal_degree(n)
        .expect("degree m + (n - 2m) <= n")
}

/// First `max_order + 1` coefficients of `J(C~(u))`.
///
/// The result is flagged `extended = false` only when `h` is reciprocal and
/// the requested order reaches `floor(n/2)`; the entries past `floor(n/2)`
/// are then zero.
pub fn gamma_extended(h: &Polynomial, max_order: usize) -> GammaVector {
    let n = h.formal_degree();
    let j = series_divide(h, n as u32, max_order);
    let tilde = catalan_tilde_series(max_order);
    let entries = series_compose(&j, &tilde)
        .expect("C~ has zero constant term")
        .into_coeffs();
    let reciprocal = h.is_reciprocal() && max_order >= n / 2;
    if reciprocal {
        assert!(
            entries[n / 2 + 1..].iter().all(Zero::is_zero),
            "gamma of a reciprocal polynomial has a nonzero tail"
        );
    }
    GammaVector {
        entries,
        formal_degree: n,
        extended: !reciprocal,
    }
}

/// `gamma_m = sum_{i <= m} sum_{l <= min(n, i)} h_l binom(-n, i - l) [u^m] C~^i`.
pub fn gamma_catalan_formula(h: &Polynomial, m: usize) -> Rational {
    let n = h.formal_degree();
    let (nums, denom) = over_common_denominator(h.coeffs());
    let neg_binom: Vec<BigInt> = (0..=m as i64).map(|j| binomial(-(n as i64), j)).collect();
    let mut total = BigInt::zero();
    for i in 0..=m {
        let c = catalan_power_coeff(i, m);
        if c.is_zero() {
            continue;
        }
        let mut inner = BigInt::zero();
        for (l, h_l) in nums.iter().enumerate().take(i.min(n) + 1) {
            if !h_l.is_zero() {
                inner += h_l * &neg_binom[i - l];
            }
        }
        total += inner * c;
    }
    Rational::new(total, denom)
}

/// `gamma_r = (1/r) [u^{r-1}] Q(u) / (1 + u)^{n + 1 - 2r}`, `Q = (1 + u) h' - n h`.
///
/// Defined for `r >= 1` with `2r <= n + 1`; `gamma_0` is simply `h_0`.
pub fn gamma_derivative_formula(h: &Polynomial, r: usize) -> Result<Rational> {
    let n = h.formal_degree();
    if r == 0 {
        return Err(Error::Index {
            index: 0,
            reason: "the derivative formula starts at r = 1; gamma_0 equals h_0".into(),
        });
    }
    if 2 * r > n + 1 {
        return Err(Error::Index {
            index: r as i64,
            reason: format!(
                "derivative formula needs 2r <= n + 1 = {}; use gamma_extended",
                n + 1
            ),
        });
    }
    let q = derivative_numerator(h);
    let s = series_divide(&q, (n + 1 - 2 * r) as u32, r - 1);
    Ok(s.coeff(r - 1) / Rational::from_integer(r.into()))
}

/// `(1 + u) h'(u) - n h(u)` with formal degree `n`.
pub fn derivative_numerator(h: &Polynomial) -> Polynomial {
    let n = h.formal_degree();
    let dh = h.derivative();
    let one_plus = Polynomial::from_ints(&[1, 1]);
    let lhs = (&one_plus * &dh)
        .with_formal_degree(n.max(1))
        .expect("degree <= n");
    let out = &lhs - &h.scale(&Rational::from_integer(n.into()));
    out.with_formal_degree(n).expect("degree <= n")
}

/// The linear map `h -> (gamma_0..gamma_M)` for a fixed formal degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaMatrix {
    pub formal_degree: usize,
    #[serde(with = "matrix_rows")]
    pub rows: Vec<Vec<Rational>>,
}

mod matrix_rows {
    use super::*;
    use crate::rational::{format_rational, parse_rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        rows: &[Vec<Rational>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let text = Vec::<Vec<String>>::deserialize(d)?;
        text.into_iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

impl GammaMatrix {
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// Multiplies the matrix into the coefficient vector of `h`.
    pub fn apply(&self, h: &Polynomial) -> Result<Vec<Rational>> {
        if h.formal_degree() != self.formal_degree {
            return Err(Error::Domain(format!(
                "matrix built for formal degree {}, polynomial has {}",
                self.formal_degree,
                h.formal_degree()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(h.coeffs())
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect())
    }
}

/// Entry `(m, l)` is the coefficient of `h_l` in `gamma_m`:
/// `sum_{i = l}^{m} binom(-n, i - l) [u^m] C~^i`.
pub fn gamma_matrix(n: usize, max_row: usize) -> GammaMatrix {
    let rows = (0..=max_row)
        .map(|m| {
            (0..=n)
                .map(|l| {
                    let mut acc = BigInt::zero();
                    for i in l..=m {
                        acc += binomial(-(n as i64), (i - l) as i64) * catalan_power_coeff(i, m);
                    }
                    Rational::from_integer(acc)
                })
                .collect()
        })
        .collect();
    GammaMatrix {
        formal_degree: n,
        rows,
    }
}

/// `sum gamma_m t^m (1 + t)^{n - 2m}`.
pub fn h_from_gamma(g: &GammaVector) -> Result<Polynomial> {
    if g.extended {
        return Err(Error::Domain(
            "extended gamma series has no polynomial preimage".into(),
        ));
    }
    let n = g.formal_degree;
    let mut h = Polynomial::zero(n);
    for (m, c) in g.entries.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if 2 * m > n {
            return Err(Error::Domain(format!(
                "gamma_{m} = {c} is nonzero but 2m exceeds the formal degree {n}"
            )));
        }
        h = &h + &basis_element(m, n).scale(c);
    }
    Ok(h)
}
