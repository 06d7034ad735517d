//! Catalan numbers, the series `C(u)` and `C~(u) = C(u) - 1`, their
//! convolution closed forms, and Lagrange inversion.
//!
//! `C~` is the compositional solution of `f = u (1 + f)^2`, so coefficients
//! of its powers come straight out of Lagrange inversion with
//! `G(x) = (1 + x)^2`:
//!
//! ```text
//! [u^m] C~(u)^i = (i/m) binom(2m, m - i)
//! ```

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, exact_div, Rational};
use crate::series::{Polynomial, TruncatedSeries};

/// Catalan numbers `C_0..C_N`, grown on demand.
///
/// Every new entry is produced by the segmented recurrence
/// `C_{k+1} = sum C_i C_{k-i}` and checked against `binom(2k, k) / (k + 1)`.
#[derive(Debug)]
pub struct CatalanTable {
    values: RwLock<Vec<BigInt>>,
}

impl Default for CatalanTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CatalanTable {
    pub fn new() -> Self {
        CatalanTable {
            values: RwLock::new(vec![BigInt::one()]),
        }
    }

    pub fn get(&self, k: usize) -> BigInt {
        {
            let values = self.values.read().expect("catalan table poisoned");
            if let Some(v) = values.get(k) {
                return v.clone();
            }
        }
        let mut values = self.values.write().expect("catalan table poisoned");
        while values.len() <= k {
            let next = values.len();
            let by_recurrence: BigInt = (0..next).map(|i| &values[i] * &values[next - 1 - i]).sum();
            let by_binomial = exact_div(
                binomial(2 * next as i64, next as i64),
                &BigInt::from(next + 1),
            );
            assert_eq!(
                by_recurrence, by_binomial,
                "Catalan definitions disagree at {next}"
            );
            values.push(by_recurrence);
        }
        values[k].clone()
    }

    /// Snapshot of `C_0..=C_k`.
    pub fn values(&self, k: usize) -> Vec<BigInt> {
        self.get(k);
        self.values.read().expect("catalan table poisoned")[..=k].to_vec()
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("catalan table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn shared_table() -> &'static CatalanTable {
    static TABLE: OnceLock<CatalanTable> = OnceLock::new();
    TABLE.get_or_init(CatalanTable::new)
}

/// The Catalan number `C_k`.
pub fn catalan(k: usize) -> BigInt {
    shared_table().get(k)
}

/// `C(u)` to order `order`.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    let coeffs = shared_table()
        .values(order)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// `C~(u) = C(u) - 1` to order `order`.
pub fn catalan_tilde_series(order: usize) -> TruncatedSeries {
    let mut c = catalan_series(order).into_coeffs();
    c[0] = Rational::zero();
    TruncatedSeries::new(c, order)
}

/// `[u^m] C~(u)^i`.
pub fn catalan_power_coeff(i: usize, m: usize) -> BigInt {
    match (i, m) {
        (0, 0) => BigInt::one(),
        (0, _) | (_, 0) => BigInt::zero(),
        _ => {
            let b = binomial(2 * m as i64, m as i64 - i as i64);
            exact_div(b * i, &BigInt::from(m))
        }
    }
}

/// The closed form `(i/m) binom(2i, m - i)` as printed in the source
/// derivation. It is wrong whenever `i < m`; kept for discrepancy reports.
pub fn catalan_power_coeff_printed(i: usize, m: usize) -> Rational {
    match (i, m) {
        (0, 0) => Rational::one(),
        (0, _) | (_, 0) => Rational::zero(),
        _ => Rational::new(
            binomial(2 * i as i64, m as i64 - i as i64) * i,
            BigInt::from(m),
        ),
    }
}

/// A pair `(i, m)` where the printed closed form differs from the truth.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedDisagreement {
    pub i: usize,
    pub m: usize,
    pub printed: Rational,
    pub oracle: Rational,
}

/// Scans `m = 0..=max_m`, `i = 0..=m` and compares the printed closed form
/// with `[u^m] C~^i` read off repeated series multiplication.
pub fn printed_catalan_disagreements(max_m: usize) -> Vec<PrintedDisagreement> {
    let tilde = catalan_tilde_series(max_m);
    let mut power = TruncatedSeries::one(max_m);
    let mut powers = Vec::with_capacity(max_m + 1);
    for _ in 0..=max_m {
        powers.push(power.clone());
        power = power.mul(&tilde);
    }
    let mut out = Vec::new();
    for m in 0..=max_m {
        for (i, p) in powers.iter().enumerate().take(m + 1) {
            let printed = catalan_power_coeff_printed(i, m);
            let oracle = p.coeff(m).clone();
            if printed != oracle {
                out.push(PrintedDisagreement {
                    i,
                    m,
                    printed,
                    oracle,
                });
            }
        }
    }
    out
}

/// `sum C_{i_1 - 1} ... C_{i_k - 1}` over compositions of `n` into `k`
/// positive parts, i.e. `[u^n] (u C(u))^k = (k / (2n - k)) binom(2n - k, n)`.
pub fn catalan_convolution_shifted(k: usize, n: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "shifted Catalan convolution needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let top = 2 * n as i64 - k as i64;
    Ok(exact_div(binomial(top, n as i64) * k, &BigInt::from(top)))
}

/// `[u^n] C(u)^m` by the parity-split closed form.
pub fn catalan_convolution_unshifted(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain(
            "unshifted Catalan convolution needs m >= 1".into(),
        ));
    }
    let (n_, m_) = (n as i64, m as i64);
    let value = if m.is_multiple_of(2) {
        let h = m_ / 2;
        Rational::new(BigInt::from(m_), BigInt::from(2))
            * Rational::new(binomial(n_ + h - 1, h - 1), binomial(n_ + m_, h - 1))
            * Rational::from_integer(catalan((n_ + h) as usize))
    } else {
        let h = (m_ - 1) / 2;
        Rational::from_integer(BigInt::from(m_))
            * Rational::new(binomial(n_ + h, h), binomial(n_ + m_, h))
            * Rational::from_integer(catalan((n_ + h) as usize))
    };
    Ok(into_integer(value))
}

/// The single formula covering both parities, with `(-1)^{m+1}` switches.
pub fn catalan_convolution_unified(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain(
            "unshifted Catalan convolution needs m >= 1".into(),
        ));
    }
    let (n_, m_) = (n as i64, m as i64);
    let s = crate::rational::sign_power(m_ + 1);
    // 1 + (1 - s)/2 is 2 for even m, 1 for odd m
    let lead = Rational::new(BigInt::from(m_), BigInt::from(1 + (1 - s) / 2));
    let shift = m_ / 2 + (s - 1) / 2;
    let value = lead
        * Rational::new(binomial(n_ + shift, shift), binomial(n_ + m_, shift))
        * Rational::from_integer(catalan((n_ + m_ / 2) as usize));
    Ok(into_integer(value))
}

fn into_integer(q: Rational) -> BigInt {
    assert!(q.is_integer(), "closed form produced non-integer {q}");
    q.to_integer()
}

/// `[x^n] f(x)^k` for `f = x G(f)`, computed as `(k/n) [x^{n-k}] G(x)^n`.
pub fn lagrange_coefficient(g: &Polynomial, k: i64, n: usize) -> Result<Rational> {
    if g.coeff(0).is_zero() {
        return Err(Error::Domain("Lagrange inversion needs G(0) != 0".into()));
    }
    if n == 0 {
        return Err(Error::Domain("Lagrange inversion needs n >= 1".into()));
    }
    let target = n as i64 - k;
    if target < 0 {
        return Ok(Rational::zero());
    }
    let target = target as usize;
    let g_series = TruncatedSeries::from_polynomial(g, target);
    let coeff = g_series.pow(n).coeff(target).clone();
    Ok(coeff * Rational::new(BigInt::from(k), BigInt::from(n)))
}

/// The solution of `f = x G(f)` to order `order`, by fixed-point iteration.
/// Each pass fixes one more coefficient.
pub fn lagrange_fixed_point(g: &Polynomial, order: usize) -> TruncatedSeries {
    let g_series = TruncatedSeries::from_polynomial(g, order);
    let x = TruncatedSeries::variable(order);
    let mut f = TruncatedSeries::zero(order);
    for _ in 0..=order {
        f = x.mul(&g_series.compose(&f).expect("f has zero constant term"));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    // Independent oracle: enumerate compositions of `n` into `k` parts with a
    // lower bound on each part, multiplying Catalan values from the table.
    fn composition_sum(
        k: usize,
        n: usize,
        min_part: usize,
        value: &dyn Fn(usize) -> BigInt,
    ) -> BigInt {
        fn go(k: usize, n: usize, min_part: usize, value: &dyn Fn(usize) -> BigInt) -> BigInt {
            if k == 0 {
                return if n == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
            }
            let mut total = BigInt::zero();
            let mut part = min_part;
            while part <= n {
                total += value(part) * go(k - 1, n - part, min_part, value);
                part += 1;
            }
            total
        }
        go(k, n, min_part, value)
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(5), BigInt::from(42));
        assert_eq!(catalan(10), BigInt::from(16796));
    }

    #[test]
    fn table_is_shared_across_threads() {
        let table = std::sync::Arc::new(CatalanTable::new());
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let table = table.clone();
                std::thread::spawn(move || table.get(20 + t))
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(table.get(23), catalan(23));
        assert!(table.len() >= 24);
    }

    #[test]
    fn power_coeff_examples() {
        assert_eq!(catalan_power_coeff(1, 1), BigInt::from(1));
        assert_eq!(catalan_power_coeff(2, 3), BigInt::from(4));
        assert_eq!(catalan_power_coeff(2, 2), BigInt::from(1));
        assert_eq!(catalan_power_coeff(0, 0), BigInt::from(1));
        assert_eq!(catalan_power_coeff(0, 4), BigInt::zero());
        assert_eq!(catalan_power_coeff(3, 0), BigInt::zero());
        assert_eq!(catalan_power_coeff(5, 3), BigInt::zero());
    }

    #[test]
    fn power_coeff_matches_series_powers() {
        let order = 40;
        let tilde = catalan_tilde_series(order);
        let mut power = TruncatedSeries::one(order);
        for i in 0..=order {
            for m in 0..=order {
                assert_eq!(
                    power.coeff(m),
                    &Rational::from_integer(catalan_power_coeff(i, m)),
                    "i={i} m={m}"
                );
            }
            power = power.mul(&tilde);
        }
    }

    #[test]
    fn printed_form_disagrees() {
        assert_eq!(
            catalan_power_coeff_printed(2, 3),
            Rational::new(8.into(), 3.into())
        );
        let all = printed_catalan_disagreements(6);
        assert!(all
            .iter()
            .any(|d| d.i == 2 && d.m == 3 && d.oracle == int(4)));
        // the scan starts at C~ itself: [u^2] C~ = 2, printed gives 1
        assert_eq!((all[0].i, all[0].m), (1, 2));
        assert_eq!(all[0].printed, int(1));
        assert_eq!(all[0].oracle, int(2));
        // diagonal i = m is always right
        assert!(all.iter().all(|d| d.i < d.m));
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(catalan_convolution_shifted(2, 3).unwrap(), BigInt::from(2));
        assert_eq!(catalan_convolution_shifted(1, 4).unwrap(), BigInt::from(5));
        for n in 1..10 {
            assert_eq!(catalan_convolution_shifted(n, n).unwrap(), BigInt::from(1));
        }
        assert!(catalan_convolution_shifted(0, 3).is_err());
        assert!(catalan_convolution_shifted(4, 3).is_err());
    }

    #[test]
    fn shifted_matches_compositions() {
        let shifted = |p: usize| catalan(p - 1);
        for n in 1..=14 {
            for k in 1..=n {
                assert_eq!(
                    catalan_convolution_shifted(k, n).unwrap(),
                    composition_sum(k, n, 1, &shifted),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn unshifted_examples() {
        assert_eq!(
            catalan_convolution_unshifted(2, 2).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            catalan_convolution_unshifted(3, 1).unwrap(),
            BigInt::from(3)
        );
        for k in 0..12 {
            assert_eq!(catalan_convolution_unshifted(1, k).unwrap(), catalan(k));
        }
        assert!(catalan_convolution_unshifted(0, 2).is_err());
    }

    #[test]
    fn unshifted_forms_agree_with_series() {
        let c = catalan_series(20);
        let mut power = TruncatedSeries::one(20);
        for m in 1..=10 {
            power = power.mul(&c);
            for n in 0..=20 {
                let oracle = power.coeff(n).to_integer();
                assert_eq!(
                    catalan_convolution_unshifted(m, n).unwrap(),
                    oracle,
                    "m={m} n={n}"
                );
                assert_eq!(
                    catalan_convolution_unified(m, n).unwrap(),
                    oracle,
                    "m={m} n={n}"
                );
                if n + m <= 16 {
                    assert_eq!(composition_sum(m, n, 0, &catalan), oracle);
                }
            }
        }
    }

    #[test]
    fn lagrange_examples() {
        let g = Polynomial::from_ints(&[1, 2, 1]);
        assert_eq!(lagrange_coefficient(&g, 2, 3).unwrap(), int(4));
        for n in 1..8 {
            assert_eq!(lagrange_coefficient(&g, n as i64, n).unwrap(), int(1));
        }
        assert_eq!(lagrange_coefficient(&g, 1, 4).unwrap(), int(14));
        assert!(lagrange_coefficient(&Polynomial::from_ints(&[0, 1]), 1, 2).is_err());
    }

    #[test]
    fn lagrange_identity_against_fixed_point() {
        let g = Polynomial::from_ints(&[1, 2, 1]);
        let f = lagrange_fixed_point(&g, 25);
        assert_eq!(f, catalan_tilde_series(25));
        let f_powers: Vec<TruncatedSeries> = (0..=25).map(|k| f.pow(k)).collect();
        let g_series = TruncatedSeries::from_polynomial(&g, 25);
        for n in 1..=25 {
            let g_power = g_series.pow(n);
            for (k, fk) in f_powers.iter().enumerate().take(n + 1).skip(1) {
                let lhs = Rational::from_integer(n.into()) * fk.coeff(n);
                let rhs = Rational::from_integer(k.into()) * g_power.coeff(n - k);
                assert_eq!(lhs, rhs, "k={k} n={n}");
                assert_eq!(&lagrange_coefficient(&g, k as i64, n).unwrap(), fk.coeff(n));
            }
        }
    }

    #[test]
    fn lagrange_general_g() {
        // G = 1 + x + x^2 (Motzkin-type), cubic G as well
        for g in [
            Polynomial::from_ints(&[1, 1, 1]),
            Polynomial::from_ints(&[2, -1, 0, 3]),
        ] {
            let f = lagrange_fixed_point(&g, 10);
            for n in 1..=10 {
                for k in 1..=n {
                    assert_eq!(
                        lagrange_coefficient(&g, k as i64, n).unwrap(),
                        f.pow(k).coeff(n).clone()
                    );
                }
            }
        }
    }

    #[test]
    fn tilde_functional_equation() {
        let order = 40;
        let t = catalan_tilde_series(order);
        let one_plus = t.add(&TruncatedSeries::one(order));
        let rhs = TruncatedSeries::variable(order).mul(&one_plus.mul(&one_plus));
        assert_eq!(t, rhs);
    }
}
