//! Sign bounds for gamma entries from coefficient patterns: the shifted
//! reciprocal closed sum, the two-sum expansion in the coefficients `b_k`,
//! alternating sums of monotone sequences, and the classifiers that pick a
//! claimed sign together with the exact value that backs it.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial_q, serde_rational, sign_of, sign_power, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Zero,
    Nonpositive,
    Nonnegative,
    Unknown,
}

impl Sign {
    /// Strict sign of `(-1)^e * s` for `s` in `{-1, 0, 1}`.
    pub fn strict(s: i64) -> Sign {
        match s.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    /// `>= 0` for a positive argument, `<= 0` for a negative one.
    pub fn weak(s: i64) -> Sign {
        match s.signum() {
            1 => Sign::Nonnegative,
            -1 => Sign::Nonpositive,
            _ => Sign::Zero,
        }
    }

    pub fn admits(self, value: &Rational) -> bool {
        match self {
            Sign::Positive => value.is_positive(),
            Sign::Negative => value.is_negative(),
            Sign::Zero => value.is_zero(),
            Sign::Nonpositive => !value.is_positive(),
            Sign::Nonnegative => !value.is_negative(),
            Sign::Unknown => true,
        }
    }

    /// Replaces a weak sign by the strict one when `value` is nonzero.
    pub fn sharpen(self, value: &Rational) -> Sign {
        match self {
            Sign::Nonpositive | Sign::Nonnegative if self.admits(value) && !value.is_zero() => {
                Sign::strict(sign_of(value) as i64)
            }
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Nonpositive => "nonpositive",
            Sign::Nonnegative => "nonnegative",
            Sign::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `gamma_r` itself.
    GammaR,
    /// `r gamma_r - (-1)^r d binom(d - r - 1, r - 1) b_0`.
    ShiftedGammaR,
}

/// A claimed sign and the exact value it is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignClaim {
    pub r: usize,
    pub quantity: Quantity,
    pub claimed_sign: Sign,
    pub hypothesis: String,
    #[serde(with = "serde_rational")]
    pub witness: Rational,
}

impl SignClaim {
    /// Fails with [`Error::ClaimRefuted`] if the witness contradicts the claim.
    pub fn new(
        r: usize,
        quantity: Quantity,
        claimed_sign: Sign,
        hypothesis: impl Into<String>,
        witness: Rational,
    ) -> Result<Self> {
        let hypothesis = hypothesis.into();
        if !claimed_sign.admits(&witness) {
            return Err(Error::ClaimRefuted {
                r,
                hypothesis,
                claimed: claimed_sign.to_string(),
                witness,
            });
        }
        Ok(SignClaim {
            r,
            quantity,
            claimed_sign,
            hypothesis,
            witness,
        })
    }

    pub fn unknown(r: usize, quantity: Quantity, witness: Rational) -> Self {
        SignClaim {
            r,
            quantity,
            claimed_sign: Sign::Unknown,
            hypothesis: "none".into(),
            witness,
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.claimed_sign == Sign::Unknown
    }

    /// Re-checks the construction invariant.
    pub fn is_consistent(&self) -> bool {
        self.claimed_sign.admits(&self.witness)
    }
}

fn check_index(d: usize, r: usize) -> Result<()> {
    if r == 0 || 2 * r > d {
        return Err(Error::Index {
            index: r as i64,
            reason: format!("need 1 <= r <= d/2 = {}", d / 2),
        });
    }
    Ok(())
}

fn padded(seq: &[Rational], d: usize) -> Result<Vec<Rational>> {
    if seq.len() > d + 1 {
        return Err(Error::DegreeOverflow {
            len: seq.len(),
            formal_degree: d,
        });
    }
    let mut out = seq.to_vec();
    out.resize(d + 1, Rational::zero());
    Ok(out)
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// `gamma_r` of `B(t) = R(t + 1)`, where `R` is the reciprocal of
/// `A = sum a_k t^k` at degree `d`:
/// `r gamma_r = sum_k -k binom(2r - k - 1, r - 1) a_k`.
pub fn shiftgam_gamma(a: &[Rational], d: usize, r: usize) -> Result<Rational> {
    check_index(d, r)?;
    let a = padded(a, d)?;
    let total = a.iter().enumerate().fold(Rational::zero(), |acc, (k, ak)| {
        let k = k as i64;
        acc - q(k) * binomial_q(2 * r as i64 - k - 1, r as i64 - 1) * ak
    });
    Ok(total / q(r as i64))
}

/// Ratio condition for even `r`:
/// `a_{k+2r-1} / a_k >= k binom(2r-k-1, r-1) / ((k+2r-1) binom(k+r-1, r-1))`
/// for `0 <= k <= min(2r - 1, d - 2r + 1)`. `None` when some `a_k = 0`.
pub fn shiftgam_ratio_hypothesis(a: &[Rational], d: usize, r: usize) -> Result<Option<bool>> {
    check_index(d, r)?;
    let a = padded(a, d)?;
    let (r, d) = (r as i64, d as i64);
    let top = (2 * r - 1).min(d - 2 * r + 1);
    for k in 0..=top {
        let ak = &a[k as usize];
        if ak.is_zero() {
            return Ok(None);
        }
        let lhs = &a[(k + 2 * r - 1) as usize] / ak;
        let rhs = q(k) * binomial_q(2 * r - k - 1, r - 1)
            / (q(k + 2 * r - 1) * binomial_q(k + r - 1, r - 1));
        if lhs < rhs {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

pub fn shiftgam_classify(a: &[Rational], d: usize, r: usize) -> Result<SignClaim> {
    if let Some(k) = a.iter().position(|x| x.is_negative()) {
        return Err(Error::Hypothesis {
            index: k,
            reason: format!("a_{k} = {} is negative", a[k]),
        });
    }
    let witness = shiftgam_gamma(a, d, r)?;
    let hypothesis = if r % 2 == 1 {
        "odd r"
    } else if 2 * r == d {
        "r = d/2"
    } else {
        match shiftgam_ratio_hypothesis(a, d, r)? {
            Some(true) => "even r with ratio bound",
            _ => return Ok(SignClaim::unknown(r, Quantity::GammaR, witness)),
        }
    };
    SignClaim::new(r, Quantity::GammaR, Sign::Nonpositive, hypothesis, witness)
}

/// `gamma_r` of `B = sum b_k t^k` at degree `d` from
/// `r gamma_r = (-1)^r sum_{k=1}^{r} (-1)^k k binom(d-r-k-1, r-k) b_k
///            + (-1)^r d sum_{k=0}^{r-1} (-1)^k binom(d-r-k-1, r-k-1) b_k`.
pub fn ftypesum_gamma(b: &[Rational], d: usize, r: usize) -> Result<Rational> {
    ftypesum_with_limit(b, d, r, r)
}

/// As [`ftypesum_gamma`] with the first sum stopped at `k = r - 1`. Differs
/// from the true value by `b_r`; kept for discrepancy reports.
pub fn ftypesum_gamma_printed(b: &[Rational], d: usize, r: usize) -> Result<Rational> {
    ftypesum_with_limit(b, d, r, r - 1)
}

fn ftypesum_with_limit(b: &[Rational], d: usize, r: usize, first_limit: usize) -> Result<Rational> {
    check_index(d, r)?;
    let b = padded(b, d)?;
    let (ri, di) = (r as i64, d as i64);
    let first = (1..=first_limit).fold(Rational::zero(), |acc, k| {
        let k = k as i64;
        acc + q(sign_power(k) * k) * binomial_q(di - ri - k - 1, ri - k) * &b[k as usize]
    });
    let second = (0..r).fold(Rational::zero(), |acc, k| {
        let k = k as i64;
        acc + q(sign_power(k)) * binomial_q(di - ri - k - 1, ri - k - 1) * &b[k as usize]
    });
    Ok(q(sign_power(ri)) * (first + q(di) * second) / q(ri))
}

/// `r gamma_r - (-1)^r d binom(d - r - 1, r - 1) b_0`.
pub fn shifted_gamma(b: &[Rational], d: usize, r: usize) -> Result<Rational> {
    let g = ftypesum_gamma(b, d, r)?;
    let (ri, di) = (r as i64, d as i64);
    let b0 = b.first().cloned().unwrap_or_else(Rational::zero);
    Ok(q(ri) * g - q(sign_power(ri) * di) * binomial_q(di - ri - 1, ri - 1) * b0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingReport {
    /// Sign implied by monotonicity alone; weak because equal neighbours
    /// may cancel.
    pub guaranteed: Sign,
    /// `guaranteed`, made strict when the sum is nonzero.
    pub claimed: Sign,
    #[serde(with = "serde_rational")]
    pub sum: Rational,
}

/// Sign of `sum_k (-1)^(k + start_parity) a_k` for a monotone nonnegative
/// sequence. Increasing: sign `(-1)^(N + start_parity)` with `N` the last
/// index. Decreasing: sign `(-1)^start_parity`.
pub fn alternating_sum_sign(
    seq: &[Rational],
    monotonicity: Monotonicity,
    start_parity: u8,
) -> Result<AlternatingReport> {
    if let Some(k) = seq.iter().position(|x| x.is_negative()) {
        return Err(Error::Hypothesis {
            index: k,
            reason: format!("entry {} is negative", seq[k]),
        });
    }
    for k in 1..seq.len() {
        let ok = match monotonicity {
            Monotonicity::Increasing => seq[k - 1] <= seq[k],
            Monotonicity::Decreasing => seq[k - 1] >= seq[k],
        };
        if !ok {
            return Err(Error::Hypothesis {
                index: k,
                reason: format!("sequence is not {monotonicity:?} at index {k}").to_lowercase(),
            });
        }
    }
    let p = start_parity as i64;
    let sum = seq
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (k, x)| {
            acc + q(sign_power(k as i64 + p)) * x
        });
    let guaranteed = if seq.is_empty() {
        Sign::Zero
    } else {
        match monotonicity {
            Monotonicity::Increasing => Sign::weak(sign_power(seq.len() as i64 - 1 + p)),
            Monotonicity::Decreasing => Sign::weak(sign_power(p)),
        }
    };
    assert!(
        guaranteed.admits(&sum),
        "alternating sum {sum} violates {guaranteed}"
    );
    Ok(AlternatingReport {
        claimed: guaranteed.sharpen(&sum),
        guaranteed,
        sum,
    })
}

fn decreasing_on(b: &[Rational], lo: usize, hi: usize) -> bool {
    (lo..hi).all(|k| b[k] >= b[k + 1])
}

fn increasing_on(b: &[Rational], lo: usize, hi: usize) -> bool {
    (lo..hi).all(|k| b[k] <= b[k + 1])
}

/// Which coefficient-pattern bound applies to `gamma_r` of `B = sum b_k t^k`.
///
/// * alternating signs `sgn b_k = (-1)^k`: `sgn gamma_r = (-1)^r`;
/// * `b >= 0` decreasing on `1..=r` and `3r <= d`, or decreasing with the
///   ratio bound `b_k / b_{k+1} >= (k+1)(r-k) / (k(d-r-k-1))` for
///   `1 <= k <= r - 1`: the shifted quantity has sign `(-1)^(r+1)`;
/// * `b >= 0` decreasing on `0..=r` with `2r = d`: `sgn gamma_r = (-1)^r`;
/// * `b >= 0` increasing on `1..r-1` with
///   `b_{k+1} / b_k >= (d-r-k-1) / (r-k)` for `0 <= k <= r - 1`:
///   `gamma_r <= 0`.
///
/// Ratio conditions with a zero denominator are treated as not holding.
pub fn boundgam_classify(b: &[Rational], d: usize, r: usize) -> Result<SignClaim> {
    let gamma = ftypesum_gamma(b, d, r)?;
    let b = padded(b, d)?;
    let sr = sign_power(r as i64);

    let alternating = b
        .iter()
        .enumerate()
        .all(|(k, x)| sign_of(x) as i64 == sign_power(k as i64));
    if alternating {
        return SignClaim::new(
            r,
            Quantity::GammaR,
            Sign::strict(sr),
            "alternating signs",
            gamma,
        );
    }
    if b.iter().any(|x| x.is_negative()) {
        return Ok(SignClaim::unknown(r, Quantity::GammaR, gamma));
    }

    if 2 * r == d && decreasing_on(&b, 0, r) {
        let claim = Sign::weak(sr).sharpen(&gamma);
        return SignClaim::new(
            r,
            Quantity::GammaR,
            claim,
            "nonnegative decreasing, r = d/2",
            gamma,
        );
    }
    if decreasing_on(&b, 1, r) {
        let shifted = shifted_gamma(&b, d, r)?;
        let claim = Sign::weak(-sr).sharpen(&shifted);
        if 3 * r <= d {
            return SignClaim::new(
                r,
                Quantity::ShiftedGammaR,
                claim,
                "nonnegative decreasing, r <= d/3",
                shifted,
            );
        }
        let (ri, di) = (r as i64, d as i64);
        let ratio_ok = 2 * r < d
            && (1..r).all(|k| {
                let k = k as i64;
                let next = &b[k as usize + 1];
                !next.is_zero()
                    && &b[k as usize] / next >= q((k + 1) * (ri - k)) / q(k * (di - ri - k - 1))
            });
        if ratio_ok {
            return SignClaim::new(
                r,
                Quantity::ShiftedGammaR,
                claim,
                "nonnegative decreasing with ratio bound",
                shifted,
            );
        }
    }
    if increasing_on(&b, 1, r - 1) {
        let (ri, di) = (r as i64, d as i64);
        let ratio_ok = (0..r).all(|k| {
            let k = k as i64;
            let cur = &b[k as usize];
            !cur.is_zero() && &b[k as usize + 1] / cur >= q(di - ri - k - 1) / q(ri - k)
        });
        if ratio_ok {
            return SignClaim::new(
                r,
                Quantity::GammaR,
                Sign::Nonpositive,
                "nonnegative increasing with ratio bound",
                gamma,
            );
        }
    }
    Ok(SignClaim::unknown(r, Quantity::GammaR, gamma))
}

/// `(-1)^(r - 1) sum_{i < r} (-1)^i binom(d - r - 1 - i, r - 1 - i) x_i`,
/// the expansion of `r gamma_r` in the numerator coefficients.
pub(crate) fn numerator_sum(x: &[Rational], d: usize, r: usize) -> Rational {
    let (ri, di) = (r as i64, d as i64);
    let s = (0..r).fold(Rational::zero(), |acc, i| {
        let i64_i = i as i64;
        let xi = x.get(i).cloned().unwrap_or_else(Rational::zero);
        acc + q(sign_power(i64_i)) * binomial_q(di - ri - 1 - i64_i, ri - 1 - i64_i) * xi
    });
    q(sign_power(ri - 1)) * s
}

/// `true` when `|x_0| >= |x_1| >= ...`.
pub(crate) fn magnitudes_non_increasing(x: &[Rational]) -> bool {
    x.windows(2).all(|w| w[0].abs() >= w[1].abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_derivative_formula, gamma_extended};
    use crate::rational::{int, ints};
    use crate::series::Polynomial;
    use proptest::prelude::*;

    fn translated_reciprocal(a: &[i64], d: usize) -> Polynomial {
        Polynomial::new(ints(a), d)
            .unwrap()
            .reciprocal()
            .translate(&int(1))
    }

    #[test]
    fn shiftgam_examples() {
        assert_eq!(shiftgam_gamma(&ints(&[1, 1, 1]), 2, 1).unwrap(), int(-3));
        assert_eq!(shiftgam_gamma(&ints(&[1, 2, 1]), 2, 1).unwrap(), int(-4));
        assert_eq!(
            shiftgam_gamma(&ints(&[1, 0, 0, 0, 0, 0]), 5, 2).unwrap(),
            int(0)
        );
        assert!(shiftgam_gamma(&ints(&[1, 1, 1]), 2, 2).is_err());
    }

    #[test]
    fn shiftgam_classify_examples() {
        let c = shiftgam_classify(&ints(&[1, 1, 1]), 2, 1).unwrap();
        assert_eq!(c.claimed_sign, Sign::Nonpositive);
        assert_eq!(c.witness, int(-3));
        let c = shiftgam_classify(&ints(&[1, 5, 5, 1]), 3, 1).unwrap();
        assert_eq!(c.claimed_sign, Sign::Nonpositive);
        let c = shiftgam_classify(&ints(&[0, 1, 1, 1, 1, 1, 1]), 6, 2).unwrap();
        assert!(c.is_unknown());
        assert!(matches!(
            shiftgam_classify(&ints(&[1, -1, 1]), 2, 1),
            Err(Error::Hypothesis { index: 1, .. })
        ));
    }

    #[test]
    fn shiftgam_half_degree_even_counterexample() {
        // A = t^4: B = (t + 1)^0 shifted reciprocal = 1, gamma_2 = 2
        let a = ints(&[0, 0, 0, 0, 1]);
        assert_eq!(shiftgam_gamma(&a, 4, 2).unwrap(), int(2));
        assert!(matches!(
            shiftgam_classify(&a, 4, 2),
            Err(Error::ClaimRefuted { .. })
        ));
    }

    #[test]
    fn ftypesum_examples() {
        let b = ints(&[3, 3, 1]);
        assert_eq!(ftypesum_gamma(&b, 2, 1).unwrap(), int(-3));
        assert_eq!(ftypesum_gamma_printed(&b, 2, 1).unwrap(), int(-6));
        for d in 2..10usize {
            for r in 1..=d / 2 {
                let (ri, di) = (r as i64, d as i64);
                let expected = q(sign_power(ri) * di) * binomial_q(di - ri - 1, ri - 1) / q(ri);
                assert_eq!(ftypesum_gamma(&ints(&[1]), d, r).unwrap(), expected);
                assert_eq!(ftypesum_gamma(&[], d, r).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn alternating_examples() {
        let r = alternating_sum_sign(&ints(&[1, 2, 3]), Monotonicity::Increasing, 0).unwrap();
        assert_eq!(
            (r.guaranteed, r.claimed, r.sum.clone()),
            (Sign::Nonnegative, Sign::Positive, int(2))
        );
        let r = alternating_sum_sign(&ints(&[3, 2, 1]), Monotonicity::Decreasing, 0).unwrap();
        assert_eq!((r.claimed, r.sum.clone()), (Sign::Positive, int(2)));
        let r = alternating_sum_sign(&ints(&[1, 1]), Monotonicity::Increasing, 0).unwrap();
        assert_eq!((r.claimed, r.sum.clone()), (Sign::Nonpositive, int(0)));
        let r = alternating_sum_sign(&ints(&[3, 2, 1]), Monotonicity::Decreasing, 1).unwrap();
        assert_eq!((r.claimed, r.sum.clone()), (Sign::Negative, int(-2)));
        assert!(matches!(
            alternating_sum_sign(&ints(&[1, 3, 2]), Monotonicity::Increasing, 0),
            Err(Error::Hypothesis { index: 2, .. })
        ));
    }

    #[test]
    fn boundgam_examples() {
        let c = boundgam_classify(&ints(&[1, -1, 1, -1, 1]), 4, 1).unwrap();
        assert_eq!(
            (c.claimed_sign, c.witness.clone()),
            (Sign::Negative, int(-5))
        );

        let b = ints(&[9, 8, 7, 6, 5, 4, 3, 3, 2, 2, 1, 1, 0]);
        let c = boundgam_classify(&b, 12, 3).unwrap();
        assert_eq!(c.quantity, Quantity::ShiftedGammaR);
        assert!(matches!(c.claimed_sign, Sign::Positive | Sign::Nonnegative));

        let c = boundgam_classify(&ints(&[1]), 6, 3).unwrap();
        assert_eq!(c.quantity, Quantity::GammaR);
        assert!(c.is_consistent() && !c.is_unknown());
    }

    #[test]
    fn claim_constructor_rejects_contradiction() {
        assert!(SignClaim::new(1, Quantity::GammaR, Sign::Positive, "x", int(-1)).is_err());
        assert!(SignClaim::new(1, Quantity::GammaR, Sign::Nonpositive, "x", int(0)).is_ok());
    }

    proptest! {
        #[test]
        fn ftypesum_matches_oracles(b in prop::collection::vec(-20i64..20, 3..=16), rr in 0usize..8) {
            let d = b.len() - 1;
            let r = 1 + rr % (d / 2);
            let h = Polynomial::new(ints(&b), d).unwrap();
            let g = ftypesum_gamma(&ints(&b), d, r).unwrap();
            prop_assert_eq!(&g, &gamma_derivative_formula(&h, r).unwrap());
            prop_assert_eq!(&g, &gamma_extended(&h, r).entries[r]);
            let printed = ftypesum_gamma_printed(&ints(&b), d, r).unwrap();
            prop_assert_eq!(g - printed, int(b[r]));
        }

        #[test]
        fn shiftgam_matches_translate(a in prop::collection::vec(0i64..10, 3..=14), rr in 0usize..8) {
            let d = a.len() - 1;
            let r = 1 + rr % (d / 2);
            let bpoly = translated_reciprocal(&a, d);
            prop_assert_eq!(
                shiftgam_gamma(&ints(&a), d, r).unwrap(),
                gamma_extended(&bpoly, r).entries[r].clone()
            );
        }

        #[test]
        fn alternating_sign_part1_holds(mags in prop::collection::vec(1i64..10, 3..=14), rr in 0usize..8) {
            let d = mags.len() - 1;
            let r = 1 + rr % (d / 2);
            let b: Vec<i64> = mags.iter().enumerate().map(|(k, m)| m * sign_power(k as i64)).collect();
            let c = boundgam_classify(&ints(&b), d, r).unwrap();
            prop_assert_eq!(c.claimed_sign, Sign::strict(sign_power(r as i64)));
        }
    }
}
